//! Standard homogeneous CR manifolds.
//!
//! A standard manifold is a painted diagram plus a primitive integer tuple
//! `(p_1, …, p_m)` on its black nodes. The tuple defines the weight
//! `θ = Σ p_i π_i`, the contact element `Z = B⁻¹θ`, the isotropy
//! `l = [k,k] + Z(k) ∩ ker θ`, and the holomorphic subspace spanned by the
//! complementary positive root vectors.
//!
//! Levi sign convention: the Levi form is evaluated on the root space of a
//! complementary positive root `α` as a positive multiple of `θ(α^∨)`, so
//! tuples with all entries positive give a positive definite form.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flag::{
    painted_isomorphisms, FlagError, IsotropyDescription, PaintedDiagram, PaintedDiagramJson,
};
use crate::rational::{gcd_all, qi, Q};
use crate::rootsys::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardError {
    #[error("tuple has {got} entries but the diagram has {expected} black nodes")]
    LengthMismatch { expected: usize, got: usize },
    #[error("tuple entry {position} is zero")]
    ZeroEntry { position: usize },
    #[error("tuple entries share the common divisor {gcd}")]
    NonPrimitive { gcd: i64 },
    #[error("θ vanishes on the coroot of the complementary root {root:?}; the contact element is not regular")]
    NonRegular { root: Vec<i64> },
    #[error("cannot parse standard manifold {0:?}")]
    Parse(String),
    #[error(transparent)]
    Flag(#[from] FlagError),
}

impl StandardError {
    /// Stable machine-readable error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            StandardError::LengthMismatch { .. } => "LengthMismatch",
            StandardError::ZeroEntry { .. } => "ZeroEntry",
            StandardError::NonPrimitive { .. } => "NonPrimitive",
            StandardError::NonRegular { .. } => "NonRegular",
            StandardError::Parse(_) => "ParseError",
            StandardError::Flag(_) => "InvalidDiagram",
        }
    }
}

/// A standard homogeneous CR manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCR {
    diagram: PaintedDiagram,
    tuple: Vec<i64>,
}

/// Validates and builds a standard CR manifold.
pub fn make_standard(diagram: &PaintedDiagram, tuple: &[i64]) -> Result<StandardCR, StandardError> {
    StandardCR::new(diagram.clone(), tuple.to_vec())
}

impl StandardCR {
    pub fn new(diagram: PaintedDiagram, tuple: Vec<i64>) -> Result<Self, StandardError> {
        let m = diagram.black().len();
        if tuple.len() != m {
            return Err(StandardError::LengthMismatch {
                expected: m,
                got: tuple.len(),
            });
        }
        if let Some(position) = tuple.iter().position(|&p| p == 0) {
            return Err(StandardError::ZeroEntry { position });
        }
        let gcd = gcd_all(&tuple);
        if gcd != 1 {
            return Err(StandardError::NonPrimitive { gcd });
        }
        if let Some(root) = first_singular_root(&diagram, &tuple) {
            return Err(StandardError::NonRegular { root });
        }
        Ok(StandardCR { diagram, tuple })
    }

    pub fn diagram(&self) -> &PaintedDiagram {
        &self.diagram
    }

    /// Tuple entries in the order of the black nodes.
    pub fn tuple(&self) -> &[i64] {
        &self.tuple
    }

    /// `θ = Σ p_i π_i` over the black fundamental weights.
    pub fn theta(&self) -> Weight {
        theta_of(&self.diagram, &self.tuple)
    }

    pub fn contact_data(&self) -> ContactData {
        let k = self.diagram.isotropy();
        ContactData {
            theta: self.theta(),
            isotropy_l: IsotropyDescription {
                semisimple_type: k.semisimple_type,
                center_dim: k.center_dim - 1,
            },
        }
    }

    pub fn levi_signature(&self) -> LeviSignature {
        let theta = self.theta();
        let (mut n_plus, mut n_minus) = (0, 0);
        for r in self.diagram.complementary_positive_roots() {
            if theta.pair_with_coroot(&r.coroot).is_positive() {
                n_plus += 1;
            } else {
                n_minus += 1;
            }
        }
        LeviSignature { n_plus, n_minus }
    }

    /// Real dimension of `M = G/L`.
    pub fn dimension(&self) -> usize {
        2 * self.diagram.complex_dimension() + 1
    }

    /// The same manifold with the conjugate structure `-J`.
    pub fn conjugate(&self) -> StandardCR {
        StandardCR {
            diagram: self.diagram.clone(),
            tuple: self.tuple.iter().map(|p| -p).collect(),
        }
    }

    /// Textual form `B3[1] p=(2)`.
    pub fn name(&self) -> String {
        let t: Vec<String> = self.tuple.iter().map(|p| p.to_string()).collect();
        format!("{} p=({})", self.diagram.name(), t.join(","))
    }

    pub fn to_json(&self) -> StandardCRJson {
        let levi = self.levi_signature();
        StandardCRJson {
            name: self.name(),
            diagram: self.diagram.to_json(),
            tuple: self.tuple.clone(),
            levi: [levi.n_plus, levi.n_minus],
            isotropy: self.contact_data().isotropy_l,
        }
    }

    pub fn from_json(j: &StandardCRJson) -> Result<Self, StandardError> {
        let d = PaintedDiagram::from_json(&j.diagram)?;
        StandardCR::new(d, j.tuple.clone())
    }
}

impl fmt::Display for StandardCR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for StandardCR {
    type Err = StandardError;

    /// Parses `A2[1,2] p=(2,-1)`; the `p=` part may also be written without
    /// parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || StandardError::Parse(s.to_string());
        let (diag, tuple) = s.split_once("p=").ok_or_else(err)?;
        let diagram: PaintedDiagram = diag.trim().parse()?;
        let tuple = parse_tuple(tuple).ok_or_else(err)?;
        StandardCR::new(diagram, tuple)
    }
}

/// Parses `1,-1`, `(1,-1)` or `1 -1` into integers.
pub fn parse_tuple(s: &str) -> Option<Vec<i64>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let v: Result<Vec<i64>, _> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>())
        .collect();
    v.ok().filter(|v| !v.is_empty())
}

fn theta_of(diagram: &PaintedDiagram, tuple: &[i64]) -> Weight {
    let sys = diagram.system();
    let mut coords = vec![qi(0); sys.rank()];
    for (&b, &p) in diagram.black().iter().zip(tuple) {
        coords[b] = qi(p);
    }
    sys.weight(coords).expect("rank matches")
}

fn first_singular_root(diagram: &PaintedDiagram, tuple: &[i64]) -> Option<Vec<i64>> {
    let theta = theta_of(diagram, tuple);
    diagram
        .complementary_positive_roots()
        .into_iter()
        .find(|r| theta.pair_with_coroot(&r.coroot) == Q::from_integer(0))
        .map(|r| r.coeffs.clone())
}

/// Isotropy and contact weight of a standard manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactData {
    /// The contact element `Z = B⁻¹θ` is represented by `θ` itself.
    pub theta: Weight,
    pub isotropy_l: IsotropyDescription,
}

/// Levi signature in complex dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviSignature {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl LeviSignature {
    pub fn swapped(self) -> LeviSignature {
        LeviSignature {
            n_plus: self.n_minus,
            n_minus: self.n_plus,
        }
    }

    pub fn is_definite(&self) -> bool {
        self.n_plus == 0 || self.n_minus == 0
    }
}

/// How two standard manifolds were matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceWitness {
    /// Node bijection from the first diagram to the second.
    pub node_map: Vec<usize>,
    /// Whether the match needed `J ↦ -J`.
    pub conjugated: bool,
}

/// Image of a tuple on `d1` under a node bijection `d1 → d2`.
fn transport_tuple(
    d1: &PaintedDiagram,
    d2: &PaintedDiagram,
    tuple: &[i64],
    perm: &[usize],
) -> Vec<i64> {
    let mut out = vec![0; tuple.len()];
    for (&b, &p) in d1.black().iter().zip(tuple) {
        let pos = d2
            .black_position(perm[b])
            .expect("isomorphism preserves black nodes");
        out[pos] = p;
    }
    out
}

/// Decides whether some painted-diagram isomorphism carries the tuple of `s1`
/// to that of `s2` (optionally after negating it), returning the witness.
pub fn equivalent_standard(
    s1: &StandardCR,
    s2: &StandardCR,
    allow_conjugate_j: bool,
) -> Option<EquivalenceWitness> {
    let isos = painted_isomorphisms(&s1.diagram, &s2.diagram);
    let signs: &[bool] = if allow_conjugate_j {
        &[false, true]
    } else {
        &[false]
    };
    for &conjugated in signs {
        for perm in &isos {
            let mut img = transport_tuple(&s1.diagram, &s2.diagram, &s1.tuple, perm);
            if conjugated {
                img.iter_mut().for_each(|p| *p = -*p);
            }
            if img == s2.tuple {
                return Some(EquivalenceWitness {
                    node_map: perm.clone(),
                    conjugated,
                });
            }
        }
    }
    None
}

/// Canonical tuple of the equivalence class: the lexicographic maximum over
/// the painted automorphisms of the diagram, and over the global sign when
/// conjugation is allowed.
pub fn canonical_tuple(
    diagram: &PaintedDiagram,
    tuple: &[i64],
    allow_conjugate_j: bool,
) -> Vec<i64> {
    let autos = painted_isomorphisms(diagram, diagram);
    let mut best: Option<Vec<i64>> = None;
    for perm in &autos {
        let img = transport_tuple(diagram, diagram, tuple, perm);
        let mut candidates = vec![img.clone()];
        if allow_conjugate_j {
            candidates.push(img.iter().map(|p| -p).collect());
        }
        for c in candidates {
            if best.as_ref().is_none_or(|b| c > *b) {
                best = Some(c);
            }
        }
    }
    best.expect("identity is always a painted automorphism")
}

impl StandardCR {
    /// Canonical representative of this manifold's class.
    pub fn canonical(&self, allow_conjugate_j: bool) -> StandardCR {
        StandardCR {
            diagram: self.diagram.clone(),
            tuple: canonical_tuple(&self.diagram, &self.tuple, allow_conjugate_j),
        }
    }
}

/// All classes of standard manifolds over `diagram` with `max |p_i| ≤ bound`,
/// up to painted automorphisms and `J ↦ -J`.
pub fn enumerate_standard(diagram: &PaintedDiagram, bound: i64) -> Vec<StandardCR> {
    enumerate_standard_with(diagram, bound, true)
}

/// As [`enumerate_standard`], choosing whether conjugation is identified.
/// Results are sorted by `max |p_i|`, then by descending tuple.
pub fn enumerate_standard_with(
    diagram: &PaintedDiagram,
    bound: i64,
    allow_conjugate_j: bool,
) -> Vec<StandardCR> {
    if bound < 1 {
        return Vec::new();
    }
    let m = diagram.black().len() as u32;
    let values: Vec<i64> = (1..=bound).flat_map(|v| [v, -v]).collect();
    let base = values.len() as u64;
    let total = base.pow(m);
    let mut found: Vec<Vec<i64>> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut tuple = Vec::with_capacity(m as usize);
            for _ in 0..m {
                tuple.push(values[(code % base) as usize]);
                code /= base;
            }
            if gcd_all(&tuple) != 1 || first_singular_root(diagram, &tuple).is_some() {
                return None;
            }
            let canon = canonical_tuple(diagram, &tuple, allow_conjugate_j);
            (canon == tuple).then_some(tuple)
        })
        .collect();
    found.sort_by(|a, b| {
        let ma = a.iter().map(|x| x.abs()).max();
        let mb = b.iter().map(|x| x.abs()).max();
        ma.cmp(&mb).then_with(|| b.cmp(a))
    });
    found
        .into_iter()
        .map(|tuple| StandardCR {
            diagram: diagram.clone(),
            tuple,
        })
        .collect()
}

/// JSON form: `{name, diagram, tuple, levi: [n_plus, n_minus], isotropy}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardCRJson {
    pub name: String,
    pub diagram: PaintedDiagramJson,
    pub tuple: Vec<i64>,
    pub levi: [usize; 2],
    pub isotropy: IsotropyDescription,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> PaintedDiagram {
        s.parse().unwrap()
    }

    fn s(name: &str, t: &[i64]) -> StandardCR {
        make_standard(&d(name), t).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(make_standard(&d("A1[1]"), &[1]).is_ok());
        assert_eq!(
            make_standard(&d("A2[1,2]"), &[2, 4]),
            Err(StandardError::NonPrimitive { gcd: 2 })
        );
        assert_eq!(
            make_standard(&d("A2[1,2]"), &[1, -1]),
            Err(StandardError::NonRegular { root: vec![1, 1] })
        );
        assert_eq!(
            make_standard(&d("A2[1,2]"), &[1, 0]),
            Err(StandardError::ZeroEntry { position: 1 })
        );
        assert_eq!(
            make_standard(&d("A2[1,2]"), &[1]),
            Err(StandardError::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn contact_data_examples() {
        let a1 = s("A1[1]", &[1]).contact_data();
        assert!(a1.isotropy_l.semisimple_type.is_empty());
        assert_eq!(a1.isotropy_l.center_dim, 0);
        let a2 = s("A2[1,2]", &[1, 1]).contact_data();
        assert!(a2.isotropy_l.semisimple_type.is_empty());
        assert_eq!(a2.isotropy_l.center_dim, 1);
        let c2 = s("C2[1]", &[1]).contact_data();
        assert_eq!(c2.isotropy_l.semisimple_type.len(), 1);
        assert_eq!(c2.isotropy_l.semisimple_type[0].rank, 1);
        assert_eq!(c2.isotropy_l.center_dim, 0);
        assert_eq!(s("C2[1]", &[1]).dimension(), 7);
    }

    #[test]
    fn levi_examples() {
        let sig = |n: &str, t: &[i64]| {
            let l = s(n, t).levi_signature();
            (l.n_plus, l.n_minus)
        };
        assert_eq!(sig("A1[1]", &[1]), (1, 0));
        assert_eq!(sig("A2[1,2]", &[1, 1]), (3, 0));
        assert_eq!(sig("A2[1,2]", &[2, -1]), (2, 1));
    }

    #[test]
    fn equivalence_examples() {
        let w =
            equivalent_standard(&s("A2[1,2]", &[2, -1]), &s("A2[1,2]", &[-1, 2]), false).unwrap();
        assert_eq!(w.node_map, vec![1, 0]);
        assert!(
            equivalent_standard(&s("A2[1,2]", &[1, 1]), &s("A2[1,2]", &[2, -1]), true).is_none()
        );
        let x = s("B3[1,3]", &[3, -1]);
        let w = equivalent_standard(&x, &x, false).unwrap();
        assert_eq!(w.node_map, vec![0, 1, 2]);
        assert!(equivalent_standard(&s("A1[1]", &[1]), &s("A1[1]", &[-1]), false).is_none());
        assert!(
            equivalent_standard(&s("A1[1]", &[1]), &s("A1[1]", &[-1]), true)
                .unwrap()
                .conjugated
        );
    }

    #[test]
    fn enumeration_examples() {
        let tuples = |n: &str, b: i64| -> Vec<Vec<i64>> {
            enumerate_standard(&d(n), b)
                .into_iter()
                .map(|x| x.tuple)
                .collect()
        };
        assert_eq!(tuples("A1[1]", 1), vec![vec![1]]);
        assert_eq!(tuples("A2[1,2]", 1), vec![vec![1, 1]]);
        assert_eq!(
            tuples("A2[1,2]", 2),
            vec![vec![1, 1], vec![2, 1], vec![2, -1]]
        );
        assert!(tuples("A1[1]", 0).is_empty());
    }

    #[test]
    fn text_round_trip() {
        let x: StandardCR = "B3[1] p=(1)".parse().unwrap();
        assert_eq!(x.to_string(), "B3[1] p=(1)");
        assert_eq!(
            "B3[1] p=(2)".parse::<StandardCR>(),
            Err(StandardError::NonPrimitive { gcd: 2 })
        );
        let y: StandardCR = "A2[1,2] p=(2,-1)".parse().unwrap();
        assert_eq!(y.name(), "A2[1,2] p=(2,-1)");
        assert_eq!("A2[1,2] p=2,-1".parse::<StandardCR>().unwrap(), y);
        assert!(matches!(
            "A2[1,2]".parse::<StandardCR>(),
            Err(StandardError::Parse(_))
        ));
    }
}
