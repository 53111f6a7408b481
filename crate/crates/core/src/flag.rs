//! Flag manifolds `F = G/K` with an invariant complex structure, encoded as
//! painted Dynkin diagrams.
//!
//! Black nodes are the simple roots outside the isotropy; the white nodes span
//! the Dynkin diagram of the semisimple part of `K`. One painting fixes both
//! `F` and its complex structure.
//!
//! Textual names follow `<Type><rank>[<black ids>]`, with 1-based Bourbaki
//! labels inside each factor and factors joined by `x`, e.g. `C2[1]xA1[1]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{cartan_isomorphisms, Root, RootSystem, RootSystemError, SimpleLieType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("node {node} out of range for a system of rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("factor {component} ({ty}) has no black node")]
    NoBlackNode { component: usize, ty: SimpleLieType },
    #[error("cannot parse diagram name {0:?}")]
    Parse(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// A Dynkin diagram with black and white nodes.
#[derive(Clone, Debug)]
pub struct PaintedDiagram {
    system: Arc<RootSystem>,
    black: Vec<usize>,
}

impl PartialEq for PaintedDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.system.components() == other.system.components() && self.black == other.black
    }
}

impl Eq for PaintedDiagram {}

impl PaintedDiagram {
    pub fn new(
        system: Arc<RootSystem>,
        black: impl IntoIterator<Item = usize>,
    ) -> Result<Self, FlagError> {
        let rank = system.rank();
        let black: BTreeSet<usize> = black.into_iter().collect();
        if let Some(&node) = black.iter().find(|&&n| n >= rank) {
            return Err(FlagError::NodeOutOfRange { node, rank });
        }
        for (c, ty) in system.components().iter().enumerate() {
            if !system.component_nodes(c).any(|n| black.contains(&n)) {
                return Err(FlagError::NoBlackNode {
                    component: c,
                    ty: *ty,
                });
            }
        }
        Ok(PaintedDiagram {
            system,
            black: black.into_iter().collect(),
        })
    }

    /// Builds a diagram on a fresh root system of the given types.
    pub fn from_types(types: &[SimpleLieType], black: &[usize]) -> Result<Self, FlagError> {
        let sys = Arc::new(RootSystem::new(types)?);
        PaintedDiagram::new(sys, black.iter().copied())
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    /// Black nodes, ascending global indices.
    pub fn black(&self) -> &[usize] {
        &self.black
    }

    pub fn is_black(&self, node: usize) -> bool {
        self.black.binary_search(&node).is_ok()
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.system.rank())
            .filter(|&n| !self.is_black(n))
            .collect()
    }

    /// Position of `node` in [`Self::black`].
    pub fn black_position(&self, node: usize) -> Option<usize> {
        self.black.binary_search(&node).ok()
    }

    /// Number of simple factors.
    pub fn factor_count(&self) -> usize {
        self.system.components().len()
    }

    /// The painting restricted to simple factor `c`, as a standalone diagram.
    pub fn factor(&self, c: usize) -> PaintedDiagram {
        let ty = self.system.components()[c];
        let off = self.system.offsets()[c];
        let black: Vec<usize> = self
            .system
            .component_nodes(c)
            .filter(|&n| self.is_black(n))
            .map(|n| n - off)
            .collect();
        PaintedDiagram::from_types(&[ty], &black).expect("restriction of a valid painting")
    }

    /// Isotropy `K`: semisimple part from the white subdiagram, center of
    /// dimension equal to the number of black nodes.
    pub fn isotropy(&self) -> IsotropyDescription {
        let mut semisimple_type = self.system.classify_subdiagram(&self.white());
        semisimple_type.sort();
        IsotropyDescription {
            semisimple_type,
            center_dim: self.black.len(),
        }
    }

    /// Positive roots with a nonzero coefficient on some black node; these
    /// span the holomorphic tangent space of `F`.
    pub fn complementary_positive_roots(&self) -> Vec<&Root> {
        self.system
            .positive_roots()
            .iter()
            .filter(|r| self.black.iter().any(|&b| r.coeffs[b] != 0))
            .collect()
    }

    /// Complex dimension of `F`.
    pub fn complex_dimension(&self) -> usize {
        self.complementary_positive_roots().len()
    }

    /// Canonical textual name such as `B3[1]` or `C2[1]xA1[1]`.
    pub fn name(&self) -> String {
        let sys = &self.system;
        sys.components()
            .iter()
            .enumerate()
            .map(|(c, ty)| {
                let off = sys.offsets()[c];
                let ids: Vec<String> = sys
                    .component_nodes(c)
                    .filter(|&n| self.is_black(n))
                    .map(|n| (n - off + 1).to_string())
                    .collect();
                format!("{ty}[{}]", ids.join(","))
            })
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn to_json(&self) -> PaintedDiagramJson {
        PaintedDiagramJson {
            components: self.system.components().to_vec(),
            black: self.black.clone(),
        }
    }

    pub fn from_json(j: &PaintedDiagramJson) -> Result<Self, FlagError> {
        PaintedDiagram::from_types(&j.components, &j.black)
    }

    /// Black set after applying a node permutation.
    pub fn permuted_black(&self, perm: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = self.black.iter().map(|&b| perm[b]).collect();
        v.sort_unstable();
        v
    }

    /// Representative of the orbit of this painting under diagram
    /// automorphisms: the lexicographically smallest black set.
    pub fn canonical_black(&self) -> Vec<usize> {
        self.system
            .diagram_automorphisms()
            .iter()
            .map(|p| self.permuted_black(p))
            .min()
            .expect("identity is always an automorphism")
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for PaintedDiagram {
    type Err = FlagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (types, black) = parse_diagram_name(s)?;
        PaintedDiagram::from_types(&types, &black)
    }
}

/// Parses `<Type><rank>[ids]x...` into factor types and global black nodes.
fn parse_diagram_name(s: &str) -> Result<(Vec<SimpleLieType>, Vec<usize>), FlagError> {
    let err = || FlagError::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    let mut types = Vec::new();
    let mut black = Vec::new();
    let mut offset = 0;
    for part in compact.split(['x', 'X', '×']) {
        let open = part.find('[').ok_or_else(err)?;
        let inner = part[open + 1..].strip_suffix(']').ok_or_else(err)?;
        let ty: SimpleLieType = part[..open].parse()?;
        for id in inner.split(',').filter(|x| !x.is_empty()) {
            let id: usize = id.parse().map_err(|_| err())?;
            if id == 0 || id > ty.rank {
                return Err(FlagError::NodeOutOfRange {
                    node: id,
                    rank: ty.rank,
                });
            }
            black.push(offset + id - 1);
        }
        offset += ty.rank;
        types.push(ty);
    }
    Ok((types, black))
}

/// Isotropy subgroup `K` of a flag manifold, up to local isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyDescription {
    /// Simple factors, sorted.
    pub semisimple_type: Vec<SimpleLieType>,
    pub center_dim: usize,
}

impl IsotropyDescription {
    pub fn dimension(&self) -> usize {
        self.center_dim
            + self
                .semisimple_type
                .iter()
                .map(|t| t.dimension())
                .sum::<usize>()
    }

    /// Symbolic group such as `T^1·SO_5`, or `{e}` when trivial.
    pub fn symbolic(&self) -> String {
        let mut parts = Vec::new();
        if self.center_dim > 0 {
            parts.push(format!("T^{}", self.center_dim));
        }
        parts.extend(self.semisimple_type.iter().map(|t| t.group_name()));
        if parts.is_empty() {
            "{e}".to_string()
        } else {
            parts.join("·")
        }
    }
}

/// JSON schema of a painted diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaintedDiagramJson {
    pub components: Vec<SimpleLieType>,
    pub black: Vec<usize>,
}

/// Every painting of `system` with at least one black node per factor. With
/// `orbit_representatives`, one painting per diagram-automorphism orbit (the
/// lexicographically smallest black set).
pub fn enumerate_paintings(
    system: &Arc<RootSystem>,
    orbit_representatives: bool,
) -> Vec<PaintedDiagram> {
    let per_factor: Vec<Vec<Vec<usize>>> = (0..system.components().len())
        .map(|c| {
            let nodes: Vec<usize> = system.component_nodes(c).collect();
            (1u32..(1 << nodes.len()))
                .map(|mask| {
                    nodes
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &n)| n)
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for options in &per_factor {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.extend(o);
                    v
                })
            })
            .collect();
    }
    let autos = if orbit_representatives {
        system.diagram_automorphisms()
    } else {
        Vec::new()
    };
    let mut out: Vec<PaintedDiagram> = combos
        .into_iter()
        .filter(|black| {
            !orbit_representatives || {
                let set = black.clone();
                autos.iter().all(|p| {
                    let mut img: Vec<usize> = set.iter().map(|&b| p[b]).collect();
                    img.sort_unstable();
                    img >= set
                })
            }
        })
        .map(|black| PaintedDiagram::new(system.clone(), black).expect("valid painting"))
        .collect();
    out.sort_by(|a, b| (a.black.len(), &a.black).cmp(&(b.black.len(), &b.black)));
    out
}

/// All node bijections `d1 → d2` that preserve the Cartan matrix and carry the
/// black set of `d1` onto that of `d2`. Empty when the painted diagrams are
/// not isomorphic.
pub fn painted_isomorphisms(d1: &PaintedDiagram, d2: &PaintedDiagram) -> Vec<Vec<usize>> {
    if d1.black.len() != d2.black.len() {
        return Vec::new();
    }
    cartan_isomorphisms(
        d1.system.cartan_matrix(),
        d2.system.cartan_matrix(),
        |i, t| d1.is_black(i) == d2.is_black(t),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> PaintedDiagram {
        s.parse().unwrap()
    }

    fn ty(s: &str) -> SimpleLieType {
        s.parse().unwrap()
    }

    #[test]
    fn names_round_trip() {
        for name in ["B3[1]", "A2[1,2]", "C2[1]xA1[1]", "E6[1,6]"] {
            assert_eq!(d(name).name(), name);
        }
        assert_eq!(d(" a2[2, 1] ").name(), "A2[1,2]");
    }

    #[test]
    fn invalid_names() {
        assert!(matches!(
            "A2[]".parse::<PaintedDiagram>(),
            Err(FlagError::NoBlackNode { .. })
        ));
        assert!(matches!(
            "A2[3]".parse::<PaintedDiagram>(),
            Err(FlagError::NodeOutOfRange { .. })
        ));
        assert!(matches!(
            "A2".parse::<PaintedDiagram>(),
            Err(FlagError::Parse(_))
        ));
        assert!("A1[1]xD3[1]".parse::<PaintedDiagram>().is_err());
    }

    #[test]
    fn isotropy_examples() {
        let b3 = d("B3[1]").isotropy();
        assert_eq!(b3.semisimple_type, vec![ty("B2")]);
        assert_eq!(b3.center_dim, 1);
        assert_eq!(b3.symbolic(), "T^1·SO_5");
        // Black long root: the white short root spans an A1.
        let g2 = d("G2[2]").isotropy();
        assert_eq!(g2.semisimple_type, vec![ty("A1")]);
        assert_eq!(g2.center_dim, 1);
        let a1 = d("A1[1]").isotropy();
        assert!(a1.semisimple_type.is_empty());
        assert_eq!(a1.symbolic(), "T^1");
    }

    #[test]
    fn complementary_roots() {
        let a1 = d("A1[1]");
        assert_eq!(a1.complementary_positive_roots().len(), 1);
        let a2 = d("A2[1]");
        let roots: Vec<Vec<i64>> = a2
            .complementary_positive_roots()
            .iter()
            .map(|r| r.coeffs.clone())
            .collect();
        assert_eq!(roots, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(d("B3[3]").complex_dimension(), 6);
    }

    #[test]
    fn painting_counts() {
        let a2 = d("A2[1]").system().clone();
        assert_eq!(enumerate_paintings(&a2, false).len(), 3);
        assert_eq!(enumerate_paintings(&a2, true).len(), 2);
        let a1 = d("A1[1]").system().clone();
        assert_eq!(enumerate_paintings(&a1, false).len(), 1);
        let b2 = d("B2[1]").system().clone();
        assert_eq!(enumerate_paintings(&b2, false).len(), 3);
        assert_eq!(enumerate_paintings(&b2, true).len(), 3);
        let prod = d("A1[1]xA2[1]").system().clone();
        assert_eq!(enumerate_paintings(&prod, false).len(), 3);
    }

    #[test]
    fn isomorphisms() {
        assert_eq!(
            painted_isomorphisms(&d("A2[1]"), &d("A2[2]")),
            vec![vec![1, 0]]
        );
        let same = d("B3[1,3]");
        assert!(painted_isomorphisms(&same, &same).contains(&vec![0, 1, 2]));
        assert!(painted_isomorphisms(&d("B2[1]"), &d("B2[2]")).is_empty());
        assert_eq!(
            painted_isomorphisms(&d("A1[1]xA2[1]"), &d("A2[2]xA1[1]")).len(),
            1
        );
        assert!(painted_isomorphisms(&d("B2[1]"), &d("C2[1]")).is_empty());
    }

    #[test]
    fn factor_restriction() {
        let p = d("C2[1]xA1[1]");
        assert_eq!(p.factor(0).name(), "C2[1]");
        assert_eq!(p.factor(1).name(), "A1[1]");
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&d("B3[1]").to_json()).unwrap();
        assert_eq!(j, r#"{"components":[{"family":"B","rank":3}],"black":[0]}"#);
        let back: PaintedDiagramJson = serde_json::from_str(&j).unwrap();
        assert_eq!(PaintedDiagram::from_json(&back).unwrap(), d("B3[1]"));
    }
}
