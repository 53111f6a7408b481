//! Maximal compact groups of automorphisms.
//!
//! A flag manifold factor can admit a strictly larger transitive group of
//! holomorphic transformations only in the three Onishchik families:
//!
//! | row | `F`              | `A/C`                 | `G/K`               |
//! |-----|------------------|-----------------------|---------------------|
//! | I   | `CP^{2ℓ-1}`, ℓ>1 | `SU_{2ℓ}/U_{2ℓ-1}`    | `Sp_ℓ/Sp_{ℓ-1}·T^1` |
//! | II  | `Gr_2(R^7)`      | `SO_7/SO_5·SO_2`      | `G_2/U_2`           |
//! | III | `Com(R^{2ℓ+2})`, ℓ>2 | `SO_{2ℓ+2}/U_{ℓ+1}` | `SO_{2ℓ+1}/U_ℓ`   |
//!
//! As painted diagrams (Bourbaki labels) the `G` sides are `C_ℓ[1]`, `G2[1]`
//! and `B_ℓ[ℓ]`, and the `A` sides `A_{2ℓ-1}[1]`, `B3[1]` and `D_{ℓ+1}[ℓ+1]`.
//!
//! Contact elements move to the `A` side by
//! `Z′ = B_g(Z, Z) / B_a(Z, E^c) · E^c`, where `E^c` spans the center of
//! `C`. With `E^k` the primitive coroot-lattice vector spanning the center of
//! `K`, `E^c` the generator of the projection of the `A` coroot lattice to
//! the center of `C`, and `B_a` scaled so that `B_a(E^c, E^c) = 1`, the
//! embedding indices `B_a(E^k, E^c)` are `1` (I), `2` (II) and `kℓ/2` (III)
//! with `k = 1` for even ℓ and `k = 2` for odd ℓ. In every case the
//! transferred weight is `p·π′` for the tuple entry `p`, so the tuple carries
//! over unchanged.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::flag::{PaintedDiagram, PaintedDiagramJson};
use crate::nonstandard_cr::{maximal_semisimple_nonstandard, NonStandardCR};
use crate::rational::{inverse, qi, serde_q, Q};
use crate::rootsys::{Family, SimpleLieType};
use crate::standard_cr::StandardCR;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OnishchikRow {
    I,
    II,
    III,
}

impl fmt::Display for OnishchikRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OnishchikRow::I => "I",
            OnishchikRow::II => "II",
            OnishchikRow::III => "III",
        })
    }
}

/// One instance of an Onishchik pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnishchikPair {
    pub row: OnishchikRow,
    pub ell: usize,
    pub g_side: PaintedDiagram,
    pub a_side: PaintedDiagram,
}

impl OnishchikPair {
    /// `A/C` as a symbolic quotient.
    pub fn a_quotient(&self) -> String {
        let l = self.ell;
        match self.row {
            OnishchikRow::I => format!("SU_{}/U_{}", 2 * l, 2 * l - 1),
            OnishchikRow::II => "SO_7/SO_5·SO_2".to_string(),
            OnishchikRow::III => format!("SO_{}/U_{}", 2 * l + 2, l + 1),
        }
    }

    /// `G/K` as a symbolic quotient.
    pub fn g_quotient(&self) -> String {
        let l = self.ell;
        match self.row {
            OnishchikRow::I => format!("Sp_{l}/Sp_{}·T^1", l - 1),
            OnishchikRow::II => "G_2/U_2".to_string(),
            OnishchikRow::III => format!("SO_{}/U_{l}", 2 * l + 1),
        }
    }

    /// The simple group `A`.
    pub fn a_group(&self) -> String {
        self.a_side.system().components()[0].group_name()
    }

    /// `B_a(E^k, E^c)` with the normalizations described in the module docs.
    pub fn embedding_index(&self) -> Q {
        embedding_index(self.row, self.ell)
    }
}

/// `B_a(E^k, E^c)` for one of the three extension families.
pub fn embedding_index(row: OnishchikRow, ell: usize) -> Q {
    match row {
        OnishchikRow::I => qi(1),
        OnishchikRow::II => qi(2),
        OnishchikRow::III => {
            let k = if ell.is_multiple_of(2) { 1 } else { 2 };
            qi((k * ell) as i64) / qi(2)
        }
    }
}

fn single(family: Family, rank: usize, black: usize) -> PaintedDiagram {
    PaintedDiagram::from_types(&[SimpleLieType { family, rank }], &[black])
        .expect("valid Onishchik side")
}

/// Matches an irreducible painted diagram against the `G` sides of the three
/// Onishchik families. Labels are matched literally, so `B2[2]` (the same
/// flag as `C2[1]`) is not reported here.
pub fn onishchik_extension(factor: &PaintedDiagram) -> Option<OnishchikPair> {
    let comps = factor.system().components();
    if comps.len() != 1 || factor.black().len() != 1 {
        return None;
    }
    let SimpleLieType { family, rank: l } = comps[0];
    let b = factor.black()[0];
    let (row, a_side) = match family {
        Family::C if l >= 2 && b == 0 => (OnishchikRow::I, single(Family::A, 2 * l - 1, 0)),
        Family::G if b == 0 => (OnishchikRow::II, single(Family::B, 3, 0)),
        Family::B if l >= 3 && b == l - 1 => (OnishchikRow::III, single(Family::D, l + 1, l)),
        _ => return None,
    };
    Some(OnishchikPair {
        row,
        ell: l,
        g_side: factor.clone(),
        a_side,
    })
}

/// Rewrites a `B2` factor as `C2` (nodes swapped), leaving others alone.
/// Returns the new factor and the node map old → new.
pub(crate) fn relabel_b2(factor: &PaintedDiagram) -> (PaintedDiagram, Vec<usize>) {
    let comps = factor.system().components();
    if comps
        == [SimpleLieType {
            family: Family::B,
            rank: 2,
        }]
    {
        let black: Vec<usize> = factor.black().iter().map(|&b| 1 - b).collect();
        let c2 = PaintedDiagram::from_types(
            &[SimpleLieType {
                family: Family::C,
                rank: 2,
            }],
            &black,
        )
        .expect("valid painting");
        return (c2, vec![1, 0]);
    }
    let n = factor.system().rank();
    (factor.clone(), (0..n).collect())
}

/// The maximal connected compact group of holomorphic transformations of a
/// flag manifold, computed factor by factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolomorphicGroup {
    /// Simple factors of `A`, e.g. `["SU_4", "SU_2"]`.
    pub factors: Vec<String>,
    pub a_side_flag: PaintedDiagram,
    /// The Onishchik pair used for each factor, if any.
    pub pairs: Vec<Option<OnishchikPair>>,
    /// For each black node of the input, the corresponding black node of
    /// `a_side_flag`.
    pub black_map: Vec<usize>,
}

impl HolomorphicGroup {
    pub fn symbolic(&self) -> String {
        self.factors.join("×")
    }
}

/// Factorwise maximal holomorphic group.
pub fn maximal_holomorphic_group(flag: &PaintedDiagram) -> HolomorphicGroup {
    let mut factors = Vec::new();
    let mut pairs = Vec::new();
    let mut types = Vec::new();
    let mut black = Vec::new();
    let mut black_map = Vec::new();
    let mut offset = 0;
    for c in 0..flag.factor_count() {
        let original = flag.factor(c);
        let (relabeled, node_map) = relabel_b2(&original);
        let pair = onishchik_extension(&relabeled);
        let side = pair.as_ref().map_or(&relabeled, |p| &p.a_side);
        let ty = side.system().components()[0];
        factors.push(ty.group_name());
        types.push(ty);
        black.extend(side.black().iter().map(|b| b + offset));
        for &b in original.black() {
            let image = match &pair {
                Some(p) => p.a_side.black()[0],
                None => node_map[b],
            };
            black_map.push(image + offset);
        }
        offset += ty.rank;
        pairs.push(pair);
    }
    HolomorphicGroup {
        factors,
        a_side_flag: PaintedDiagram::from_types(&types, &black).expect("valid A-side painting"),
        pairs,
        black_map,
    }
}

/// The same manifold presented through its maximal holomorphic group: each
/// factor replaced by its `A` side, the tuple transported along.
pub fn lift_to_maximal(s: &StandardCR) -> StandardCR {
    let h = maximal_holomorphic_group(s.diagram());
    let a = &h.a_side_flag;
    let mut tuple = vec![0; s.tuple().len()];
    for (i, &img) in h.black_map.iter().enumerate() {
        let pos = a
            .black_position(img)
            .expect("black nodes map to black nodes");
        tuple[pos] = s.tuple()[i];
    }
    StandardCR::new(a.clone(), tuple).expect("lift of a valid standard manifold")
}

/// Transfer data of one simple factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorTransfer {
    pub factor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<OnishchikRow>,
    /// `B_g(Z_i, Z_i)` for `Z_i = B^{-1}θ_i`.
    #[serde(with = "serde_q")]
    pub b_g_zz: Q,
    /// `B_a(Z_i, E^c)`, Onishchik factors only.
    #[serde(
        with = "crate::maximal_group::serde_opt_q",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub b_a_z_ec: Option<Q>,
    /// `B_a(E^k, E^c)`, Onishchik factors only.
    #[serde(
        with = "crate::maximal_group::serde_opt_q",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub embedding_index: Option<Q>,
    /// Coefficient of `E^c` in `Z′_i`; `None` when `Z′_i = Z_i`.
    #[serde(
        with = "crate::maximal_group::serde_opt_q",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub coefficient: Option<Q>,
    pub a_side: String,
    pub a_side_tuple: Vec<i64>,
}

#[doc(hidden)]
pub mod serde_opt_q {
    use crate::rational::{JsonRational, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        v.map(JsonRational::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        Option::<JsonRational>::deserialize(d)?
            .map(|r| Q::try_from(r).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Inverse of the simple-root Gram matrix of a single simple type; entry
/// `(a, b)` is `(ω^∨_a, ω^∨_b)` for the fundamental coweights.
fn coweight_gram(ty: SimpleLieType) -> Vec<Vec<Q>> {
    inverse(&ty.form()).expect("Gram matrix of simple roots is invertible")
}

/// Smallest `k > 0` with `k·ω^∨_b` in the coroot lattice.
pub fn coweight_lattice_index(ty: SimpleLieType, b: usize) -> i64 {
    let inv = coweight_gram(ty);
    let d = ty.simple_root_lengths();
    // ω^∨_b = Σ_j inv[b][j] α_j = Σ_j inv[b][j] (d_j / 2) α_j^∨.
    (0..ty.rank)
        .map(|j| *(inv[b][j] * d[j] / qi(2)).denom())
        .fold(1, num_integer::lcm)
}

/// `B_g(Z, Z)` for `Z = B^{-1}θ`, `θ = Σ p_b π_b` on a single factor.
fn norm_of_contact(ty: SimpleLieType, black: &[usize], tuple: &[i64]) -> Q {
    let inv = coweight_gram(ty);
    let d = ty.simple_root_lengths();
    // π_b = (d_b / 2) ω^∨_b.
    let mut s = Q::zero();
    for (&a, &pa) in black.iter().zip(tuple) {
        for (&b, &pb) in black.iter().zip(tuple) {
            s += qi(pa * pb) * d[a] * d[b] / qi(4) * inv[a][b];
        }
    }
    s
}

/// Per-factor transfer of the contact element to the maximal group.
pub fn transfer_contact_element(s: &StandardCR) -> Vec<FactorTransfer> {
    let lifted = lift_to_maximal(s);
    let h = maximal_holomorphic_group(s.diagram());
    let sys = s.diagram().system();
    let mut out = Vec::new();
    let mut pos = 0;
    for c in 0..s.diagram().factor_count() {
        let f = s.diagram().factor(c);
        let ty = sys.components()[c];
        let m = f.black().len();
        let tuple = &s.tuple()[pos..pos + m];
        let b_g_zz = norm_of_contact(ty, f.black(), tuple);
        let a_factor = lifted.diagram().factor(c);
        let a_pos: usize = (0..c)
            .map(|i| lifted.diagram().factor(i).black().len())
            .sum();
        let a_side_tuple = lifted.tuple()[a_pos..a_pos + m].to_vec();
        let (row, b_a_z_ec, index, coefficient) = match &h.pairs[c] {
            Some(pair) => {
                let b = pair.g_side.black()[0];
                let g_ty = pair.g_side.system().components()[0];
                let k = coweight_lattice_index(g_ty, b);
                let d_b = g_ty.simple_root_lengths()[b];
                // Z = λ E^k with E^k = k ω^∨_b.
                let lambda = qi(tuple[0]) * d_b / qi(2 * k);
                let index = pair.embedding_index();
                let b_a = lambda * index;
                (Some(pair.row), Some(b_a), Some(index), Some(b_g_zz / b_a))
            }
            None => (None, None, None, None),
        };
        out.push(FactorTransfer {
            factor: f.name(),
            row,
            b_g_zz,
            b_a_z_ec,
            embedding_index: index,
            coefficient,
            a_side: a_factor.name(),
            a_side_tuple,
        });
        pos += m;
    }
    out
}

/// Input of [`maximal_cr_group`].
#[derive(Clone, Debug)]
pub enum CrManifold {
    Standard(StandardCR),
    NonStandard(NonStandardCR),
}

/// Maximal connected compact group of CR automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxGroupReport {
    /// Simple factors of `A^{ss}`.
    pub a_ss: Vec<String>,
    pub center_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_side_flag: Option<PaintedDiagramJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_side_flag_name: Option<String>,
    /// Isotropy `B` of `M = A/B`, symbolic.
    pub a_side_isotropy_b: String,
    pub transfer: Vec<FactorTransfer>,
}

impl MaxGroupReport {
    /// `A` written out, e.g. `SU_4×T^1`.
    pub fn symbolic(&self) -> String {
        let mut s = self.a_ss.join("×");
        if self.center_dim > 0 {
            s.push_str(&format!("×T^{}", self.center_dim));
        }
        s
    }
}

pub fn maximal_cr_group(input: &CrManifold) -> MaxGroupReport {
    match input {
        CrManifold::Standard(s) => {
            let h = maximal_holomorphic_group(s.diagram());
            let lifted = lift_to_maximal(s);
            MaxGroupReport {
                a_ss: h.factors.clone(),
                center_dim: 1,
                a_side_flag: Some(h.a_side_flag.to_json()),
                a_side_flag_name: Some(h.a_side_flag.name()),
                a_side_isotropy_b: lifted.contact_data().isotropy_l.symbolic(),
                transfer: transfer_contact_element(s),
            }
        }
        CrManifold::NonStandard(n) => {
            let e = n.entry();
            let b = if e.row == 2 {
                "SO_6".to_string()
            } else {
                e.isotropy_l.clone()
            };
            MaxGroupReport {
                a_ss: vec![maximal_semisimple_nonstandard(e)],
                center_dim: 0,
                a_side_flag: None,
                a_side_flag_name: None,
                a_side_isotropy_b: b,
                transfer: Vec::new(),
            }
        }
    }
}

/// Standard iff the maximal group has a one-dimensional center.
pub fn is_standard_by_center(report: &MaxGroupReport) -> bool {
    report.center_dim == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::enumerate_paintings;
    use crate::nonstandard_cr::{Table2Entry, Table2Params};
    use crate::rational::q;
    use crate::rootsys::RootSystem;
    use crate::standard_cr::make_standard;
    use std::sync::Arc;

    fn d(s: &str) -> PaintedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn table1_matches() {
        let p = onishchik_extension(&d("C2[1]")).unwrap();
        assert_eq!(
            (p.row, p.ell, p.a_side.name()),
            (OnishchikRow::I, 2, "A3[1]".to_string())
        );
        assert_eq!(
            (p.a_quotient(), p.g_quotient()),
            ("SU_4/U_3".into(), "Sp_2/Sp_1·T^1".into())
        );
        let p = onishchik_extension(&d("B3[3]")).unwrap();
        assert_eq!(
            (p.row, p.a_side.name()),
            (OnishchikRow::III, "D4[4]".to_string())
        );
        assert_eq!(
            (p.a_quotient(), p.g_quotient()),
            ("SO_8/U_4".into(), "SO_7/U_3".into())
        );
        let p = onishchik_extension(&d("G2[1]")).unwrap();
        assert_eq!(
            (p.row, p.a_side.name()),
            (OnishchikRow::II, "B3[1]".to_string())
        );
        assert!(onishchik_extension(&d("B3[1]")).is_none());
        assert!(onishchik_extension(&d("G2[2]")).is_none());
        assert!(onishchik_extension(&d("B2[2]")).is_none());
        assert!(onishchik_extension(&d("C2[1]xA1[1]")).is_none());
    }

    #[test]
    fn both_sides_have_equal_dimension() {
        for l in 2..=6 {
            for name in [format!("C{l}[1]"), format!("B{l}[{l}]")] {
                if let Some(p) = onishchik_extension(&d(&name)) {
                    assert_eq!(
                        p.g_side.complex_dimension(),
                        p.a_side.complex_dimension(),
                        "{name}"
                    );
                }
            }
        }
        let p = onishchik_extension(&d("G2[1]")).unwrap();
        assert_eq!(p.g_side.complex_dimension(), 5);
        assert_eq!(p.a_side.complex_dimension(), 5);
    }

    #[test]
    fn holomorphic_group_examples() {
        assert_eq!(maximal_holomorphic_group(&d("A2[1,2]")).symbolic(), "SU_3");
        let h = maximal_holomorphic_group(&d("C2[1]xA1[1]"));
        assert_eq!(h.symbolic(), "SU_4×SU_2");
        assert_eq!(h.a_side_flag.name(), "A3[1]xA1[1]");
        let h = maximal_holomorphic_group(&d("G2[1]"));
        assert_eq!(
            (h.symbolic(), h.a_side_flag.name()),
            ("SO_7".to_string(), "B3[1]".to_string())
        );
        let h = maximal_holomorphic_group(&d("B2[2]"));
        assert_eq!(
            (h.symbolic(), h.a_side_flag.name()),
            ("SU_4".to_string(), "A3[1]".to_string())
        );
        assert_eq!(
            maximal_holomorphic_group(&d("B2[1]")).a_side_flag.name(),
            "C2[2]"
        );
    }

    #[test]
    fn holomorphic_group_is_idempotent() {
        for ty in SimpleLieType::all_up_to_rank(5) {
            let sys = Arc::new(RootSystem::new(&[ty]).unwrap());
            for f in enumerate_paintings(&sys, false) {
                let h = maximal_holomorphic_group(&f);
                let again = maximal_holomorphic_group(&h.a_side_flag);
                assert_eq!(again.a_side_flag, h.a_side_flag, "{}", f.name());
                assert_eq!(again.factors, h.factors);
            }
        }
    }

    #[test]
    fn coweight_indices() {
        let t = |s: &str| s.parse::<SimpleLieType>().unwrap();
        assert_eq!(coweight_lattice_index(t("C2"), 0), 1);
        assert_eq!(coweight_lattice_index(t("G2"), 0), 1);
        assert_eq!(coweight_lattice_index(t("B3"), 2), 2);
        assert_eq!(coweight_lattice_index(t("B4"), 3), 1);
        assert_eq!(coweight_lattice_index(t("A3"), 0), 4);
    }

    #[test]
    fn transfer_keeps_the_tuple() {
        for (name, p) in [
            ("C2[1]", 1),
            ("C3[1]", -1),
            ("G2[1]", 1),
            ("B3[3]", 1),
            ("B4[4]", -1),
        ] {
            let s = make_standard(&d(name), &[p]).unwrap();
            let t = transfer_contact_element(&s);
            assert_eq!(t.len(), 1);
            let t = &t[0];
            assert_eq!(t.coefficient, Some(qi(p)), "{name}");
            assert_eq!(t.a_side_tuple, vec![p]);
            let index = t.embedding_index.unwrap();
            assert!(index.is_integer() && !index.is_zero());
        }
        let s = make_standard(&d("C2[1]"), &[1]).unwrap();
        let t = &transfer_contact_element(&s)[0];
        assert_eq!((t.b_g_zz, t.b_a_z_ec), (q(1, 2), Some(q(1, 2))));
        let s = make_standard(&d("A2[1,2]"), &[2, -1]).unwrap();
        let t = &transfer_contact_element(&s)[0];
        assert_eq!(
            (t.row, t.coefficient, &t.a_side_tuple),
            (None, None, &vec![2, -1])
        );
    }

    #[test]
    fn reports() {
        let s = make_standard(&d("C2[1]"), &[1]).unwrap();
        let r = maximal_cr_group(&CrManifold::Standard(s));
        assert_eq!(
            (r.a_ss.clone(), r.center_dim),
            (vec!["SU_4".to_string()], 1)
        );
        assert_eq!(r.symbolic(), "SU_4×T^1");
        assert!(is_standard_by_center(&r));
        let s = make_standard(&d("A2[1,2]"), &[1, 1]).unwrap();
        let r = maximal_cr_group(&CrManifold::Standard(s));
        assert_eq!(
            (r.a_ss.clone(), r.center_dim),
            (vec!["SU_3".to_string()], 1)
        );
        let e = Table2Entry::new(2, Table2Params::none()).unwrap();
        let n = NonStandardCR::new(e, q(1, 2), q(0, 1)).unwrap();
        let r = maximal_cr_group(&CrManifold::NonStandard(n));
        assert_eq!(
            (r.a_ss.clone(), r.center_dim),
            (vec!["SO_8".to_string()], 0)
        );
        assert_eq!(r.a_side_isotropy_b, "SO_6");
        assert!(!is_standard_by_center(&r));
    }

    #[test]
    fn lift_examples() {
        let s = make_standard(&d("C2[1]xA1[1]"), &[3, -1]).unwrap();
        assert_eq!(lift_to_maximal(&s).name(), "A3[1]xA1[1] p=(3,-1)");
        let s = make_standard(&d("B2[1,2]"), &[1, 2]).unwrap();
        assert_eq!(lift_to_maximal(&s).name(), "C2[1,2] p=(2,1)");
    }
}
