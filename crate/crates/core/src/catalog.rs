//! Classification reports and the persisted catalog of manifolds.
//!
//! A catalog lists one representative per CR equivalence class: standard
//! manifolds over every simple type up to a rank, with tuples bounded in
//! absolute value, followed by the non-standard families instantiated within
//! the same rank at the modulus `t = 1/2`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flag::{enumerate_paintings, PaintedDiagram};
use crate::maximal_group::{
    lift_to_maximal, maximal_cr_group, relabel_b2, CrManifold, MaxGroupReport,
};
use crate::nonstandard_cr::{
    catalog, equivalent_nonstandard, same_manifold, NonStandardCR, NonStandardError,
    NonStandardJson, Table2Entry,
};
use crate::rational::q;
use crate::rootsys::{RootSystem, SimpleLieType};
use crate::standard_cr::{
    canonical_tuple, enumerate_standard, equivalent_standard, StandardCR, StandardCRJson,
    StandardError,
};

pub const CATALOG_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("max rank must be at least 1")]
    InvalidRank,
    #[error("tuple bound must be at least 1")]
    InvalidBound,
    #[error("unsupported catalog version {0:?}")]
    Version(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Standard(#[from] StandardError),
    #[error(transparent)]
    NonStandard(#[from] NonStandardError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ManifoldKind {
    Standard,
    NonStandard,
}

/// Everything `classify` reports about a manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub kind: ManifoldKind,
    pub name: String,
    pub dimension: usize,
    /// Isotropy `L` of `M = G/L`.
    pub isotropy_l: String,
    /// Isotropy `K` of the associated flag manifold `G/K`.
    pub isotropy_k: String,
    /// `[n_plus, n_minus]`; standard manifolds only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub levi: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table2_row: Option<u8>,
    pub maximal_group: String,
    pub center_dim: usize,
    pub max_group: MaxGroupReport,
}

pub fn classify_standard(s: &StandardCR) -> Report {
    let levi = s.levi_signature();
    let mg = maximal_cr_group(&CrManifold::Standard(s.clone()));
    Report {
        kind: ManifoldKind::Standard,
        name: s.name(),
        dimension: s.dimension(),
        isotropy_l: s.contact_data().isotropy_l.symbolic(),
        isotropy_k: s.diagram().isotropy().symbolic(),
        levi: Some([levi.n_plus, levi.n_minus]),
        table2_row: None,
        maximal_group: mg.symbolic(),
        center_dim: mg.center_dim,
        max_group: mg,
    }
}

pub fn classify_nonstandard(n: &NonStandardCR) -> Report {
    let mg = maximal_cr_group(&CrManifold::NonStandard(n.clone()));
    Report {
        kind: ManifoldKind::NonStandard,
        name: n.name(),
        dimension: n.dimension(),
        isotropy_l: n.entry().isotropy_l.clone(),
        isotropy_k: n.entry().k.clone(),
        levi: None,
        table2_row: Some(n.entry().row),
        maximal_group: mg.symbolic(),
        center_dim: mg.center_dim,
        max_group: mg,
    }
}

pub fn classify(m: &CrManifold) -> Report {
    match m {
        CrManifold::Standard(s) => classify_standard(s),
        CrManifold::NonStandard(n) => classify_nonstandard(n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ManifoldJson {
    Standard(StandardCRJson),
    NonStandard(NonStandardJson),
}

impl ManifoldJson {
    pub fn to_manifold(&self) -> Result<CrManifold, CatalogError> {
        Ok(match self {
            ManifoldJson::Standard(j) => CrManifold::Standard(StandardCR::from_json(j)?),
            ManifoldJson::NonStandard(j) => CrManifold::NonStandard(NonStandardCR::from_json(j)?),
        })
    }

    pub fn from_manifold(m: &CrManifold) -> Self {
        match m {
            CrManifold::Standard(s) => ManifoldJson::Standard(s.to_json()),
            CrManifold::NonStandard(n) => ManifoldJson::NonStandard(n.to_json()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub manifold: ManifoldJson,
    pub report: Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: String,
    pub max_rank: usize,
    pub tuple_bound: i64,
    pub entries: Vec<CatalogEntry>,
}

impl CatalogFile {
    /// Pretty JSON with a trailing newline; identical input gives identical bytes.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self, CatalogError> {
        let c: CatalogFile = serde_json::from_str(s)?;
        if c.version != CATALOG_VERSION {
            return Err(CatalogError::Version(c.version));
        }
        Ok(c)
    }

    pub fn standard_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(e.manifold, ManifoldJson::Standard(_)))
            .count()
    }
}

/// The presentation through the maximal group, with a simple `B2` rewritten
/// as `C2`.
pub fn normalized_presentation(s: &StandardCR) -> StandardCR {
    let lifted = lift_to_maximal(s);
    if lifted.diagram().factor_count() != 1 {
        return lifted;
    }
    let (d, map) = relabel_b2(lifted.diagram());
    let tuple = transport(lifted.diagram(), lifted.tuple(), &map, &d);
    StandardCR::new(d, tuple).expect("relabeling keeps the tuple valid")
}

/// Complete invariant of a standard manifold up to CR equivalence and `J ↦ -J`:
/// the normalized presentation with its black set moved to the orbit
/// representative and the canonical tuple.
pub fn class_key(s: &StandardCR) -> (String, Vec<i64>) {
    let norm = normalized_presentation(s);
    let (diagram, tuple) = (norm.diagram(), norm.tuple());
    let target = diagram.canonical_black();
    let perm = diagram
        .system()
        .diagram_automorphisms()
        .into_iter()
        .find(|p| diagram.permuted_black(p) == target)
        .expect("canonical black set lies in the orbit");
    let moved = PaintedDiagram::new(diagram.system().clone(), target).expect("valid painting");
    let moved_tuple = transport(diagram, tuple, &perm, &moved);
    let canon = canonical_tuple(&moved, &moved_tuple, true);
    (moved.name(), canon)
}

/// Tuple carried along a node map from `from` onto `to`.
fn transport(from: &PaintedDiagram, tuple: &[i64], map: &[usize], to: &PaintedDiagram) -> Vec<i64> {
    let mut out = vec![0; tuple.len()];
    for (i, &b) in from.black().iter().enumerate() {
        let pos = to
            .black_position(map[b])
            .expect("map carries black onto black");
        out[pos] = tuple[i];
    }
    out
}

/// Outcome of an equivalence query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VerdictWitness>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerdictWitness {
    /// Node bijection between the normalized presentations.
    Standard {
        via: String,
        node_map: Vec<usize>,
        conjugated: bool,
    },
    /// Common `|t|²`.
    NonStandard {
        #[serde(with = "crate::rational::serde_q")]
        modulus_sq: crate::rational::Q,
    },
}

/// Decides CR equivalence of two manifolds of either kind. Standard manifolds
/// are compared through their normalized presentations.
pub fn decide_equivalence(a: &CrManifold, b: &CrManifold, allow_conjugate_j: bool) -> Verdict {
    match (a, b) {
        (CrManifold::Standard(x), CrManifold::Standard(y)) => {
            let (nx, ny) = (normalized_presentation(x), normalized_presentation(y));
            match equivalent_standard(&nx, &ny, allow_conjugate_j) {
                Some(w) => Verdict {
                    equivalent: true,
                    reason: format!(
                        "{} and {} are related by a diagram isomorphism",
                        nx.name(),
                        ny.name()
                    ),
                    witness: Some(VerdictWitness::Standard {
                        via: nx.diagram().name(),
                        node_map: w.node_map,
                        conjugated: w.conjugated,
                    }),
                },
                None => Verdict {
                    equivalent: false,
                    witness: None,
                    reason: format!(
                        "no diagram isomorphism carries {} to {}",
                        nx.name(),
                        ny.name()
                    ),
                },
            }
        }
        (CrManifold::NonStandard(x), CrManifold::NonStandard(y)) => {
            let eq = equivalent_nonstandard(x, y);
            let reason = if !same_manifold(x.entry(), y.entry()) {
                "different homogeneous spaces".to_string()
            } else if eq {
                "same space and equal |t|".to_string()
            } else {
                "same space but |t| differs".to_string()
            };
            Verdict {
                equivalent: eq,
                witness: eq.then(|| VerdictWitness::NonStandard {
                    modulus_sq: x.modulus_sq(),
                }),
                reason,
            }
        }
        _ => Verdict {
            equivalent: false,
            witness: None,
            reason: "a non-standard manifold is never equivalent to a standard one".to_string(),
        },
    }
}

fn standard_classes(max_rank: usize, bound: i64) -> Vec<StandardCR> {
    let candidates: Vec<StandardCR> = SimpleLieType::all_up_to_rank(max_rank)
        .into_iter()
        .flat_map(|ty| {
            let sys = Arc::new(RootSystem::new(&[ty]).expect("valid type"));
            enumerate_paintings(&sys, true)
        })
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|d| enumerate_standard(d, bound))
        .collect();
    let keys: Vec<(String, Vec<i64>)> = candidates.par_iter().map(class_key).collect();
    // Per class, prefer the presentation of largest rank (the maximal group),
    // then the earliest one.
    let mut best: HashMap<&(String, Vec<i64>), usize> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        let rank = |j: usize| candidates[j].diagram().system().rank();
        best.entry(k)
            .and_modify(|j| {
                if rank(i) > rank(*j) {
                    *j = i;
                }
            })
            .or_insert(i);
    }
    let mut chosen: Vec<usize> = best.into_values().collect();
    chosen.sort_unstable();
    chosen.into_iter().map(|i| candidates[i].clone()).collect()
}

fn nonstandard_instances(max_rank: usize) -> Vec<NonStandardCR> {
    let mut out: Vec<Table2Entry> = Vec::new();
    for t in catalog() {
        for e in t.instances_up_to_rank(max_rank) {
            if !out.iter().any(|o| same_manifold(o, &e)) {
                out.push(e);
            }
        }
    }
    out.into_iter()
        .map(|e| NonStandardCR::new(e, q(1, 2), q(0, 1)).expect("1/2 lies in the disc"))
        .collect()
}

pub fn build_catalog(max_rank: usize, tuple_bound: i64) -> Result<CatalogFile, CatalogError> {
    if max_rank < 1 {
        return Err(CatalogError::InvalidRank);
    }
    if tuple_bound < 1 {
        return Err(CatalogError::InvalidBound);
    }
    let standard = standard_classes(max_rank, tuple_bound);
    let mut entries: Vec<CatalogEntry> = standard
        .par_iter()
        .map(|s| CatalogEntry {
            manifold: ManifoldJson::Standard(s.to_json()),
            report: classify_standard(s),
        })
        .collect();
    entries.extend(
        nonstandard_instances(max_rank)
            .iter()
            .map(|n| CatalogEntry {
                manifold: ManifoldJson::NonStandard(n.to_json()),
                report: classify_nonstandard(n),
            }),
    );
    Ok(CatalogFile {
        version: CATALOG_VERSION.to_string(),
        max_rank,
        tuple_bound,
        entries,
    })
}

/// Re-derives every entry and lists each discrepancy; an empty list means the
/// catalog is consistent.
pub fn verify(c: &CatalogFile) -> Vec<String> {
    let mut problems = Vec::new();
    if c.version != CATALOG_VERSION {
        problems.push(format!(
            "version {:?}, expected {CATALOG_VERSION:?}",
            c.version
        ));
    }
    let mut seen_keys: HashMap<(String, Vec<i64>), usize> = HashMap::new();
    let mut seen_ns: Vec<(usize, Table2Entry)> = Vec::new();
    for (i, e) in c.entries.iter().enumerate() {
        let m = match e.manifold.to_manifold() {
            Ok(m) => m,
            Err(err) => {
                problems.push(format!("entry {i}: {err}"));
                continue;
            }
        };
        if classify(&m) != e.report {
            problems.push(format!(
                "entry {i} ({}): stored report differs from recomputation",
                e.report.name
            ));
        }
        match &m {
            CrManifold::Standard(s) => {
                if s.diagram().system().rank() > c.max_rank {
                    problems.push(format!("entry {i}: rank exceeds {}", c.max_rank));
                }
                if s.tuple().iter().any(|p| p.abs() > c.tuple_bound) {
                    problems.push(format!("entry {i}: tuple exceeds bound {}", c.tuple_bound));
                }
                if s.canonical(true).tuple() != s.tuple() {
                    problems.push(format!("entry {i}: tuple is not canonical"));
                }
                if let Some(j) = seen_keys.insert(class_key(s), i) {
                    problems.push(format!("entries {j} and {i} are equivalent"));
                }
            }
            CrManifold::NonStandard(n) => {
                if let Some((j, _)) = seen_ns.iter().find(|(_, o)| same_manifold(o, n.entry())) {
                    problems.push(format!("entries {j} and {i} are the same manifold"));
                }
                seen_ns.push((i, n.entry().clone()));
            }
        }
    }
    if problems.is_empty() {
        if let Ok(fresh) = build_catalog(c.max_rank, c.tuple_bound) {
            if fresh.entries != c.entries {
                problems.push("entries differ from a fresh build with the same parameters".into());
            }
        }
    }
    problems
}
