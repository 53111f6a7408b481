//! Root systems of semisimple compact Lie algebras in exact arithmetic.
//!
//! Nodes follow the Bourbaki numbering inside each simple factor; the global
//! node index of a product system is the concatenation of its factors in the
//! order they were given. The invariant form is the symmetrized Cartan matrix
//! normalized per factor so that long roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, qi, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("weight and root system do not belong to the same system")]
    MismatchedSystem,
    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),
    #[error("cannot parse Lie type {0:?}")]
    Parse(String),
    #[error("root system has no simple factors")]
    Empty,
    #[error("serialized root system is inconsistent: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

/// A simple Lie type such as `B3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleLieType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleLieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleLieType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    /// Every valid simple type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleLieType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for family in [
                Family::A,
                Family::B,
                Family::C,
                Family::D,
                Family::E,
                Family::F,
                Family::G,
            ] {
                if let Ok(t) = SimpleLieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Squared lengths of the simple roots, long roots normalized to 2.
    pub fn simple_root_lengths(&self) -> Vec<Q> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![qi(2); n],
            Family::B => (0..n).map(|i| qi(if i + 1 == n { 1 } else { 2 })).collect(),
            Family::C => (0..n).map(|i| qi(if i + 1 == n { 2 } else { 1 })).collect(),
            Family::F => vec![qi(2), qi(2), qi(1), qi(1)],
            Family::G => vec![rational::q(2, 3), qi(2)],
        }
    }

    /// Edges of the Dynkin diagram (0-based, Bourbaki numbering).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Symmetric matrix `(α_i, α_j)` of the normalized invariant form.
    pub fn form(&self) -> Vec<Vec<Q>> {
        let n = self.rank;
        let d = self.simple_root_lengths();
        let mut m = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            m[i][i] = d[i];
        }
        // A bond pairs to minus half the longer squared length.
        for (i, j) in self.edges() {
            let v = -d[i].max(d[j]) / qi(2);
            m[i][j] = v;
            m[j][i] = v;
        }
        m
    }

    /// Cartan matrix with `C[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let form = self.form();
        let d = self.simple_root_lengths();
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| {
                        let v = qi(2) * form[i][j] / d[i];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Real dimension of the compact simple group.
    pub fn dimension(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        (self.dimension() - self.rank) / 2
    }

    /// Name of the simply connected or classical compact group used in reports,
    /// e.g. `SU_3`, `SO_7`, `Sp_2`, `G_2`.
    pub fn group_name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("SU_{}", n + 1),
            Family::B => format!("SO_{}", 2 * n + 1),
            Family::C => format!("Sp_{n}"),
            Family::D => format!("SO_{}", 2 * n),
            Family::E => format!("E_{n}"),
            Family::F => "F_4".to_string(),
            Family::G => "G_2".to_string(),
        }
    }
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleLieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| RootSystemError::Parse(s.to_string()))?;
        SimpleLieType::new(family, rank)
    }
}

/// A positive root with its coroot expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over all simple roots of the system.
    pub coeffs: Vec<i64>,
    /// Coefficients of `α^∨` over the simple coroots.
    pub coroot: Vec<i64>,
    /// Index of the simple factor containing the root.
    pub component: usize,
    /// Squared length in the normalized form.
    pub length: Q,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Root system of a semisimple compact Lie algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<SimpleLieType>,
    offsets: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<Q>,
    form: Vec<Vec<Q>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for RootSystem {}

/// Builds the root system of a product of simple types.
pub fn build_root_system(types: &[SimpleLieType]) -> Result<RootSystem, RootSystemError> {
    RootSystem::new(types)
}

impl RootSystem {
    pub fn new(types: &[SimpleLieType]) -> Result<Self, RootSystemError> {
        if types.is_empty() {
            return Err(RootSystemError::Empty);
        }
        for t in types {
            SimpleLieType::new(t.family, t.rank)?;
        }
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let mut offsets = Vec::with_capacity(types.len());
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut form = vec![vec![Q::zero(); rank]; rank];
        let mut lengths = Vec::with_capacity(rank);
        let mut off = 0;
        for t in types {
            offsets.push(off);
            let c = t.cartan_matrix();
            let f = t.form();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[off + i][off + j] = c[i][j];
                    form[off + i][off + j] = f[i][j];
                }
            }
            lengths.extend(t.simple_root_lengths());
            off += t.rank;
        }

        let mut positive = Vec::new();
        for (ci, t) in types.iter().enumerate() {
            let nodes: Vec<usize> = (offsets[ci]..offsets[ci] + t.rank).collect();
            for coeffs in positive_roots_of_block(&cartan, &nodes, rank) {
                positive.push((ci, coeffs));
            }
        }

        let mut sys = RootSystem {
            components: types.to_vec(),
            offsets,
            cartan,
            lengths,
            form,
            positive: Vec::new(),
            index: HashMap::new(),
        };
        sys.positive = positive
            .into_iter()
            .map(|(component, coeffs)| {
                let length = sys.norm2(&coeffs);
                let coroot = coeffs
                    .iter()
                    .zip(&sys.lengths)
                    .map(|(&c, d)| {
                        let v = qi(c) * d / length;
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                Root {
                    coeffs,
                    coroot,
                    component,
                    length,
                }
            })
            .collect();
        sys.index = sys
            .positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        Ok(sys)
    }

    pub fn components(&self) -> &[SimpleLieType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Global index of the first node of each factor.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Factor containing global node `node`.
    pub fn component_of(&self, node: usize) -> usize {
        self.offsets
            .iter()
            .rposition(|&o| o <= node)
            .expect("node index in range")
    }

    /// Global node indices of factor `c`.
    pub fn component_nodes(&self, c: usize) -> std::ops::Range<usize> {
        self.offsets[c]..self.offsets[c] + self.components[c].rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Normalized invariant form on simple roots.
    pub fn form(&self) -> &[Vec<Q>] {
        &self.form
    }

    /// Squared lengths of the simple roots.
    pub fn simple_lengths(&self) -> &[Q] {
        &self.lengths
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Real dimension of the compact group.
    pub fn dimension(&self) -> usize {
        self.components.iter().map(|t| t.dimension()).sum()
    }

    /// `(β, β)` for a root given by simple-root coefficients.
    pub fn norm2(&self, coeffs: &[i64]) -> Q {
        let mut s = Q::zero();
        for (i, &a) in coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in coeffs.iter().enumerate() {
                if b != 0 {
                    s += qi(a * b) * self.form[i][j];
                }
            }
        }
        s
    }

    /// Looks up a root (positive or negative). Returns the positive root and
    /// the sign.
    pub fn find_root(&self, coeffs: &[i64]) -> Option<(&Root, i64)> {
        if let Some(&i) = self.index.get(coeffs) {
            return Some((&self.positive[i], 1));
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&i| (&self.positive[i], -1))
    }

    pub fn positive_root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// `<β, α_i^∨>` for a root or weight given in simple-root coefficients.
    pub fn cartan_pairing(&self, coeffs: &[i64], i: usize) -> i64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan[i][j])
            .sum()
    }

    /// Fundamental weight `π_i`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut coords = vec![Q::zero(); self.rank()];
        coords[i] = qi(1);
        Weight {
            components: self.components.clone(),
            coords,
        }
    }

    /// Weight with given coordinates over the fundamental weights.
    pub fn weight(&self, coords: Vec<Q>) -> Result<Weight, RootSystemError> {
        if coords.len() != self.rank() {
            return Err(RootSystemError::MismatchedSystem);
        }
        Ok(Weight {
            components: self.components.clone(),
            coords,
        })
    }

    /// `<w, α^∨>` for a weight `w` and a root `α` (positive or negative).
    pub fn pairing(&self, w: &Weight, root: &[i64]) -> Result<Q, RootSystemError> {
        if w.components != self.components || root.len() != self.rank() {
            return Err(RootSystemError::MismatchedSystem);
        }
        let (r, sign) = self
            .find_root(root)
            .ok_or_else(|| RootSystemError::NotARoot(root.to_vec()))?;
        Ok(w.pair_with_coroot(&r.coroot) * qi(sign))
    }

    /// All automorphisms of the Dynkin diagram, including permutations of
    /// isomorphic factors. Each entry maps node `i` to `perm[i]`.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        cartan_isomorphisms(&self.cartan, &self.cartan, |_, _| true)
    }

    /// Decomposes the subdiagram spanned by `nodes` into connected pieces and
    /// identifies the simple type of each. Pieces are ordered by their smallest
    /// node.
    pub fn classify_subdiagram(&self, nodes: &[usize]) -> Vec<SimpleLieType> {
        let mut sorted: Vec<usize> = nodes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut seen = vec![false; sorted.len()];
        let mut out = Vec::new();
        for start in 0..sorted.len() {
            if seen[start] {
                continue;
            }
            let mut piece = vec![sorted[start]];
            seen[start] = true;
            let mut stack = vec![sorted[start]];
            while let Some(v) = stack.pop() {
                for (k, &u) in sorted.iter().enumerate() {
                    if !seen[k] && self.cartan[v][u] != 0 {
                        seen[k] = true;
                        piece.push(u);
                        stack.push(u);
                    }
                }
            }
            piece.sort_unstable();
            out.push(self.identify_connected(&piece));
        }
        out
    }

    fn identify_connected(&self, nodes: &[usize]) -> SimpleLieType {
        let n = nodes.len();
        let bond = |a: usize, b: usize| self.cartan[a][b] * self.cartan[b][a];
        let neighbours = |a: usize| -> Vec<usize> {
            nodes
                .iter()
                .copied()
                .filter(|&b| b != a && self.cartan[a][b] != 0)
                .collect()
        };
        let mk = |family, rank| SimpleLieType { family, rank };
        if n == 1 {
            return mk(Family::A, 1);
        }
        let mut max_bond = 1;
        let mut double = None;
        for (k, &a) in nodes.iter().enumerate() {
            for &b in &nodes[k + 1..] {
                let m = bond(a, b);
                if m > max_bond {
                    max_bond = m;
                }
                if m == 2 {
                    double = Some((a, b));
                }
            }
        }
        if max_bond == 3 {
            return mk(Family::G, 2);
        }
        if let Some((a, b)) = double {
            if n == 2 {
                // Ordered by node index: long then short reads as B2.
                return if self.lengths[a] > self.lengths[b] {
                    mk(Family::B, 2)
                } else {
                    mk(Family::C, 2)
                };
            }
            let end = [a, b].into_iter().find(|&v| neighbours(v).len() == 1);
            return match end {
                Some(e) => {
                    let other = if e == a { b } else { a };
                    if self.lengths[e] < self.lengths[other] {
                        mk(Family::B, n)
                    } else {
                        mk(Family::C, n)
                    }
                }
                None => mk(Family::F, 4),
            };
        }
        let Some(&branch) = nodes.iter().find(|&&v| neighbours(v).len() == 3) else {
            return mk(Family::A, n);
        };
        let mut arms: Vec<usize> = neighbours(branch)
            .into_iter()
            .map(|first| {
                let (mut prev, mut cur, mut len) = (branch, first, 1);
                loop {
                    let next: Vec<usize> =
                        neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                    match next.as_slice() {
                        [nx] => {
                            prev = cur;
                            cur = *nx;
                            len += 1;
                        }
                        _ => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        if arms[0] == 1 && arms[1] == 1 {
            mk(Family::D, n)
        } else {
            mk(Family::E, n)
        }
    }

    /// Serializable form of the system.
    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            components: self.components.clone(),
            nodes: (0..self.rank())
                .map(|i| {
                    let c = self.component_of(i);
                    NodeJson {
                        id: i,
                        component: c,
                        local: i - self.offsets[c] + 1,
                        length: self.lengths[i],
                    }
                })
                .collect(),
            cartan_matrix: self.cartan.clone(),
            form: self.form.clone(),
            positive_roots: self
                .positive
                .iter()
                .map(|r| RootJson {
                    coeffs: r.coeffs.clone(),
                    coroot: r.coroot.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a system from its serialized form, checking consistency.
    pub fn from_json(j: &RootSystemJson) -> Result<Self, RootSystemError> {
        let sys = RootSystem::new(&j.components)?;
        if sys.cartan != j.cartan_matrix {
            return Err(RootSystemError::Inconsistent("cartan_matrix".into()));
        }
        if sys.form != j.form {
            return Err(RootSystemError::Inconsistent("form".into()));
        }
        if sys.positive.len() != j.positive_roots.len()
            || sys
                .positive
                .iter()
                .zip(&j.positive_roots)
                .any(|(a, b)| a.coeffs != b.coeffs || a.coroot != b.coroot)
        {
            return Err(RootSystemError::Inconsistent("positive_roots".into()));
        }
        Ok(sys)
    }
}

/// Positive roots of the factor spanned by `nodes`, generated by root strings
/// in order of height.
fn positive_roots_of_block(cartan: &[Vec<i64>], nodes: &[usize], rank: usize) -> Vec<Vec<i64>> {
    let simple = |i: usize| {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        v
    };
    let mut all: Vec<Vec<i64>> = nodes.iter().map(|&i| simple(i)).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for &i in nodes {
                // p: how far the string extends downward from beta.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// All bijections `σ` with `b[σ(i)][σ(j)] = a[i][j]` and `allowed(i, σ(i))`.
pub fn cartan_isomorphisms(
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        allowed: &dyn Fn(usize, usize) -> bool,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for t in 0..n {
            if used[t] || !allowed(i, t) || b[t][t] != a[i][i] {
                continue;
            }
            let consistent = (0..i).all(|j| a[i][j] == b[t][perm[j]] && a[j][i] == b[perm[j]][t]);
            if !consistent {
                continue;
            }
            perm[i] = t;
            used[t] = true;
            rec(i + 1, a, b, allowed, perm, used, out);
            used[t] = false;
            perm[i] = usize::MAX;
        }
    }
    rec(0, a, b, &allowed, &mut perm, &mut used, &mut out);
    out
}

/// A weight, in coordinates over the fundamental weights of its system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub components: Vec<SimpleLieType>,
    #[serde(with = "rational::serde_q_vec")]
    pub coords: Vec<Q>,
}

impl Weight {
    /// Pairing with a coroot given over the simple coroots.
    pub fn pair_with_coroot(&self, coroot: &[i64]) -> Q {
        self.coords
            .iter()
            .zip(coroot)
            .map(|(w, &c)| w * qi(c))
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub component: usize,
    /// 1-based Bourbaki label inside the factor.
    pub local: usize,
    #[serde(with = "rational::serde_q")]
    pub length: Q,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub coeffs: Vec<i64>,
    pub coroot: Vec<i64>,
}

/// JSON schema of a [`RootSystem`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub components: Vec<SimpleLieType>,
    pub nodes: Vec<NodeJson>,
    pub cartan_matrix: Vec<Vec<i64>>,
    #[serde(with = "rational::serde_q_mat")]
    pub form: Vec<Vec<Q>>,
    pub positive_roots: Vec<RootJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleLieType {
        s.parse().unwrap()
    }

    fn sys(s: &[&str]) -> RootSystem {
        RootSystem::new(&s.iter().map(|x| ty(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleLieType::new(Family::A, 0).is_err());
        assert!(SimpleLieType::new(Family::B, 1).is_err());
        assert!(SimpleLieType::new(Family::C, 1).is_err());
        assert!(SimpleLieType::new(Family::D, 3).is_err());
        assert!(SimpleLieType::new(Family::E, 5).is_err());
        assert!(SimpleLieType::new(Family::E, 9).is_err());
        assert!(SimpleLieType::new(Family::F, 3).is_err());
        assert!(SimpleLieType::new(Family::G, 3).is_err());
        assert!(matches!(
            "D3".parse::<SimpleLieType>(),
            Err(RootSystemError::InvalidRank { .. })
        ));
        assert!("Q2".parse::<SimpleLieType>().is_err());
        assert!(RootSystem::new(&[]).is_err());
    }

    #[test]
    fn a1_single_root() {
        let s = sys(&["A1"]);
        assert_eq!(s.positive_roots().len(), 1);
        let pi = s.fundamental_weight(0);
        assert_eq!(s.pairing(&pi, &[1]).unwrap(), qi(1));
    }

    #[test]
    fn g2_long_and_short() {
        let s = sys(&["G2"]);
        assert_eq!(s.positive_roots().len(), 6);
        let long = s
            .positive_roots()
            .iter()
            .filter(|r| r.length == qi(2))
            .count();
        assert_eq!(long, 3);
        assert_eq!(s.cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
        // Highest root 3α1 + 2α2.
        assert!(s.positive_root_index(&[3, 2]).is_some());
    }

    #[test]
    fn b3_root_count() {
        assert_eq!(sys(&["B3"]).positive_roots().len(), 9);
    }

    #[test]
    fn known_counts_for_all_types() {
        for t in SimpleLieType::all_up_to_rank(8) {
            let s = RootSystem::new(&[t]).unwrap();
            assert_eq!(s.positive_roots().len(), t.positive_root_count(), "{t}");
        }
    }

    #[test]
    fn coroot_pairings() {
        let a2 = sys(&["A2"]);
        assert_eq!(
            a2.pairing(&a2.fundamental_weight(0), &[1, 1]).unwrap(),
            qi(1)
        );
        let b2 = sys(&["B2"]);
        assert_eq!(
            b2.pairing(&b2.fundamental_weight(0), &[1, 2]).unwrap(),
            qi(1)
        );
        assert_eq!(
            b2.pairing(&b2.fundamental_weight(0), &[-1, -2]).unwrap(),
            qi(-1)
        );
        assert_eq!(
            b2.pairing(&a2.fundamental_weight(0), &[1, 0]),
            Err(RootSystemError::MismatchedSystem)
        );
        assert!(matches!(
            b2.pairing(&b2.fundamental_weight(0), &[2, 0]),
            Err(RootSystemError::NotARoot(_))
        ));
    }

    #[test]
    fn short_bonds_pair_to_minus_half() {
        let c3: SimpleLieType = "C3".parse().unwrap();
        assert_eq!(c3.form()[0][1], crate::rational::q(-1, 2));
        assert_eq!(
            c3.cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        let f4: SimpleLieType = "F4".parse().unwrap();
        assert_eq!(f4.cartan_matrix()[1][2], -1);
        assert_eq!(f4.cartan_matrix()[2][1], -2);
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(sys(&["A1"]).diagram_automorphisms().len(), 1);
        assert_eq!(sys(&["A3"]).diagram_automorphisms().len(), 2);
        assert_eq!(sys(&["D4"]).diagram_automorphisms().len(), 6);
        assert_eq!(sys(&["B3"]).diagram_automorphisms().len(), 1);
        assert_eq!(sys(&["E6"]).diagram_automorphisms().len(), 2);
        assert_eq!(sys(&["A1", "A1"]).diagram_automorphisms().len(), 2);
        assert_eq!(sys(&["A2", "A2"]).diagram_automorphisms().len(), 8);
        assert_eq!(sys(&["B2", "C2"]).diagram_automorphisms().len(), 2);
        assert_eq!(sys(&["B3", "C3"]).diagram_automorphisms().len(), 1);
    }

    #[test]
    fn subdiagram_types() {
        let b3 = sys(&["B3"]);
        assert_eq!(b3.classify_subdiagram(&[1, 2]), vec![ty("B2")]);
        let c3 = sys(&["C3"]);
        assert_eq!(c3.classify_subdiagram(&[1, 2]), vec![ty("C2")]);
        let f4 = sys(&["F4"]);
        assert_eq!(f4.classify_subdiagram(&[0, 1, 2]), vec![ty("B3")]);
        assert_eq!(f4.classify_subdiagram(&[1, 2, 3]), vec![ty("C3")]);
        let e8 = sys(&["E8"]);
        assert_eq!(
            e8.classify_subdiagram(&[0, 1, 2, 3, 4, 5, 6]),
            vec![ty("E7")]
        );
        assert_eq!(
            e8.classify_subdiagram(&[1, 2, 3, 4, 5, 6, 7]),
            vec![ty("D7")]
        );
        let d5 = sys(&["D5"]);
        assert_eq!(
            d5.classify_subdiagram(&[0, 2, 3, 4]),
            vec![ty("A1"), ty("A3")]
        );
        let g2 = sys(&["G2"]);
        assert_eq!(g2.classify_subdiagram(&[0, 1]), vec![ty("G2")]);
    }

    #[test]
    fn json_round_trip() {
        let s = sys(&["B2", "A1"]);
        let j = serde_json::to_string(&s.to_json()).unwrap();
        assert!(j.contains(r#""length":{"num":1,"den":1}"#));
        let back: RootSystemJson = serde_json::from_str(&j).unwrap();
        assert_eq!(RootSystem::from_json(&back).unwrap(), s);
        let mut bad = back.clone();
        bad.cartan_matrix[0][1] = -3;
        assert!(RootSystem::from_json(&bad).is_err());
    }
}
