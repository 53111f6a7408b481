//! Chevalley bases with explicit structure constants for simple algebras of
//! rank at most 3, and brute-force checks built on them.
//!
//! Basis order: `H_1..H_r` (simple coroots), then `E_α` for the positive
//! roots in the order of [`RootSystem::positive_roots`], then `E_{-α}` in the
//! same order.
//!
//! Sign convention: `N_{α,β} = +(p+1)` for every extraspecial pair, where the
//! extraspecial pair of a positive root `γ` is `(α, γ-α)` with `α` the first
//! positive root (in the order above) such that `γ-α` is a root. Signs of the
//! remaining positive pairs are the first assignment (all `+` first) for which
//! the Jacobi identity holds. Other constants follow from
//! `N_{β,α} = -N_{α,β}`, `N_{-α,-β} = -N_{α,β}` and, for `α+β+γ = 0`,
//! `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β)`.

use std::collections::HashMap;

use num_traits::Zero;

use super::OracleError;
use crate::rational::{inertia, kernel, qi, rank, Q};
use crate::rootsys::{RootSystem, SimpleLieType};
use crate::standard_cr::LeviSignature;

/// Sparse linear combination of basis elements with integer coefficients.
pub type SparseVec = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    ty: SimpleLieType,
    system: RootSystem,
    /// Root of each basis element (`None` for the Cartan part).
    roots: Vec<Option<Vec<i64>>>,
    index: HashMap<Vec<i64>, usize>,
    table: Vec<Vec<SparseVec>>,
}

/// Builds the Chevalley basis of a simple algebra of rank ≤ 3.
pub fn build_chevalley(ty: SimpleLieType) -> Result<ChevalleyAlgebra, OracleError> {
    if ty.rank > 3 {
        return Err(OracleError::UnsupportedRank(ty));
    }
    let system = RootSystem::new(&[ty]).map_err(|_| OracleError::UnsupportedRank(ty))?;
    let r = system.rank();
    let pos: Vec<Vec<i64>> = system
        .positive_roots()
        .iter()
        .map(|x| x.coeffs.clone())
        .collect();
    let mut roots: Vec<Option<Vec<i64>>> = vec![None; r];
    roots.extend(pos.iter().cloned().map(Some));
    roots.extend(pos.iter().map(|c| Some(neg(c))));
    let index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.clone().map(|c| (c, i)))
        .collect();

    let pos_index: HashMap<&[i64], usize> = pos
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    // Positive pairs (a, b), a < b, with a + b a root.
    let mut pairs = Vec::new();
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            if pos_index.contains_key(add(&pos[a], &pos[b]).as_slice()) {
                pairs.push((a, b));
            }
        }
    }
    let mut extraspecial = Vec::new();
    for g in &pos {
        if let Some(a) =
            (0..pos.len()).find(|&a| pos_index.contains_key(sub(g, &pos[a]).as_slice()))
        {
            let b = pos_index[sub(g, &pos[a]).as_slice()];
            extraspecial.push((a.min(b), a.max(b)));
        }
    }
    let free: Vec<usize> = (0..pairs.len())
        .filter(|i| !extraspecial.contains(&pairs[*i]))
        .collect();

    let mut alg = ChevalleyAlgebra {
        ty,
        system,
        roots,
        index,
        table: Vec::new(),
    };
    for mask in 0u32..(1 << free.len()) {
        let mut signs: HashMap<(usize, usize), i64> = pairs.iter().map(|&p| (p, 1)).collect();
        for (bit, &i) in free.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                signs.insert(pairs[i], -1);
            }
        }
        alg.table = alg.build_table(&pos, &signs);
        if alg.jacobi_holds() {
            return Ok(alg);
        }
    }
    Err(OracleError::Inconsistent(format!(
        "no consistent signs for {ty}"
    )))
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().any(|&x| x > 0)
}

impl ChevalleyAlgebra {
    fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Largest `p` with `β - pα` a root.
    fn string_p(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = sub(b, a);
        while self.is_root(&cur) {
            p += 1;
            cur = sub(&cur, a);
        }
        p
    }

    fn n_constant(
        &self,
        x: &[i64],
        y: &[i64],
        pos: &[Vec<i64>],
        signs: &HashMap<(usize, usize), i64>,
    ) -> i64 {
        let pos_idx = |v: &[i64]| pos.iter().position(|p| p == v).expect("positive root");
        match (is_positive(x), is_positive(y)) {
            (true, true) => {
                let (i, j) = (pos_idx(x), pos_idx(y));
                let mag = self.string_p(x, y) + 1;
                if i < j {
                    signs[&(i, j)] * mag
                } else {
                    -signs[&(j, i)] * mag
                }
            }
            (false, false) => -self.n_constant(&neg(x), &neg(y), pos, signs),
            _ => {
                let z = neg(&add(x, y));
                let len = |v: &[i64]| self.system.norm2(v);
                let v = if is_positive(y) == is_positive(&z) {
                    len(&z) / len(x) * qi(self.n_constant(y, &z, pos, signs))
                } else {
                    len(&z) / len(y) * qi(self.n_constant(&z, x, pos, signs))
                };
                debug_assert!(v.is_integer());
                v.to_integer()
            }
        }
    }

    fn build_table(
        &self,
        pos: &[Vec<i64>],
        signs: &HashMap<(usize, usize), i64>,
    ) -> Vec<Vec<SparseVec>> {
        let dim = self.roots.len();
        let r = self.system.rank();
        let mut t = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                t[i][j] = match (&self.roots[i], &self.roots[j]) {
                    (None, None) => Vec::new(),
                    (None, Some(y)) => vec![(j, self.system.cartan_pairing(y, i))],
                    (Some(x), None) => vec![(i, -self.system.cartan_pairing(x, j))],
                    (Some(x), Some(y)) => {
                        let s = add(x, y);
                        if s.iter().all(|&c| c == 0) {
                            let (root, sign) = self.system.find_root(x).expect("root");
                            (0..r)
                                .filter(|&k| root.coroot[k] != 0)
                                .map(|k| (k, sign * root.coroot[k]))
                                .collect()
                        } else if let Some(&k) = self.index.get(&s) {
                            vec![(k, self.n_constant(x, y, pos, signs))]
                        } else {
                            Vec::new()
                        }
                    }
                };
                t[i][j].retain(|&(_, c)| c != 0);
            }
        }
        t
    }

    pub fn simple_type(&self) -> SimpleLieType {
        self.ty
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// Basis index of `E_α` for a (possibly negative) root.
    pub fn root_vector(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Root of a basis element, `None` for `H_i`.
    pub fn basis_root(&self, i: usize) -> Option<&[i64]> {
        self.roots[i].as_deref()
    }

    /// `[b_i, b_j]` as a sparse combination.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i][j]
    }

    /// `N_{α,β}` when `α + β` is a root.
    pub fn structure_constant(&self, a: &[i64], b: &[i64]) -> Option<i64> {
        let (i, j) = (self.root_vector(a)?, self.root_vector(b)?);
        let k = self.root_vector(&add(a, b))?;
        self.table[i][j]
            .iter()
            .find(|(m, _)| *m == k)
            .map(|&(_, c)| c)
    }

    /// Bracket of arbitrary rational combinations.
    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for &(k, c) in &self.table[i][j] {
                    out[k] += a * b * qi(c);
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = qi(1);
        v
    }

    /// Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        let br = |i: usize, v: &[Q]| self.bracket(&self.unit(i), v);
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.bracket(&self.unit(i), &self.unit(j));
                for k in j + 1..n {
                    let jk = self.bracket(&self.unit(j), &self.unit(k));
                    let ki = self.bracket(&self.unit(k), &self.unit(i));
                    let a = br(i, &jk);
                    let b = br(j, &ki);
                    let c = br(k, &ij);
                    if (0..n).any(|m| !(a[m] + b[m] + c[m]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The element `Z ∈ h` with `α(Z) = (θ, α)` for all roots, as coordinates
    /// on `H_1..H_r`. `theta` is given by its values `θ(α_j^∨)`.
    pub fn contact_element(&self, theta: &[Q]) -> Vec<Q> {
        let r = self.rank();
        let d = self.system.simple_lengths();
        // Σ_i z_i <α_j, α_i^∨> = (θ, α_j) = θ_j d_j / 2.
        let m: Vec<Vec<Q>> = (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| qi(self.system.cartan_matrix()[i][j]))
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = (0..r).map(|j| theta[j] * d[j] / qi(2)).collect();
        let z = crate::rational::solve(&m, &rhs).expect("Cartan matrix is invertible");
        let mut v = vec![Q::zero(); self.dim()];
        v[..r].copy_from_slice(&z);
        v
    }

    /// Matrix of `ad X` (columns are images of basis vectors).
    pub fn ad_matrix(&self, x: &[Q]) -> Vec<Vec<Q>> {
        let n = self.dim();
        let cols: Vec<Vec<Q>> = (0..n).map(|j| self.bracket(x, &self.unit(j))).collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect()
    }
}

/// `dim C_g(Z)` by solving `[Z, X] = 0`.
pub fn centralizer_dim(alg: &ChevalleyAlgebra, theta: &[Q]) -> usize {
    let z = alg.contact_element(theta);
    kernel(&alg.ad_matrix(&z), alg.dim()).len()
}

/// `dim h + #{α : θ(α^∨) = 0}`.
pub fn centralizer_dim_formula(alg: &ChevalleyAlgebra, theta: &[Q]) -> usize {
    let zeros = alg
        .system()
        .positive_roots()
        .iter()
        .filter(|r| {
            r.coroot
                .iter()
                .zip(theta)
                .map(|(&c, t)| qi(c) * t)
                .sum::<Q>()
                .is_zero()
        })
        .count();
    alg.rank() + 2 * zeros
}

/// Positive roots with a nonzero coefficient on a black node.
pub fn standard_m10(alg: &ChevalleyAlgebra, black: &[usize]) -> Vec<Vec<i64>> {
    alg.system()
        .positive_roots()
        .iter()
        .filter(|r| black.iter().any(|&b| r.coeffs[b] != 0))
        .map(|r| r.coeffs.clone())
        .collect()
}

fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    let r = rank(basis);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == r
}

/// Whether `l^C + span(m10)` is closed under the bracket.
///
/// `l` is spanned by the Cartan subalgebra restricted to `ker θ` when `theta`
/// is given (all of `h` otherwise) and the root vectors of the white
/// subdiagram's roots. `m10` must contain exactly one of `±α` for every
/// complementary positive root `α` and nothing else.
pub fn verify_integrability(
    alg: &ChevalleyAlgebra,
    black: &[usize],
    m10: &[Vec<i64>],
    theta: Option<&[Q]>,
) -> Result<bool, OracleError> {
    let complementary = standard_m10(alg, black);
    for a in &complementary {
        let hits = m10.iter().filter(|x| *x == a || **x == neg(a)).count();
        if hits != 1 {
            return Err(OracleError::InvalidSpan(format!(
                "root {a:?} appears {hits} times up to sign"
            )));
        }
    }
    if m10.len() != complementary.len() {
        return Err(OracleError::InvalidSpan("m10 contains roots of k".into()));
    }
    let r = alg.rank();
    let mut span: Vec<Vec<Q>> = Vec::new();
    match theta {
        Some(t) => {
            // h ∩ ker θ, with θ(H_i) = θ_i.
            let row = vec![t.to_vec()];
            for k in kernel(&row, r) {
                let mut v = vec![Q::zero(); alg.dim()];
                v[..r].copy_from_slice(&k);
                span.push(v);
            }
        }
        None => span.extend((0..r).map(|i| alg.unit(i))),
    }
    for root in alg.system().positive_roots() {
        if black.iter().all(|&b| root.coeffs[b] == 0) {
            span.push(alg.unit(alg.root_vector(&root.coeffs).expect("root")));
            span.push(alg.unit(alg.root_vector(&neg(&root.coeffs)).expect("root")));
        }
    }
    for x in m10 {
        span.push(
            alg.unit(
                alg.root_vector(x)
                    .ok_or_else(|| OracleError::InvalidSpan(format!("{x:?} is not a root")))?,
            ),
        );
    }
    for i in 0..span.len() {
        for j in i + 1..span.len() {
            let b = alg.bracket(&span[i], &span[j]);
            if b.iter().any(|c| !c.is_zero()) && !in_span(&span, &b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[Z, m10] ⊆ m10`.
pub fn contact_preserves_m10(alg: &ChevalleyAlgebra, theta: &[Q], m10: &[Vec<i64>]) -> bool {
    let z = alg.contact_element(theta);
    let span: Vec<Vec<Q>> = m10
        .iter()
        .map(|x| alg.unit(alg.root_vector(x).expect("root")))
        .collect();
    span.iter().all(|v| {
        let b = alg.bracket(&z, v);
        b.iter().all(|c| c.is_zero()) || in_span(&span, &b)
    })
}

/// A complex vector as real and imaginary parts.
type CVec = (Vec<Q>, Vec<Q>);

fn cbracket(alg: &ChevalleyAlgebra, u: &CVec, v: &CVec) -> CVec {
    let rr = alg.bracket(&u.0, &v.0);
    let ii = alg.bracket(&u.1, &v.1);
    let ri = alg.bracket(&u.0, &v.1);
    let ir = alg.bracket(&u.1, &v.0);
    (
        rr.iter().zip(&ii).map(|(a, b)| a - b).collect(),
        ri.iter().zip(&ir).map(|(a, b)| a + b).collect(),
    )
}

/// Levi signature computed on the compact real form.
///
/// For each complementary positive root `α`, `X_α = E_α - E_{-α}` and
/// `Y_α = i(E_α + E_{-α})` span a real plane of `m` with `J X_α = Y_α`,
/// `J Y_α = -X_α`. The contact form is `θ_c = i·θ` on `h` (zero on root
/// vectors) and the Levi form is `S(u, v) = -θ_c([u, Jv])`. The real
/// signature of `S` is twice the complex one.
pub fn levi_form_oracle(
    alg: &ChevalleyAlgebra,
    black: &[usize],
    tuple: &[i64],
) -> Result<LeviSignature, OracleError> {
    let r = alg.rank();
    if tuple.len() != black.len() {
        return Err(OracleError::InvalidSpan(
            "tuple length differs from black nodes".into(),
        ));
    }
    let mut theta = vec![Q::zero(); r];
    for (&b, &p) in black.iter().zip(tuple) {
        theta[b] = qi(p);
    }
    let n = alg.dim();
    let zero = || vec![Q::zero(); n];
    let mut basis: Vec<CVec> = Vec::new();
    let mut jbasis: Vec<CVec> = Vec::new();
    for a in standard_m10(alg, black) {
        let (ip, im) = (
            alg.root_vector(&a).expect("root"),
            alg.root_vector(&neg(&a)).expect("root"),
        );
        let mut x = zero();
        x[ip] = qi(1);
        x[im] = qi(-1);
        let mut y = zero();
        y[ip] = qi(1);
        y[im] = qi(1);
        let xv: CVec = (x.clone(), zero());
        let yv: CVec = (zero(), y.clone());
        let neg_x: CVec = (x.iter().map(|c| -c).collect(), zero());
        basis.push(xv.clone());
        jbasis.push(yv.clone());
        basis.push(yv);
        jbasis.push(neg_x);
    }
    let theta_c = |w: &CVec| -> (Q, Q) {
        let re: Q = -(0..r).map(|j| w.1[j] * theta[j]).sum::<Q>();
        let im: Q = (0..r).map(|j| w.0[j] * theta[j]).sum();
        (re, im)
    };
    let m = basis.len();
    let mut s = vec![vec![Q::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let (re, im) = theta_c(&cbracket(alg, &basis[i], &jbasis[j]));
            if !im.is_zero() {
                return Err(OracleError::Inconsistent("Levi form is not real".into()));
            }
            s[i][j] = -re;
        }
    }
    for i in 0..m {
        for j in 0..i {
            if s[i][j] != s[j][i] {
                return Err(OracleError::Inconsistent(
                    "Levi form is not symmetric".into(),
                ));
            }
        }
    }
    let (p, q, z) = inertia(&s);
    if z > 0 {
        return Err(OracleError::DegenerateForm);
    }
    debug_assert!(p % 2 == 0 && q % 2 == 0);
    Ok(LeviSignature {
        n_plus: p / 2,
        n_minus: q / 2,
    })
}

/// Checks `|N_{α,β}| = p + 1` for all roots with `α + β` a root.
pub fn magnitudes_match_strings(alg: &ChevalleyAlgebra) -> bool {
    let roots: Vec<Vec<i64>> = (alg.rank()..alg.dim())
        .map(|i| alg.roots[i].clone().expect("root"))
        .collect();
    roots.iter().all(|a| {
        roots.iter().all(|b| match alg.structure_constant(a, b) {
            Some(n) => n.abs() == alg.string_p(a, b) + 1,
            None => !alg.is_root(&add(a, b)),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn alg(s: &str) -> ChevalleyAlgebra {
        build_chevalley(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_brackets() {
        let a = alg("A1");
        let (h, e, f) = (
            0,
            a.root_vector(&[1]).unwrap(),
            a.root_vector(&[-1]).unwrap(),
        );
        assert_eq!(a.bracket_basis(e, f), &[(h, 1)]);
        assert_eq!(a.bracket_basis(h, e), &[(e, 2)]);
        assert_eq!(a.bracket_basis(h, f), &[(f, -2)]);
    }

    #[test]
    fn dimensions_and_jacobi() {
        for (name, dim) in [
            ("A1", 3),
            ("A2", 8),
            ("A3", 15),
            ("B2", 10),
            ("C2", 10),
            ("B3", 21),
            ("C3", 21),
            ("G2", 14),
        ] {
            let a = alg(name);
            assert_eq!(a.dim(), dim, "{name}");
            assert!(a.jacobi_holds(), "{name}");
            assert!(magnitudes_match_strings(&a), "{name}");
        }
        assert!(matches!(
            build_chevalley("A4".parse().unwrap()),
            Err(OracleError::UnsupportedRank(_))
        ));
    }

    #[test]
    fn a2_constants() {
        let a = alg("A2");
        assert_eq!(a.structure_constant(&[1, 0], &[0, 1]).unwrap().abs(), 1);
        let g = alg("G2");
        assert_eq!(g.structure_constant(&[1, 0], &[1, 1]).unwrap().abs(), 2);
        assert_eq!(g.structure_constant(&[1, 0], &[2, 1]).unwrap().abs(), 3);
    }

    #[test]
    fn centralizer_examples() {
        let a = alg("A2");
        assert_eq!(centralizer_dim(&a, &[q(1, 1), q(1, 1)]), 2);
        assert_eq!(centralizer_dim(&a, &[q(1, 1), q(-1, 1)]), 4);
        assert_eq!(centralizer_dim(&alg("A1"), &[q(1, 1)]), 1);
        assert_eq!(centralizer_dim_formula(&a, &[q(1, 1), q(-1, 1)]), 4);
    }

    #[test]
    fn integrability_examples() {
        let a = alg("A2");
        let full = [0, 1];
        assert!(
            verify_integrability(&a, &full, &[vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap()
        );
        assert!(
            verify_integrability(&a, &full, &[vec![1, 0], vec![0, -1], vec![1, 1]], None).unwrap()
        );
        assert!(
            !verify_integrability(&a, &full, &[vec![1, 0], vec![0, 1], vec![-1, -1]], None)
                .unwrap()
        );
        assert!(matches!(
            verify_integrability(&a, &full, &[vec![1, 0], vec![-1, 0], vec![1, 1]], None),
            Err(OracleError::InvalidSpan(_))
        ));
    }

    #[test]
    fn levi_examples() {
        let a = alg("A2");
        let sig = |t: &[i64]| levi_form_oracle(&a, &[0, 1], t).unwrap();
        assert_eq!(
            sig(&[1, 1]),
            LeviSignature {
                n_plus: 3,
                n_minus: 0
            }
        );
        assert_eq!(
            sig(&[2, -1]),
            LeviSignature {
                n_plus: 2,
                n_minus: 1
            }
        );
        assert_eq!(
            levi_form_oracle(&alg("A1"), &[0], &[1]).unwrap(),
            LeviSignature {
                n_plus: 1,
                n_minus: 0
            }
        );
        assert_eq!(
            levi_form_oracle(&a, &[0, 1], &[1, -1]),
            Err(OracleError::DegenerateForm)
        );
    }
}
