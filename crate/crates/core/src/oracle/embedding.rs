//! Explicit realizations of the Onishchik embeddings `G ⊂ A`.
//!
//! Cartan elements are written as matrices and all forms are trace forms:
//!
//! * row I: `sp_ℓ ⊂ sl_{2ℓ}`, `h ↦ diag(h, -h)` (this matrix satisfies
//!   `XᵀΩ + ΩX = 0` for `Ω = [[0, I], [-I, 0]]`); both forms are `tr(XY)`.
//! * row II: `g_2 ⊂ so_7` through its 7-dimensional representation, whose
//!   torus weights are the short roots and `0`; the torus element
//!   `t = (t_1, t_2, t_3)`, `Σt = 0`, rotates three planes by `(-t_3, t_1, t_2)`.
//! * row III: `so_{2ℓ+1} ⊂ so_{2ℓ+2}` as the upper-left block, rotation
//!   angles `h ↦ (h, 0)`.
//!
//! For the orthogonal algebras both forms are `-½ tr(XY)`. With these
//! normalizations long roots have squared length 2 on both sides.

use num_traits::{One, Signed, Zero};

use super::OracleError;
use crate::flag::PaintedDiagram;
use crate::maximal_group::OnishchikRow;
use crate::rational::{gcd_all, lcm_denominators, qi, solve, Q};
use crate::rootsys::{Family, SimpleLieType};

type Mat = Vec<Vec<Q>>;

fn zeros(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

fn trace_product(a: &Mat, b: &Mat) -> Q {
    let n = a.len();
    let mut s = Q::zero();
    for i in 0..n {
        for j in 0..n {
            s += a[i][j] * b[j][i];
        }
    }
    s
}

fn diagonal(x: &[Q]) -> Mat {
    let mut m = zeros(x.len());
    for (i, v) in x.iter().enumerate() {
        m[i][i] = *v;
    }
    m
}

/// Block rotation generator in dimension `n` with the given plane angles.
fn rotation(angles: &[Q], n: usize) -> Mat {
    let mut m = zeros(n);
    for (k, a) in angles.iter().enumerate() {
        m[2 * k][2 * k + 1] = -*a;
        m[2 * k + 1][2 * k] = *a;
    }
    m
}

fn is_symplectic(x: &Mat) -> bool {
    let n = x.len() / 2;
    let mut omega = zeros(2 * n);
    for i in 0..n {
        omega[i][n + i] = qi(1);
        omega[n + i][i] = qi(-1);
    }
    let mul = |a: &Mat, b: &Mat| -> Mat {
        (0..2 * n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| (0..2 * n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    };
    let xt: Mat = (0..2 * n)
        .map(|i| (0..2 * n).map(|j| x[j][i]).collect())
        .collect();
    let s1 = mul(&xt, &omega);
    let s2 = mul(&omega, x);
    (0..2 * n).all(|i| (0..2 * n).all(|j| (s1[i][j] + s2[i][j]).is_zero()))
}

/// One Onishchik embedding at a fixed ℓ.
struct Realization {
    g_type: SimpleLieType,
    a_type: SimpleLieType,
    g_black: usize,
    a_black: usize,
    /// Simple coroots of `g` in `g` coordinates.
    g_coroots: Vec<Vec<Q>>,
    /// Simple coroots of `a` in `a` coordinates.
    a_coroots: Vec<Vec<Q>>,
    /// Center direction of `c`, positive on the black simple root.
    a_center: Vec<Q>,
    embed: fn(&[Q]) -> Vec<Q>,
    g_matrix: fn(&[Q]) -> Mat,
    a_matrix: fn(&[Q]) -> Mat,
    /// Scalar `s` with form `= s · tr`.
    g_scale: Q,
    a_scale: Q,
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = qi(1);
    v
}

fn diff(n: usize, i: usize) -> Vec<Q> {
    let mut v = unit(n, i);
    v[i + 1] = qi(-1);
    v
}

fn realization(row: OnishchikRow, ell: usize) -> Result<Realization, OracleError> {
    let ty = |family, rank| SimpleLieType { family, rank };
    let half = -Q::one() / qi(2);
    match row {
        OnishchikRow::I if (2..=6).contains(&ell) => {
            let n = 2 * ell;
            let mut g_coroots: Vec<Vec<Q>> = (0..ell - 1).map(|i| diff(ell, i)).collect();
            g_coroots.push(unit(ell, ell - 1));
            let mut u = vec![qi(-1); n];
            u[0] = qi(n as i64 - 1);
            Ok(Realization {
                g_type: ty(Family::C, ell),
                a_type: ty(Family::A, n - 1),
                g_black: 0,
                a_black: 0,
                g_coroots,
                a_coroots: (0..n - 1).map(|i| diff(n, i)).collect(),
                a_center: u,
                embed: |h| h.iter().copied().chain(h.iter().map(|x| -*x)).collect(),
                g_matrix: |h| {
                    diagonal(
                        &h.iter()
                            .copied()
                            .chain(h.iter().map(|x| -*x))
                            .collect::<Vec<_>>(),
                    )
                },
                a_matrix: diagonal,
                g_scale: qi(1),
                a_scale: qi(1),
            })
        }
        OnishchikRow::II if ell == 2 => Ok(Realization {
            g_type: ty(Family::G, 2),
            a_type: ty(Family::B, 3),
            g_black: 0,
            a_black: 0,
            g_coroots: vec![vec![qi(-1), qi(2), qi(-1)], vec![qi(1), qi(-1), qi(0)]],
            a_coroots: vec![diff(3, 0), diff(3, 1), vec![qi(0), qi(0), qi(2)]],
            a_center: unit(3, 0),
            embed: |t| vec![-t[2], t[0], t[1]],
            g_matrix: |t| rotation(&[-t[2], t[0], t[1]], 7),
            a_matrix: |y| rotation(y, 7),
            g_scale: half,
            a_scale: half,
        }),
        OnishchikRow::III if (3..=6).contains(&ell) => {
            let mut g_coroots: Vec<Vec<Q>> = (0..ell - 1).map(|i| diff(ell, i)).collect();
            let mut last = vec![Q::zero(); ell];
            last[ell - 1] = qi(2);
            g_coroots.push(last);
            let m = ell + 1;
            let mut a_coroots: Vec<Vec<Q>> = (0..m - 1).map(|i| diff(m, i)).collect();
            let mut spin = vec![Q::zero(); m];
            spin[m - 2] = qi(1);
            spin[m - 1] = qi(1);
            a_coroots.push(spin);
            Ok(Realization {
                g_type: ty(Family::B, ell),
                a_type: ty(Family::D, m),
                g_black: ell - 1,
                a_black: m - 1,
                g_coroots,
                a_coroots,
                a_center: vec![qi(1); m],
                embed: |h| {
                    h.iter()
                        .copied()
                        .chain(std::iter::once(Q::zero()))
                        .collect()
                },
                g_matrix: |h| rotation(h, 2 * h.len() + 1),
                a_matrix: |y| rotation(y, 2 * y.len()),
                g_scale: half,
                a_scale: half,
            })
        }
        _ => Err(OracleError::UnsupportedInstance { row, ell }),
    }
}

impl Realization {
    fn b_g(&self, x: &[Q], y: &[Q]) -> Q {
        self.g_scale * trace_product(&(self.g_matrix)(x), &(self.g_matrix)(y))
    }

    fn b_a_raw(&self, x: &[Q], y: &[Q]) -> Q {
        self.a_scale * trace_product(&(self.a_matrix)(x), &(self.a_matrix)(y))
    }

    fn combine(basis: &[Vec<Q>], coeffs: &[Q]) -> Vec<Q> {
        let n = basis[0].len();
        (0..n)
            .map(|k| basis.iter().zip(coeffs).map(|(b, c)| b[k] * c).sum())
            .collect()
    }

    /// `E^c`: generator of the projection of the `a` coroot lattice to the
    /// center line of `c`.
    fn e_c(&self) -> Vec<Q> {
        let u = &self.a_center;
        let uu = self.b_a_raw(u, u);
        let coeffs: Vec<Q> = self
            .a_coroots
            .iter()
            .map(|v| self.b_a_raw(v, u) / uu)
            .collect();
        let l = lcm_denominators(&coeffs);
        let ints: Vec<i64> = coeffs.iter().map(|c| (c * qi(l)).to_integer()).collect();
        let g = Q::new(gcd_all(&ints), l);
        u.iter().map(|x| x * g).collect()
    }

    /// Scale making `B_a(E^c, E^c) = 1`.
    fn a_normalization(&self) -> Q {
        let ec = self.e_c();
        self.b_a_raw(&ec, &ec).recip()
    }

    fn b_a(&self, x: &[Q], y: &[Q]) -> Q {
        self.a_normalization() * self.b_a_raw(x, y)
    }

    /// `Z = B_g^{-1}θ` for `θ = p π_black`, in `g` coordinates.
    fn contact_element(&self, p: i64) -> Vec<Q> {
        let r = self.g_coroots.len();
        let gram: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.b_g(&self.g_coroots[i], &self.g_coroots[j]))
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = (0..r)
            .map(|j| if j == self.g_black { qi(p) } else { Q::zero() })
            .collect();
        let z = solve(&gram, &rhs).expect("nondegenerate form");
        Self::combine(&self.g_coroots, &z)
    }

    /// Primitive coroot-lattice vector on the ray of `Z` (for `p > 0`).
    fn e_k(&self) -> Vec<Q> {
        let r = self.g_coroots.len();
        let gram: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.b_g(&self.g_coroots[i], &self.g_coroots[j]))
                    .collect()
            })
            .collect();
        let z = self.contact_element(1);
        let rhs: Vec<Q> = (0..r).map(|j| self.b_g(&z, &self.g_coroots[j])).collect();
        // Coordinates of Z on the simple coroots.
        let c = solve(&gram, &rhs).expect("nondegenerate form");
        let l = lcm_denominators(&c);
        let ints: Vec<i64> = c.iter().map(|x| (x * qi(l)).to_integer()).collect();
        let g = gcd_all(&ints);
        let prim: Vec<Q> = ints.iter().map(|&x| qi(x / g)).collect();
        Self::combine(&self.g_coroots, &prim)
    }
}

/// Values of the matrix computation for one embedding and one tuple entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCheck {
    /// `B_a(E^k, E^c)`.
    pub index: Q,
    pub b_g_zz: Q,
    pub b_a_z_ec: Q,
    /// `B_a(Z, Z′)` with `Z′ = B_g(Z,Z)/B_a(Z,E^c) · E^c`.
    pub b_a_z_zprime: Q,
    pub coefficient: Q,
    /// `θ′(α′_j^∨) = B_a(Z′, α′_j^∨)` over the simple coroots of `a`.
    pub a_side_theta: Vec<Q>,
    pub a_black: usize,
}

/// Embedding index `B_a(E^k, E^c)` from the matrix realization.
pub fn matrix_embedding_index(row: OnishchikRow, ell: usize) -> Result<Q, OracleError> {
    Ok(matrix_transfer_check(row, ell, 1)?.index)
}

/// Runs the contact-element transfer inside the matrix realization.
pub fn matrix_transfer_check(
    row: OnishchikRow,
    ell: usize,
    p: i64,
) -> Result<EmbeddingCheck, OracleError> {
    let re = realization(row, ell)?;
    if row == OnishchikRow::I {
        let z = re.contact_element(p);
        if !is_symplectic(&(re.g_matrix)(&z)) {
            return Err(OracleError::Inconsistent(
                "Cartan element is not symplectic".into(),
            ));
        }
    }
    let ec = re.e_c();
    let ek = (re.embed)(&re.e_k());
    let z = re.contact_element(p);
    let iz = (re.embed)(&z);
    let b_g_zz = re.b_g(&z, &z);
    let b_a_z_ec = re.b_a(&iz, &ec);
    let coefficient = b_g_zz / b_a_z_ec;
    let zp: Vec<Q> = ec.iter().map(|x| x * coefficient).collect();
    Ok(EmbeddingCheck {
        index: re.b_a(&ek, &ec),
        b_g_zz,
        b_a_z_ec,
        b_a_z_zprime: re.b_a(&iz, &zp),
        coefficient,
        a_side_theta: re.a_coroots.iter().map(|v| re.b_a(&zp, v)).collect(),
        a_black: re.a_black,
    })
}

/// Simple roots of a type as functionals on its coordinate space.
fn simple_root_functionals(ty: SimpleLieType) -> Vec<Vec<Q>> {
    let n = ty.rank;
    let mut v: Vec<Vec<Q>> = match ty.family {
        Family::A => return (0..n).map(|i| diff(n + 1, i)).collect(),
        Family::G => return vec![vec![qi(0), qi(1), qi(0)], vec![qi(1), qi(-1), qi(0)]],
        _ => (0..n - 1).map(|i| diff(n, i)).collect(),
    };
    let mut last = vec![Q::zero(); n];
    match ty.family {
        Family::B => last[n - 1] = qi(1),
        Family::C => last[n - 1] = qi(2),
        Family::D => {
            last[n - 2] = qi(1);
            last[n - 1] = qi(1);
        }
        _ => unreachable!("only classical types and G2 are realized"),
    }
    v.push(last);
    v
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Complementary roots of a painting, each evaluated on a list of vectors.
fn evaluated_roots(d: &PaintedDiagram, on: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let ty = d.system().components()[0];
    let simple = simple_root_functionals(ty);
    let mut out: Vec<Vec<Q>> = d
        .complementary_positive_roots()
        .iter()
        .map(|r| {
            let f = Realization::combine(
                &simple,
                &r.coeffs.iter().map(|&c| qi(c)).collect::<Vec<_>>(),
            );
            on.iter().map(|v| dot(&f, v)).collect()
        })
        .collect();
    out.sort();
    out
}

/// Whether the tangent weights of the `A`-side flag restrict to those of the
/// given `G`-side painting under the Cartan embedding of the family.
pub fn tangent_weights_match(
    row: OnishchikRow,
    ell: usize,
    g_side: &PaintedDiagram,
) -> Result<bool, OracleError> {
    let re = realization(row, ell)?;
    if g_side.system().components() != [re.g_type] {
        return Ok(false);
    }
    let a_side = PaintedDiagram::from_types(&[re.a_type], &[re.a_black])
        .map_err(|e| OracleError::Inconsistent(e.to_string()))?;
    let on_a: Vec<Vec<Q>> = re.g_coroots.iter().map(|c| (re.embed)(c)).collect();
    Ok(evaluated_roots(&a_side, &on_a) == evaluated_roots(g_side, &re.g_coroots))
}

/// Checks the functionals against the Cartan matrix of the type:
/// `α_j(α_i^∨) = C[i][j]` on the realization's coroots.
pub fn realization_matches_cartan(row: OnishchikRow, ell: usize) -> Result<bool, OracleError> {
    let re = realization(row, ell)?;
    let check = |ty: SimpleLieType, coroots: &[Vec<Q>]| {
        let c = ty.cartan_matrix();
        let f = simple_root_functionals(ty);
        (0..ty.rank).all(|i| (0..ty.rank).all(|j| dot(&f[j], &coroots[i]) == qi(c[i][j])))
    };
    Ok(check(re.g_type, &re.g_coroots)
        && check(re.a_type, &re.a_coroots)
        && re.a_center.iter().any(|x| x.is_positive()))
}
