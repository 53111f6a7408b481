//! Exact rational scalars and the small amount of dense linear algebra the
//! engine needs (rank, kernel, inertia of symmetric forms).

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exact rational scalar used throughout the crate.
pub type Q = Rational64;

/// Builds `num / den`.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(num, den)
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// JSON wire form of a rational: `{"num": n, "den": d}` with `d > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: i64,
    pub den: i64,
}

impl From<Q> for JsonRational {
    fn from(v: Q) -> Self {
        JsonRational {
            num: *v.numer(),
            den: *v.denom(),
        }
    }
}

impl TryFrom<JsonRational> for Q {
    type Error = String;

    fn try_from(v: JsonRational) -> Result<Self, Self::Error> {
        if v.den == 0 {
            return Err("rational with zero denominator".into());
        }
        Ok(Q::new(v.num, v.den))
    }
}

/// Serde adapter so `Q` fields serialize as `{num, den}`.
pub mod serde_q {
    use super::{JsonRational, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        JsonRational::from(*v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let raw = JsonRational::deserialize(d)?;
        Q::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Q>`.
pub mod serde_q_vec {
    use super::{JsonRational, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| JsonRational::from(*x))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<JsonRational>::deserialize(d)?
            .into_iter()
            .map(|r| Q::try_from(r).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for `Vec<Vec<Q>>`.
pub mod serde_q_mat {
    use super::{JsonRational, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|row| {
                row.iter()
                    .map(|x| JsonRational::from(*x))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        Vec::<Vec<JsonRational>>::deserialize(d)?
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|r| Q::try_from(r).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Row-reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = f * m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[row][f];
            }
            v
        })
        .collect()
}

/// Solves the square system `m x = b`; `None` when `m` is singular.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.iter().map(|r| r[n]).collect())
}

/// Inverse of a square rational matrix.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix, by
/// symmetric Gaussian elimination (Sylvester's law of inertia).
pub fn inertia(sym: &[Vec<Q>]) -> (usize, usize, usize) {
    let mut a = sym.to_vec();
    let n = a.len();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Diagonal pivot if one exists.
        if let Some(&p) = active.iter().find(|&&i| !a[i][i].is_zero()) {
            let d = a[p][p];
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let rest: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
            for &i in &rest {
                for &j in &rest {
                    let sub = a[i][p] * a[p][j] / d;
                    a[i][j] -= sub;
                }
            }
            active = rest;
            continue;
        }
        // All remaining diagonal entries vanish: find an off-diagonal pivot and
        // split a hyperbolic plane (one positive, one negative direction).
        let pair = active.iter().enumerate().find_map(|(k, &i)| {
            active[k + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            break;
        };
        // Replace basis vector i by e_i + e_j; its diagonal becomes 2 a_ij.
        for &k in &active {
            let v = a[k][j];
            a[k][i] += v;
        }
        for &k in &active {
            let v = a[j][k];
            a[i][k] += v;
        }
    }
    let zero = n - pos - neg;
    (pos, neg, zero)
}

/// Greatest common divisor of absolute values; `gcd([]) = 0`.
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter()
        .fold(0i64, |acc, &x| num_integer::gcd(acc, x.abs()))
}

/// Least common multiple of the denominators of `xs`.
pub fn lcm_denominators(xs: &[Q]) -> i64 {
    xs.iter()
        .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()))
}

/// Dot product of rational vectors.
pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
