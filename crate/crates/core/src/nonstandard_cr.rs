//! Non-standard homogeneous CR manifolds: the twelve families `(G, L, K)` of
//! the exceptional catalog, recognition of a symbolic pair `(G, L)`, and the
//! moduli parameter `t` in the punctured unit disc.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group_expr::{parse_group, GroupExprError, LieAlgebra};
use crate::rational::{serde_q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NonStandardError {
    #[error("unparseable group: {0}")]
    UnparseableGroup(GroupExprError),
    #[error("unparseable isotropy: {0}")]
    UnparseableIsotropy(GroupExprError),
    #[error("no catalog row {0}")]
    UnknownRow(u8),
    #[error("row {row} needs parameter {name}")]
    MissingParameter { row: u8, name: &'static str },
    #[error("row {row} requires {constraint}")]
    ConstraintViolated { row: u8, constraint: &'static str },
    #[error("t = 0 is not a non-standard structure")]
    ZeroModulus,
    #[error("|t| must be < 1")]
    ModulusOutOfDisc,
    #[error("({group}, {isotropy}) is not in the non-standard catalog")]
    NotInCatalog { group: String, isotropy: String },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

impl NonStandardError {
    pub fn kind(&self) -> &'static str {
        match self {
            NonStandardError::UnparseableGroup(_) => "UnparseableGroup",
            NonStandardError::UnparseableIsotropy(_) => "UnparseableIsotropy",
            NonStandardError::UnknownRow(_) => "UnknownRow",
            NonStandardError::MissingParameter { .. } => "MissingParameter",
            NonStandardError::ConstraintViolated { .. } => "ConstraintViolated",
            NonStandardError::ZeroModulus => "ZeroModulus",
            NonStandardError::ModulusOutOfDisc => "ModulusOutOfDisc",
            NonStandardError::NotInCatalog { .. } => "NotInCatalog",
            NonStandardError::Parse(_) => "ParseError",
        }
    }
}

/// Which integer parameters a row takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    None,
    N { min: i64 },
    PQ,
}

/// A catalog row before its parameters are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Template {
    pub row: u8,
    pub group_g: &'static str,
    pub isotropy_l: &'static str,
    pub k: &'static str,
    /// Parameter constraint as printed, or our bound where none is printed.
    pub constraint: &'static str,
    pub params: ParamKind,
}

const fn row(
    row: u8,
    group_g: &'static str,
    isotropy_l: &'static str,
    k: &'static str,
    constraint: &'static str,
    params: ParamKind,
) -> Table2Template {
    Table2Template {
        row,
        group_g,
        isotropy_l,
        k,
        constraint,
        params,
    }
}

static CATALOG: [Table2Template; 12] = [
    row(1, "SU_2×SU'_2", "T^1", "T^1×T^1'", "", ParamKind::None),
    row(2, "Spin_7", "SU_3", "T^1·SU_3", "", ParamKind::None),
    row(3, "F_4", "Spin_7", "T^1·SO_7", "", ParamKind::None),
    row(4, "SU_2", "{e}", "T^1", "", ParamKind::None),
    row(
        5,
        "SO_{2n+1}",
        "SO_{2n-1}",
        "T^1·SO_{2n-1}",
        "n > 1",
        ParamKind::N { min: 2 },
    ),
    row(
        6,
        "SO_{2n}",
        "SO_{2n-2}",
        "T^1·SO_{2n-2}",
        "n > 2",
        ParamKind::N { min: 3 },
    ),
    row(
        7,
        "Sp_n",
        "Sp_1·Sp_{n-2}",
        "T^1·Sp_1·Sp_{n-2}",
        "n ≥ 3",
        ParamKind::N { min: 3 },
    ),
    row(
        8,
        "SU_n",
        "T^1·SU_{n-2}",
        "T^1·U_{n-2}",
        "n ≥ 3",
        ParamKind::N { min: 3 },
    ),
    row(
        9,
        "SU_p×SU'_q",
        "T^1·U_{p-2}·U'_{q-2}",
        "(T^1·U_{p-2})·(T^1'·U'_{q-2})",
        "p + q > 4, p, q ≥ 2",
        ParamKind::PQ,
    ),
    row(
        10,
        "SU_n",
        "T^1·(SU_2×SU_2)·SU_{n-4}",
        "T^1·(SU_2×SU_2)·U_{n-4}",
        "n > 4",
        ParamKind::N { min: 5 },
    ),
    row(11, "SO_{10}", "T^1·SO_6", "T^2·SO_6", "", ParamKind::None),
    row(12, "E_6", "T^1·SO_8", "T^2·SO_8", "", ParamKind::None),
];

/// The twelve catalog rows.
pub fn catalog() -> &'static [Table2Template] {
    &CATALOG
}

/// Looks up a row template.
pub fn template(row: u8) -> Result<&'static Table2Template, NonStandardError> {
    CATALOG
        .iter()
        .find(|t| t.row == row)
        .ok_or(NonStandardError::UnknownRow(row))
}

/// Integer parameters of a row instance.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Table2Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
}

impl Table2Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn n(n: i64) -> Self {
        Table2Params {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn pq(p: i64, q: i64) -> Self {
        Table2Params {
            p: Some(p),
            q: Some(q),
            ..Self::default()
        }
    }
}

impl fmt::Display for Table2Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("n", self.n), ("p", self.p), ("q", self.q)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        f.write_str(&parts.join(","))
    }
}

/// Evaluates `2n+1`, `n-2`, `10`, `q` and similar linear expressions.
fn eval_linear(expr: &str, params: &Table2Params) -> Option<i64> {
    let mut total = 0i64;
    let mut rest = expr.replace(' ', "");
    if !rest.starts_with(['+', '-']) {
        rest.insert(0, '+');
    }
    let bytes = rest.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let sign = if bytes[i] == b'-' { -1 } else { 1 };
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &rest[start..i];
        let (coef, var) = match term.find(|c: char| c.is_ascii_alphabetic()) {
            Some(k) => {
                let coef = if k == 0 { 1 } else { term[..k].parse().ok()? };
                let v = match &term[k..] {
                    "n" => params.n?,
                    "p" => params.p?,
                    "q" => params.q?,
                    _ => return None,
                };
                (coef, v)
            }
            None => (term.parse().ok()?, 1),
        };
        total += sign * coef * var;
    }
    Some(total)
}

/// Substitutes parameters into `_{…}` and `_n`-style indices.
fn instantiate(template: &str, params: &Table2Params) -> Option<String> {
    let chars: Vec<char> = template.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        out.push(c);
        i += 1;
        if c != '_' || i == chars.len() {
            continue;
        }
        if chars[i] == '{' {
            let end = i + chars[i..].iter().position(|&c| c == '}')?;
            let inner: String = chars[i + 1..end].iter().collect();
            out.push_str(&eval_linear(&inner, params)?.to_string());
            i = end + 1;
        } else if matches!(chars[i], 'n' | 'p' | 'q') {
            out.push_str(&eval_linear(&chars[i].to_string(), params)?.to_string());
            i += 1;
        }
    }
    Some(out)
}

impl Table2Template {
    fn check(&self, params: &Table2Params) -> Result<(), NonStandardError> {
        let violated = || NonStandardError::ConstraintViolated {
            row: self.row,
            constraint: self.constraint,
        };
        let missing = |name| NonStandardError::MissingParameter {
            row: self.row,
            name,
        };
        match self.params {
            ParamKind::None => Ok(()),
            ParamKind::N { min } => {
                let n = params.n.ok_or_else(|| missing("n"))?;
                if n < min {
                    return Err(violated());
                }
                Ok(())
            }
            ParamKind::PQ => {
                let p = params.p.ok_or_else(|| missing("p"))?;
                let q = params.q.ok_or_else(|| missing("q"))?;
                if p < 2 || q < 2 || p + q <= 4 {
                    return Err(violated());
                }
                Ok(())
            }
        }
    }

    /// Parameters used by this row only (extra ones dropped).
    fn relevant(&self, params: &Table2Params) -> Table2Params {
        match self.params {
            ParamKind::None => Table2Params::none(),
            ParamKind::N { .. } => Table2Params {
                n: params.n,
                ..Default::default()
            },
            ParamKind::PQ => Table2Params {
                p: params.p,
                q: params.q,
                n: None,
            },
        }
    }

    /// Fixes the parameters of the row.
    pub fn instantiate(&self, params: &Table2Params) -> Result<Table2Entry, NonStandardError> {
        let params = self.relevant(params);
        self.check(&params)?;
        let inst = |s: &str| instantiate(s, &params).expect("checked parameters");
        Ok(Table2Entry {
            row: self.row,
            params,
            group_g: inst(self.group_g),
            isotropy_l: inst(self.isotropy_l),
            k: inst(self.k),
        })
    }

    /// Smallest admissible parameters.
    pub fn minimal_params(&self) -> Table2Params {
        match self.params {
            ParamKind::None => Table2Params::none(),
            ParamKind::N { min } => Table2Params::n(min),
            ParamKind::PQ => Table2Params::pq(2, 3),
        }
    }

    pub fn minimal(&self) -> Table2Entry {
        self.instantiate(&self.minimal_params())
            .expect("minimal parameters are admissible")
    }

    /// All admissible instances whose group `G` has rank at most `max_rank`.
    pub fn instances_up_to_rank(&self, max_rank: usize) -> Vec<Table2Entry> {
        let candidates: Vec<Table2Params> = match self.params {
            ParamKind::None => vec![Table2Params::none()],
            ParamKind::N { min } => (min..=2 * max_rank as i64 + 2)
                .map(Table2Params::n)
                .collect(),
            ParamKind::PQ => {
                let top = max_rank as i64 + 2;
                (2..=top)
                    .flat_map(|p| (p..=top).map(move |q| Table2Params::pq(p, q)))
                    .collect()
            }
        };
        candidates
            .into_iter()
            .filter_map(|p| self.instantiate(&p).ok())
            .filter(|e| e.rank() <= max_rank)
            .collect()
    }
}

/// A catalog row with its parameters fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Table2Entry {
    pub row: u8,
    pub params: Table2Params,
    pub group_g: String,
    pub isotropy_l: String,
    pub k: String,
}

impl Table2Entry {
    pub fn new(row: u8, params: Table2Params) -> Result<Self, NonStandardError> {
        template(row)?.instantiate(&params)
    }

    pub fn g_algebra(&self) -> LieAlgebra {
        parse_group(&self.group_g).expect("catalog groups parse")
    }

    pub fn l_algebra(&self) -> LieAlgebra {
        parse_group(&self.isotropy_l).expect("catalog isotropies parse")
    }

    pub fn k_algebra(&self) -> LieAlgebra {
        parse_group(&self.k).expect("catalog isotropies parse")
    }

    /// Rank of `G`.
    pub fn rank(&self) -> usize {
        self.g_algebra().simple.iter().map(|t| t.rank).sum()
    }

    /// `dim M = dim G − dim L`.
    pub fn dim_m(&self) -> usize {
        self.g_algebra().dimension() - self.l_algebra().dimension()
    }

    /// Key under which isomorphic presentations coincide: rows 2 and 6 at
    /// `n = 4` are the same manifold, and row 9 is symmetric in `p, q`.
    fn class_key(&self) -> (u8, Table2Params) {
        match (self.row, self.params) {
            (6, Table2Params { n: Some(4), .. }) => (2, Table2Params::none()),
            (
                9,
                Table2Params {
                    p: Some(p),
                    q: Some(q),
                    ..
                },
            ) => (9, Table2Params::pq(p.min(q), p.max(q))),
            (r, params) => (r, params),
        }
    }

    /// Text form `G/L`.
    pub fn quotient(&self) -> String {
        format!("{}/{}", self.group_g, self.isotropy_l)
    }
}

/// Same homogeneous manifold, up to the identifications of [`Table2Entry`].
pub fn same_manifold(a: &Table2Entry, b: &Table2Entry) -> bool {
    a.class_key() == b.class_key()
}

/// Finds the catalog row of a pair `(G, L)`, comparing Lie algebras.
///
/// Recognition works at the Lie-algebra level, which is enough to separate the
/// twelve rows at all admissible parameters.
pub fn recognize(group: &str, isotropy: &str) -> Result<Option<Table2Entry>, NonStandardError> {
    let g = parse_group(group).map_err(NonStandardError::UnparseableGroup)?;
    let l = parse_group(isotropy).map_err(NonStandardError::UnparseableIsotropy)?;
    if !g.is_semisimple() || g.simple.is_empty() {
        return Ok(None);
    }
    let rank: usize = g.simple.iter().map(|t| t.rank).sum();
    Ok(CATALOG
        .iter()
        .flat_map(|t| t.instances_up_to_rank(rank))
        .find(|e| e.g_algebra() == g && e.l_algebra() == l))
}

/// `G`, except `SO_8` for `Spin_7/SU_3`.
pub fn maximal_semisimple_nonstandard(entry: &Table2Entry) -> String {
    if entry.row == 2 {
        "SO_8".to_string()
    } else {
        entry.group_g.clone()
    }
}

/// A non-standard manifold: a catalog instance and a modulus `0 < |t| < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonStandardCR {
    entry: Table2Entry,
    t_re: Q,
    t_im: Q,
}

impl NonStandardCR {
    pub fn new(entry: Table2Entry, t_re: Q, t_im: Q) -> Result<Self, NonStandardError> {
        let m = t_re * t_re + t_im * t_im;
        if m.is_zero() {
            return Err(NonStandardError::ZeroModulus);
        }
        if m >= Q::one() {
            return Err(NonStandardError::ModulusOutOfDisc);
        }
        Ok(NonStandardCR { entry, t_re, t_im })
    }

    pub fn entry(&self) -> &Table2Entry {
        &self.entry
    }

    pub fn t(&self) -> (Q, Q) {
        (self.t_re, self.t_im)
    }

    /// `|t|²`, exactly.
    pub fn modulus_sq(&self) -> Q {
        self.t_re * self.t_re + self.t_im * self.t_im
    }

    pub fn dimension(&self) -> usize {
        self.entry.dim_m()
    }

    /// Text form `Spin_7/SU_3 t=1/2` (imaginary part appended after a comma
    /// when nonzero).
    pub fn name(&self) -> String {
        let mut t = self.t_re.to_string();
        if !self.t_im.is_zero() {
            t = format!("{t},{}", self.t_im);
        }
        format!("{} t={t}", self.entry.quotient())
    }

    pub fn to_json(&self) -> NonStandardJson {
        NonStandardJson {
            row: self.entry.row,
            params: self.entry.params,
            t: ComplexJson {
                re: self.t_re,
                im: self.t_im,
            },
        }
    }

    pub fn from_json(j: &NonStandardJson) -> Result<Self, NonStandardError> {
        NonStandardCR::new(Table2Entry::new(j.row, j.params)?, j.t.re, j.t.im)
    }
}

impl fmt::Display for NonStandardCR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for NonStandardCR {
    type Err = NonStandardError;

    /// Parses `G/L t=re[,im]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NonStandardError::Parse(s.to_string());
        let (quot, t) = s.split_once("t=").ok_or_else(err)?;
        let (g, l) = quot.trim().split_once('/').ok_or_else(err)?;
        let (re, im) = parse_complex(t).ok_or_else(err)?;
        let entry = recognize(g, l)?.ok_or_else(|| NonStandardError::NotInCatalog {
            group: g.trim().to_string(),
            isotropy: l.trim().to_string(),
        })?;
        NonStandardCR::new(entry, re, im)
    }
}

/// Parses a rational written as `3`, `-1/2` or `0.25`.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 15 {
            return None;
        }
        let neg = int.starts_with('-');
        let whole: i64 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            w => w.parse().ok()?,
        };
        let den = 10i64.checked_pow(frac.len() as u32)?;
        let num = whole
            .checked_mul(den)?
            .checked_add(frac.parse::<i64>().ok()?)?;
        return Some(Q::new(if neg { -num } else { num }, den));
    }
    let v: Q = s.parse().ok()?;
    Some(v)
}

/// Parses `re` or `re,im`.
pub fn parse_complex(s: &str) -> Option<(Q, Q)> {
    match s.split_once(',') {
        Some((re, im)) => Some((parse_rational(re)?, parse_rational(im)?)),
        None => Some((parse_rational(s)?, Q::zero())),
    }
}

/// Decides equivalence: isomorphic catalog instances and `|t| = |t′|`.
pub fn equivalent_nonstandard(m1: &NonStandardCR, m2: &NonStandardCR) -> bool {
    same_manifold(&m1.entry, &m2.entry) && m1.modulus_sq() == m2.modulus_sq()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(with = "serde_q")]
    pub re: Q,
    #[serde(with = "serde_q")]
    pub im: Q,
}

/// JSON form `{row, params, t: {re, im}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonStandardJson {
    pub row: u8,
    pub params: Table2Params,
    pub t: ComplexJson,
}

impl NonStandardCR {
    /// Whether `t` is real and positive, the representative used in catalogs.
    pub fn is_real_positive(&self) -> bool {
        self.t_im.is_zero() && self.t_re.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn entry(row: u8, params: Table2Params) -> Table2Entry {
        Table2Entry::new(row, params).unwrap()
    }

    fn ns(row: u8, params: Table2Params, re: Q, im: Q) -> NonStandardCR {
        NonStandardCR::new(entry(row, params), re, im).unwrap()
    }

    #[test]
    fn catalog_shape() {
        assert_eq!(catalog().len(), 12);
        let r11 = template(11).unwrap();
        assert_eq!(
            (r11.group_g, r11.isotropy_l, r11.k),
            ("SO_{10}", "T^1·SO_6", "T^2·SO_6")
        );
        let r1 = template(1).unwrap();
        assert_eq!(
            (r1.group_g, r1.isotropy_l, r1.k),
            ("SU_2×SU'_2", "T^1", "T^1×T^1'")
        );
        assert!(template(13).is_err());
    }

    #[test]
    fn instantiation() {
        let e = entry(5, Table2Params::n(3));
        assert_eq!(
            (e.group_g.as_str(), e.isotropy_l.as_str(), e.k.as_str()),
            ("SO_7", "SO_5", "T^1·SO_5")
        );
        let e = entry(9, Table2Params::pq(3, 4));
        assert_eq!(e.k, "(T^1·U_1)·(T^1'·U'_2)");
        assert_eq!(entry(7, Table2Params::n(4)).group_g, "Sp_4");
        assert!(matches!(
            Table2Entry::new(5, Table2Params::n(1)),
            Err(NonStandardError::ConstraintViolated { row: 5, .. })
        ));
        assert!(Table2Entry::new(9, Table2Params::pq(2, 2)).is_err());
        assert!(matches!(
            Table2Entry::new(8, Table2Params::none()),
            Err(NonStandardError::MissingParameter { row: 8, name: "n" })
        ));
    }

    #[test]
    fn every_row_is_consistent() {
        for t in catalog() {
            for e in t.instances_up_to_rank(6) {
                let (g, l, k) = (e.g_algebra(), e.l_algebra(), e.k_algebra());
                assert_eq!(k.dimension(), l.dimension() + 1, "{e:?}");
                let rk = |a: &LieAlgebra| a.torus + a.simple.iter().map(|t| t.rank).sum::<usize>();
                assert_eq!(rk(&k), rk(&g), "K has full rank in {e:?}");
                assert_eq!(e.dim_m() % 2, 1, "{e:?}");
                assert!(g.is_semisimple());
            }
        }
        assert_eq!(entry(2, Table2Params::none()).dim_m(), 13);
        assert_eq!(entry(6, Table2Params::n(4)).dim_m(), 13);
    }

    #[test]
    fn recognition() {
        let r = recognize("Spin_7", "SU_3").unwrap().unwrap();
        assert_eq!((r.row, r.k.as_str()), (2, "T^1·SU_3"));
        let r = recognize("SU_4", "T^1·SU_2").unwrap().unwrap();
        assert_eq!((r.row, r.params), (8, Table2Params::n(4)));
        assert_eq!(r.k, "T^1·U_2");
        assert_eq!(recognize("G2", "SU_2").unwrap(), None);
        assert_eq!(recognize("G_2", "T^1").unwrap(), None);
        assert!(matches!(
            recognize("SU_4", "T^1·??"),
            Err(NonStandardError::UnparseableIsotropy(_))
        ));
        for t in catalog() {
            let e = t.minimal();
            let r = recognize(&e.group_g, &e.isotropy_l).unwrap().unwrap();
            assert_eq!(r.row, t.row);
        }
    }

    #[test]
    fn modulus_validation() {
        let e = entry(2, Table2Params::none());
        assert_eq!(
            NonStandardCR::new(e.clone(), q(0, 1), q(0, 1)),
            Err(NonStandardError::ZeroModulus)
        );
        assert_eq!(
            NonStandardCR::new(e.clone(), q(3, 5), q(4, 5)),
            Err(NonStandardError::ModulusOutOfDisc)
        );
        assert!(NonStandardCR::new(e, q(3, 5), q(3, 5)).is_ok());
    }

    #[test]
    fn equivalence_examples() {
        let none = Table2Params::none();
        let a = ns(2, none, q(1, 2), q(0, 1));
        assert!(equivalent_nonstandard(&a, &ns(2, none, q(-1, 2), q(0, 1))));
        assert!(equivalent_nonstandard(&a, &ns(2, none, q(0, 1), q(1, 2))));
        assert!(!equivalent_nonstandard(&a, &ns(2, none, q(3, 10), q(0, 1))));
        assert!(equivalent_nonstandard(
            &a,
            &ns(6, Table2Params::n(4), q(3, 10), q(2, 5))
        ));
        assert!(!equivalent_nonstandard(
            &a,
            &ns(6, Table2Params::n(5), q(1, 2), q(0, 1))
        ));
        let p = ns(9, Table2Params::pq(2, 3), q(1, 3), q(0, 1));
        assert!(equivalent_nonstandard(
            &p,
            &ns(9, Table2Params::pq(3, 2), q(-1, 3), q(0, 1))
        ));
    }

    #[test]
    fn maximal_groups() {
        assert_eq!(
            maximal_semisimple_nonstandard(&entry(2, Table2Params::none())),
            "SO_8"
        );
        assert_eq!(
            maximal_semisimple_nonstandard(&entry(3, Table2Params::none())),
            "F_4"
        );
        assert_eq!(
            maximal_semisimple_nonstandard(&entry(12, Table2Params::none())),
            "E_6"
        );
    }

    #[test]
    fn text_and_json() {
        let m: NonStandardCR = "Spin7/SU3 t=1/2".parse().unwrap();
        assert_eq!(m.entry().row, 2);
        assert_eq!(m.name(), "Spin_7/SU_3 t=1/2");
        let m2: NonStandardCR = "Spin_7/SU_3 t=0.5,-0.25".parse().unwrap();
        assert_eq!(m2.t(), (q(1, 2), q(-1, 4)));
        assert_eq!(m2.name(), "Spin_7/SU_3 t=1/2,-1/4");
        let j = serde_json::to_string(&m.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"row":2,"params":{},"t":{"re":{"num":1,"den":2},"im":{"num":0,"den":1}}}"#
        );
        let back: NonStandardJson = serde_json::from_str(&j).unwrap();
        assert_eq!(NonStandardCR::from_json(&back).unwrap(), m);
        assert!(matches!(
            "G_2/SU_2 t=1/2".parse::<NonStandardCR>(),
            Err(NonStandardError::NotInCatalog { .. })
        ));
    }
}
