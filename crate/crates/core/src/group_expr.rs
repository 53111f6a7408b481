//! Symbolic compact group expressions such as `T^1·SU_3`, `Spin7` or
//! `(T^1·U_{2})·(T^1'·U'_3)`, reduced to their Lie algebras.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    = term { sep term } ;
//! sep     = "·" | "." | "×" | "*" | "x" ;
//! term    = "(" expr ")" | factor ;
//! factor  = "{e}" | "e" | name { "'" } [ index ] { "'" } ;
//! name    = "SU" | "SO" | "Sp" | "Spin" | "U" | "T" | "G" | "F" | "E" ;
//! index   = ( "_" | "^" ) ( digits | "{" digits "}" ) | digits ;
//! ```
//!
//! Primes only distinguish copies and are otherwise ignored. Low-rank
//! coincidences are applied: `SO_3 ≅ SU_2 ≅ Sp_1`, `SO_4 ≅ SU_2 × SU_2`,
//! `SO_5 ≅ Sp_2`, `SO_6 ≅ SU_4`, `SO_2 ≅ U_1 ≅ T^1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{Family, SimpleLieType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupExprError {
    #[error("cannot parse group expression {expr:?} at position {pos}")]
    Syntax { expr: String, pos: usize },
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("group {name} needs an index")]
    MissingIndex { name: String },
    #[error("no exceptional group {0}")]
    BadExceptional(String),
}

/// A compact connected Lie algebra: semisimple part plus center.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieAlgebra {
    /// Simple ideals in normalized form, sorted.
    pub simple: Vec<SimpleLieType>,
    pub torus: usize,
}

impl LieAlgebra {
    pub fn trivial() -> Self {
        LieAlgebra::default()
    }

    pub fn torus(k: usize) -> Self {
        LieAlgebra {
            simple: Vec::new(),
            torus: k,
        }
    }

    pub fn simple(t: SimpleLieType) -> Self {
        LieAlgebra {
            simple: vec![normalize_type(t)],
            torus: 0,
        }
    }

    pub fn product(mut self, other: LieAlgebra) -> Self {
        self.simple.extend(other.simple);
        self.simple.sort();
        self.torus += other.torus;
        self
    }

    pub fn dimension(&self) -> usize {
        self.torus + self.simple.iter().map(|t| t.dimension()).sum::<usize>()
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus == 0
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.torus > 0 {
            parts.push(format!("u1^{}", self.torus));
        }
        parts.extend(self.simple.iter().map(|t| t.to_string()));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Representative for low-rank isomorphic types: `B1, C1 → A1`, `C2 → B2`,
/// `D3 → A3`.
pub fn normalize_type(t: SimpleLieType) -> SimpleLieType {
    let ty = |family, rank| SimpleLieType { family, rank };
    match (t.family, t.rank) {
        (Family::B | Family::C, 1) => ty(Family::A, 1),
        (Family::C, 2) => ty(Family::B, 2),
        (Family::D, 3) => ty(Family::A, 3),
        _ => t,
    }
}

fn classical(name: &str, n: usize) -> Result<LieAlgebra, GroupExprError> {
    let s = |family, rank| Ok(LieAlgebra::simple(SimpleLieType { family, rank }));
    match name {
        "SU" => match n {
            0 | 1 => Ok(LieAlgebra::trivial()),
            _ => s(Family::A, n - 1),
        },
        "U" => match n {
            0 => Ok(LieAlgebra::trivial()),
            _ => Ok(LieAlgebra::torus(1).product(classical("SU", n)?)),
        },
        "SO" | "Spin" => match n {
            0 | 1 => Ok(LieAlgebra::trivial()),
            2 => Ok(LieAlgebra::torus(1)),
            3 => s(Family::A, 1),
            4 => Ok(LieAlgebra::simple(SimpleLieType {
                family: Family::A,
                rank: 1,
            })
            .product(LieAlgebra::simple(SimpleLieType {
                family: Family::A,
                rank: 1,
            }))),
            _ if n % 2 == 1 => s(Family::B, n / 2),
            _ => s(Family::D, n / 2),
        },
        "Sp" => match n {
            0 => Ok(LieAlgebra::trivial()),
            _ => s(Family::C, n),
        },
        "T" => Ok(LieAlgebra::torus(n)),
        "G" if n == 2 => s(Family::G, 2),
        "F" if n == 4 => s(Family::F, 4),
        "E" if (6..=8).contains(&n) => s(Family::E, n),
        "G" | "F" | "E" => Err(GroupExprError::BadExceptional(format!("{name}{n}"))),
        other => Err(GroupExprError::UnknownName(other.to_string())),
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn syntax(&self) -> GroupExprError {
        GroupExprError::Syntax {
            expr: self.src.to_string(),
            pos: self.pos,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LieAlgebra, GroupExprError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if matches!(c, '·' | '.' | '×' | '*' | 'x' | '⋅') {
                self.pos += 1;
                acc = acc.product(self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LieAlgebra, GroupExprError> {
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.syntax());
            }
            self.primes();
            return Ok(inner);
        }
        self.factor()
    }

    fn primes(&mut self) {
        while self.eat('\'') || self.eat('′') || self.eat_str("{}'") {}
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let want: Vec<char> = s.chars().collect();
        if self.chars[self.pos..].starts_with(&want) {
            self.pos += want.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .ok()
    }

    fn index(&mut self) -> Result<Option<usize>, GroupExprError> {
        if self.eat('_') || self.eat('^') {
            if self.eat('{') {
                let n = self.number().ok_or_else(|| self.syntax())?;
                if !self.eat('}') {
                    return Err(self.syntax());
                }
                return Ok(Some(n));
            }
            return self.number().map(Some).ok_or_else(|| self.syntax());
        }
        Ok(self.number())
    }

    fn factor(&mut self) -> Result<LieAlgebra, GroupExprError> {
        if self.eat_str("{e}") {
            return Ok(LieAlgebra::trivial());
        }
        let start = self.pos;
        // "Sp" and "Spin" are the only names with lower-case letters.
        while self.peek().is_some_and(|c| c.is_ascii_uppercase()) {
            self.pos += 1;
        }
        if self.eat_str("pin") {
        } else if self.peek() == Some('p') && self.chars[start..self.pos] == ['S'] {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if name.is_empty() {
            if self.eat('e') || self.eat('1') {
                return Ok(LieAlgebra::trivial());
            }
            return Err(self.syntax());
        }
        self.primes();
        let n = self.index()?;
        self.primes();
        let n = match (name.as_str(), n) {
            (_, Some(n)) => n,
            ("T", None) => 1,
            _ => return Err(GroupExprError::MissingIndex { name }),
        };
        classical(&name, n)
    }
}

/// Parses a symbolic group expression into its Lie algebra.
pub fn parse_group(src: &str) -> Result<LieAlgebra, GroupExprError> {
    let mut p = Parser::new(src);
    if p.chars.is_empty() {
        return Err(p.syntax());
    }
    let alg = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.syntax());
    }
    Ok(alg)
}

impl FromStr for LieAlgebra {
    type Err = GroupExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> LieAlgebra {
        parse_group(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    fn ty(s: &str) -> SimpleLieType {
        s.parse().unwrap()
    }

    #[test]
    fn basic_names() {
        assert_eq!(alg("SU_3").simple, vec![ty("A2")]);
        assert_eq!(alg("Spin7").simple, vec![ty("B3")]);
        assert_eq!(alg("Spin_{7}"), alg("SO_7"));
        assert_eq!(alg("G2").simple, vec![ty("G2")]);
        assert_eq!(alg("E_6").dimension(), 78);
        assert_eq!(
            alg("T^2·SO_8"),
            LieAlgebra {
                simple: vec![ty("D4")],
                torus: 2
            }
        );
        assert_eq!(alg("{e}"), LieAlgebra::trivial());
        assert_eq!(alg("T"), LieAlgebra::torus(1));
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(alg("SO_3"), alg("SU_2"));
        assert_eq!(alg("Sp_1"), alg("SU_2"));
        assert_eq!(alg("SO_4"), alg("SU_2×SU_2'"));
        assert_eq!(alg("SO_5"), alg("Sp_2"));
        assert_eq!(alg("SO_6"), alg("SU_4"));
        assert_eq!(alg("SO_2"), alg("U_1"));
        assert_eq!(alg("U_1"), alg("T^1"));
        assert_eq!(alg("SU_1"), LieAlgebra::trivial());
    }

    #[test]
    fn products_and_parentheses() {
        let k = alg("(T^1·U_{2})·(T^1'·U'_3)");
        assert_eq!(k.torus, 4);
        assert_eq!(k.simple, vec![ty("A1"), ty("A2")]);
        assert_eq!(alg("T^1·(SU_2 × SU_2)·SU_{1}"), alg("T^1 x SO_4"));
        assert_eq!(alg("Sp_1*Sp_2").dimension(), 13);
        assert_eq!(alg("T^1×T^1'").torus, 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_group("").is_err());
        assert!(parse_group("SU_").is_err());
        assert!(parse_group("XY_3").is_err());
        assert!(parse_group("SU_3·").is_err());
        assert!(parse_group("(SU_3").is_err());
        assert!(matches!(
            parse_group("E_5"),
            Err(GroupExprError::BadExceptional(_))
        ));
        assert!(matches!(
            parse_group("SO"),
            Err(GroupExprError::MissingIndex { .. })
        ));
    }
}
