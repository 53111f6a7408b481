//! Classification engine for compact simply connected homogeneous CR
//! manifolds of hypersurface type.
//!
//! Standard manifolds are encoded by a painted Dynkin diagram (the associated
//! flag manifold with its invariant complex structure) together with an
//! integer tuple on the black nodes; non-standard ones by a row of the
//! exceptional catalog together with a modulus `t` in the punctured unit disc.
//! All arithmetic is exact.

pub mod catalog;
pub mod flag;
pub mod group_expr;
pub mod maximal_group;
pub mod nonstandard_cr;
pub mod oracle;
pub mod rational;
pub mod rootsys;
pub mod standard_cr;

pub use flag::{IsotropyDescription, PaintedDiagram};
pub use maximal_group::{MaxGroupReport, OnishchikPair, OnishchikRow};
pub use nonstandard_cr::{NonStandardCR, Table2Entry};
pub use rational::Q;
pub use rootsys::{Family, RootSystem, SimpleLieType, Weight};
pub use standard_cr::{ContactData, LeviSignature, StandardCR};
