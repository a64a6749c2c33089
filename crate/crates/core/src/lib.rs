//! Spinoriality of orthogonal representations of connected reductive groups,
//! decided in exact arithmetic.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod fundgroup;
pub mod lattice;
pub mod repcalc;
pub mod rootdata;
pub mod spinor;

pub use catalog::{make_group, GroupSpec};
pub use error::{Error, Result};
pub use fundgroup::FundGroupData;
pub use rootdata::{CartanBasis, Cocharacter, Family, LieType, RootDatum, Weight};
pub use spinor::{is_spinorial, Method, OrthRep, SummandKind, Verdict};
