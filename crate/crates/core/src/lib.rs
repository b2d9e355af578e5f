//! Standard monomial theory for Richardson varieties in `G/P`: root data,
//! Weyl groups and Bruhat order, admissible pairs, standardness on unions of
//! Richardson varieties, and Pluecker straightening in type A.

// index loops read better in the elimination and level-sweep code
#![allow(clippy::needless_range_loop)]

pub mod admissible;
pub mod error;
pub mod oracle;
pub mod pluecker;
pub mod rootdata;
pub mod schubert;
pub mod smt;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{CartanType, Family, Root, RootSystem, Weight};
pub use weyl::{enumerate_weyl, CosetLifts, ParabolicQuotient, WeylElement, WeylGroup};
