//! Exact arithmetic for Burnside categories of finite groups, permutation
//! representations, Grothendieck–Witt groups and elliptic curves over finite
//! fields.

pub mod arith;
pub mod burnside;
pub mod ellcurve;
pub mod error;
pub mod groups;
pub mod gw;
pub mod json;
pub mod linalg;
pub mod linrep;
pub mod gsets;
pub mod random;
pub mod scalar;

pub use error::{Error, Result};
