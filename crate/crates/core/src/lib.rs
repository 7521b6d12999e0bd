//! Exact Drinfel'd polynomials of sharp tridiagonal systems.
//!
//! Everything is computed over an exact [`Field`]: the rationals, a prime
//! field, `GF(4)` or `GF(16)`. A [`ParameterArray`] is the entry point. From
//! it the crate computes the Drinfel'd polynomial and its normalized form
//! under the D4 action; for Leonard systems it adds closed-form roots,
//! cross-checked against an explicit matrix realization.

pub mod brackets;
pub mod drinfeld;
pub mod error;
pub mod field;
pub mod format;
pub mod leonard;
pub mod linalg;
pub mod params;
pub mod poly;
pub mod random;
pub mod series;

pub use drinfeld::{drinfeld, DrinfeldResult};
pub use error::{Error, Result};
pub use field::{Elem, Field, FieldError};
pub use leonard::{LeonardData, MatrixPair};
pub use params::{Abc, Family, Generator, ParameterArray, TdType, TypeData};
pub use poly::Poly;
