//! Character-polynomial codes over finite fields: encoders, unique and list
//! decoders, exhaustive distance checks, list-size bounds and a Monte Carlo
//! harness.

pub mod analysis;
pub mod bivariate;
pub mod channel;
pub mod cli;
pub mod codebook;
pub mod error;
pub mod field;
pub mod harness;
pub mod list;
pub mod poly;
pub mod subspace;
pub mod unique;

pub use bivariate::BivariatePolynomial;
pub use codebook::{CodeParams, ComplexWord, FieldCodeword, MessageSpace};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::Polynomial;
