//! Exact generating-function constructions of symmetric and shifted symmetric functions.
//!
//! Elements live in a polynomial ring of family-tagged generators (`h`, `e`, `Q`, `hs`, ...)
//! over ℚ or ℚ[t]. Multivariate coefficient tables, creation/annihilation operators,
//! the shifted analogues and a small semi-infinite wedge model are built on top.

pub mod combinatorics;
pub mod error;
pub mod families;
pub mod fock;
pub mod operators;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod shifted;
pub mod verify;

pub use combinatorics::{conjugate, falling_factorial, stirling2, straighten, IntegerVector, Partition, StraightenResult};
pub use error::{Error, Result};
pub use ring::{hs_apply, DerivationFamily, Element, Generator, GeneratorFamily, Monomial};
pub use scalar::{rat, ratio, Rational, Ring, Scalar};
