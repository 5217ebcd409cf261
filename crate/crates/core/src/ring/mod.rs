//! The polynomial ring in family-tagged generators and Hasse–Schmidt derivations on it.

mod derivation;
mod element;
mod parse;

pub use derivation::{hs_apply, DerivationFamily};
pub use element::{Element, Generator, GeneratorFamily, Monomial};
pub use parse::parse_element;
