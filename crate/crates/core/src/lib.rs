//! State censuses of knot shadows, bitonic region codes of circle rosettes,
//! and the bijection between 2-states of twist knots and rosette regions.
//!
//! Polynomials are generic over their coefficient type and geometry over its
//! float type; the aliases below fix the types used by the CLI.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod families;
pub mod genpoly;
pub mod rosette;
pub mod shadow;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use families::{build, Family, FamilySpec};
pub use shadow::{ShadowDiagram, StateWord};
pub use words::{Word, WordSet};

/// Generating polynomial with arbitrary-precision natural coefficients.
pub type GenPolynomial = genpoly::Polynomial<num_bigint::BigUint>;

/// Double-precision rosette.
pub type Rosette = rosette::Rosette<f64>;

/// Region code of a rosette: bit `i` is set iff the region lies inside circle `i`.
pub type RegionCode = Word;
