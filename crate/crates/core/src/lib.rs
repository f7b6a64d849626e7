//! Exact verification of Lucas-Euler identities built on balancing and
//! Lucas-balancing polynomials, Euler and Bernoulli numbers and polynomials,
//! and Fibonacci and Lucas numbers.
//!
//! All arithmetic is exact: reduced rationals, dense polynomials over the
//! rationals, and quadratic extensions `R[y]/(y^2 - d)` for `sqrt(5)`, `i` and
//! `sqrt(9x^2 - 1)`. Identities are checked on finite parameter grids, and
//! symbolically in `x` where they are polynomial identities.

pub mod catalog;
pub mod check;
pub mod cli;
pub mod egf;
pub mod error;
pub mod exact;
pub mod poly;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{binomial, Integer, QuadExt, Rational, Ring};
pub use poly::{Poly, PolyQuad};
pub use sequences::{SequenceCache, Sign};
