//! Exact scalars: reduced rationals, binomial coefficients and the
//! quadratic extension `R[y]/(y^2 - d)` over any [`Ring`].

mod combinat;
mod quadext;
mod rational;
mod ring;

pub use combinat::{binomial, factorial};
pub use quadext::QuadExt;
pub use rational::{Integer, Rational};
pub use ring::Ring;
