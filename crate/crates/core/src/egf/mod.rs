//! Truncated exponential generating functions and the generating-function
//! identities behind the catalog.

mod equations;
mod gf;
mod series;

pub use equations::{
    check_definition, check_gf_equation, check_gf_equation_with, GfCheck, GfEquation, GfFailure,
    GfOptions, Perturbation, DEFAULT_J_MAX, DEFAULT_ORDER,
};
pub use gf::{
    balancing_exp, balancing_hyperbolic_arg, build_gf, euler_gf, gf_from_sequences,
    lucas_progression_gf, GfName, GfParams,
};
pub use series::EgfSeries;
