//! Exact difference-differential Galois groups of second-order linear
//! difference equations `y(x+2) + a y(x+1) + b y(x) = 0` over Q(x).

pub mod classify;
pub mod error;
pub mod factor;
pub mod hypergeom;
pub mod linalg;
pub mod numberfield;
pub mod pfrac;
pub mod poly;
pub mod ratfunc;
pub mod relations;
pub mod scalar;
pub mod summability;

pub use error::{Error, Result};
pub use factor::{poly_factor, poly_factor_with, FactoredPoly};
pub use numberfield::{AlgNum, NumberField};
pub use poly::Poly;
pub use ratfunc::{AtInfinity, RatFunc};
pub use scalar::{Field, Rational};

pub type QPoly = Poly<Rational>;
pub type QRatFunc = RatFunc<Rational>;
pub type KPoly = Poly<AlgNum>;
pub type KRatFunc = RatFunc<AlgNum>;

/// Search limits shared by the solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest squarefree part handed to the factorizer.
    pub max_factor_degree: usize,
    /// Numerator degree cap for rational solutions of difference equations.
    pub abramov_degree_cap: usize,
    /// Degree cap for the polynomial part of hypergeometric certificates.
    pub petkovsek_degree_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_factor_degree: factor::DEFAULT_MAX_DEGREE,
            abramov_degree_cap: 200,
            petkovsek_degree_cap: 100,
        }
    }
}

/// Solver configuration: limits plus an optional designated number field
/// for algebraic constants.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub limits: Limits,
    pub number_field: Option<std::sync::Arc<NumberField>>,
}
