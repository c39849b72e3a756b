//! Exact arithmetic in cyclotomic fields `Q(ζ_N)` and quadratic algebras over
//! them, with Galois action, minimal polynomials and certified numerics.

mod elem;
mod ext;
mod field;
mod interval;
mod minpoly;
pub mod modp;
mod poly;
mod serde_impl;
mod sign;

use thiserror::Error;

pub use elem::CycElem;
pub use ext::{ExtElem, QuadAlgebra};
pub use field::{cyclotomic_polynomial, divisors, mobius, totient, CyclotomicField};
pub use interval::{eval_cyc, pi_ball, Ball, ComplexBall, ComplexInterval, DecimalInterval};
pub use minpoly::{
    cyclotomic_factors, eval_at, from_power_sums, galois_quadratic_product, minimal_polynomial,
    minimal_polynomial_cyc,
};
pub use poly::RationalPoly;
pub use sign::sign_decide;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible in the algebra")]
    NotInvertible,
    #[error("element is not real")]
    NotReal,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// `ζ_N^k` in canonical form.
pub fn cyc_make(n: u32, k: i64) -> CycElem {
    CycElem::root_of_unity(n, k)
}
