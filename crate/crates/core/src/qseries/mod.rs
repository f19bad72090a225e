//! Exact truncated power series over the integers.
//!
//! [`IntSeries`] carries its own validity order; every infinite product or
//! bilateral sum is realised here as an exactly truncated object. Reading a
//! coefficient past the order is an error rather than a silent zero, which
//! is what keeps every nonnegativity verdict sound.

mod products;
mod qpoly;
mod series;

pub(crate) use products::{check_residues, reciprocal_pochhammer, sign, theta_sum};
pub use products::{
    bilateral_theta, lambert_diff, pochhammer, pochhammer_finite, triple_product,
};
pub use qpoly::QPolynomial;
pub use series::IntSeries;
