pub mod alcove;
pub mod braid;
pub mod coinvariants;
pub mod covering;
pub mod error;
pub mod kmodel;
pub mod linalg;
pub mod poly;
pub mod root_system;
pub mod rvsc;
pub mod scalar;
pub mod weight;

pub use error::{Error, Result};

/// Exact scalar used by every verifier.
pub type Q = num_rational::BigRational;

pub type WeightQ = weight::Weight<Q>;
pub type WeightF64 = weight::Weight<f64>;
pub type PolynomialQ = poly::Polynomial<Q>;
pub type PolynomialF64 = poly::Polynomial<f64>;
pub type ChargeQ = kmodel::ChargeValue<Q>;
pub type ChargeF64 = kmodel::ChargeValue<f64>;
