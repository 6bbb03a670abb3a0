//! Exact q-series arithmetic, WP-Bailey pairs and mechanical verification
//! of q-series identities as truncated Laurent-series equalities.

pub mod catalog;
pub mod check;
pub mod cli;
pub mod error;
pub mod functions;
pub mod monomial;
pub mod pairs;
pub mod poch;
pub mod series;

pub use error::{Error, Result};
pub use monomial::QMonomial;
pub use poch::{Base, Length, Product};
pub use series::{sum_terms, Series};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
