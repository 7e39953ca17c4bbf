//! Exact scalar and polynomial arithmetic.

pub mod field;
pub mod form;
pub mod matrix;
pub mod monomial;
pub mod univariate;

pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use form::HomogeneousForm;
pub use matrix::FormMatrix;
pub use monomial::{binomial, monomial_basis, monomial_count, Monomial};
