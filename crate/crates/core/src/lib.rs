//! Exact generic characteristic polynomials of finite-dimensional algebras.

pub mod algebra;
pub mod catalog;
pub mod coeff;
pub mod expr;
pub mod field;
pub mod generic;
pub mod matrix;
pub mod mpoly;
pub mod oracle;
pub mod random;
pub mod spec_json;
pub mod upoly;
pub mod verify;

use std::sync::Arc;

pub use algebra::{AlgebraKind, AlgebraSpec, Side};
pub use coeff::{FieldDescriptor, FieldValue};
pub use generic::{generic_minimal_polynomial, GenericCharPoly, GenericError};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Multivariate polynomial over a runtime field.
pub type Poly = mpoly::MPoly<FieldValue>;
/// Univariate polynomial over a runtime field.
pub type UniPoly = upoly::UPoly<FieldValue>;
/// Shared algebra over a runtime field.
pub type Algebra = Arc<AlgebraSpec<FieldValue>>;
/// Element of an [`Algebra`].
pub type Element = algebra::AlgElement<FieldValue>;
/// Matrix over a runtime field.
pub type FieldMatrix = matrix::Matrix<FieldValue>;
/// Generic polynomial of an [`Algebra`].
pub type CharPoly = GenericCharPoly<FieldValue>;
