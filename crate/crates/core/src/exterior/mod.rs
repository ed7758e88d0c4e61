//! Exact exterior algebra on the coordinate coframe `(dx, dy, dz, dw, dσ₁, dσ₂)`
//! with coefficients in rational functions over the Gaussian rationals.

mod coefficient;
mod coframe;
mod form;
mod matrix;
mod operator;
mod poly;
mod scalar;

pub use coefficient::{Coefficient, Substitution};
pub use coframe::CoframeMap;
pub use form::{radial_inverse, Blade, Form, Gen, Region, DIM};
pub use matrix::{leading_principal_minors, scalar_determinant, CoefficientMatrix};
pub use operator::{
    compatibility_check, form_matrix, holomorphic_part, AlmostComplexOperator,
    CompatibilityReport, SampleCheck, SamplePoint,
};
pub use poly::{Monomial, Polynomial, Symbol, NUM_SYMBOLS};
pub use scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("forms over different generator lists ({left} vs {right} generators)")]
    GeneratorMismatch { left: usize, right: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("coframe image is not a 1-form")]
    NotDegreeOne,
    #[error("expected a form of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("coframe matrix is not invertible")]
    Singular,
    #[error("abstract function f is not differentiable symbolically")]
    AbstractFunction,
    #[error("symbol {0} has no value")]
    UnassignedSymbol(Symbol),
    #[error("sample point outside the region: {0}")]
    InvalidSample(String),
}
