//! Exact scalars, polynomials and linear algebra over `Q` and `Q(w_s)`.

mod binary_form;
mod cyclotomic;
mod matrix;
mod point;
mod poly;
mod ring;
mod unipoly;

pub use binary_form::{
    binary_resultant, discriminant_of_roots, elementary_symmetric, elementary_symmetric_all,
    resultant, sylvester_matrix, BinaryForm,
};
pub use cyclotomic::{cyclotomic_polynomial, totient, CyclotomicScalar};
pub use matrix::ExactMatrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use point::ProjectivePoint;
pub use poly::{HomogeneousPoly, Monomial, Poly};
pub use ring::{rat, ratio, rational_text, Field, Ring};
pub use unipoly::UniPoly;


#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("point has {len} coordinates, expected a point of P^1")]
    NotOnLine { len: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("projective point needs at least one coordinate")]
    EmptyPoint,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} is below the minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is singular")]
    Singular,
    #[error("expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("division was not exact")]
    InexactDivision,
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}
