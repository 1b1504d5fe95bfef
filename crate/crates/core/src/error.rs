use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("invalid field: d = {0} must be a nonzero squarefree integer")]
    InvalidField(i64),
    #[error("mixing elements of Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(i64, i64),
    #[error("curve inside singular locus: P vanishes identically along the curve")]
    SingularCurve,
    #[error("the curve is not an integral curve of the system")]
    NotIntegralCurve,
    #[error("the vector field has P = 0, so the foliation Q/P is undefined")]
    ZeroP,
    #[error("order {0} out of range (expected 1..=25)")]
    InvalidOrder(usize),
    #[error("kappa_{0} vanishes identically: skip order {0}")]
    ZeroKappa(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
