use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol tables differ")]
    TableMismatch,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("operation requires numeric coefficients, found parameter `{0}`")]
    Parametric(String),
    #[error("reduction of a parametric object needs a non-monomial factor")]
    NonMonomialParametricReduction,
    #[error("euler identity fails: x*A + y*B + z*C = {0}")]
    EulerViolation(String),
    #[error("zero form")]
    ZeroForm,
    #[error("map components must be homogeneous of a common degree >= 1")]
    BadMapDegree,
    #[error("zero map")]
    ZeroMap,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("map is not birational or violates its parameter constraints: {0}")]
    NotBirational(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("parameter binding error: {0}")]
    Binding(String),
    #[error("singular set is positive dimensional")]
    PositiveDimensional,
    #[error("all resultants vanish identically")]
    DegenerateResultant,
    #[error("point is not a singular point")]
    NotSingular,
    #[error("first integral candidate is constant")]
    ConstantFunction,
    #[error("expected polynomials linear in parameters: {0}")]
    NonLinear(String),
    #[error("affine form must not involve the chart variable")]
    NotAffine,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
