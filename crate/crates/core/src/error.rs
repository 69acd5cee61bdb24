use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("form has odd dimension {0}")]
    OddDimension(usize),
    #[error("form matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("form matrix is degenerate (determinant is zero)")]
    Degenerate,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("standard form requires n >= 1")]
    ZeroDimension,
    #[error("matrix is neither symplectic nor antisymplectic")]
    NotInOmegaN,
    #[error("matrix is not lambda-symplectic for any lambda")]
    NotLambdaSymplectic,
    #[error("lambda = {0} is not reachable by the generator (need +-mu^2 with rational mu)")]
    UnreachableLambda(String),
    #[error("matrix is not Hamiltonian for this form")]
    NotHamiltonianMatrix,
    #[error("field is not Hamiltonian: residual nonzero at entry ({row}, {col})")]
    NotHamiltonianField { row: usize, col: usize },
    #[error("polynomial variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("jacobian is not symmetric; the field is not a gradient")]
    JacobianNotSymmetric,
    #[error("field is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("field has a nonzero constant part X(0)")]
    ConstantPartPresent,
    #[error("remainder has a nonzero 2-jet at the origin")]
    JetConditionViolated,
    #[error("non-finite state at t = {0}")]
    NonFiniteState(f64),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
