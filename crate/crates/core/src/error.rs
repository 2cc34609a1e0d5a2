use thiserror::Error;

/// Errors raised by the library. The CLI maps these onto exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("matrix does not have order {order}: g^{order} is not the identity")]
    OrderMismatch { order: usize },
    #[error("polynomial is not a product of cyclotomic polynomials; residual factor {residual}")]
    NonCyclotomic { residual: String },
    #[error("subset is not stable under the twisting element")]
    NotStable,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
