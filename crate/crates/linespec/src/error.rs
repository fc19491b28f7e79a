use thiserror::Error;

/// Errors surfaced by the estimation library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented domain restriction.
    #[error("domain error: {0}")]
    Domain(String),

    /// Mismatched vector/matrix dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix expected to be Hermitian drifted beyond tolerance.
    #[error("matrix is not Hermitian (max asymmetry {drift:.3e}, tolerance {tol:.3e})")]
    NonHermitian { drift: f64, tol: f64 },

    /// A matrix expected to be positive semidefinite was not.
    #[error("matrix is not PSD (min eigenvalue {min_eig:.3e}, tolerance {tol:.3e})")]
    NotPsd { min_eig: f64, tol: f64 },

    /// The Toeplitz parameter describes a full-rank matrix where a
    /// rank-deficient one is required; shift by the minimum eigenvalue first.
    #[error("T(u) is numerically full rank (rank {rank} = M); apply min_eig_shift before decomposing")]
    FullRank { rank: usize },

    /// Eigensolver or other dense factorization failure.
    #[error("linear algebra failure: {0}")]
    Linalg(String),

    /// Non-finite values appeared in solver iterates.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
