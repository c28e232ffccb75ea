use thiserror::Error;

/// Errors surfaced by the numerical operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("quadrature failed to converge: {context} (last delta {delta:.3e}, tol {tol:.3e})")]
    QuadratureNonConvergence {
        context: String,
        delta: f64,
        tol: f64,
    },

    #[error("extrapolation levels disagree: {context} (disagreement {disagreement:.3e}, tol {tol:.3e})")]
    ExtrapolationDisagreement {
        context: String,
        disagreement: f64,
        tol: f64,
    },

    #[error("cross-method disagreement: {context} (relative {relative:.3e}, tol {tol:.3e})")]
    MethodDisagreement {
        context: String,
        relative: f64,
        tol: f64,
    },

    #[error("operator is numerically singular: smallest singular value {sigma_min:.3e}")]
    SingularOperator { sigma_min: f64 },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
