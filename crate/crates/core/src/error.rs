use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported generator kind: {0}")]
    UnsupportedGenerator(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("generator {index} is not traceless (|tr| = {trace:e})")]
    NonTracelessBasis { index: usize, trace: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family is not coplanar: k·(R{l}×R{m}) = {value:e}")]
    NonCoplanar { l: usize, m: usize, value: f64 },
    #[error("boost velocity |v| = {v} must be below c = {c}")]
    SuperluminalBoost { v: f64, c: f64 },
    #[error("matrix is not unitary (‖UU†−1‖ = {0:e})")]
    NonUnitary(f64),
    #[error("closed-form eigenstates degenerate for p antiparallel to z (p + p_z = {0:e})")]
    PolarSingularity(f64),
    #[error("amplitude is not transverse to k (k·A = {0:e})")]
    NonTransverseAmplitude(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
