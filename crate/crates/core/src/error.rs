use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not invertible: idempotent component {component} vanishes")]
    NotInvertible { component: u8 },

    #[error("matrix is not Hermitian: defect {defect:e} exceeds tolerance {tol:e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("Jacobi sweeps exhausted: off-diagonal mass {offdiag:e} after {sweeps} sweeps")]
    NoConvergence { offdiag: f64, sweeps: usize },

    #[error("operator is not self-adjoint: symmetry defect {defect:e} exceeds tolerance {tol:e}")]
    NotSelfAdjoint { defect: f64, tol: f64 },

    #[error("vector is not cyclic: component Krylov ranks ({rank1}, {rank2}) of {n}")]
    NotCyclic { rank1: usize, rank2: usize, n: usize },

    #[error("idempotent component {component} of the vector is numerically zero")]
    ZeroComponent { component: u8 },

    #[error("function samples live on different grids")]
    GridMismatch,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
