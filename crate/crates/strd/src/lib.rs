//! Additive decomposition of regularly spaced time series into trend,
//! seasonal components, covariate effects, and remainder.
//!
//! The decomposition is posed as a single sparse regularized least-squares
//! problem: every component is penalized by discrete second differences, the
//! penalties are stacked under the observation equations, and the whole
//! system is solved in one shot. Seasonal components are two-dimensional
//! surfaces (season x time) whose season dimension may wrap a simple cycle
//! or follow a more general directed graph (e.g. working-day and holiday
//! day-shapes joined by transition paths). Smoothing weights are chosen by
//! leave-one-out or gapped K-fold cross-validation, minimized with a
//! Nelder-Mead search over log-weights.
//!
//! Modules:
//! - [`sparse`]: triplet/CSR matrices, sparse normal-equations Cholesky,
//!   leverage (hat diagonal) computation.
//! - [`topology`]: season graphs and all difference-penalty operators.
//! - [`model`]: declarative model specification and assembly of the stacked
//!   system.
//! - [`estimator`]: least-squares, robust (L1), and generalized
//!   least-squares fits; confidence intervals; forecasting.
//! - [`cv`]: cross-validation scores and smoothing-weight optimization.
//! - [`simulate`]: synthetic data generators and the component-recovery
//!   RMSE experiment.
//! - [`cli`]: command-line frontend (CSV in, component CSV + SVG out).

pub mod cli;
pub mod cv;
pub mod estimator;
pub mod model;
pub mod simulate;
pub mod sparse;
pub mod topology;

/// Errors produced by the decomposition library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Matrix or vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The normal equations are singular or numerically rank deficient.
    /// Usually some smoothing weight is zero or too small for the component
    /// it is supposed to identify.
    #[error(
        "rank deficiency detected at column {column} (pivot {pivot:.3e}): \
         some smoothing parameter is zero or too small for identifiability"
    )]
    RankDeficient { column: usize, pivot: f64 },

    /// A component with no active penalty has more coefficients than there
    /// are observations; the fit cannot be identified.
    #[error("unidentifiable model: {0}")]
    Unidentifiable(String),

    /// Invalid construction argument (topology, spec, or config value).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative solver ran out of iterations.
    #[error("no convergence after {iterations} iterations (objective {objective:.6e})")]
    NoConvergence { iterations: usize, objective: f64 },

    /// A leverage reached one, so a leave-one-out residual is undefined.
    #[error("hat diagonal saturated at observation {t}: model interpolates this point; increase smoothing")]
    Saturated { t: usize },

    /// Cross-validation could not produce a single successful evaluation.
    #[error("all cross-validation evaluations failed: {0}")]
    AllEvaluationsFailed(String),

    /// Input data problem (bad CSV, missing column, no observations).
    #[error("data error: {0}")]
    Data(String),

    /// Configuration problem (bad config file or inconsistent settings).
    #[error("config error: {0}")]
    Config(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
