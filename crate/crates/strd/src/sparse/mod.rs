//! Sparse matrices and the normal-equations least-squares solver.
//!
//! Matrices are built from triplets and stored in compressed row form with a
//! canonical (row, column) ordering, so every product is summed in a fixed
//! order and repeated runs are bit-identical. The solver factorizes X'X with
//! a sparse Cholesky under a fill-reducing ordering and exposes the repeated
//! solves needed for leverages and coefficient variances; a conjugate
//! gradient fallback takes over when the predicted factor size exceeds a
//! configurable cap.

mod cholesky;
mod lstsq;
mod matrix;

pub use cholesky::CholeskyFactor;
pub use lstsq::{
    columnwise_inverse_diagonal, normal_equations_solve, LeastSquaresSolver, LinearSolveReport,
    SolveDiagnostics, SolverOptions,
};
pub use matrix::{SparseBuilder, SparseMatrix};
