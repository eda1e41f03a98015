//! Exact rational scalars, vectors, matrices, linear solving and an exact
//! simplex LP solver.
//!
//! Nothing in this module (or, by extension, in the crate's verification
//! paths) touches floating point. Denominators grow as elimination and
//! pivoting proceed, so all integers are arbitrary precision.

mod linsolve;
mod rational;
mod simplex;

pub use linsolve::{solve_linear_system, LinearSolution};
pub use rational::{rational_normalize, RatMatrix, RatVector, Rational};
pub use simplex::{solve_exact_lp, LpResult, LpSense};
