//! Mixed-integer convex relaxations for nonconvex quadratic optimization.
//!
//! This crate builds dual-bounding MIP relaxations for problems of the form
//! `min x'Qx + c.x` over box (and optionally quadratically) constrained
//! feasible sets, where `Q` need not be positive semidefinite. The
//! nonconvexity is isolated into univariate equations `y_i = x_i^2` via a
//! diagonal perturbation `Q + diag(delta)`, and each univariate square is
//! then relaxed by one of several piecewise-linear schemes:
//!
//! - `nn`: the sawtooth (binary-chain) formulation of the piecewise-linear
//!   interpolant of `x^2` at `2^L + 1` uniform breakpoints. Compact
//!   (`O(L)` rows and binaries), sharp, and hereditarily sharp.
//! - `bhh1` / `bhh2`: two-sided relaxations whose integer-feasible points
//!   cover the curve `y = x^2` with a union of polytopes (piecewise
//!   McCormick cells, optionally tightened by midpoint tangents).
//! - `nmdt` / `tnmdt`: radix-2 discretization with McCormick envelopes for
//!   the residual products (tightened variant squares the residual exactly).
//!
//! The crate also ships the supporting machinery: reflected Gray code
//! utilities (the binary chains of the sawtooth formulation follow a Gray
//! code), parity cutting planes for the formulation's integer hull, a dense
//! bounded-variable simplex with branch-and-bound and outer-approximation of
//! convex quadratic objectives, area/sharpness analysis routines, and
//! instance generators with brute-force oracles.
//!
//! Everything is deterministic: fixed tie-breaking in the solver, and a
//! documented linear congruential generator for all randomized utilities.

pub mod analysis;
pub mod formulations;
pub mod graycode;
pub mod instances;
pub mod model;
pub mod paritycuts;
pub mod rng;
pub mod sawtooth;
pub mod shift;
pub mod solver;
pub mod suites;

pub use formulations::{FormulationHandle, Method, QpRelaxation};
pub use instances::QpInstance;
pub use model::{Model, QuadraticForm, VarId, VarKind};
pub use shift::ShiftVector;
pub use solver::{LpSolution, MipOptions, SolveResult, SolveStatus};
