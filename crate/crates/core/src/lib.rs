//! Regular simplices inscribed in the cube `[-1, 1]^n`, built from Hadamard
//! matrices, and the exact norms of the linear interpolation projectors they
//! define.
//!
//! The crate is organised bottom-up:
//!
//! * [`hadamard`]: Sylvester and Paley constructions, verification,
//!   equivalence operations, and the `+`/`-` text format.
//! * [`simplex`]: exact rational simplices, Bareiss determinants and the
//!   basic Lagrange polynomials.
//! * [`cube_norm`]: `‖P‖_Q` by exhaustive vertex enumeration, with a
//!   Gray-code fast path for Hadamard simplices.
//! * [`absorption`]: the absorption index `ξ(Q; S)` and its two-sided
//!   estimate through `‖P‖_Q`.
//! * [`ball_norm`]: the closed-form norm for a regular simplex in a ball.
//! * [`bounds`]: maximal 0/1 determinants `h_n` and the bounds built on them.
//! * [`report`]: JSON reports, run manifests, batch ingestion and the
//!   reproduction targets used by the `hsimplex` binary.

pub mod absorption;
pub mod ball_norm;
pub mod bounds;
pub mod cube_norm;
pub mod error;
pub mod hadamard;
pub mod rational;
pub mod report;
pub mod simplex;

pub use error::{Error, Result};
pub use hadamard::{EquivalenceOp, HadamardMatrix, SignMatrix};
pub use rational::Rational;
pub use simplex::{Cube, LagrangeEvaluator, Simplex};
