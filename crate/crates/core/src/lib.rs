//! Bound-state eigenvalues of the radial Schrödinger equation with the
//! linear potential `b r` and the Cornell potential `b r - alpha / r - C`.
//!
//! The dimensionless radial problem
//!
//! ```text
//! [ -d²/dξ² + l(l+1)/ξ² + ξ - a/ξ ] R(ξ) = λ R(ξ)
//! ```
//!
//! is solved by several independent routes:
//!
//! * [`airy`]: exact `l = 0`, `a = 0` eigenvalues from the zeros of `Ai`.
//! * [`series`]: the power-series solution, with its coefficients from a
//!   recurrence, a banded determinant, and a continued fraction.
//! * [`eigensolve`]: Numerov shooting and oscillator-basis diagonalization.
//! * [`closed_forms`]: closed-form eigenvalue formulas for the linear and
//!   Cornell potentials, their asymptotics, and a WKB reference.
//!
//! [`spectrum`] maps dimensionless eigenvalues to energies and heavy-quarkonium
//! masses; [`cli`] implements the `cornell-eigen` command-line tool.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod airy;
pub mod cli;
pub mod closed_forms;
pub mod eigensolve;
pub mod error;
pub mod series;
pub mod spectrum;

pub use error::{Error, Result};
