//! Closed-form spectra and eigenfunctions of 1-D model quantum systems.
//!
//! The crate rewrites second-order eigenvalue equations as first-order
//! systems in the phase-space vector `(y, y')`, matches them against the
//! classical template equations (Hermite, associated Legendre, associated
//! Laguerre, confluent hypergeometric) through an algebraic coefficient
//! invariant, and cross-validates every closed-form result with independent
//! finite-difference and shooting eigensolvers.
//!
//! - [`phase_space`] — 2x2 matrix form of second-order equations, trajectory
//!   integration, shooting eigenvalue search.
//! - [`templates`] — the template equations, their coefficient invariants,
//!   and the orthogonal-polynomial solution families.
//! - [`matching`] — the matching identity between a dimensionless
//!   Schrödinger equation and a template, integrating factors, and a
//!   grid residual that certifies any proposed match.
//! - [`models`] — harmonic oscillator, rigid rotor, hydrogen radial
//!   equation, and Morse oscillator as turnkey systems.
//! - [`oracle`] — independent numerics: finite-difference Hamiltonians,
//!   Sturm-bisection eigenvalues, Simpson quadrature, residuals, node counts.

pub mod error;
pub mod matching;
pub mod models;
pub mod oracle;
pub mod phase_space;
pub mod templates;

pub use error::{Error, Result};
