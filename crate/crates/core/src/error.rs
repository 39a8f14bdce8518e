//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, matching, integration, and verification.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A template leading coefficient P vanished where it must not.
    #[error("singular coefficient: P(x) = 0 at x = {x}")]
    SingularCoefficient { x: f64 },

    /// An integrating factor g = 0 was supplied where 1/g is needed.
    #[error("integrating factor is zero")]
    ZeroIntegratingFactor,

    /// A matrix determinant fell below the invertibility threshold.
    #[error("matrix nearly singular: |det| = {det:.3e} < {threshold:.3e}")]
    NearSingular { det: f64, threshold: f64 },

    /// A coefficient function returned NaN or infinity.
    #[error("non-finite coefficient value at x = {x}")]
    NonFinite { x: f64 },

    /// The shooting boundary functional does not change sign over the bracket.
    #[error("no sign change of the boundary functional over [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Bisection failed to reach the requested tolerance.
    #[error("bisection did not converge to {tolerance:.1e} within {max_iterations} iterations")]
    NoConvergence {
        tolerance: f64,
        max_iterations: usize,
    },

    /// Grid construction or use violated an invariant.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A polynomial specification violates its family constraints.
    #[error("invalid polynomial spec: {0}")]
    InvalidSpec(String),

    /// A model or template parameter violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Evaluation was requested at (or too close to) a singular point.
    #[error("evaluation at singular point x = {x}")]
    SingularPoint { x: f64 },

    /// An integration path crosses a singular point of the integrand.
    #[error("integration path crosses a singular point near x = {x}")]
    SingularPath { x: f64 },

    /// The dimensionless energy was left parametric where a value is needed.
    #[error("dimensionless energy is not bound to a value")]
    UnboundEnergy,

    /// A state had vanishing norm or all samples below threshold.
    #[error("degenerate state: {0}")]
    DegenerateState(String),

    /// The Morse well is too shallow to bind any state.
    #[error("no bound states: delta = {delta} <= 1/2")]
    NoBoundStates { delta: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
