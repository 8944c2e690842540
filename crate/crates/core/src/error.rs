use thiserror::Error;

/// Errors raised by state conversions, dynamical models and integrators.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Canonical-variable inequalities violated beyond tolerance (e.g. G > L).
    #[error("degenerate state: {0}")]
    DegenerateState(String),

    /// Elements too close to a Delaunay coordinate singularity for the
    /// requested evaluation (1/e or 1/sin i factors blow up).
    #[error("near-singular elements: {0}")]
    NearSingular(String),

    /// Position below the Earth's equatorial radius.
    #[error("state below Earth's surface: r = {radius:.3} km")]
    BelowSurface { radius: f64 },

    /// An iterative scheme (corrector, root finder) failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A trajectory left the configured domain.
    #[error("trajectory diverged: {0}")]
    Diverged(String),

    /// Invalid configuration or input data.
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
