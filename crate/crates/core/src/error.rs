use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// No unitary irreducible representation exists for these parameters.
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("{what} = {value} is outside {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("hypergeometric series does not terminate within {terms} terms")]
    NonTerminating { terms: usize },

    #[error("denominator Pochhammer symbol vanishes at term k = {k}")]
    VanishingDenominator { k: usize },

    #[error("pole: {0}")]
    Pole(String),

    #[error("negative weight or norm: {0}")]
    NegativeMeasure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inverse iteration did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("incompatible realization: {0}")]
    Incompatible(String),

    #[error("boundary condition violated: {0}")]
    Boundary(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, lo: i64, hi: i64) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange { what, value, lo, hi })
    } else {
        Ok(())
    }
}
