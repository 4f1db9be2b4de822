use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma argument sits on a pole (nonpositive integer) and was not
    /// cancelled by a matching argument on the other side of a ratio.
    #[error("gamma pole at argument {argument}")]
    Pole { argument: f64 },

    #[error("|gamma({argument})| overflows f64; use the signed log form")]
    Overflow { argument: f64 },

    #[error("series diverges: {0}")]
    Divergence(String),

    /// A denominator Pochhammer factor vanishes before the series terminates.
    #[error("denominator parameter {parameter} reaches zero at term {term}")]
    DenominatorPole { parameter: f64, term: usize },

    #[error("no convergence after {evaluations} evaluations ({context})")]
    NonConverged { evaluations: usize, context: String },

    #[error("domain violation: {condition} (margin {margin})")]
    Domain { condition: String, margin: f64 },

    #[error("unsupported kernel: {0}")]
    UnsupportedKernel(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(condition: impl Into<String>, margin: f64) -> Self {
        Error::Domain {
            condition: condition.into(),
            margin,
        }
    }

    pub(crate) fn non_converged(evaluations: usize, context: impl Into<String>) -> Self {
        Error::NonConverged {
            evaluations,
            context: context.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
