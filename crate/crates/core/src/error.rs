use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{function}: argument {value} outside domain {domain}")]
    Domain {
        function: &'static str,
        value: String,
        domain: &'static str,
    },

    #[error("precision of {digits} digits is outside the supported range [30, 100000]")]
    InvalidPrecision { digits: u32 },

    #[error("cannot parse {input:?} as a decimal number")]
    Parse { input: String },

    #[error("{what} did not converge within {limit} steps")]
    NonConvergence { what: &'static str, limit: usize },

    #[error(
        "epsilon {eps} exceeds the admissible limit {limit}: the saddle multiplier is too large"
    )]
    InadmissibleEpsilon { eps: String, limit: String },

    #[error("symmetry residual does not change sign across the bracket: {detail}")]
    NoSignChange { detail: String },

    #[error("orbit tail did not decay geometrically: {detail}")]
    TailNonConvergence { detail: String },

    #[error("internal consistency check failed: {detail}")]
    Verification { detail: String },

    #[error("invalid configuration: {detail}")]
    Config { detail: String },
}

impl Error {
    pub(crate) fn domain(
        function: &'static str,
        value: &crate::Real,
        domain: &'static str,
    ) -> Self {
        Error::Domain {
            function,
            value: value.to_decimal(12),
            domain,
        }
    }

    /// Short stable identifier, used in the CLI status column.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::InvalidPrecision { .. } => "invalid_precision",
            Error::Parse { .. } => "parse",
            Error::NonConvergence { .. } => "non_convergence",
            Error::InadmissibleEpsilon { .. } => "inadmissible_epsilon",
            Error::NoSignChange { .. } => "no_sign_change",
            Error::TailNonConvergence { .. } => "tail_non_convergence",
            Error::Verification { .. } => "verification",
            Error::Config { .. } => "config",
        }
    }
}
