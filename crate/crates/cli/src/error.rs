use loewner_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    /// Malformed document; `locator` is `line L, column C` for syntax errors
    /// or a field path such as `matrices[1][0][2]`.
    #[error("parse error in {source_name} at {locator}: {message}")]
    Parse {
        source_name: String,
        locator: String,
        message: String,
    },
    #[error("validation error in {source_name} at {locator}: {message}")]
    Validation {
        source_name: String,
        locator: String,
        message: String,
    },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{command}: {source}")]
    Core {
        command: String,
        #[source]
        source: CoreError,
    },
    #[error("unknown fixture '{0}' (known: {known})", known = loewner_core::fixtures::FIXTURE_NAMES.join(", "))]
    UnknownFixture(String),
    #[error("unknown ensemble suite '{0}' (known: {known})", known = crate::ensemble::suite_names().join(", "))]
    UnknownSuite(String),
}

impl CliError {
    pub fn core(command: &str, source: CoreError) -> Self {
        CliError::Core {
            command: command.to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::UnknownFixture(_) | CliError::UnknownSuite(_) => EXIT_USAGE,
            CliError::Parse { .. } | CliError::Validation { .. } | CliError::Io { .. } => EXIT_VALIDATION,
            CliError::Core { source, .. } => core_exit_code(source),
        }
    }
}

/// Violated preconditions on the inputs are validation errors; breakdowns of
/// the numerics (non-convergence, failed range conditions, failed
/// separation) are numerical failures.
// Documents are finite once parsed (JSON has no inf/NaN and out-of-range
// literals fail to parse), so `NonFinite` from a core call means overflow
// during the computation.
fn core_exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::NonSquare { .. }
        | CoreError::NotHermitianWithinTolerance { .. }
        | CoreError::NotPositiveSemidefinite { .. }
        | CoreError::AmbientMismatch { .. }
        | CoreError::DimensionMismatch { .. }
        | CoreError::TrivialSubspace { .. }
        | CoreError::SingularTransform { .. }
        | CoreError::NotMaximalForJZero
        | CoreError::NotUnitVector { .. }
        | CoreError::NotCommutingFamily { .. }
        | CoreError::NotLowerBound { .. }
        | CoreError::InfimumExists { .. }
        | CoreError::EmptySet
        | CoreError::InvalidTolerance
        | CoreError::InvalidShape(_) => EXIT_VALIDATION,
        _ => EXIT_NUMERICAL,
    }
}

pub type CliResult<T> = Result<T, CliError>;
