//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for an operation.
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// An operation that requires a scalar got a non-scalar tensor.
    #[error("{op} requires a scalar, got shape {shape:?}")]
    NotScalar {
        op: &'static str,
        shape: Vec<usize>,
    },

    /// A tensor fed to a tape operation was never recorded on that tape.
    #[error("input to {op} is not recorded on the tape")]
    Untracked { op: &'static str },

    /// A batched operation received zero rows.
    #[error("{op} requires a non-empty batch")]
    EmptyBatch { op: &'static str },

    /// A class label is outside `[0, classes)`.
    #[error("label {label} at index {index} out of range for {classes} classes")]
    LabelOutOfRange {
        index: usize,
        label: usize,
        classes: usize,
    },

    /// A parameter scheduled for an update has no gradient.
    #[error("no gradient recorded for parameter `{name}`")]
    MissingGradient { name: String },

    /// Sampling was requested from an empty replay buffer.
    #[error("replay buffer is empty")]
    EmptyBuffer,

    /// A preference vector is off the 2-simplex.
    #[error("preference ({a1}, {a2}) is off the simplex (component negative or sum != 1)")]
    OffSimplex { a1: f64, a2: f64 },

    /// A task has no test examples, so accuracy is undefined.
    #[error("task {task_id} has an empty test set")]
    EmptyTestSet { task_id: usize },

    /// Malformed tabular input.
    #[error("{path}:{line}: {message}")]
    Tabular {
        path: String,
        line: usize,
        message: String,
    },

    /// Generic argument validation failure.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    /// An error re-raised with run context attached.
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an error with a human-readable run context.
    pub fn with_context(self, context: impl Into<String>) -> Error {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }
}
