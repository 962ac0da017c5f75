use orbihh_core::Error as CoreError;
use thiserror::Error;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("schema error: {0}")]
    Json(serde_json::Error),

    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },

    #[error("bad scalar {text:?} in `{field}`: {source}")]
    Scalar {
        field: String,
        text: String,
        source: CoreError,
    },

    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),

    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_PARSE,
        }
    }
}
