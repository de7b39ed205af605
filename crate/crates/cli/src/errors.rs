use betti_core::Error as CoreError;

/// Exit codes: 0 success, 1 verification failure, 2 usage error (from clap),
/// 3 input or parse error, 4 resource cap exceeded.
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },

    #[error("arity error at byte {offset}: {msg}")]
    Arity { offset: usize, msg: String },

    #[error("expression mixes graph and complex operands")]
    MixedKinds,

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::VertexCapExceeded { .. })
            | CliError::Core(CoreError::FaceExplosion { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
