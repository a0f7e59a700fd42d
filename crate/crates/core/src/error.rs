use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("relation {0} has an empty side")]
    EmptySide(usize),

    #[error("invalid symbol name `{0}`")]
    InvalidSymbolName(String),

    #[error("atom {index} is not applicable to the running word")]
    InvalidDiagram { index: usize },

    #[error("bottom of the first diagram does not match the top of the second")]
    SeamMismatch,

    #[error("base words differ")]
    BaseMismatch,

    #[error("diagram is not spherical (top and bottom labels differ)")]
    NotSpherical,

    #[error("atoms {0} and {1} do not commute")]
    NotIndependent(usize, usize),

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("cyclic reduction stuck: square is unreduced but no peelable pair exists")]
    StuckCyclicReduction,

    #[error("reduced diagram does not split at offset {0}")]
    NotASum(usize),

    #[error("oracle bounds exceeded: {0}")]
    ExceededBounds(String),

    #[error("completion budget exhausted")]
    Timeout,

    #[error("not an (ee, e)-diagram: {0}")]
    NotIdempotentCell(String),

    #[error("witness rejected: {0}")]
    BadWitness(String),
}
