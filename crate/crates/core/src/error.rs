use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    RepeatedQubit(usize),

    #[error("basis index {index} out of range for {n} qubits")]
    BasisIndexOutOfRange { index: usize, n: usize },

    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    #[error("z-string needs at least two qubits, got {0}")]
    ZStringTooShort(usize),

    #[error("register needs at least one qubit")]
    EmptyRegister,

    #[error("{n} qubits exceeds the dense limit of {cap}")]
    TooManyQubits { n: usize, cap: usize },

    #[error("spins {0} and {1} are not coupled")]
    NotCoupled(usize, usize),

    #[error("invalid coupling graph: {0}")]
    InvalidGraph(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("duration must be positive, got {0}")]
    NonPositiveDuration(f64),

    #[error("relay path is broken: {0}")]
    BrokenPath(String),

    #[error("parse error: {0}")]
    Parse(String),
}
