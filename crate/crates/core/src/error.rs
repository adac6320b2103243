use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },

    #[error("line {line}: label {label} is out of range for n = {n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },

    #[error("graph6: byte {byte} at position {pos} is outside [63, 126]")]
    Graph6InvalidByte { pos: usize, byte: u8 },

    #[error("graph6: bit stream truncated (expected {expected} bytes, found {found})")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6: encoding n = {0} is unsupported (n must be at most 62)")]
    Graph6TooLarge(usize),

    #[error("{what}: n = {n} is out of range")]
    SizeOutOfRange { what: &'static str, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("vertex {0} has zero transmission")]
    ZeroTransmission(usize),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("kernel check failed: smallest eigenvalue {eigenvalue:e}, alignment {alignment}")]
    KernelCheck { eigenvalue: f64, alignment: f64 },

    #[error("index {index} is out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector is zero or has zero weighted norm")]
    ZeroVector,

    #[error("entry {index} has the wrong sign for its side of the partition")]
    InfeasibleSign { index: usize },

    #[error("random_connected: no connected sample after {0} attempts")]
    RetryCapExhausted(usize),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
