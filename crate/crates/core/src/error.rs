use alloc::string::String;
use core::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// p passed to a field constructor is not prime.
    NonPrime(u64),
    /// Requested field order exceeds the configured cap.
    OrderExceedsCap { order: u128, cap: u64 },
    /// Elements from two different fields were mixed in one operation.
    FieldMismatch,
    /// Division or inversion of the zero element.
    DivisionByZero,
    /// Element index outside [0, q-1].
    ElementOutOfRange { index: u64, order: u64 },
    /// No subfield embedding exists (order of ext is not a power of order of sub).
    NoEmbeddingDegree { sub_order: u64, ext_order: u64 },
    /// The given elements are not a basis (singular trace-form system).
    NotABasis,
    /// A generator matrix has lower rank than its row count.
    RankDeficient { rows: usize, rank: usize },
    /// Enumeration (or another counted sweep) would exceed its cap.
    CapExceeded { required: u128, cap: u64 },
    /// Vectors of different lengths where equal lengths are required.
    LengthMismatch { left: usize, right: usize },
    /// Window size b outside [1, n].
    WindowOutOfRange { b: usize, n: usize },
    /// A stated precondition of an operation does not hold.
    Precondition(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    VerificationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::OrderExceedsCap { order, cap } => {
                write!(f, "field order {order} exceeds cap {cap}")
            }
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero field element"),
            Error::ElementOutOfRange { index, order } => {
                write!(f, "element index {index} outside field of order {order}")
            }
            Error::NoEmbeddingDegree {
                sub_order,
                ext_order,
            } => write!(
                f,
                "no embedding: {ext_order} is not a power of {sub_order}"
            ),
            Error::NotABasis => write!(f, "given elements do not form a basis"),
            Error::RankDeficient { rows, rank } => {
                write!(f, "generator matrix has rank {rank} < {rows} rows")
            }
            Error::CapExceeded { required, cap } => {
                write!(f, "enumeration of {required} items exceeds cap {cap}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::WindowOutOfRange { b, n } => {
                write!(f, "window size b={b} outside [1, {n}]")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
