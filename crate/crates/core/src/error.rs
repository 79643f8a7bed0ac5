use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a well-formed object.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("colon by the zero ideal is undefined")]
    UndefinedColon,

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    /// No ideal of the requested kind has the requested Hilbert function.
    #[error("infeasible Hilbert function at degree {degree}: {reason}")]
    Infeasible { degree: u32, reason: String },

    /// The explicit degree window is too short to certify the declared tail.
    #[error("degree bound {bound} is insufficient: {reason}")]
    InsufficientBound { bound: u32, reason: String },

    #[error("containment hypothesis violated: {0}")]
    Containment(String),

    #[error("ideal is not {0}")]
    NotStable(&'static str),

    #[error("degree sequence must be finite here: {0}")]
    InfiniteDegree(String),

    #[error("ideal contains no power of x{0}")]
    NotArtinian(usize),

    #[error("resource cap exceeded: {what} reached {count} (cap {cap})")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("incompatible arguments: {0}")]
    Mismatch(String),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }
}
