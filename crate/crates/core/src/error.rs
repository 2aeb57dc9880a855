use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order e = {0}: the root of unity must have order e > 1")]
    InvalidOrder(u32),
    #[error("invalid parameter {name} = {value}: must be positive")]
    NonPositive { name: &'static str, value: u32 },
    #[error("expected {expected} charges, got {got}")]
    ChargeCount { expected: usize, got: usize },
    #[error("invalid charges {charges:?}: must be weakly increasing and lie in [0, {max}]")]
    InvalidCharge { charges: Vec<i64>, max: u32 },
    #[error("parameters {first} and {second} coincide (exponent {exponent} mod {modulus})")]
    DuplicateParameter {
        first: usize,
        second: usize,
        exponent: u64,
        modulus: u64,
    },
    #[error("expected a multipartition with {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("cannot write output: {0}")]
    Output(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Process exit status for this error on the command line.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::Inconsistent(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Output(e.to_string())
    }
}
