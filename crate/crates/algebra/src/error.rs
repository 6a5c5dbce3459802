use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] gbei_core::Error),
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("Gröbner basis computation exceeded {secs} s")]
    Timeout { secs: u64 },
    #[error("initial ideal is not squarefree")]
    NotSquarefree,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Cap or wall-clock overrun, including ones raised by the graph layer.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::Timeout { .. } | Error::Core(gbei_core::Error::CapExceeded { .. })
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
