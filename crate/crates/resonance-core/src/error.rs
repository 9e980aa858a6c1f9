use alloc::string::String;
use thiserror::Error;

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("pole of the density at lambda = -i*{v}")]
    Pole { v: Q },
    #[error("empty region: {0}")]
    Region(String),
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),
}

impl Error {
    /// Stable machine readable tag used by the JSON error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "parameter",
            Error::Unsupported(_) => "unsupported",
            Error::Domain(_) => "domain",
            Error::Dimension { .. } => "dimension",
            Error::NotApplicable(_) => "not_applicable",
            Error::Pole { .. } => "pole",
            Error::Region(_) => "region",
            Error::Geometry(_) => "geometry",
            Error::Configuration(_) => "configuration",
            Error::DegenerateGrid(_) => "degenerate_grid",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
