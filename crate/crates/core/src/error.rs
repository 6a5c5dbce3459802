use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("input graph is complete")]
    CompleteInput,
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{0:?} does not have the cut point property")]
    NotACutset(VertexSet),
    #[error("m must be at least 2, got {0}")]
    InvalidM(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
