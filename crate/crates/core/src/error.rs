use thiserror::Error;

use crate::cuts::AxiomReport;

/// Errors produced by the library.
///
/// The variants are deliberately coarse: callers (in particular the CLI)
/// distinguish "your input is malformed" from "your cut family is invalid"
/// from "a structural guarantee was violated", and nothing finer.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-domain input: unknown vertices, duplicate edges,
    /// disconnected graphs, empty selections, and the like.
    #[error("invalid input: {0}")]
    Input(String),

    /// The cut family failed one of the three validation conditions.
    /// The report carries the first failure witness per condition.
    #[error("cut family failed validation:\n{0}")]
    Axioms(Box<AxiomReport>),

    /// A guarantee of the construction was violated at runtime: a
    /// non-singleton median, a non-total interval order, a cyclic
    /// realization. For validated inputs these indicate a bug, not bad data.
    #[error("internal consistency violation: {0}")]
    Consistency(String),

    /// A configurable enumeration guard tripped.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
