use thiserror::Error;

use crate::rootsys::SimpleSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Dynkin type {text:?}: {reason}")]
    Syntax { text: String, reason: String },

    #[error("inadmissible rank {rank} for family {family}")]
    InadmissibleRank { family: char, rank: usize },

    #[error("family {0} is not crystallographic")]
    NonCrystallographic(char),

    #[error("Weyl group of {ty} has order {order}, above the cap of {cap}")]
    RankCap { ty: String, order: u128, cap: u128 },

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("I = {0} is not faithful: it contains a connected component of the Dynkin diagram")]
    NotFaithful(SimpleSubset),

    #[error("element is not a minimal representative of its coset modulo W_I")]
    NotMinimalRep,

    #[error("{0}")]
    OutOfRange(String),

    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    /// Errors that reject the request itself rather than a property of the input.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::InadmissibleRank { .. }
                | Error::NonCrystallographic(_)
                | Error::IndexOutOfRange { .. }
                | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
