use thiserror::Error;

use crate::seqcore::DegreeSequence;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// The last term exceeds the number of remaining terms.
    #[error("cannot lay off {degree} from a sequence of length {len}")]
    LayoffImpossible { degree: u32, len: usize },

    #[error("vertex {0} is isolated; degree sequences have positive terms")]
    ZeroDegreeVertex(usize),

    #[error("sequence {0} is not graphic")]
    NotGraphic(DegreeSequence),

    #[error("sequence has {n} terms; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid family parameters: {0}")]
    BadParams(String),

    #[error("sequence {0} is not potentially (K5-C4)-graphic")]
    NotPotentially(DegreeSequence),

    /// Neither the lay-off recursion nor any family constructor applies to an
    /// accepted sequence. This contradicts the characterization.
    #[error("no construction applies to accepted sequence {0}")]
    InternalExhaustion(DegreeSequence),

    #[error("graph degrees do not match lay-off child: {0}")]
    TraceMismatch(String),

    #[error("n = {n} outside supported range {min}..={max}")]
    Domain { n: usize, min: usize, max: usize },

    #[error("malformed graph: {0}")]
    Graph(String),
}
