use thiserror::Error;

/// Errors raised while building or querying colored posets, heaps, and
/// the structures derived from them.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown color `{0}`")]
    UnknownColor(String),
    #[error("duplicate color `{0}`")]
    DuplicateColor(String),
    #[error("loop edge on color `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover digraph has a cycle through `{0}`")]
    CoverCycle(String),
    #[error("cover ({0}, {1}) is not transitively reduced")]
    RedundantCover(String, String),
    #[error("duplicate cover ({0}, {1})")]
    DuplicateCover(String, String),
    #[error(
        "coloring is not surjective: color `{0}` unused (pass restrict-colors to shrink the graph)"
    )]
    NonSurjectiveColoring(String),
    #[error("poset too large for split enumeration: {0} elements (limit 64)")]
    TooManyElements(usize),
    #[error("split cap exceeded: more than {cap} ideals")]
    SplitCapExceeded { cap: usize },
    #[error("unknown cell `{0}`")]
    UnknownCell(String),
    #[error("quiver has a directed cycle with total shift {shift} <= 0")]
    NonpositiveShiftCycle { shift: i64 },
    #[error("cell `{0}` has no cover {1} in the quiver")]
    MissingCover(String, &'static str),
    #[error("empty window: n_min {0} > n_max {1}")]
    EmptyWindow(i64, i64),
    #[error("frontier is not downward closed at cover ({0}, {1})")]
    FrontierNotClosed(String, String),
    #[error("equal colors must be comparable here (EC fails): {0}")]
    EcViolation(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("weight function undefined at color `{0}`, split {1}")]
    WeightUndefined(String, String),
    #[error("missing base value for component {0}")]
    MissingBase(usize),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
