use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("partition side is empty")]
    EmptyPartitionSide,
    #[error("partition does not cover the neighbourhood of {0} exactly")]
    BadPartition(usize),
    #[error("neighbourhoods of {0} and {1} overlap")]
    OverlappingNeighborhoods(usize, usize),
    #[error("edge coincide conditions failed: {0:?}")]
    ConditionViolation(Vec<String>),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("search bound exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("vertex {0} has odd degree")]
    OddDegreeVertex(usize),
    #[error("graph is already eulerian")]
    AlreadyEulerian,
    #[error("not a tree")]
    NotATree,
    #[error("not a caterpillar")]
    NotACaterpillar,
    #[error("not a lobster")]
    NotALobster,
    #[error("not a spider")]
    NotASpider,
    #[error("not a path")]
    NotAPath,
    #[error("not a walk")]
    NotAWalk,
    #[error("not a cycle")]
    NotACycle,
    #[error("degree threshold {0} out of range")]
    ThresholdOutOfRange(usize),
    #[error("missing label on {0}")]
    MissingLabel(String),
    #[error("unknown scheme {0}")]
    UnknownScheme(String),
    #[error("labelling is not set-ordered")]
    NotSetOrdered,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("complementarity violated by labels {0:?}")]
    ComplementarityViolation(Vec<i64>),
    #[error("edge sets do not match: {0}")]
    EdgeSetMismatch(String),
    #[error("bad sequence parameters: {0}")]
    BadSequenceParams(String),
    #[error("empty labelling")]
    EmptyLabelling,
    #[error("plan targets unknown vertex {0}")]
    PlanTargetsUnknownVertex(usize),
    #[error("route does not fit q={0}")]
    RouteSizeMismatch(usize),
    #[error("bad permutation")]
    BadPermutation,
    #[error("index {0} out of range")]
    IndexOutOfRange(i64),
    #[error("inconsistent shared labels: {0}")]
    InconsistentSharedLabels(String),
    #[error("negative argument")]
    NegativeArgument,
    #[error("scheme violated: {0}")]
    SchemeViolation(String),
    #[error("substitution table is not decodable: {0}")]
    NonDecodable(String),
    #[error("group order must be at least 2, got {0}")]
    BadOrder(i64),
    #[error("sequence has length {got}, expected {want}")]
    SequenceLengthMismatch { got: usize, want: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("no cycle colouring found")]
    NoCycleColoring,
    #[error("invalid colouring: {0}")]
    InvalidColoring(String),
    #[error("network is not group labelled: {0}")]
    NotGroupLabelled(String),
    #[error("steps must be at least 1")]
    BadSteps,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
