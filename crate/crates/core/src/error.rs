use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 bit stream is truncated")]
    Truncated,
    #[error("graph6 input contains a non-printable byte {0:#04x}")]
    NonPrintable(u8),
    #[error("graph6 input has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("the two vertex sets overlap")]
    OverlappingSets,
    #[error("vertex sets must be non-empty")]
    EmptySet,
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("class index {index} out of range for a partition with {len} classes")]
    ClassOutOfRange { index: usize, len: usize },
    #[error("the set is not a global dominating set")]
    NotGlobalDominating,
    #[error("the trivial graph K1 has no gc-partition")]
    TrivialGraph,
    #[error("the graph has no {0}-partition")]
    NoPartitionExists(crate::coalition::Kind),
    #[error("search budget of {budget} nodes exhausted before any valid partition was found")]
    BudgetExhausted { budget: u64 },
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("no closed form is known for {0}")]
    NoKnownFormula(String),
    #[error("no constructive partition is known for {0}")]
    NoKnownConstruction(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable snake_case identifier, used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "empty_graph",
            Error::TooManyVertices(_) => "too_many_vertices",
            Error::LoopEdge(_) => "loop_edge",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::MalformedHeader => "malformed_header",
            Error::Truncated => "truncated",
            Error::NonPrintable(_) => "non_printable",
            Error::TrailingBytes(_) => "trailing_bytes",
            Error::Parse { .. } => "parse",
            Error::Disconnected => "disconnected",
            Error::NotATree => "not_a_tree",
            Error::OverlappingSets => "overlapping_sets",
            Error::EmptySet => "empty_set",
            Error::MalformedPartition(_) => "malformed_partition",
            Error::ClassOutOfRange { .. } => "class_out_of_range",
            Error::NotGlobalDominating => "not_global_dominating",
            Error::TrivialGraph => "trivial_graph",
            Error::NoPartitionExists(_) => "no_partition_exists",
            Error::BudgetExhausted { .. } => "budget_exhausted",
            Error::InvalidParams(_) => "invalid_params",
            Error::UnknownFamily(_) => "unknown_family",
            Error::NoKnownFormula(_) => "no_known_formula",
            Error::NoKnownConstruction(_) => "no_known_construction",
            Error::UnknownTheorem(_) => "unknown_theorem",
        }
    }
}
