use thiserror::Error;

/// Errors raised by graph construction, spectral computation, majorization
/// and bound evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph order {n} too small for this operation")]
    DegenerateOrder { n: usize },
    #[error("graph size m = {m} too small for this operation")]
    DegenerateSize { m: usize },
    #[error("eigensolver failed to converge")]
    ConvergenceFailure,
    #[error("graphs do not differ by exactly one added edge")]
    NotSingleAddition,
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("vector is not sorted non-increasing")]
    NotSorted,
    #[error("non-positive entry {0}")]
    NonPositiveEntry(f64),
    #[error("no feasible (k, d) pair; constraint set is inconsistent")]
    Infeasible,
    #[error("floor alpha = {alpha} exceeds a/h = {limit}")]
    FloorTooLarge { alpha: f64, limit: f64 },
    #[error("inner set is not nested in the outer set")]
    NotNested,
    #[error("h = {h} exceeds the admissible range (max {max})")]
    HTooLarge { h: usize, max: usize },
    #[error("h = {h} violates h < d2/2 with d2 = {d2}")]
    HalfDegreeViolated { h: usize, d2: usize },
    #[error("graph is already complete")]
    AlreadyComplete,
    #[error("rejection budget of {0} draws exhausted")]
    RejectionBudgetExhausted(usize),
    #[error("bad lattice parameters: n = {n}, k = {k}")]
    BadLatticeParams { n: usize, k: usize },
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("graph has fewer than {needed} absent pairs")]
    NotEnoughAbsentPairs { needed: usize },
    #[error("edge-list parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
