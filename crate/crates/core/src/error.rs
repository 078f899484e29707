use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("permutation is not a bijection on the vertex set")]
    BadPermutation,
    #[error("invalid parameter for {family}: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
    #[error("labelled enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationCap { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("bad size byte {0:#04x}")]
    BadSizeByte(u8),
    #[error("order {0} not supported (short form covers 1..=62)")]
    UnsupportedOrder(usize),
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} payload bytes, found {found}")]
    Trailing { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("vertex {0} is isolated; the degree bound is undefined")]
    IsolatedVertex(usize),
    #[error("dense oracle supports n <= {max}, got {n}")]
    OracleCap { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForbiddenError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("u and v must differ (got {0})")]
    SameVertex(usize),
    #[error("subset size t={t} out of range for order {n}")]
    SubsetSize { t: usize, n: usize },
    #[error("need s >= t >= 2, got s={s}, t={t}")]
    BadShape { s: usize, t: usize },
    #[error("subset scan unsupported for t={t}, n={n} (caps: t <= {max_t}, n <= {max_n})")]
    Unsupported { t: usize, n: usize, max_t: usize, max_n: usize },
    #[error("book B_0 is undefined; page count must be at least 1")]
    ZeroPages,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{formula} hypothesis violated: {reason}")]
pub struct BoundError {
    pub formula: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exhaustive audit supports n <= {max}, got {n}")]
    ExhaustiveCap { n: usize, max: usize },
    #[error("friendship check supports 5 <= n <= 7, got {0}")]
    FriendshipRange(usize),
    #[error("i/o: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search supports 2 <= n <= {max}, got {n}")]
    OrderCap { n: usize, max: usize },
    #[error("inconsistent constraints: {0}")]
    Inconsistent(String),
    #[error("budget and restart count must be at least 1")]
    EmptyBudget,
    #[error("no feasible connected start found")]
    NoFeasibleStart,
    #[error(transparent)]
    Forbidden(#[from] ForbiddenError),
}
