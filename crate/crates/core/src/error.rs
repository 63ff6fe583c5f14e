use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("malformed rational `{0}` (expected `p/q`, `p` or `inf`)")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} out of range (supported: {1}..=64)")]
    OrderOutOfRange(usize, usize),
    #[error("distance {distance} out of range for order {n} (need 1 <= d <= {max})", max = n / 2)]
    DistanceOutOfRange { distance: usize, n: usize },
    #[error("circulant distance list must be nonempty")]
    NoDistances,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set has bits outside the {n} vertices of the graph")]
    SetOutOfRange { n: usize },
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 header")]
    Graph6Header,
    #[error("graph6 body has wrong length: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("invalid graph6 byte {0:#04x}")]
    Graph6Byte(u8),
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooLarge(usize),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range")]
    VertexOutOfRange { line: usize, vertex: i64 },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family parameter k = {0} is invalid (need k >= 3)")]
    KTooSmall(usize),
    #[error("family parameter k = {k} makes order {n} exceed 64 vertices")]
    KTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {{{0}, {1}}} has a distance outside the family's distance set")]
    ForeignDistance(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("search exceeded its deadline")]
    Timeout,
    #[error("exhaustive oracle is capped at {max} vertices, got {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
