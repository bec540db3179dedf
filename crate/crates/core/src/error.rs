use thiserror::Error;

/// The first group axiom a candidate multiplication table violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupTableError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({row},{col}) = {value} is outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    NoIdentity(usize),
    #[error("no inverse for {0}")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("{labels} labels given for a group of order {order}")]
    LabelCount { labels: usize, order: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group table: {0}")]
    Group(#[from] GroupTableError),
    #[error("cyclic group of order 0")]
    ZeroOrder,
    #[error("unknown built-in group {0:?}")]
    UnknownGroup(String),
    #[error("map is not a group homomorphism")]
    NotHomomorphism,
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("letter at vertex {vertex} has element {elem} outside its group of order {order}")]
    ElemOutOfRange {
        vertex: usize,
        elem: usize,
        order: usize,
    },
    #[error("letters must not carry the identity element (vertex {0})")]
    IdentityLetter(usize),
    #[error("word is not cyclically reduced: {0}")]
    NotCyclicallyReduced(String),
    #[error("decoration at vertex {0} is trivial; decorating groups must be non-trivial")]
    TrivialDecoration(String),
    #[error("{vertices} vertices but {decorations} decorations")]
    DecorationCount { vertices: usize, decorations: usize },
    #[error("word is not in the domain: {0}")]
    NotInDomain(String),
    #[error("element not in the partial group: {0}")]
    NotAnElement(String),
    #[error("invalid morphism: {0}")]
    Morphism(String),
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("enumeration limit exceeded: {0}")]
    EnumerationLimit(String),
    #[error("normalizer is non-trivial at the given bound ({0} elements); refusing")]
    NontrivialNormalizer(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("realizer failed: {0}")]
    Realize(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
