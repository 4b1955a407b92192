use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // words
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("zero exponent in `{0}`")]
    ZeroExponent(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("empty word")]
    EmptyWord,
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,

    // graphs
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("malformed graph file: {0}")]
    MalformedGraph(String),
    #[error("a path needs at least one vertex")]
    ZeroVertices,
    #[error("graph has no vertices")]
    EmptyGraph,

    // trace / raag / stallings
    #[error("letter index {0} is out of range for this alphabet")]
    InvalidLetter(usize),
    #[error("operands live over different graphs")]
    GraphMismatch,
    #[error("need at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("ambient ranks differ ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("element {0} is trivial after free reduction")]
    TrivialElement(usize),
    #[error("cyclic subgroups of elements {0} and {1} intersect non-trivially")]
    PowersShareRoot(usize, usize),

    // concrete groups
    #[error("modulus must satisfy |n| >= 2, got {0}")]
    InvalidModulus(i64),
    #[error("elements belong to BS(1,{0}) and BS(1,{1})")]
    ModulusMismatch(i64, i64),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    // gbs / one-relator
    #[error("graph of groups is disconnected")]
    Disconnected,
    #[error("malformed GBS file: {0}")]
    MalformedGbs(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),

    // embeddings
    #[error("map expects the path graph P4")]
    WrongGraph,
    #[error("graph is not a forest")]
    NotForest,
    #[error("{0}")]
    DiameterOutOfRange(String),
    #[error("images of commuting generators {0} and {1} do not commute")]
    NonCommutingImages(String, String),
    #[error("expected {expected} generator images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("exponent must be non-zero")]
    ZeroPower,
}
