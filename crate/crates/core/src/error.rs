use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),
    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),
    #[error("`{0}` is not a simplex")]
    NotASimplex(String),
    #[error("more than {limit} maximal simplices")]
    TooManyMaximalSimplices { limit: usize },
    #[error("more than {limit} simplices")]
    TooManySimplices { limit: usize },
    #[error("`{0}` is not a maximal simplex")]
    NotMaximalSimplex(String),
    #[error("simplex `{0}` is maximal")]
    MaximalSimplex(String),
    #[error("subcomplexes cannot be joined: {0}")]
    NotJoinable(String),
    #[error("graph is disconnected: {0} and {1} are in different components")]
    Disconnected(String, String),
    #[error("graph has {size} vertices, above the cap of {cap}")]
    GraphTooLarge { size: usize, cap: usize },
    #[error("projection target is empty")]
    EmptyTarget,
    #[error("target is unreachable from `{0}`")]
    Unreachable(String),
    #[error("level {level} is above the co-level {colevel}")]
    BadLevel { level: usize, colevel: usize },
    #[error("edge {0} does not lie in the link")]
    EdgeOutsideLink(String),
    #[error("class `{0}` is not almost-maximal")]
    NotAlmostMaximal(String),
    #[error("endpoint `{vertex}` is outside the link of `{class}`")]
    EndpointOutsideLink { class: String, vertex: String },
    #[error("action is not simplicial: {0}")]
    ActionNotSimplicial(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("classes `{0}` and `{1}` are orthogonal")]
    OrthogonalPair(String, String),
    #[error("classes are equal: `{0}`")]
    EqualClasses(String),
    #[error("W-vertex `{0}` is not a maximal simplex")]
    NotMaximal(String),
    #[error("`{0}` is the class of a maximal simplex")]
    MaximalClass(String),
    #[error("invalid subgroup embedding: {0}")]
    InvalidEmbedding(String),
    #[error("blow-up sets overlap at `{0}`")]
    OverlappingBlobs(String),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}
