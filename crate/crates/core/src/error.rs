use crate::vertex_set::VertexSet;

/// Errors produced by construction, validation and enumeration routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty input: at least one facet is required")]
    EmptyInput,

    #[error("vertex count {vertices} exceeds the enumeration cap {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("relabeling has no image for vertex {vertex}")]
    IncompleteRelabeling { vertex: u32 },

    #[error("bad relabeling: {0}")]
    BadRelabeling(String),

    #[error("face {face} is not a maximal face")]
    NotMaximalFace { face: VertexSet },

    #[error("glued faces have different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vertex set {face} does not induce a complete subgraph")]
    NotComplete { face: VertexSet },

    #[error("expected a {expected}-vector, found a {found}-vector")]
    KindMismatch { expected: &'static str, found: &'static str },

    #[error("closed form produced a non-integral value")]
    NonIntegral,

    #[error("dimension {dim} is out of range (minimum {min})")]
    BadDimension { dim: usize, min: usize },

    #[error("facet choice {face} is not a facet of the current complex")]
    BadFacetChoice { face: VertexSet },

    #[error("size {n} is out of range (minimum {min})")]
    BadSize { n: usize, min: usize },

    #[error("bad Prüfer code: {0}")]
    BadPruferCode(String),

    #[error("face count {faces} exceeds the materialization limit {limit}")]
    FaceExplosion { faces: usize, limit: usize },

    #[error("{parts} parts require {} gluings, got {gluings}", parts - 1)]
    GluingArity { parts: usize, gluings: usize },

    #[error("gluing step {step} failed: {source}")]
    StepFailed {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {msg}")]
    ParseFile { line: usize, msg: String },

    #[error("chain invariant violated: {0}")]
    InvariantViolated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
