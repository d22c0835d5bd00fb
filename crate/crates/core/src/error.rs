use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("label `{0}` is declared twice")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("paths are not composable: {0}")]
    NotComposable(String),
    #[error("walk is not reduced at step {0}")]
    NotReduced(usize),
    #[error("walk breaks at step {0}")]
    BrokenChain(usize),

    #[error("relation {0} {1} is not composable")]
    NonComposableRelation(String, String),
    #[error("relation {0} {1} is listed twice")]
    DuplicateRelation(String, String),
    #[error("algebra is not finite dimensional: arrow `{0}` lies on a cycle of relation-free compositions")]
    NonAdmissible(String),
    #[error("path {0} is zero in the algebra")]
    NotABasisPath(String),

    #[error("{0} is not a Gamma-path")]
    NotAGammaPath(String),
    #[error("not a Gamma-bypass: {0}")]
    NotABypass(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("value path {0} is not parallel to {1}")]
    NotParallel(String, String),
    #[error("operation undefined in degree 0")]
    DegreeZero,
    #[error("reduction cancels the whole cochain")]
    FullyCancelled,

    #[error("no bar cochain lifts the given cochain")]
    LiftInfeasible,
    #[error("bar complex in degree {degree} has {size} basis labels (limit {limit})")]
    SizeLimitExceeded { degree: usize, size: usize, limit: usize },

    #[error("{0} is not a string")]
    NotAString(String),
    #[error("invalid substring selection: {0}")]
    InvalidSelection(String),
    #[error("natural {0} criterion fails")]
    CriterionFails(&'static str),

    #[error("basic cochain is not reduced")]
    NotReducedCochain,
    #[error("admissible cycles need degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("value path is stationary; use the oriented-cycle construction")]
    StationaryValue,
    #[error("malformed admissible cycle: {0}")]
    MalformedCycle(String),
    #[error("cycles cannot be composed: {0}")]
    IncompatibleComposition(String),
    #[error("composed data is not admissible: {0}")]
    ResultNotAdmissible(String),
    #[error("simple S_{0} does not occur on the cycle")]
    SimpleNotOnCycle(String),
    #[error("{0} is not an oriented cycle in the Gamma-set")]
    NotAnOrientedCycle(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
