use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopInSimple(usize),
    #[error("parallel edge {0}-{1} is not allowed in a simple graph")]
    ParallelInSimple(usize, usize),
    #[error("loop at vertex {0} is not allowed in a multigraph")]
    LoopInMulti(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("consecutive vertices at position {0} are not adjacent")]
    NotAWalk(usize),
    #[error("missing: {0}")]
    Missing(String),
    #[error("already present: {0}")]
    AlreadyPresent(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("empty set family")]
    EmptyFamily,
    #[error("graph is not a tree")]
    NotATree,
    #[error("bad Prüfer code: {0}")]
    BadCode(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("sequence is not graphical")]
    NotGraphical,
    #[error("no connected realization: {0}")]
    NotConnectedRealizable(String),
    #[error("endpoints {0} and {1} are adjacent")]
    AdjacentEndpoints(usize, usize),
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is too small: {0}")]
    TooSmall(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("f({0}) exceeds the degree of the vertex")]
    InfeasibleDegrees(usize),
    #[error("wrong graph class: {0}")]
    WrongClass(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("no Kempe swap frees a color at vertex {0}")]
    SwapExhausted(usize),
    #[error("bad rotation system: {0}")]
    BadRotation(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::BudgetExhausted(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_check(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, cap })
    } else {
        Ok(())
    }
}
