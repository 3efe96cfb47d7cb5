use cat_engine::EngineError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdlibError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("head at position {position} cannot split the truncated tape")]
    BoundaryHit { position: usize },
    #[error("no rule for state {state} reading '{symbol}'")]
    NoRule { state: u32, symbol: String },
    #[error("no witness below the bound for tuple {tuple:?}")]
    NoWitness { tuple: Vec<usize> },
    #[error("operation not defined for this number-category kind: {context}")]
    WrongKind { context: String },
}
