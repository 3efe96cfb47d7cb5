use cat_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Size(#[from] CoreError),
    #[error("source/target mismatch: {context}")]
    SourceTargetMismatch { context: String },
    #[error("diagram has no limit")]
    NoLimit,
    #[error("diagram has no colimit")]
    NoColimit,
    #[error("no right Kan extension exists")]
    NoKanExtension,
    #[error("no Kan lifting exists")]
    NoKanLifting,
    #[error("universal property violated: no mediating transformation")]
    NoMediator,
    #[error("universal property violated: mediating transformation not unique")]
    NonUnique,
    #[error("presentation did not close within the bound: {detail}")]
    PossiblyInfinite { detail: String },
    #[error("invalid input: {context}")]
    InvalidInput { context: String },
}

impl EngineError {
    pub fn mismatch(context: impl Into<String>) -> Self {
        EngineError::SourceTargetMismatch {
            context: context.into(),
        }
    }

    pub fn invalid(context: impl Into<String>) -> Self {
        EngineError::InvalidInput {
            context: context.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, EngineError::Size(_))
    }
}
