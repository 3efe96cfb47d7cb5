use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("size limit exceeded: {objects} objects / {morphisms} morphisms (caps {max_objects}/{max_morphisms})")]
    SizeLimit {
        objects: usize,
        morphisms: usize,
        max_objects: usize,
        max_morphisms: usize,
    },
    #[error("invalid {kind}: {first_violation}")]
    InvalidStructure {
        kind: &'static str,
        first_violation: String,
    },
}
