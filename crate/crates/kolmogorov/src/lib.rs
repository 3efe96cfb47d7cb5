//! Shortest-program search over the canonical program enumeration: the
//! complexity of a structure is the least operation cost of a program whose
//! return value is isomorphic to it, optionally relative to given input
//! structures.

mod encoding;
mod invariance;
mod iso;
mod query;
mod search;

pub use encoding::EncodingSpec;
pub use invariance::{invariance_harness, InvarianceReport, SuiteEntry, TargetReport};
pub use iso::structure_isomorphic;
pub use query::{KQuery, KResult, SearchStatus};
pub use search::{ksearch, ksearch_parallel, ksearch_with_encoding, relative_k};
