use cat_core::StructureValue;
use sammy_lang::{Program, RunLimits};
use serde::Serialize;

/// A shortest-program query: find the cheapest program whose return value
/// is isomorphic to the target, with the givens pre-bound as inputs.
#[derive(Debug, Clone)]
pub struct KQuery {
    pub target: StructureValue,
    pub givens: Vec<StructureValue>,
    /// Maximum operation cost searched, inclusive.
    pub budget: u32,
    pub run_limits: RunLimits,
}

impl KQuery {
    pub fn new(target: StructureValue, budget: u32) -> KQuery {
        KQuery {
            target,
            givens: Vec::new(),
            budget,
            run_limits: RunLimits::default(),
        }
    }

    pub fn with_givens(mut self, givens: Vec<StructureValue>) -> KQuery {
        self.givens = givens;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Found {
        min_length: u32,
        #[serde(rename = "witnessSource")]
        witness_source: String,
    },
    NotFoundWithinBudget,
}

/// Search outcome plus accounting. The witness, when present, replays
/// within the run limits and returns a structure isomorphic to the target.
#[derive(Debug, Clone)]
pub struct KResult {
    pub status: SearchStatus,
    pub witness: Option<Program>,
    pub programs_tried: u64,
    pub runs_timed_out: u64,
}

impl KResult {
    pub fn min_length(&self) -> Option<u32> {
        match &self.status {
            SearchStatus::Found { min_length, .. } => Some(*min_length),
            SearchStatus::NotFoundWithinBudget => None,
        }
    }
}
