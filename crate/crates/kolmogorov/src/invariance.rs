//! The invariance harness: the same suite searched under two enumeration
//! encodings. The observed complexity gap is compared against the
//! per-witness translation overhead, the constant of the invariance
//! statement measured rather than assumed.

use crate::encoding::EncodingSpec;
use crate::query::{KQuery, KResult};
use crate::search::ksearch_with_encoding;
use cat_core::StructureValue;
use sammy_lang::{InstructionBody, Program, RunLimits};

#[derive(Debug)]
pub struct TargetReport {
    pub k_a: Option<u32>,
    pub k_b: Option<u32>,
    pub gap: Option<u32>,
    /// Translation overhead of the encoding-A witness under encoding B.
    pub overhead_bound: Option<u32>,
    pub result_a: KResult,
    pub result_b: KResult,
}

#[derive(Debug)]
pub struct InvarianceReport {
    pub per_target: Vec<TargetReport>,
    pub max_gap: u32,
    pub all_within_bound: bool,
    /// Targets where a search exhausted its budget; these carry no gap.
    pub budget_exhausted: usize,
}

fn witness_overhead(witness: &Program, enc_a: &EncodingSpec, enc_b: &EncodingSpec) -> u32 {
    witness
        .instructions
        .iter()
        .map(|i| match &i.body {
            InstructionBody::Assign { op, .. } => {
                enc_b.op_cost(*op).abs_diff(enc_a.op_cost(*op))
            }
            _ => 0,
        })
        .sum()
}

/// Suite entry: a target plus the structures given to it as inputs.
pub type SuiteEntry = (StructureValue, Vec<StructureValue>);

pub fn invariance_harness(
    enc_a: &EncodingSpec,
    enc_b: &EncodingSpec,
    suite: &[SuiteEntry],
    budget: u32,
    run_limits: &RunLimits,
) -> InvarianceReport {
    let mut per_target = Vec::new();
    let mut max_gap = 0;
    let mut all_within_bound = true;
    let mut budget_exhausted = 0;
    for (target, givens) in suite {
        let query = KQuery {
            target: target.clone(),
            givens: givens.clone(),
            budget,
            run_limits: *run_limits,
        };
        let result_a = ksearch_with_encoding(&query, enc_a);
        let result_b = ksearch_with_encoding(&query, enc_b);
        let k_a = result_a.min_length();
        let k_b = result_b.min_length();
        let (gap, overhead_bound) = match (k_a, k_b, &result_a.witness) {
            (Some(a), Some(b), Some(wa)) => {
                let gap = a.abs_diff(b);
                let bound = witness_overhead(wa, enc_a, enc_b);
                if gap > bound {
                    all_within_bound = false;
                }
                max_gap = max_gap.max(gap);
                (Some(gap), Some(bound))
            }
            _ => {
                budget_exhausted += 1;
                (None, None)
            }
        };
        per_target.push(TargetReport {
            k_a,
            k_b,
            gap,
            overhead_bound,
            result_a,
            result_b,
        });
    }
    InvarianceReport {
        per_target,
        max_gap,
        all_within_bound,
        budget_exhausted,
    }
}
