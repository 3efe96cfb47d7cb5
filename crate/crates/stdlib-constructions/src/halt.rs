//! The monotone-factoring step of the halting construction at a fixed
//! bound: a 0/1 sequence, read as a functor from the truncated chain into
//! the two-object groupoid, factors through the arrow category exactly when
//! it never drops back from 1 to 0 — once true, it remains true.

use crate::numbers::TruncatedNumberCategory;
use crate::quantifier::two_inclusion;
use cat_core::{iso_pair_cat, FunctorValue};
use cat_engine::factor_through;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct MonotoneFactor {
    pub factors: bool,
    /// The limit entry (the last value) when the sequence factors.
    pub value: Option<u8>,
    /// The factored functor through the arrow category, when it exists.
    pub witness: Option<FunctorValue>,
}

/// Wraps a 0/1 sequence as a functor chain -> 2~.
pub fn sequence_functor(chain: &TruncatedNumberCategory, bits: &[u8]) -> FunctorValue {
    let sto = Arc::new(iso_pair_cat());
    let object_map: BTreeMap<u32, u32> = chain
        .category
        .objects
        .iter()
        .map(|&o| (o, bits.get(o as usize).copied().unwrap_or(0) as u32))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = chain
        .category
        .morphisms
        .iter()
        .map(|m| (m.id, sto.hom(object_map[&m.src], object_map[&m.tgt])[0]))
        .collect();
    FunctorValue::new(chain.category.clone(), sto, object_map, morphism_map)
}

/// The factoring test: lifts the sequence along 2 -> 2~ demanding an
/// identity structure map; succeeds exactly on monotone 0..01..1 sequences,
/// with the limit entry as the value.
pub fn monotone_factor_halt(f: &FunctorValue) -> MonotoneFactor {
    let inc = two_inclusion();
    match factor_through(&inc, f) {
        Some(witness) => {
            let last = *f.source.objects.last().expect("nonempty chain");
            let value = f.apply_object(last).unwrap() as u8;
            MonotoneFactor {
                factors: true,
                value: Some(value),
                witness: Some(witness),
            }
        }
        None => MonotoneFactor {
            factors: false,
            value: None,
            witness: None,
        },
    }
}

/// The direct scan the factoring test is checked against.
pub fn monotone_scan(bits: &[u8]) -> (bool, Option<u8>) {
    let monotone = bits.windows(2).all(|w| w[0] <= w[1]);
    if monotone {
        (true, bits.last().copied())
    } else {
        (false, None)
    }
}
