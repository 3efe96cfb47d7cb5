//! Truncated number categories: the chain, its discrete and groupoid
//! variants, and the chain with a top point, together with successor and
//! pointer functors and the Kan-lifting predecessor.

use crate::error::StdlibError;
use cat_core::{
    chain_cat, discrete_cat, indiscrete_cat, pointer_functor, ExplicitCategory, FunctorValue,
    Limits,
};
use cat_engine::{kan_lift_left, EngineError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NumberKind {
    Chain,
    Discrete,
    GroupoidChain,
    ChainWithTop,
}

impl NumberKind {
    pub fn name(self) -> &'static str {
        match self {
            NumberKind::Chain => "omega",
            NumberKind::Discrete => "omega_d",
            NumberKind::GroupoidChain => "omega_i",
            NumberKind::ChainWithTop => "omega_bar",
        }
    }
}

/// A truncation of one of the number categories at bound N: objects are
/// 0..=N (plus the top point for the chain-with-top kind).
#[derive(Debug, Clone)]
pub struct TruncatedNumberCategory {
    pub kind: NumberKind,
    pub bound: usize,
    pub category: Arc<ExplicitCategory>,
}

impl TruncatedNumberCategory {
    /// The object id standing for the formal top point, when present.
    pub fn top_object(&self) -> Option<u32> {
        match self.kind {
            NumberKind::ChainWithTop => Some(self.bound as u32 + 1),
            _ => None,
        }
    }
}

pub fn build_number_category(
    kind: NumberKind,
    bound: usize,
    limits: &Limits,
) -> Result<TruncatedNumberCategory, StdlibError> {
    let category = match kind {
        NumberKind::Chain => chain_cat(bound + 1),
        NumberKind::Discrete => discrete_cat(bound + 1),
        NumberKind::GroupoidChain => indiscrete_cat(bound + 1),
        NumberKind::ChainWithTop => chain_cat(bound + 2),
    };
    limits
        .check_category(category.object_count(), category.morphism_count())
        .map_err(EngineError::from)?;
    Ok(TruncatedNumberCategory {
        kind,
        bound,
        category: Arc::new(category),
    })
}

/// The successor functor. Below the bound it sends k to k+1; at the bound
/// it clamps (for the chain with top, the bound maps to the top point and
/// the top is fixed).
pub fn successor(c: &TruncatedNumberCategory) -> FunctorValue {
    let max = c.category.object_count() as u32 - 1;
    let clamp_at = match c.kind {
        NumberKind::ChainWithTop => max,
        _ => c.bound as u32,
    };
    let object_map: BTreeMap<u32, u32> = c
        .category
        .objects
        .iter()
        .map(|&o| (o, (o + 1).min(clamp_at)))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = c
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                c.category.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let f = FunctorValue::new(
        c.category.clone(),
        c.category.clone(),
        object_map,
        morphism_map,
    );
    debug_assert!(f.is_valid());
    f
}

/// The pointer functor P_n : 1 -> c.
pub fn pointer(c: &TruncatedNumberCategory, n: usize) -> FunctorValue {
    pointer_functor(c.category.clone(), n as u32)
}

/// The predecessor of a pointer, computed as the left Kan lifting of the
/// pointer along the successor. On chains this always exists and sends P_0
/// to P_0 under clamping.
pub fn predecessor(
    c: &TruncatedNumberCategory,
    pointer_fun: &FunctorValue,
    limits: &Limits,
) -> Result<FunctorValue, StdlibError> {
    if !matches!(c.kind, NumberKind::Chain | NumberKind::ChainWithTop) {
        return Err(StdlibError::WrongKind {
            context: format!("predecessor on {}", c.kind.name()),
        });
    }
    let succ = successor(c);
    let pair = kan_lift_left(&succ, pointer_fun, limits)?;
    Ok(pair.functor)
}

/// The object-identity inclusion between two truncations with the same
/// bound, e.g. omega_d into omega or omega into omega_i. Valid whenever the
/// source has no morphisms the target lacks.
pub fn inclusion(
    from: &TruncatedNumberCategory,
    to: &TruncatedNumberCategory,
) -> Option<FunctorValue> {
    if from.category.object_count() > to.category.object_count() {
        return None;
    }
    let object_map: BTreeMap<u32, u32> = from.category.objects.iter().map(|&o| (o, o)).collect();
    let mut morphism_map = BTreeMap::new();
    for m in &from.category.morphisms {
        let hom = to.category.hom(m.src, m.tgt);
        if hom.is_empty() {
            return None;
        }
        morphism_map.insert(m.id, hom[0]);
    }
    let f = FunctorValue::new(
        from.category.clone(),
        to.category.clone(),
        object_map,
        morphism_map,
    );
    if f.is_valid() {
        Some(f)
    } else {
        None
    }
}
