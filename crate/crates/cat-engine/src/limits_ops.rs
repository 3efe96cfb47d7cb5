//! Limits and colimits by exhaustive cone search.

use crate::basic::op1;
use crate::error::EngineError;
use cat_core::{ExplicitCategory, FunctorValue, Limits};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A cone over a diagram D : J -> C: an apex object of C and one leg
/// `apex -> D(j)` per object j of J, such that every arrow of J yields a
/// commuting triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    pub apex: u32,
    pub legs: BTreeMap<u32, u32>,
}

/// A cocone: legs run `D(j) -> apex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocone {
    pub apex: u32,
    pub legs: BTreeMap<u32, u32>,
}

/// All cones over the diagram, apexes in object order, legs lexicographic.
pub fn all_cones(diagram: &FunctorValue) -> Vec<Cone> {
    let j = &diagram.source;
    let c = &diagram.target;
    let mut out = Vec::new();
    for &apex in &c.objects {
        let mut legs = BTreeMap::new();
        cone_rec(diagram, j, c, apex, 0, &mut legs, &mut out);
    }
    out
}

fn cone_rec(
    diagram: &FunctorValue,
    j: &ExplicitCategory,
    c: &ExplicitCategory,
    apex: u32,
    k: usize,
    legs: &mut BTreeMap<u32, u32>,
    out: &mut Vec<Cone>,
) {
    if k == j.object_count() {
        out.push(Cone {
            apex,
            legs: legs.clone(),
        });
        return;
    }
    let jo = j.objects[k];
    let djo = diagram.apply_object(jo).unwrap();
    'cand: for cand in c.hom(apex, djo) {
        legs.insert(jo, cand);
        // triangles for arrows whose endpoints both have legs
        for m in &j.morphisms {
            if let (Some(&ls), Some(&lt)) = (legs.get(&m.src), legs.get(&m.tgt)) {
                let dm = diagram.apply_morphism(m.id).unwrap();
                if c.composed(ls, dm) != Some(lt) {
                    legs.remove(&jo);
                    continue 'cand;
                }
            }
        }
        cone_rec(diagram, j, c, apex, k + 1, legs, out);
        legs.remove(&jo);
    }
}

/// The unique factorisation of `cone` through `universal`, if any.
pub fn cone_mediators(
    c: &ExplicitCategory,
    cone: &Cone,
    universal: &Cone,
) -> Vec<u32> {
    c.hom(cone.apex, universal.apex)
        .into_iter()
        .filter(|&m| {
            universal
                .legs
                .iter()
                .all(|(&j, &uleg)| c.composed(m, uleg) == cone.legs.get(&j).copied())
        })
        .collect()
}

fn is_universal(c: &ExplicitCategory, cones: &[Cone], candidate: &Cone) -> bool {
    cones
        .iter()
        .all(|other| cone_mediators(c, other, candidate).len() == 1)
}

/// Exhaustively enumerates cones and returns a universal one. Among
/// isomorphic universal cones the one with the smallest apex index (then
/// lexicographically smallest legs) is returned.
pub fn limit(diagram: &FunctorValue, limits: &Limits) -> Result<Cone, EngineError> {
    limits.check_category(
        diagram.target.object_count(),
        diagram.target.morphism_count(),
    )?;
    let cones = all_cones(diagram);
    let c = &diagram.target;
    cones
        .iter()
        .find(|cand| is_universal(c, &cones, cand))
        .cloned()
        .ok_or(EngineError::NoLimit)
}

/// Dual: computed as a limit in the opposite category.
pub fn colimit(diagram: &FunctorValue, limits: &Limits) -> Result<Cocone, EngineError> {
    let op_diag = op1(diagram);
    match limit(&op_diag, limits) {
        Ok(cone) => Ok(Cocone {
            apex: cone.apex,
            legs: cone.legs,
        }),
        Err(EngineError::NoLimit) => Err(EngineError::NoColimit),
        Err(e) => Err(e),
    }
}
