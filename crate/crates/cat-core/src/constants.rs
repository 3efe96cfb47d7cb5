use crate::category::{ExplicitCategory, Morphism};
use crate::functor::FunctorValue;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Builds a thin category on objects `0..count` with exactly one morphism
/// `a -> b` whenever `rel(a, b)` holds. `rel` must be reflexive and
/// transitive; the composition table then has a unique choice everywhere.
///
/// Identities get morphism ids `0..count` in object order; the remaining
/// morphisms are numbered in `(src, tgt)` lexicographic order. Every builder
/// in this crate follows that numbering policy so equal constructions are
/// index-identical.
pub fn thin_category(count: usize, rel: impl Fn(usize, usize) -> bool) -> ExplicitCategory {
    let objects: Vec<u32> = (0..count as u32).collect();
    let mut morphisms: Vec<Morphism> = objects
        .iter()
        .map(|&o| Morphism {
            id: o,
            src: o,
            tgt: o,
        })
        .collect();
    let mut next = count as u32;
    for a in 0..count {
        for b in 0..count {
            if a != b && rel(a, b) {
                morphisms.push(Morphism {
                    id: next,
                    src: a as u32,
                    tgt: b as u32,
                });
                next += 1;
            }
        }
    }
    let identities: BTreeMap<u32, u32> = objects.iter().map(|&o| (o, o)).collect();
    let pair_index: std::collections::HashMap<(u32, u32), u32> = morphisms
        .iter()
        .map(|m| ((m.src, m.tgt), m.id))
        .collect();
    let mut compose = BTreeMap::new();
    for f in &morphisms {
        for g in &morphisms {
            if f.tgt == g.src {
                let h = *pair_index
                    .get(&(f.src, g.tgt))
                    .expect("rel must be transitive");
                compose.insert((f.id, g.id), h);
            }
        }
    }
    ExplicitCategory::from_parts(objects, morphisms.clone(), identities, compose)
}

/// The empty category 0.
pub fn empty_cat() -> ExplicitCategory {
    thin_category(0, |_, _| true)
}

/// The one-object category 1.
pub fn terminal_cat() -> ExplicitCategory {
    thin_category(1, |_, _| true)
}

/// The category 2: objects 0 -> 1 with one nontrivial morphism.
pub fn arrow_cat() -> ExplicitCategory {
    chain_cat(2)
}

/// The two-object groupoid with a unique isomorphism between its objects.
pub fn iso_pair_cat() -> ExplicitCategory {
    indiscrete_cat(2)
}

/// Total order on `count` objects: one morphism a -> b iff a <= b.
pub fn chain_cat(count: usize) -> ExplicitCategory {
    thin_category(count, |a, b| a <= b)
}

/// Identities only.
pub fn discrete_cat(count: usize) -> ExplicitCategory {
    thin_category(count, |a, b| a == b)
}

/// Exactly one morphism between every ordered pair; all of them invertible.
pub fn indiscrete_cat(count: usize) -> ExplicitCategory {
    thin_category(count, |_, _| true)
}

/// The functor from 1 selecting object `obj` of `cat` (a "pointer").
pub fn pointer_functor(cat: Arc<ExplicitCategory>, obj: u32) -> FunctorValue {
    let one = Arc::new(terminal_cat());
    let id = cat.identity_of(obj).expect("object must exist");
    let mut object_map = BTreeMap::new();
    object_map.insert(0, obj);
    let mut morphism_map = BTreeMap::new();
    morphism_map.insert(0, id);
    FunctorValue::new(one, cat, object_map, morphism_map)
}

/// s : 1 -> 2, picking out the source object of 2.
pub fn source_functor() -> FunctorValue {
    pointer_functor(Arc::new(arrow_cat()), 0)
}

/// t : 1 -> 2, picking out the target object of 2.
pub fn target_functor() -> FunctorValue {
    pointer_functor(Arc::new(arrow_cat()), 1)
}

/// The unique functor out of the empty category.
pub fn bang_from_0(target: Arc<ExplicitCategory>) -> FunctorValue {
    FunctorValue::new(
        Arc::new(empty_cat()),
        target,
        BTreeMap::new(),
        BTreeMap::new(),
    )
}

/// The unique functor 2 -> 1.
pub fn bang_2_to_1() -> FunctorValue {
    FunctorValue::constant_to_terminal(Arc::new(arrow_cat()), Arc::new(terminal_cat()))
}
