//! The composition operation: for a category C, the functor from the
//! pullback category of composable pairs C^2 x_{C^1} C^2 to C^2 taking each
//! pair of composable arrows to its composite.

use crate::basic::pullback_categories;
use crate::error::EngineError;
use crate::functor_cat::{functor_category, FunctorCategory};
use cat_core::{arrow_cat, ExplicitCategory, FunctorValue, Limits};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Result of the composition-functor construction.
pub struct CompositionFunctor {
    /// The pullback category of composable pairs.
    pub composable_pairs: Arc<ExplicitCategory>,
    /// The functor from composable pairs to C^2 sending a pair to its
    /// composite.
    pub compose_functor: FunctorValue,
}

/// Evaluation of the arrow category C^2 at one end of 2: `end` 0 evaluates
/// at the source object, 1 at the target. This is the functor induced by
/// s or t under the identification C^1 = C.
fn evaluation_functor(
    arrow_fc: &FunctorCategory,
    c: &Arc<ExplicitCategory>,
    end: u32,
) -> FunctorValue {
    let object_map: BTreeMap<u32, u32> = arrow_fc
        .functors
        .iter()
        .enumerate()
        .map(|(i, f)| (i as u32, f.apply_object(end).expect("total")))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = arrow_fc
        .transformations
        .iter()
        .enumerate()
        .map(|(k, nt)| (k as u32, nt.component(end).expect("component")))
        .collect();
    FunctorValue::new(
        arrow_fc.category.clone(),
        c.clone(),
        object_map,
        morphism_map,
    )
}

pub fn composition_functor(
    c: &Arc<ExplicitCategory>,
    limits: &Limits,
) -> Result<CompositionFunctor, EngineError> {
    let two = Arc::new(arrow_cat());
    let arrow_fc: FunctorCategory = functor_category(&two, c, limits)?;

    let ev_source = evaluation_functor(&arrow_fc, c, 0);
    let ev_target = evaluation_functor(&arrow_fc, c, 1);

    // composable pairs: target of the first component = source of the second
    let pb = pullback_categories(&ev_target, &ev_source, limits)?;

    // object of C^2 = a morphism of C: the image of the nonidentity arrow
    let two_arrow = two.hom(0, 1)[0];
    let object_morphism: Vec<u32> = arrow_fc
        .functors
        .iter()
        .map(|f| f.apply_morphism(two_arrow).expect("total"))
        .collect();
    let find_object_for = |mor: u32| -> Option<u32> {
        object_morphism
            .iter()
            .position(|&m| m == mor)
            .map(|i| i as u32)
    };

    let mut object_map = BTreeMap::new();
    for (i, &(x, y)) in pb.object_pairs.iter().enumerate() {
        let mx = object_morphism[arrow_fc.category.object_position(x).unwrap()];
        let my = object_morphism[arrow_fc.category.object_position(y).unwrap()];
        let composite = c
            .composed(mx, my)
            .ok_or_else(|| EngineError::invalid("composition functor: pair not composable"))?;
        let obj = find_object_for(composite)
            .ok_or_else(|| EngineError::invalid("composition functor: composite not enumerated"))?;
        object_map.insert(i as u32, obj);
    }

    // a morphism of C^2 from f to f' is a commuting square (u, v); for a
    // pullback morphism ((u,v),(v,w)) the image is the outer square (u, w)
    let mut morphism_map = BTreeMap::new();
    for (k, &(m1, m2)) in pb.morphism_pairs.iter().enumerate() {
        let nt1 = &arrow_fc.transformations[arrow_fc.category.morphism_position(m1).unwrap()];
        let nt2 = &arrow_fc.transformations[arrow_fc.category.morphism_position(m2).unwrap()];
        let u = nt1.component(0).expect("component at source");
        let w = nt2.component(1).expect("component at target");
        let rec = &pb.category.morphisms[k];
        let src_obj = object_map[&rec.src];
        let tgt_obj = object_map[&rec.tgt];
        let img = arrow_fc
            .transformations
            .iter()
            .enumerate()
            .find(|(r, n)| {
                arrow_fc.nt_endpoints[*r] == (src_obj, tgt_obj)
                    && n.component(0) == Some(u)
                    && n.component(1) == Some(w)
            })
            .map(|(r, _)| r as u32)
            .ok_or_else(|| EngineError::invalid("composition functor: image square missing"))?;
        morphism_map.insert(k as u32, img);
    }

    let compose_functor = FunctorValue::new(
        pb.category.clone(),
        arrow_fc.category.clone(),
        object_map,
        morphism_map,
    );
    Ok(CompositionFunctor {
        composable_pairs: pb.category,
        compose_functor,
    })
}
