//! Isomorphism of returned structures: categories up to invertible functor
//! pairs, functors up to commuting squares of isomorphisms, natural
//! transformations componentwise under such squares.

use cat_core::{
    all_isomorphisms_between, categories_isomorphic, functors_isomorphic, Limits, NatTransValue,
    StructureValue,
};

fn nat_trans_isomorphic(a: &NatTransValue, b: &NatTransValue, limits: &Limits) -> bool {
    let src_isos = match all_isomorphisms_between(
        &a.source_fun.source,
        &b.source_fun.source,
        limits,
    ) {
        Ok(v) => v,
        Err(_) => return false,
    };
    if src_isos.is_empty() {
        return false;
    }
    let tgt_isos = match all_isomorphisms_between(
        &a.source_fun.target,
        &b.source_fun.target,
        limits,
    ) {
        Ok(v) => v,
        Err(_) => return false,
    };
    for sigma in &src_isos {
        for tau in &tgt_isos {
            // both functor squares commute
            let fa_t = a.source_fun.then(tau);
            let fb_s = sigma.then(&b.source_fun);
            let ga_t = a.target_fun.then(tau);
            let gb_s = sigma.then(&b.target_fun);
            let squares = match (fa_t, fb_s, ga_t, gb_s) {
                (Some(w), Some(x), Some(y), Some(z)) => {
                    w.structurally_equal(&x) && y.structurally_equal(&z)
                }
                _ => false,
            };
            if !squares {
                continue;
            }
            // components transport: tau(alpha_o) == beta_{sigma(o)}
            let ok = a.source_fun.source.objects.iter().all(|&o| {
                let lhs = a
                    .component(o)
                    .and_then(|c| tau.apply_morphism(c))
                    .and_then(|c| b.source_fun.target.morphism_position(c));
                let rhs = sigma
                    .apply_object(o)
                    .and_then(|so| b.component(so))
                    .and_then(|c| b.source_fun.target.morphism_position(c));
                lhs == rhs && lhs.is_some()
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Dispatches on kind; cross-kind values are never isomorphic.
pub fn structure_isomorphic(a: &StructureValue, b: &StructureValue, limits: &Limits) -> bool {
    match (a, b) {
        (StructureValue::Category { value: x }, StructureValue::Category { value: y }) => {
            matches!(categories_isomorphic(x, y, limits), Ok(Some(_)))
        }
        (StructureValue::Functor { value: x }, StructureValue::Functor { value: y }) => {
            matches!(functors_isomorphic(x, y, limits), Ok(Some(_)))
        }
        (StructureValue::NatTrans { value: x }, StructureValue::NatTrans { value: y }) => {
            nat_trans_isomorphic(x, y, limits)
        }
        (StructureValue::OpaqueCat, StructureValue::OpaqueCat) => true,
        _ => false,
    }
}
