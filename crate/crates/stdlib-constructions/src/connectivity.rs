//! Discreteness and connectedness tests, implemented by their categorical
//! characterizations: a category is discrete when the evaluation functor
//! from its arrow category induced by the source pointer is an isomorphism,
//! and connected when there are exactly two functors into the discrete
//! pair. Both are cross-checked against direct graph criteria in tests.

use crate::error::StdlibError;
use cat_core::{discrete_cat, source_functor, ExplicitCategory, FunctorValue, Limits};
use cat_engine::{all_functors, pow1};
use std::sync::Arc;

/// Discrete iff the induced functor C^2 -> C^1 is an isomorphism of
/// categories (a bijective functor).
pub fn is_discrete(c: &Arc<ExplicitCategory>, limits: &Limits) -> Result<bool, StdlibError> {
    let s = source_functor();
    let id_c = FunctorValue::identity(c.clone());
    let induced = pow1(&s, &id_c, limits)?;
    Ok(induced.is_bijective())
}

/// Connected iff there are exactly two functors into the discrete pair
/// (equivalently, the power of the discrete pair by C is the discrete pair
/// again). The empty category has one such functor and counts as not
/// connected.
pub fn is_connected(c: &Arc<ExplicitCategory>, limits: &Limits) -> Result<bool, StdlibError> {
    let pair = Arc::new(discrete_cat(2));
    limits
        .check_category(c.object_count(), c.morphism_count())
        .map_err(cat_engine::EngineError::from)?;
    let functors = all_functors(c, &pair, limits);
    Ok(functors.len() == 2)
}

/// Direct graph criterion for discreteness: only identities.
pub fn is_discrete_by_graph(c: &ExplicitCategory) -> bool {
    c.morphisms.iter().all(|m| c.is_identity(m.id))
}

/// Direct graph criterion for connectedness: nonempty and spanned by the
/// undirected reachability of nonidentity arrows.
pub fn is_connected_by_graph(c: &ExplicitCategory) -> bool {
    let n = c.object_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        let here = c.objects[i];
        for m in &c.morphisms {
            let other = if m.src == here {
                m.tgt
            } else if m.tgt == here {
                m.src
            } else {
                continue;
            };
            let j = c.object_position(other).unwrap();
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|b| b)
}
