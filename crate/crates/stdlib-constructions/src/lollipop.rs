//! Lollipop categories and the eventual-periodicity factoring test.
//!
//! The lollipop L(m, n) is the thin category generated by the tail
//! 0 -> 1 -> ... -> m and the cycle m -> m+1 -> ... -> n-1 -> m; the cycle
//! objects are mutually isomorphic. A sequence functor factors through the
//! canonical projection from the chain exactly when it is eventually
//! periodic with preperiod at most m and period dividing n - m.

use crate::error::StdlibError;
use crate::numbers::TruncatedNumberCategory;
use cat_core::{thin_category, ExplicitCategory, FunctorValue, Limits};
use cat_engine::{comp, EngineError};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Builds L(m, n) for 0 <= m < n: objects 0..n, edges k -> k+1 for
/// k < n-1 and the cycle-closing edge n-1 -> m.
pub fn lollipop(m: usize, n: usize, limits: &Limits) -> Result<ExplicitCategory, StdlibError> {
    assert!(m < n, "lollipop needs 0 <= m < n");
    // reachability closure over the tail-plus-cycle edge set
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|k| (k, k + 1)).collect();
    edges.push((n - 1, m));
    for _ in 0..n {
        for &(a, b) in &edges {
            for c in 0..n {
                if reach[b][c] {
                    reach[a][c] = true;
                }
            }
        }
    }
    let cat = thin_category(n, |a, b| reach[a][b]);
    limits
        .check_category(cat.object_count(), cat.morphism_count())
        .map_err(EngineError::from)?;
    Ok(cat)
}

/// The canonical projection from the truncated chain onto the lollipop:
/// identity on the first n objects, then around the cycle.
pub fn lollipop_projection(
    chain: &TruncatedNumberCategory,
    lollipop_cat: &Arc<ExplicitCategory>,
    m: usize,
    n: usize,
) -> FunctorValue {
    let wrap = |k: usize| -> u32 {
        if k < n {
            k as u32
        } else {
            (m + (k - m) % (n - m)) as u32
        }
    };
    let object_map: BTreeMap<u32, u32> = chain
        .category
        .objects
        .iter()
        .map(|&o| (o, wrap(o as usize)))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = chain
        .category
        .morphisms
        .iter()
        .map(|mor| {
            (
                mor.id,
                lollipop_cat.hom(object_map[&mor.src], object_map[&mor.tgt])[0],
            )
        })
        .collect();
    let f = FunctorValue::new(
        chain.category.clone(),
        lollipop_cat.clone(),
        object_map,
        morphism_map,
    );
    debug_assert!(f.is_valid());
    f
}

/// Tests whether the sequence functor r : chain -> 2~ factors through the
/// lollipop projection. When the lollipop extends past the data (n greater
/// than the bound) no constraint remains and the test is vacuously true.
pub fn rational_factor_test(
    r: &FunctorValue,
    m: usize,
    n: usize,
    chain: &TruncatedNumberCategory,
    limits: &Limits,
) -> Result<bool, StdlibError> {
    assert!(m < n, "lollipop needs 0 <= m < n");
    if n > chain.bound {
        return Ok(true);
    }
    let lp = Arc::new(lollipop(m, n, limits)?);
    let proj = lollipop_projection(chain, &lp, m, n);
    // the candidate factor is forced on the projection's image, which is
    // everything; build it and compare the composite
    let object_map: BTreeMap<u32, u32> = lp
        .objects
        .iter()
        .map(|&o| (o, r.apply_object(o).expect("within data")))
        .collect();
    let sto = r.target.clone();
    let morphism_map: BTreeMap<u32, u32> = lp
        .morphisms
        .iter()
        .map(|mor| {
            (
                mor.id,
                sto.hom(object_map[&mor.src], object_map[&mor.tgt])[0],
            )
        })
        .collect();
    let g = FunctorValue::new(lp.clone(), sto, object_map, morphism_map);
    let composite = comp(&proj, &g)?;
    Ok(composite.structurally_equal(r))
}

/// The direct eventual-periodicity scan used as the oracle.
pub fn periodicity_scan(bits: &[u8], m: usize, n: usize) -> bool {
    let period = n - m;
    (0..bits.len()).all(|k| {
        if k < n {
            true
        } else {
            let folded = m + (k - m) % period;
            bits[k] == bits[folded]
        }
    })
}
