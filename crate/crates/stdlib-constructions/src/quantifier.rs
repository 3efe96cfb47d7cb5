//! The bounded existential quantifier through the Kan pipeline, and NOT.
//!
//! For a predicate functor on the groupoid-chain power with values in the
//! two-object groupoid, the pipeline (1) restricts the source to its
//! discrete variant, (2) changes the target to the arrow category by a
//! lifting with identity structure map, (3) Kan-extends along the
//! projection that discards the quantified coordinate, and (4) includes the
//! result back into the groupoid. The discrete restriction covers every
//! coordinate — a nonconstant functor out of a connected groupoid into the
//! arrow category cannot exist — and the extension step is the colimit-
//! (left-) handed one, which is what realizes "some y": the limit-handed
//! extension computes "every y" instead.

use crate::error::StdlibError;
use crate::numbers::{build_number_category, NumberKind, TruncatedNumberCategory};
use cat_core::{arrow_cat, iso_pair_cat, ExplicitCategory, FunctorValue, Limits};
use cat_engine::{comp, factor_through, kan_ext_left_pointwise, power_category, PowerCategory};
use std::collections::BTreeMap;
use std::sync::Arc;

/// NOT : 2~ -> 2~, swapping the two objects.
pub fn not_functor(sto: &Arc<ExplicitCategory>) -> FunctorValue {
    let object_map: BTreeMap<u32, u32> = [(0u32, 1u32), (1, 0)].into_iter().collect();
    let morphism_map: BTreeMap<u32, u32> = sto
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                sto.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let f = FunctorValue::new(sto.clone(), sto.clone(), object_map, morphism_map);
    debug_assert!(f.is_valid());
    f
}

/// The object-identity inclusion 2 -> 2~.
pub fn two_inclusion() -> FunctorValue {
    let two = Arc::new(arrow_cat());
    let sto = Arc::new(iso_pair_cat());
    let object_map: BTreeMap<u32, u32> = [(0u32, 0u32), (1, 1)].into_iter().collect();
    let morphism_map: BTreeMap<u32, u32> = two
        .morphisms
        .iter()
        .map(|m| (m.id, sto.hom(m.src, m.tgt)[0]))
        .collect();
    FunctorValue::new(two, sto, object_map, morphism_map)
}

/// A predicate functor on the (n+1)-fold groupoid-chain power with values
/// in the two-object groupoid, from a plain closure.
pub fn predicate_functor(
    base: &TruncatedNumberCategory,
    power: &PowerCategory,
    p: impl Fn(&[usize]) -> bool,
) -> FunctorValue {
    let sto = Arc::new(iso_pair_cat());
    let object_map: BTreeMap<u32, u32> = power
        .object_tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| {
            let xs: Vec<usize> = tuple.iter().map(|&o| o as usize).collect();
            (i as u32, p(&xs) as u32)
        })
        .collect();
    let morphism_map: BTreeMap<u32, u32> = power
        .category
        .morphisms
        .iter()
        .map(|m| (m.id, sto.hom(object_map[&m.src], object_map[&m.tgt])[0]))
        .collect();
    let _ = base;
    let f = FunctorValue::new(power.category.clone(), sto, object_map, morphism_map);
    debug_assert!(f.is_valid());
    f
}

/// The existential quantifier over the last coordinate. `psi` is a
/// predicate on the (n+1)-fold power; the result is a predicate on the
/// n-fold power with value 1 at x iff some y below the bound makes psi
/// true. Computed by the four-step pipeline and meant to be cross-checked
/// against a direct scan by callers.
pub fn exists_quantifier(
    psi: &FunctorValue,
    base: &TruncatedNumberCategory,
    power_n1: &PowerCategory,
    n: usize,
    limits: &Limits,
) -> Result<FunctorValue, StdlibError> {
    let bound = base.bound;
    let scratch = Limits::relaxed();

    // step 1: restrict the source to the discrete power
    let disc = build_number_category(NumberKind::Discrete, bound, &scratch)?;
    let disc_n1 = power_category(&disc.category, n + 1, &scratch)?;
    let disc_n = power_category(&disc.category, n, &scratch)?;
    let include: BTreeMap<u32, u32> = (0..disc_n1.object_tuples.len() as u32)
        .map(|i| (i, i))
        .collect();
    let inc_mor: BTreeMap<u32, u32> = disc_n1
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                power_n1.category.identity_of(m.src).unwrap(),
            )
        })
        .collect();
    let inc_power = FunctorValue::new(
        disc_n1.category.clone(),
        power_n1.category.clone(),
        include,
        inc_mor,
    );
    let psi_restricted = comp(&inc_power, psi)?;

    // step 2: change the target to the arrow category by a lifting with
    // identity structure map (a strict factorisation through 2 -> 2~)
    let inc2 = two_inclusion();
    let psi_hat = factor_through(&inc2, &psi_restricted).ok_or_else(|| {
        cat_engine::EngineError::invalid("discrete predicate must factor through the arrow category")
    })?;

    // step 3: left Kan extension along the projection discarding the
    // quantified coordinate (the colimit-handed extension computes "some")
    let proj_objects: BTreeMap<u32, u32> = disc_n1
        .object_tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| {
            let prefix = &tuple[..n];
            (i as u32, disc_n.object_index(prefix).unwrap())
        })
        .collect();
    let proj_morphisms: BTreeMap<u32, u32> = disc_n1
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                disc_n.category.identity_of(proj_objects[&m.src]).unwrap(),
            )
        })
        .collect();
    let proj = FunctorValue::new(
        disc_n1.category.clone(),
        disc_n.category.clone(),
        proj_objects,
        proj_morphisms,
    );
    let pair = kan_ext_left_pointwise(&proj, &psi_hat, &scratch)?;
    let phi_hat = pair.functor;

    // step 4: include back into the groupoid on the full power
    let power_n = power_category(&base.category, n, &scratch)?;
    let sto = psi.target.clone();
    let object_map: BTreeMap<u32, u32> = power_n
        .object_tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| {
            let idx = disc_n.object_index(tuple).unwrap();
            (i as u32, phi_hat.apply_object(idx).unwrap())
        })
        .collect();
    let morphism_map: BTreeMap<u32, u32> = power_n
        .category
        .morphisms
        .iter()
        .map(|m| (m.id, sto.hom(object_map[&m.src], object_map[&m.tgt])[0]))
        .collect();
    let phi = FunctorValue::new(power_n.category.clone(), sto, object_map, morphism_map);
    debug_assert!(phi.is_valid());
    let _ = limits;
    Ok(phi)
}

/// The universal quantifier as NOT . exists . NOT.
pub fn forall_quantifier(
    psi: &FunctorValue,
    base: &TruncatedNumberCategory,
    power_n1: &PowerCategory,
    n: usize,
    limits: &Limits,
) -> Result<FunctorValue, StdlibError> {
    let not = not_functor(&psi.target);
    let negated = comp(psi, &not)?;
    let exists = exists_quantifier(&negated, base, power_n1, n, limits)?;
    let not_out = not_functor(&exists.target);
    Ok(comp(&exists, &not_out)?)
}
