//! Constructible-function machinery over the groupoid chain: the
//! commuting-square check, bounded primitive recursion, and bounded
//! mu-minimization through the pullback subcategory.

use crate::error::StdlibError;
use crate::numbers::{build_number_category, pointer, NumberKind, TruncatedNumberCategory};
use cat_core::{FunctorValue, Limits};
use cat_engine::{comp, power_category, product_category, pullback_categories, PowerCategory};
use std::collections::BTreeMap;

/// The k-fold power of the groupoid chain at the given bound, the domain of
/// k-ary constructible-function functors.
pub fn groupoid_power(
    bound: usize,
    arity: usize,
    limits: &Limits,
) -> Result<(TruncatedNumberCategory, PowerCategory), StdlibError> {
    let base = build_number_category(NumberKind::GroupoidChain, bound, limits)?;
    let power = power_category(&base.category, arity, limits)?;
    Ok((base, power))
}

/// Wraps a plain function table as a functor between groupoid chains. Since
/// source and target are groupoid chains (exactly one morphism between any
/// ordered pair), any object map extends uniquely to a functor.
pub fn function_functor(
    base: &TruncatedNumberCategory,
    power: &PowerCategory,
    f: impl Fn(&[usize]) -> usize,
) -> FunctorValue {
    let bound = base.bound;
    let object_map: BTreeMap<u32, u32> = power
        .object_tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| {
            let xs: Vec<usize> = tuple.iter().map(|&o| o as usize).collect();
            (i as u32, (f(&xs)).min(bound) as u32)
        })
        .collect();
    let morphism_map: BTreeMap<u32, u32> = power
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                base.category.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let fun = FunctorValue::new(
        power.category.clone(),
        base.category.clone(),
        object_map,
        morphism_map,
    );
    debug_assert!(fun.is_valid());
    fun
}

/// The Definition check: F mimics the table iff for every tuple the square
/// built from pointer functors commutes, i.e.
/// `F . (P_{x1} x ... x P_{xk})` equals `P_{f(x)}` up to the canonical
/// isomorphism between 1 and its k-fold power.
pub fn constructible_function_check(
    f_fun: &FunctorValue,
    base: &TruncatedNumberCategory,
    power: &PowerCategory,
    table: &[(Vec<usize>, usize)],
) -> Result<bool, StdlibError> {
    for (xs, y) in table {
        if *y > base.bound {
            // the expected pointer does not exist at this truncation
            return Ok(false);
        }
        let tuple: Vec<u32> = xs.iter().map(|&x| x as u32).collect();
        let idx = match power.object_index(&tuple) {
            Some(i) => i,
            None => return Ok(false),
        };
        // the product of pointers P_{x1} x ... x P_{xk} under 1 = 1^k
        let tuple_pointer = cat_core::pointer_functor(power.category.clone(), idx);
        let lhs = comp(&tuple_pointer, f_fun)?;
        let rhs = pointer(base, *y);
        if !lhs.structurally_equal(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bounded primitive recursion: builds H with H(x, 0) = F(x) and
/// H(x, n+1) = G(x, H(x, n), n+1) for n below the bound. Each step composes
/// the pairing functor x |-> (x, H(x, n), n+1) with G through the engine;
/// the transfinite index attachment of the unbounded construction is
/// replaced by direct assembly at each finite stage.
pub fn primitive_recursion(
    f: &FunctorValue,
    g: &FunctorValue,
    base: &TruncatedNumberCategory,
    arity: usize,
    limits: &Limits,
) -> Result<FunctorValue, StdlibError> {
    let bound = base.bound;
    let power_k = power_category(&base.category, arity, limits)?;
    let power_k1 = power_category(&base.category, arity + 1, limits)?;
    let power_k2 = power_category(&base.category, arity + 2, limits)?;

    // h-table filled stage by stage
    let mut h: BTreeMap<(Vec<u32>, u32), u32> = BTreeMap::new();
    for (i, tuple) in power_k.object_tuples.iter().enumerate() {
        let v = f
            .apply_object(i as u32)
            .expect("base-case functor is total");
        h.insert((tuple.clone(), 0), v);
    }
    for n in 1..=bound as u32 {
        // pairing x |-> (x, H(x, n-1), n), composed with G
        let object_map: BTreeMap<u32, u32> = power_k
            .object_tuples
            .iter()
            .enumerate()
            .map(|(i, tuple)| {
                let prev = h[&(tuple.clone(), n - 1)];
                let mut ext = tuple.clone();
                ext.push(prev);
                ext.push(n.min(bound as u32));
                (i as u32, power_k2.object_index(&ext).expect("tuple exists"))
            })
            .collect();
        let morphism_map: BTreeMap<u32, u32> = power_k
            .category
            .morphisms
            .iter()
            .map(|m| {
                let src_img = object_map[&m.src];
                let tgt_img = object_map[&m.tgt];
                (m.id, power_k2.category.hom(src_img, tgt_img)[0])
            })
            .collect();
        let pairing = FunctorValue::new(
            power_k.category.clone(),
            power_k2.category.clone(),
            object_map,
            morphism_map,
        );
        let step = comp(&pairing, g)?;
        for (i, tuple) in power_k.object_tuples.iter().enumerate() {
            let v = step.apply_object(i as u32).expect("total");
            h.insert((tuple.clone(), n), v);
        }
    }

    // assemble H on the (k+1)-power, recursion index last
    let object_map: BTreeMap<u32, u32> = power_k1
        .object_tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| {
            let (xs, n) = tuple.split_at(arity);
            (i as u32, h[&(xs.to_vec(), n[0])])
        })
        .collect();
    let morphism_map: BTreeMap<u32, u32> = power_k1
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                base.category.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let h_fun = FunctorValue::new(
        power_k1.category.clone(),
        base.category.clone(),
        object_map,
        morphism_map,
    );
    debug_assert!(h_fun.is_valid());
    Ok(h_fun)
}

/// Bounded mu-minimization. Builds the pullback subcategory of pairs with
/// F(x, y) = 0 over the plain chain in the last coordinate, selects the
/// least witness in each fiber, and returns the functor x |-> least y. The
/// least-witness selection stands in for the underdetermined lifting step
/// of the unbounded construction and is oracle-checked by callers.
pub fn mu_minimization(
    f: &FunctorValue,
    base: &TruncatedNumberCategory,
    arity: usize,
    limits: &Limits,
) -> Result<FunctorValue, StdlibError> {
    let bound = base.bound;
    let power_k = power_category(&base.category, arity, limits)?;
    let power_k1 = power_category(&base.category, arity + 1, limits)?;
    let chain = build_number_category(NumberKind::Chain, bound, limits)?;

    // restrict the last coordinate to the chain: domain power_k x chain
    let domain = product_category(&power_k.category, &chain.category, limits)?;
    let object_map: BTreeMap<u32, u32> = domain
        .object_pairs
        .iter()
        .enumerate()
        .map(|(i, &(xs_obj, y_obj))| {
            let mut tuple = power_k.object_tuples[xs_obj as usize].clone();
            tuple.push(y_obj);
            let idx = power_k1.object_index(&tuple).expect("tuple exists");
            (i as u32, f.apply_object(idx).expect("total"))
        })
        .collect();
    let morphism_map: BTreeMap<u32, u32> = domain
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                base.category.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let f_restricted = FunctorValue::new(
        domain.category.clone(),
        base.category.clone(),
        object_map,
        morphism_map,
    );

    // pullback against P_0 carves out the zero set
    let p0 = pointer(base, 0);
    let alpha = pullback_categories(&f_restricted, &p0, limits)?;

    // least witness per fiber
    let mut least: BTreeMap<u32, u32> = BTreeMap::new();
    for &(d_obj, _unit) in &alpha.object_pairs {
        let (xs_obj, y_obj) = domain.object_pairs[d_obj as usize];
        let entry = least.entry(xs_obj).or_insert(y_obj);
        if y_obj < *entry {
            *entry = y_obj;
        }
    }
    for (i, tuple) in power_k.object_tuples.iter().enumerate() {
        if !least.contains_key(&(i as u32)) {
            return Err(StdlibError::NoWitness {
                tuple: tuple.iter().map(|&o| o as usize).collect(),
            });
        }
    }

    let object_map: BTreeMap<u32, u32> = (0..power_k.object_tuples.len() as u32)
        .map(|i| (i, least[&i]))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = power_k
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                base.category.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    let g_fun = FunctorValue::new(
        power_k.category.clone(),
        base.category.clone(),
        object_map,
        morphism_map,
    );
    debug_assert!(g_fun.is_valid());
    Ok(g_fun)
}
