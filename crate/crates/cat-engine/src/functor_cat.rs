//! Enumeration of functors and natural transformations, and the functor
//! category Pow_0 / induced functor Pow_1 built from them.

use crate::basic::comp;
use crate::error::EngineError;
use cat_core::{ExplicitCategory, FunctorValue, Limits, Morphism, NatTransValue};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Every functor `a -> b`, enumerated by object maps in lexicographic order
/// and then by consistent morphism maps. The order is deterministic, which
/// fixes the object numbering of every functor category. Object images are
/// assigned one at a time, pruning as soon as some arrow of `a` has no
/// possible image between the chosen endpoints.
pub fn all_functors(
    a: &Arc<ExplicitCategory>,
    b: &Arc<ExplicitCategory>,
    _limits: &Limits,
) -> Vec<FunctorValue> {
    let mut out = Vec::new();
    let n = a.object_count();
    if b.object_count() == 0 {
        if n == 0 {
            out.push(FunctorValue::new(
                a.clone(),
                b.clone(),
                BTreeMap::new(),
                BTreeMap::new(),
            ));
        }
        return out;
    }
    let mut obj_choice = vec![0usize; n];
    assign_objects(a, b, 0, &mut obj_choice, &mut out);
    out
}

fn assign_objects(
    a: &Arc<ExplicitCategory>,
    b: &Arc<ExplicitCategory>,
    i: usize,
    obj_choice: &mut Vec<usize>,
    out: &mut Vec<FunctorValue>,
) {
    if i == a.object_count() {
        extend_morphisms(a, b, obj_choice, out);
        return;
    }
    'cand: for cand in 0..b.object_count() {
        obj_choice[i] = cand;
        // every arrow between already-placed objects needs a hom to land in
        for m in &a.morphisms {
            let sp = a.object_position(m.src).unwrap();
            let tp = a.object_position(m.tgt).unwrap();
            if sp > i || tp > i {
                continue;
            }
            let bs = b.objects[obj_choice[sp]];
            let bt = b.objects[obj_choice[tp]];
            if b.hom(bs, bt).is_empty() {
                continue 'cand;
            }
        }
        assign_objects(a, b, i + 1, obj_choice, out);
    }
}

fn extend_morphisms(
    a: &Arc<ExplicitCategory>,
    b: &Arc<ExplicitCategory>,
    obj_choice: &[usize],
    out: &mut Vec<FunctorValue>,
) {
    let object_map: BTreeMap<u32, u32> = a
        .objects
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, b.objects[obj_choice[i]]))
        .collect();
    // identities are forced; assign the rest by backtracking
    let nonid: Vec<&Morphism> = a
        .morphisms
        .iter()
        .filter(|m| !a.is_identity(m.id))
        .collect();
    let mut assignment: BTreeMap<u32, u32> = a
        .morphisms
        .iter()
        .filter(|m| a.is_identity(m.id))
        .map(|m| {
            let o = m.src;
            (m.id, b.identity_of(object_map[&o]).unwrap())
        })
        .collect();
    backtrack_morphisms(a, b, &object_map, &nonid, 0, &mut assignment, out);
}

fn backtrack_morphisms(
    a: &Arc<ExplicitCategory>,
    b: &Arc<ExplicitCategory>,
    object_map: &BTreeMap<u32, u32>,
    nonid: &[&Morphism],
    k: usize,
    assignment: &mut BTreeMap<u32, u32>,
    out: &mut Vec<FunctorValue>,
) {
    if k == nonid.len() {
        let f = FunctorValue::new(
            a.clone(),
            b.clone(),
            object_map.clone(),
            assignment.clone(),
        );
        if composition_preserved(a, b, assignment) {
            out.push(f);
        }
        return;
    }
    let m = nonid[k];
    for cand in b.hom(object_map[&m.src], object_map[&m.tgt]) {
        assignment.insert(m.id, cand);
        if partial_composition_ok(a, b, assignment, m.id) {
            backtrack_morphisms(a, b, object_map, nonid, k + 1, assignment, out);
        }
        assignment.remove(&m.id);
    }
}

/// Checks only composition equations in which every participant is already
/// assigned; full preservation is re-checked at the end.
fn partial_composition_ok(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    assignment: &BTreeMap<u32, u32>,
    just_set: u32,
) -> bool {
    for (&(f, g), &h) in &a.compose {
        if f != just_set && g != just_set && h != just_set {
            continue;
        }
        if let (Some(&bf), Some(&bg), Some(&bh)) =
            (assignment.get(&f), assignment.get(&g), assignment.get(&h))
        {
            if b.composed(bf, bg) != Some(bh) {
                return false;
            }
        }
    }
    true
}

fn composition_preserved(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    assignment: &BTreeMap<u32, u32>,
) -> bool {
    a.compose.iter().all(|(&(f, g), &h)| {
        match (assignment.get(&f), assignment.get(&g), assignment.get(&h)) {
            (Some(&bf), Some(&bg), Some(&bh)) => b.composed(bf, bg) == Some(bh),
            _ => false,
        }
    })
}

/// Every natural transformation between two parallel functors, in
/// lexicographic component order.
pub fn all_nat_trans(f: &FunctorValue, g: &FunctorValue) -> Vec<NatTransValue> {
    let mut out = Vec::new();
    if !f.is_parallel_to(g) {
        return out;
    }
    let cat_a = &f.source;
    let cat_b = &f.target;
    let objs: Vec<u32> = cat_a.objects.clone();
    let mut components: BTreeMap<u32, u32> = BTreeMap::new();
    fn rec(
        objs: &[u32],
        k: usize,
        f: &FunctorValue,
        g: &FunctorValue,
        cat_a: &ExplicitCategory,
        cat_b: &ExplicitCategory,
        components: &mut BTreeMap<u32, u32>,
        out: &mut Vec<NatTransValue>,
    ) {
        if k == objs.len() {
            out.push(NatTransValue::new(f.clone(), g.clone(), components.clone()));
            return;
        }
        let o = objs[k];
        let from = f.apply_object(o).unwrap();
        let to = g.apply_object(o).unwrap();
        'cand: for cand in cat_b.hom(from, to) {
            components.insert(o, cand);
            // naturality against already fixed components
            for m in &cat_a.morphisms {
                if let (Some(&cs), Some(&ct)) =
                    (components.get(&m.src), components.get(&m.tgt))
                {
                    let fm = f.apply_morphism(m.id).unwrap();
                    let gm = g.apply_morphism(m.id).unwrap();
                    if cat_b.composed(fm, ct) != cat_b.composed(cs, gm)
                        || cat_b.composed(fm, ct).is_none()
                    {
                        components.remove(&o);
                        continue 'cand;
                    }
                }
            }
            rec(objs, k + 1, f, g, cat_a, cat_b, components, out);
            components.remove(&o);
        }
    }
    rec(
        &objs,
        0,
        f,
        g,
        cat_a,
        cat_b,
        &mut components,
        &mut out,
    );
    out
}

/// The category of all functors `a -> b` and all natural transformations
/// between them, with the correspondence lists kept alongside the table.
pub struct FunctorCategory {
    pub category: Arc<ExplicitCategory>,
    pub functors: Vec<FunctorValue>,
    pub transformations: Vec<NatTransValue>,
    /// morphism id -> (source functor index, target functor index)
    pub nt_endpoints: Vec<(u32, u32)>,
}

impl FunctorCategory {
    pub fn functor_index(&self, f: &FunctorValue) -> Option<u32> {
        self.functors
            .iter()
            .position(|h| h.structurally_equal(f))
            .map(|i| i as u32)
    }

    pub fn nt_index(&self, n: &NatTransValue) -> Option<u32> {
        self.transformations
            .iter()
            .position(|m| m.structurally_equal(n))
            .map(|i| i as u32)
    }
}

/// Pow_0: the functor category `b ^ a`.
pub fn functor_category(
    a: &Arc<ExplicitCategory>,
    b: &Arc<ExplicitCategory>,
    limits: &Limits,
) -> Result<FunctorCategory, EngineError> {
    let functors = all_functors(a, b, limits);
    limits.check_category(functors.len(), functors.len())?;

    let mut transformations = Vec::new();
    let mut nt_endpoints = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for nt in all_nat_trans(f, g) {
                transformations.push(nt);
                nt_endpoints.push((i as u32, j as u32));
            }
        }
    }
    limits.check_category(functors.len(), transformations.len())?;

    let objects: Vec<u32> = (0..functors.len() as u32).collect();
    let morphisms: Vec<Morphism> = nt_endpoints
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| Morphism {
            id: k as u32,
            src: i,
            tgt: j,
        })
        .collect();

    // identity of functor i is its identity transformation
    let mut identities = BTreeMap::new();
    for (i, f) in functors.iter().enumerate() {
        let idn = NatTransValue::identity(f);
        let pos = transformations
            .iter()
            .position(|n| n.structurally_equal(&idn))
            .expect("identity transformation enumerated");
        identities.insert(i as u32, pos as u32);
    }

    // composition = vertical composition, located by structural equality
    let mut compose = BTreeMap::new();
    for (p, np) in transformations.iter().enumerate() {
        for (q, nq) in transformations.iter().enumerate() {
            if nt_endpoints[p].1 != nt_endpoints[q].0 {
                continue;
            }
            let composed = crate::basic::vcomp(np, nq)
                .expect("endpoint-compatible transformations compose");
            let pos = transformations
                .iter()
                .enumerate()
                .position(|(r, n)| {
                    nt_endpoints[r] == (nt_endpoints[p].0, nt_endpoints[q].1)
                        && n.structurally_equal(&composed)
                })
                .expect("vertical composite enumerated");
            compose.insert((p as u32, q as u32), pos as u32);
        }
    }
    let category = Arc::new(ExplicitCategory::from_parts(
        objects, morphisms, identities, compose,
    ));
    Ok(FunctorCategory {
        category,
        functors,
        transformations,
        nt_endpoints,
    })
}

/// Pow_1: for f : A -> B and g : C -> D, the induced functor
/// `C^B -> D^A`, sending h to g.h.f and transformations to their whiskered
/// images.
pub fn pow1(
    f: &FunctorValue,
    g: &FunctorValue,
    limits: &Limits,
) -> Result<FunctorValue, EngineError> {
    let source_fc = functor_category(&f.target, &g.source, limits)?;
    let target_fc = functor_category(&f.source, &g.target, limits)?;

    let mut object_map = BTreeMap::new();
    for (i, h) in source_fc.functors.iter().enumerate() {
        let image = comp(&comp(f, h)?, g)?;
        let j = target_fc
            .functor_index(&image)
            .ok_or_else(|| EngineError::invalid("Pow1: image functor not enumerated"))?;
        object_map.insert(i as u32, j);
    }
    let mut morphism_map = BTreeMap::new();
    for (k, nt) in source_fc.transformations.iter().enumerate() {
        let whiskered = whisker_both(f, nt, g)?;
        let j = target_fc
            .nt_index(&whiskered)
            .ok_or_else(|| EngineError::invalid("Pow1: image transformation not enumerated"))?;
        morphism_map.insert(k as u32, j);
    }
    Ok(FunctorValue::new(
        source_fc.category.clone(),
        target_fc.category.clone(),
        object_map,
        morphism_map,
    ))
}

/// g . nt . f : for nt : h1 => h2 (functors B -> C), the transformation
/// g.h1.f => g.h2.f with component g(nt_{f(x)}) at x.
fn whisker_both(
    f: &FunctorValue,
    nt: &NatTransValue,
    g: &FunctorValue,
) -> Result<NatTransValue, EngineError> {
    let h1 = &nt.source_fun;
    let h2 = &nt.target_fun;
    let src = comp(&comp(f, h1)?, g)?;
    let tgt = comp(&comp(f, h2)?, g)?;
    let mut components = BTreeMap::new();
    for &x in &f.source.objects {
        let fx = f
            .apply_object(x)
            .ok_or_else(|| EngineError::invalid("whisker: object image"))?;
        let fx_t = crate::basic::translate_object(&f.target, &h1.source, fx)
            .ok_or_else(|| EngineError::invalid("whisker: translation"))?;
        let c = nt
            .component(fx_t)
            .ok_or_else(|| EngineError::invalid("whisker: component"))?;
        let c_g = crate::basic::translate_morphism(&h1.target, &g.source, c)
            .ok_or_else(|| EngineError::invalid("whisker: translation"))?;
        let gc = g
            .apply_morphism(c_g)
            .ok_or_else(|| EngineError::invalid("whisker: morphism image"))?;
        components.insert(x, gc);
    }
    Ok(NatTransValue::new(src, tgt, components))
}
