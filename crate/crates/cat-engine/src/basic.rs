//! Single-input operations, compositions, and the plain category
//! combinators: opposites, products, coproducts, pullbacks.

use crate::error::EngineError;
use cat_core::{ExplicitCategory, FunctorValue, Limits, Morphism, NatTransValue};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Opposite category: sources and targets swapped, composition transposed.
/// Object and morphism order is preserved, so `op0(op0(c))` is
/// index-identical to `c`.
pub fn op0(c: &ExplicitCategory) -> ExplicitCategory {
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| Morphism {
            id: m.id,
            src: m.tgt,
            tgt: m.src,
        })
        .collect();
    let compose = c
        .compose
        .iter()
        .map(|(&(f, g), &h)| ((g, f), h))
        .collect();
    ExplicitCategory::from_parts(
        c.objects.clone(),
        morphisms,
        c.identities.clone(),
        compose,
    )
}

/// Opposite functor between the opposite categories; the underlying maps are
/// unchanged.
pub fn op1(f: &FunctorValue) -> FunctorValue {
    FunctorValue::new(
        Arc::new(op0(&f.source)),
        Arc::new(op0(&f.target)),
        f.object_map.clone(),
        f.morphism_map.clone(),
    )
}

/// Opposite of a natural transformation: a transformation F => G between
/// functors A -> B yields G^op => F^op between the opposite functors, with
/// the same component morphisms.
pub fn op_nt(n: &NatTransValue) -> NatTransValue {
    NatTransValue::new(
        op1(&n.target_fun),
        op1(&n.source_fun),
        n.components.clone(),
    )
}

/// Composition of functors, "g after f".
pub fn comp(f: &FunctorValue, g: &FunctorValue) -> Result<FunctorValue, EngineError> {
    f.then(g).ok_or_else(|| {
        EngineError::mismatch(format!(
            "Comp: target of first ({} objects) is not the source of second ({} objects)",
            f.target.object_count(),
            g.source.object_count()
        ))
    })
}

/// Positional translation of an object id between two structurally equal
/// category values with possibly different id spaces.
pub(crate) fn translate_object(
    from: &ExplicitCategory,
    to: &ExplicitCategory,
    obj: u32,
) -> Option<u32> {
    let pos = from.object_position(obj)?;
    to.objects.get(pos).copied()
}

pub(crate) fn translate_morphism(
    from: &ExplicitCategory,
    to: &ExplicitCategory,
    mor: u32,
) -> Option<u32> {
    let pos = from.morphism_position(mor)?;
    to.morphisms.get(pos).map(|m| m.id)
}

/// Vertical composition: components composed objectwise.
pub fn vcomp(a: &NatTransValue, b: &NatTransValue) -> Result<NatTransValue, EngineError> {
    if !a.target_fun.structurally_equal(&b.source_fun) {
        return Err(EngineError::mismatch(
            "Vcomp: target functor of first is not the source functor of second",
        ));
    }
    let cat_b = &a.source_fun.target;
    let mut components = BTreeMap::new();
    for &o in &a.source_fun.source.objects {
        let ca = a
            .component(o)
            .ok_or_else(|| EngineError::invalid("Vcomp: missing component"))?;
        // translate the object into b's source category id space
        let ob = translate_object(&a.source_fun.source, &b.source_fun.source, o)
            .ok_or_else(|| EngineError::invalid("Vcomp: object translation"))?;
        let cb_raw = b
            .component(ob)
            .ok_or_else(|| EngineError::invalid("Vcomp: missing component"))?;
        let cb = translate_morphism(&b.source_fun.target, cat_b, cb_raw)
            .ok_or_else(|| EngineError::invalid("Vcomp: morphism translation"))?;
        let composed = cat_b
            .composed(ca, cb)
            .ok_or_else(|| EngineError::invalid("Vcomp: components not composable"))?;
        components.insert(o, composed);
    }
    Ok(NatTransValue::new(
        a.source_fun.clone(),
        b.target_fun.clone(),
        components,
    ))
}

/// Horizontal composition of a : F => G (between functors A -> B) and
/// b : H => K (between functors B -> C); the result runs H.F => K.G.
pub fn hcomp(a: &NatTransValue, b: &NatTransValue) -> Result<NatTransValue, EngineError> {
    if !a
        .source_fun
        .target
        .structurally_equal(&b.source_fun.source)
    {
        return Err(EngineError::mismatch(
            "Hcomp: middle categories do not chain",
        ));
    }
    let f = &a.source_fun;
    let g = &a.target_fun;
    let h = &b.source_fun;
    let k = &b.target_fun;
    let hf = comp(f, h)?;
    let kg = comp(g, k)?;
    let cat_c = &h.target;
    let mut components = BTreeMap::new();
    for &x in &f.source.objects {
        // b's component at F(x), then K applied to a's component at x
        let fx = f
            .apply_object(x)
            .ok_or_else(|| EngineError::invalid("Hcomp: object image"))?;
        let fx_in_b = translate_object(&f.target, &h.source, fx)
            .ok_or_else(|| EngineError::invalid("Hcomp: object translation"))?;
        let b_fx = b
            .component(fx_in_b)
            .ok_or_else(|| EngineError::invalid("Hcomp: missing component"))?;
        let ax = a
            .component(x)
            .ok_or_else(|| EngineError::invalid("Hcomp: missing component"))?;
        let ax_in_k = translate_morphism(&f.target, &k.source, ax)
            .ok_or_else(|| EngineError::invalid("Hcomp: morphism translation"))?;
        let k_ax = k
            .apply_morphism(ax_in_k)
            .ok_or_else(|| EngineError::invalid("Hcomp: morphism image"))?;
        let composed = cat_c
            .composed(b_fx, k_ax)
            .ok_or_else(|| EngineError::invalid("Hcomp: interchange composite undefined"))?;
        components.insert(x, composed);
    }
    Ok(NatTransValue::new(hf, kg, components))
}

/// A product category together with pairings and projections.
pub struct ProductCategory {
    pub category: Arc<ExplicitCategory>,
    pub object_pairs: Vec<(u32, u32)>,
    pub morphism_pairs: Vec<(u32, u32)>,
    pub proj_left: FunctorValue,
    pub proj_right: FunctorValue,
}

pub fn product_category(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    limits: &Limits,
) -> Result<ProductCategory, EngineError> {
    let n_obj = a.object_count() * b.object_count();
    let n_mor = a.morphism_count() * b.morphism_count();
    limits.check_category(n_obj, n_mor)?;

    let mut object_pairs = Vec::with_capacity(n_obj);
    for &oa in &a.objects {
        for &ob in &b.objects {
            object_pairs.push((oa, ob));
        }
    }
    let obj_index: BTreeMap<(u32, u32), u32> = object_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();

    let mut morphism_pairs = Vec::with_capacity(n_mor);
    for ma in &a.morphisms {
        for mb in &b.morphisms {
            morphism_pairs.push((ma.id, mb.id));
        }
    }
    let mor_index: BTreeMap<(u32, u32), u32> = morphism_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();

    let objects: Vec<u32> = (0..n_obj as u32).collect();
    let morphisms: Vec<Morphism> = morphism_pairs
        .iter()
        .enumerate()
        .map(|(i, &(ma, mb))| {
            let ra = a.morphism(ma).unwrap();
            let rb = b.morphism(mb).unwrap();
            Morphism {
                id: i as u32,
                src: obj_index[&(ra.src, rb.src)],
                tgt: obj_index[&(ra.tgt, rb.tgt)],
            }
        })
        .collect();
    let identities: BTreeMap<u32, u32> = object_pairs
        .iter()
        .enumerate()
        .map(|(i, &(oa, ob))| {
            (
                i as u32,
                mor_index[&(a.identity_of(oa).unwrap(), b.identity_of(ob).unwrap())],
            )
        })
        .collect();
    let mut compose = BTreeMap::new();
    for (i, &(fa, fb)) in morphism_pairs.iter().enumerate() {
        for (j, &(ga, gb)) in morphism_pairs.iter().enumerate() {
            if let (Some(ha), Some(hb)) = (a.composed(fa, ga), b.composed(fb, gb)) {
                compose.insert((i as u32, j as u32), mor_index[&(ha, hb)]);
            }
        }
    }
    let category = Arc::new(ExplicitCategory::from_parts(
        objects, morphisms, identities, compose,
    ));

    let proj_left = FunctorValue::new(
        category.clone(),
        Arc::new(a.clone()),
        object_pairs
            .iter()
            .enumerate()
            .map(|(i, &(oa, _))| (i as u32, oa))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(i, &(ma, _))| (i as u32, ma))
            .collect(),
    );
    let proj_right = FunctorValue::new(
        category.clone(),
        Arc::new(b.clone()),
        object_pairs
            .iter()
            .enumerate()
            .map(|(i, &(_, ob))| (i as u32, ob))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(i, &(_, mb))| (i as u32, mb))
            .collect(),
    );
    Ok(ProductCategory {
        category,
        object_pairs,
        morphism_pairs,
        proj_left,
        proj_right,
    })
}

/// The k-fold power of a category, with tuple bookkeeping and projections.
pub struct PowerCategory {
    pub category: Arc<ExplicitCategory>,
    pub object_tuples: Vec<Vec<u32>>,
    pub morphism_tuples: Vec<Vec<u32>>,
    pub projections: Vec<FunctorValue>,
}

impl PowerCategory {
    pub fn object_index(&self, tuple: &[u32]) -> Option<u32> {
        self.object_tuples
            .iter()
            .position(|t| t.as_slice() == tuple)
            .map(|i| i as u32)
    }
}

fn tuples(parts: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for t in &out {
            for &p in parts {
                let mut t2 = t.clone();
                t2.push(p);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

pub fn power_category(
    base: &ExplicitCategory,
    k: usize,
    limits: &Limits,
) -> Result<PowerCategory, EngineError> {
    let n_obj = base.object_count().pow(k as u32).max(1);
    let n_mor = base.morphism_count().pow(k as u32).max(1);
    limits.check_category(n_obj, n_mor)?;

    let object_tuples = tuples(&base.objects, k);
    let morphism_tuples = tuples(
        &base.morphisms.iter().map(|m| m.id).collect::<Vec<_>>(),
        k,
    );
    let obj_index: BTreeMap<&[u32], u32> = object_tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i as u32))
        .collect();
    let mor_index: BTreeMap<&[u32], u32> = morphism_tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i as u32))
        .collect();

    let objects: Vec<u32> = (0..object_tuples.len() as u32).collect();
    let morphisms: Vec<Morphism> = morphism_tuples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let srcs: Vec<u32> = t.iter().map(|&m| base.morphism(m).unwrap().src).collect();
            let tgts: Vec<u32> = t.iter().map(|&m| base.morphism(m).unwrap().tgt).collect();
            Morphism {
                id: i as u32,
                src: obj_index[srcs.as_slice()],
                tgt: obj_index[tgts.as_slice()],
            }
        })
        .collect();
    let identities: BTreeMap<u32, u32> = object_tuples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let ids: Vec<u32> = t.iter().map(|&o| base.identity_of(o).unwrap()).collect();
            (i as u32, mor_index[ids.as_slice()])
        })
        .collect();
    let mut compose = BTreeMap::new();
    for (i, ft) in morphism_tuples.iter().enumerate() {
        'next: for (j, gt) in morphism_tuples.iter().enumerate() {
            let mut ht = Vec::with_capacity(k);
            for (&f, &g) in ft.iter().zip(gt) {
                match base.composed(f, g) {
                    Some(h) => ht.push(h),
                    None => continue 'next,
                }
            }
            compose.insert((i as u32, j as u32), mor_index[ht.as_slice()]);
        }
    }
    let category = Arc::new(ExplicitCategory::from_parts(
        objects, morphisms, identities, compose,
    ));
    let projections = (0..k)
        .map(|axis| {
            FunctorValue::new(
                category.clone(),
                Arc::new(base.clone()),
                object_tuples
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (i as u32, t[axis]))
                    .collect(),
                morphism_tuples
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (i as u32, t[axis]))
                    .collect(),
            )
        })
        .collect();
    Ok(PowerCategory {
        category,
        object_tuples,
        morphism_tuples,
        projections,
    })
}

/// Disjoint union with injections.
pub struct CoproductCategory {
    pub category: Arc<ExplicitCategory>,
    pub inj_left: FunctorValue,
    pub inj_right: FunctorValue,
}

pub fn coproduct_category(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    limits: &Limits,
) -> Result<CoproductCategory, EngineError> {
    let n_obj = a.object_count() + b.object_count();
    let n_mor = a.morphism_count() + b.morphism_count();
    limits.check_category(n_obj, n_mor)?;
    let obj_off = a.object_count() as u32;
    let mor_off = a.morphism_count() as u32;

    // renumber: a's objects keep positions 0.., b's follow
    let a_obj_new: BTreeMap<u32, u32> = a
        .objects
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, i as u32))
        .collect();
    let b_obj_new: BTreeMap<u32, u32> = b
        .objects
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, i as u32 + obj_off))
        .collect();
    let a_mor_new: BTreeMap<u32, u32> = a
        .morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.id, i as u32))
        .collect();
    let b_mor_new: BTreeMap<u32, u32> = b
        .morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.id, i as u32 + mor_off))
        .collect();

    let objects: Vec<u32> = (0..n_obj as u32).collect();
    let mut morphisms: Vec<Morphism> = a
        .morphisms
        .iter()
        .map(|m| Morphism {
            id: a_mor_new[&m.id],
            src: a_obj_new[&m.src],
            tgt: a_obj_new[&m.tgt],
        })
        .collect();
    morphisms.extend(b.morphisms.iter().map(|m| Morphism {
        id: b_mor_new[&m.id],
        src: b_obj_new[&m.src],
        tgt: b_obj_new[&m.tgt],
    }));
    let mut identities = BTreeMap::new();
    for (&o, &m) in &a.identities {
        identities.insert(a_obj_new[&o], a_mor_new[&m]);
    }
    for (&o, &m) in &b.identities {
        identities.insert(b_obj_new[&o], b_mor_new[&m]);
    }
    let mut compose = BTreeMap::new();
    for (&(f, g), &h) in &a.compose {
        compose.insert((a_mor_new[&f], a_mor_new[&g]), a_mor_new[&h]);
    }
    for (&(f, g), &h) in &b.compose {
        compose.insert((b_mor_new[&f], b_mor_new[&g]), b_mor_new[&h]);
    }
    let category = Arc::new(ExplicitCategory::from_parts(
        objects, morphisms, identities, compose,
    ));
    let inj_left = FunctorValue::new(
        Arc::new(a.clone()),
        category.clone(),
        a_obj_new.clone(),
        a_mor_new.clone(),
    );
    let inj_right = FunctorValue::new(
        Arc::new(b.clone()),
        category.clone(),
        b_obj_new.clone(),
        b_mor_new.clone(),
    );
    Ok(CoproductCategory {
        category,
        inj_left,
        inj_right,
    })
}

/// Strict pullback of categories along two functors with a common target.
pub struct PullbackCategory {
    pub category: Arc<ExplicitCategory>,
    pub object_pairs: Vec<(u32, u32)>,
    pub morphism_pairs: Vec<(u32, u32)>,
    pub proj_left: FunctorValue,
    pub proj_right: FunctorValue,
}

pub fn pullback_categories(
    f: &FunctorValue,
    g: &FunctorValue,
    limits: &Limits,
) -> Result<PullbackCategory, EngineError> {
    if !f.target.structurally_equal(&g.target) {
        return Err(EngineError::mismatch("pullback: targets differ"));
    }
    let a = &f.source;
    let b = &g.source;
    // compare images positionally in the respective target categories
    let f_obj_pos = |o: u32| {
        f.apply_object(o)
            .and_then(|i| f.target.object_position(i))
    };
    let g_obj_pos = |o: u32| {
        g.apply_object(o)
            .and_then(|i| g.target.object_position(i))
    };
    let f_mor_pos = |m: u32| {
        f.apply_morphism(m)
            .and_then(|i| f.target.morphism_position(i))
    };
    let g_mor_pos = |m: u32| {
        g.apply_morphism(m)
            .and_then(|i| g.target.morphism_position(i))
    };

    let mut object_pairs = Vec::new();
    for &oa in &a.objects {
        for &ob in &b.objects {
            if f_obj_pos(oa) == g_obj_pos(ob) && f_obj_pos(oa).is_some() {
                object_pairs.push((oa, ob));
            }
        }
    }
    let mut morphism_pairs = Vec::new();
    for ma in &a.morphisms {
        for mb in &b.morphisms {
            if f_mor_pos(ma.id) == g_mor_pos(mb.id) && f_mor_pos(ma.id).is_some() {
                morphism_pairs.push((ma.id, mb.id));
            }
        }
    }
    limits.check_category(object_pairs.len(), morphism_pairs.len())?;

    let obj_index: BTreeMap<(u32, u32), u32> = object_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let mor_index: BTreeMap<(u32, u32), u32> = morphism_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let objects: Vec<u32> = (0..object_pairs.len() as u32).collect();
    let morphisms: Vec<Morphism> = morphism_pairs
        .iter()
        .enumerate()
        .map(|(i, &(ma, mb))| {
            let ra = a.morphism(ma).unwrap();
            let rb = b.morphism(mb).unwrap();
            Morphism {
                id: i as u32,
                src: obj_index[&(ra.src, rb.src)],
                tgt: obj_index[&(ra.tgt, rb.tgt)],
            }
        })
        .collect();
    let identities: BTreeMap<u32, u32> = object_pairs
        .iter()
        .enumerate()
        .map(|(i, &(oa, ob))| {
            (
                i as u32,
                mor_index[&(a.identity_of(oa).unwrap(), b.identity_of(ob).unwrap())],
            )
        })
        .collect();
    let mut compose = BTreeMap::new();
    for (i, &(fa, fb)) in morphism_pairs.iter().enumerate() {
        for (j, &(ga, gb)) in morphism_pairs.iter().enumerate() {
            if let (Some(ha), Some(hb)) = (a.composed(fa, ga), b.composed(fb, gb)) {
                if let Some(&h) = mor_index.get(&(ha, hb)) {
                    compose.insert((i as u32, j as u32), h);
                }
            }
        }
    }
    let category = Arc::new(ExplicitCategory::from_parts(
        objects, morphisms, identities, compose,
    ));
    let proj_left = FunctorValue::new(
        category.clone(),
        f.source.clone(),
        object_pairs
            .iter()
            .enumerate()
            .map(|(i, &(oa, _))| (i as u32, oa))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(i, &(ma, _))| (i as u32, ma))
            .collect(),
    );
    let proj_right = FunctorValue::new(
        category.clone(),
        g.source.clone(),
        object_pairs
            .iter()
            .enumerate()
            .map(|(i, &(_, ob))| (i as u32, ob))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(i, &(_, mb))| (i as u32, mb))
            .collect(),
    );
    Ok(PullbackCategory {
        category,
        object_pairs,
        morphism_pairs,
        proj_left,
        proj_right,
    })
}
