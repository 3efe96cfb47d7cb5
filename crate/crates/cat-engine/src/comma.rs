//! Comma categories, the iso-comma variant, slices and the invertible core.

use crate::basic::{translate_morphism, translate_object};
use crate::error::EngineError;
use cat_core::{pointer_functor, ExplicitCategory, FunctorValue, Limits, Morphism};
use std::collections::BTreeMap;
use std::sync::Arc;

/// An object of a comma category (l | r): an arrow `l(a) -> r(b)` of the
/// shared target category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommaObject {
    pub left_obj: u32,
    pub right_obj: u32,
    pub arrow: u32,
}

/// A comma category with its two projections. `objects[i]` describes base
/// object id `i`; morphisms of the base are exactly the commuting squares.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub base: Arc<ExplicitCategory>,
    pub proj_left: FunctorValue,
    pub proj_right: FunctorValue,
    pub objects: Vec<CommaObject>,
    pub morphism_pairs: Vec<(u32, u32)>,
}

impl CommaCategory {
    pub fn object_index(&self, left_obj: u32, right_obj: u32, arrow: u32) -> Option<u32> {
        self.objects
            .iter()
            .position(|o| o.left_obj == left_obj && o.right_obj == right_obj && o.arrow == arrow)
            .map(|i| i as u32)
    }
}

fn comma_impl(
    l: &FunctorValue,
    r: &FunctorValue,
    only_invertible: bool,
    limits: &Limits,
) -> Result<CommaCategory, EngineError> {
    if !l.target.structurally_equal(&r.target) {
        return Err(EngineError::mismatch("comma: functors do not share a target"));
    }
    let a = &l.source;
    let b = &r.source;
    let c = &l.target; // work in l.target's id space

    let r_obj = |ob: u32| -> Option<u32> {
        let img = r.apply_object(ob)?;
        translate_object(&r.target, c, img)
    };
    let r_mor = |mb: u32| -> Option<u32> {
        let img = r.apply_morphism(mb)?;
        translate_morphism(&r.target, c, img)
    };

    let mut objects = Vec::new();
    for &oa in &a.objects {
        for &ob in &b.objects {
            let la = l.apply_object(oa).ok_or_else(|| EngineError::invalid("comma: object image"))?;
            let rb = r_obj(ob).ok_or_else(|| EngineError::invalid("comma: object image"))?;
            for f in c.hom(la, rb) {
                if only_invertible && !c.is_invertible(f) {
                    continue;
                }
                objects.push(CommaObject {
                    left_obj: oa,
                    right_obj: ob,
                    arrow: f,
                });
            }
        }
    }

    // commuting squares: r(q) after f  ==  f' after l(p)
    let mut morphism_pairs = Vec::new();
    let mut endpoints = Vec::new();
    for (i, oi) in objects.iter().enumerate() {
        for (j, oj) in objects.iter().enumerate() {
            for &p in &a.hom(oi.left_obj, oj.left_obj) {
                for &q in &b.hom(oi.right_obj, oj.right_obj) {
                    let lp = l.apply_morphism(p).unwrap();
                    let rq = r_mor(q).unwrap();
                    if c.composed(oi.arrow, rq) == c.composed(lp, oj.arrow)
                        && c.composed(oi.arrow, rq).is_some()
                    {
                        morphism_pairs.push((p, q));
                        endpoints.push((i as u32, j as u32));
                    }
                }
            }
        }
    }
    limits.check_category(objects.len(), morphism_pairs.len())?;

    let base_objects: Vec<u32> = (0..objects.len() as u32).collect();
    let morphisms: Vec<Morphism> = endpoints
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| Morphism {
            id: k as u32,
            src: i,
            tgt: j,
        })
        .collect();
    let mor_index: BTreeMap<(u32, u32, u32, u32), u32> = morphism_pairs
        .iter()
        .enumerate()
        .map(|(k, &(p, q))| ((endpoints[k].0, endpoints[k].1, p, q), k as u32))
        .collect();
    let identities: BTreeMap<u32, u32> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let ida = a.identity_of(o.left_obj).unwrap();
            let idb = b.identity_of(o.right_obj).unwrap();
            (i as u32, mor_index[&(i as u32, i as u32, ida, idb)])
        })
        .collect();
    let mut compose = BTreeMap::new();
    for (k1, &(p1, q1)) in morphism_pairs.iter().enumerate() {
        for (k2, &(p2, q2)) in morphism_pairs.iter().enumerate() {
            if endpoints[k1].1 != endpoints[k2].0 {
                continue;
            }
            let p = a.composed(p1, p2).expect("squares compose");
            let q = b.composed(q1, q2).expect("squares compose");
            let key = (endpoints[k1].0, endpoints[k2].1, p, q);
            compose.insert((k1 as u32, k2 as u32), mor_index[&key]);
        }
    }
    let base = Arc::new(ExplicitCategory::from_parts(
        base_objects,
        morphisms,
        identities,
        compose,
    ));
    let proj_left = FunctorValue::new(
        base.clone(),
        l.source.clone(),
        objects
            .iter()
            .enumerate()
            .map(|(i, o)| (i as u32, o.left_obj))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(k, &(p, _))| (k as u32, p))
            .collect(),
    );
    let proj_right = FunctorValue::new(
        base.clone(),
        r.source.clone(),
        objects
            .iter()
            .enumerate()
            .map(|(i, o)| (i as u32, o.right_obj))
            .collect(),
        morphism_pairs
            .iter()
            .enumerate()
            .map(|(k, &(_, q))| (k as u32, q))
            .collect(),
    );
    Ok(CommaCategory {
        base,
        proj_left,
        proj_right,
        objects,
        morphism_pairs,
    })
}

/// The comma category (l | r) for functors sharing a target.
pub fn comma(
    l: &FunctorValue,
    r: &FunctorValue,
    limits: &Limits,
) -> Result<CommaCategory, EngineError> {
    comma_impl(l, r, false, limits)
}

/// The iso-comma category: objects restricted to invertible arrows,
/// morphisms still all commuting squares (matching the pullback
/// construction through the two-object-groupoid exponent).
pub fn iso_comma(
    l: &FunctorValue,
    r: &FunctorValue,
    limits: &Limits,
) -> Result<CommaCategory, EngineError> {
    comma_impl(l, r, true, limits)
}

/// Slice c / obj as the comma (Id | pointer).
pub fn slice(
    c: &Arc<ExplicitCategory>,
    obj: u32,
    limits: &Limits,
) -> Result<CommaCategory, EngineError> {
    let id = FunctorValue::identity(c.clone());
    let pt = pointer_functor(c.clone(), obj);
    comma(&id, &pt, limits)
}

/// Coslice obj / c as the comma (pointer | Id).
pub fn coslice(
    c: &Arc<ExplicitCategory>,
    obj: u32,
    limits: &Limits,
) -> Result<CommaCategory, EngineError> {
    let id = FunctorValue::identity(c.clone());
    let pt = pointer_functor(c.clone(), obj);
    comma(&pt, &id, limits)
}

/// The invertible core: same objects, only the invertible morphisms.
pub fn core_of(c: &ExplicitCategory) -> ExplicitCategory {
    let keep: Vec<&Morphism> = c
        .morphisms
        .iter()
        .filter(|m| c.is_invertible(m.id))
        .collect();
    let remap: BTreeMap<u32, u32> = keep
        .iter()
        .enumerate()
        .map(|(i, m)| (m.id, i as u32))
        .collect();
    let morphisms: Vec<Morphism> = keep
        .iter()
        .enumerate()
        .map(|(i, m)| Morphism {
            id: i as u32,
            src: m.src,
            tgt: m.tgt,
        })
        .collect();
    let identities: BTreeMap<u32, u32> = c
        .identities
        .iter()
        .map(|(&o, &m)| (o, remap[&m]))
        .collect();
    let mut compose = BTreeMap::new();
    for (&(f, g), &h) in &c.compose {
        if let (Some(&fi), Some(&gi), Some(&hi)) = (remap.get(&f), remap.get(&g), remap.get(&h)) {
            compose.insert((fi, gi), hi);
        }
    }
    ExplicitCategory::from_parts(c.objects.clone(), morphisms, identities, compose)
}
