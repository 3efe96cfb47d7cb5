use crate::category::ExplicitCategory;
use crate::error::CoreError;
use crate::functor::FunctorValue;
use crate::Limits;
use std::collections::BTreeMap;
use std::sync::Arc;

/// An invertible functor pair witnessing a category isomorphism.
#[derive(Debug, Clone)]
pub struct CategoryIso {
    pub forward: FunctorValue,
    pub backward: FunctorValue,
}

/// Witness that two functors are isomorphic: isomorphisms of the source and
/// target categories making the square commute.
#[derive(Debug, Clone)]
pub struct FunctorIsoWitness {
    pub source_iso: FunctorValue,
    pub target_iso: FunctorValue,
}

fn check_limits(c: &ExplicitCategory, limits: &Limits) -> Result<(), CoreError> {
    limits.check_category(c.object_count(), c.morphism_count())
}

/// Backtracking search over object bijections, then morphism bijections
/// respecting source, target, identities and composition. When
/// `stop_at_first` is false, every isomorphism `a -> b` is collected.
fn search_isomorphisms(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    stop_at_first: bool,
) -> Vec<FunctorValue> {
    let n = a.object_count();
    let mn = a.morphism_count();
    let mut found = Vec::new();
    if n != b.object_count() || mn != b.morphism_count() {
        return found;
    }
    if n == 0 {
        found.push(FunctorValue::new(
            Arc::new(a.clone()),
            Arc::new(b.clone()),
            BTreeMap::new(),
            BTreeMap::new(),
        ));
        return found;
    }

    // hom-size matrices indexed by object position
    let hom_sizes = |c: &ExplicitCategory| -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; c.object_count()]; c.object_count()];
        for mor in &c.morphisms {
            let s = c.object_position(mor.src).unwrap();
            let t = c.object_position(mor.tgt).unwrap();
            m[s][t] += 1;
        }
        m
    };
    let ha = hom_sizes(a);
    let hb = hom_sizes(b);

    let mut obj_perm: Vec<usize> = vec![usize::MAX; n];
    let mut used_obj = vec![false; n];

    // morphism assignment state (by position)
    let mut mor_map: Vec<usize> = vec![usize::MAX; mn];
    let mut used_mor = vec![false; mn];

    // nonidentity morphisms in table order; identities are forced
    let nonid_positions: Vec<usize> = (0..mn)
        .filter(|&i| !a.is_identity(a.morphisms[i].id))
        .collect();

    struct Ctx<'c> {
        a: &'c ExplicitCategory,
        b: &'c ExplicitCategory,
        stop_at_first: bool,
    }

    fn compose_consistent(ctx: &Ctx, mor_map: &[usize], just_set: usize) -> bool {
        let a = ctx.a;
        let b = ctx.b;
        let fid = a.morphisms[just_set].id;
        for (pos, &img) in mor_map.iter().enumerate() {
            if img == usize::MAX {
                continue;
            }
            let gid = a.morphisms[pos].id;
            for (x, y) in [(fid, gid), (gid, fid)] {
                if let Some(h) = a.composed(x, y) {
                    let hx = mor_map[a.morphism_position(h).unwrap()];
                    let bx = b.morphisms[mor_map[a.morphism_position(x).unwrap()]].id;
                    let by = b.morphisms[mor_map[a.morphism_position(y).unwrap()]].id;
                    match b.composed(bx, by) {
                        None => return false,
                        Some(bh) => {
                            if hx != usize::MAX && b.morphisms[hx].id != bh {
                                return false;
                            }
                            // If the composite is not yet assigned we cannot
                            // check it here; it will be checked when assigned.
                            if hx == usize::MAX {
                                continue;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn assign_morphisms(
        ctx: &Ctx,
        nonid: &[usize],
        k: usize,
        obj_perm: &[usize],
        mor_map: &mut Vec<usize>,
        used_mor: &mut Vec<bool>,
        found: &mut Vec<FunctorValue>,
    ) -> bool {
        let a = ctx.a;
        let b = ctx.b;
        if k == nonid.len() {
            let object_map: BTreeMap<u32, u32> = (0..a.object_count())
                .map(|i| (a.objects[i], b.objects[obj_perm[i]]))
                .collect();
            let morphism_map: BTreeMap<u32, u32> = (0..a.morphism_count())
                .map(|i| (a.morphisms[i].id, b.morphisms[mor_map[i]].id))
                .collect();
            let f = FunctorValue::new(
                Arc::new(a.clone()),
                Arc::new(b.clone()),
                object_map,
                morphism_map,
            );
            found.push(f);
            return ctx.stop_at_first;
        }
        let pos = nonid[k];
        let m = &a.morphisms[pos];
        let src_img = b.objects[obj_perm[a.object_position(m.src).unwrap()]];
        let tgt_img = b.objects[obj_perm[a.object_position(m.tgt).unwrap()]];
        for cand in b.hom(src_img, tgt_img) {
            let cand_pos = b.morphism_position(cand).unwrap();
            if used_mor[cand_pos] || b.is_identity(cand) {
                continue;
            }
            mor_map[pos] = cand_pos;
            used_mor[cand_pos] = true;
            if compose_consistent(ctx, mor_map, pos)
                && assign_morphisms(ctx, nonid, k + 1, obj_perm, mor_map, used_mor, found)
            {
                return true;
            }
            used_mor[cand_pos] = false;
            mor_map[pos] = usize::MAX;
        }
        false
    }

    fn assign_objects(
        ctx: &Ctx,
        ha: &[Vec<usize>],
        hb: &[Vec<usize>],
        nonid: &[usize],
        i: usize,
        obj_perm: &mut Vec<usize>,
        used_obj: &mut Vec<bool>,
        mor_map: &mut Vec<usize>,
        used_mor: &mut Vec<bool>,
        found: &mut Vec<FunctorValue>,
    ) -> bool {
        let a = ctx.a;
        let b = ctx.b;
        let n = a.object_count();
        if i == n {
            // force identities, then assign the rest
            for p in 0..a.morphism_count() {
                let mid = a.morphisms[p].id;
                if a.is_identity(mid) {
                    let o = a.morphisms[p].src;
                    let img_obj = b.objects[obj_perm[a.object_position(o).unwrap()]];
                    let img_id = b.identity_of(img_obj).unwrap();
                    let img_pos = b.morphism_position(img_id).unwrap();
                    mor_map[p] = img_pos;
                    used_mor[img_pos] = true;
                }
            }
            let done = assign_morphisms(ctx, nonid, 0, obj_perm, mor_map, used_mor, found);
            for p in 0..a.morphism_count() {
                if a.is_identity(a.morphisms[p].id) {
                    used_mor[mor_map[p]] = false;
                    mor_map[p] = usize::MAX;
                }
            }
            return done;
        }
        for cand in 0..n {
            if used_obj[cand] {
                continue;
            }
            // hom-size pruning against all already assigned objects
            let mut ok = ha[i][i] == hb[cand][cand];
            if ok {
                for j in 0..i {
                    if ha[i][j] != hb[cand][obj_perm[j]] || ha[j][i] != hb[obj_perm[j]][cand] {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            obj_perm[i] = cand;
            used_obj[cand] = true;
            if assign_objects(
                ctx, ha, hb, nonid, i + 1, obj_perm, used_obj, mor_map, used_mor, found,
            ) {
                return true;
            }
            used_obj[cand] = false;
            obj_perm[i] = usize::MAX;
        }
        false
    }

    let ctx = Ctx {
        a,
        b,
        stop_at_first,
    };
    assign_objects(
        &ctx,
        &ha,
        &hb,
        &nonid_positions,
        0,
        &mut obj_perm,
        &mut used_obj,
        &mut mor_map,
        &mut used_mor,
        &mut found,
    );
    found
}

/// Finds an isomorphism pair between two categories, or `None`.
pub fn categories_isomorphic(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    limits: &Limits,
) -> Result<Option<CategoryIso>, CoreError> {
    check_limits(a, limits)?;
    check_limits(b, limits)?;
    let mut isos = search_isomorphisms(a, b, true);
    Ok(isos.pop().map(|forward| {
        let backward = forward.inverted().expect("isomorphism is bijective");
        CategoryIso { forward, backward }
    }))
}

/// Every isomorphism functor `a -> b`. Used for functor isomorphism and for
/// automorphism searches in tests.
pub fn all_isomorphisms_between(
    a: &ExplicitCategory,
    b: &ExplicitCategory,
    limits: &Limits,
) -> Result<Vec<FunctorValue>, CoreError> {
    check_limits(a, limits)?;
    check_limits(b, limits)?;
    Ok(search_isomorphisms(a, b, false))
}

/// Two functors are isomorphic when isomorphisms of their source and target
/// categories make the square commute: `target_iso . f == g . source_iso`.
pub fn functors_isomorphic(
    f: &FunctorValue,
    g: &FunctorValue,
    limits: &Limits,
) -> Result<Option<FunctorIsoWitness>, CoreError> {
    let source_isos = all_isomorphisms_between(&f.source, &g.source, limits)?;
    if source_isos.is_empty() {
        return Ok(None);
    }
    let target_isos = all_isomorphisms_between(&f.target, &g.target, limits)?;
    for tau in &target_isos {
        let left = f.then(tau);
        for sigma in &source_isos {
            let right = sigma.then(g);
            if let (Some(l), Some(r)) = (&left, &right) {
                if l.structurally_equal(r) {
                    return Ok(Some(FunctorIsoWitness {
                        source_iso: sigma.clone(),
                        target_iso: tau.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}
