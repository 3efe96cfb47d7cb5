//! Colimit presentations and their bounded tabulation.
//!
//! Coequalizers (and pushouts) of categories are presentation-valued: the
//! target's objects and arrows become generators, the identified data
//! becomes relations, and nothing is tabulated at construction time.
//! `saturate` then enumerates morphism classes with a coset-enumeration
//! style completion and fails loudly (`PossiblyInfinite`) when the
//! presentation does not close within the bound.

use crate::basic::{comp, coproduct_category, translate_morphism, translate_object, CoproductCategory};
use crate::error::EngineError;
use cat_core::{
    ExplicitCategory, FunctorValue, GeneratorArrow, GeneratorPath, Limits, Morphism,
    PresentedCategory,
};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// A coequalizer presentation along with the quotient bookkeeping.
pub struct CoequalizerPresentation {
    pub presentation: PresentedCategory,
    /// target-category object id -> presented object id
    pub object_class: BTreeMap<u32, u32>,
    /// target-category nonidentity morphism id -> generator arrow id
    pub arrow_of_morphism: BTreeMap<u32, u32>,
}

/// Presents the coequalizer of a parallel functor pair f, g : A => B.
/// Objects of B are identified along f(x) ~ g(x); B's nonidentity arrows
/// become generators; B's composition table and the identified arrows become
/// relations.
pub fn coequalizer_presented(
    f: &FunctorValue,
    g: &FunctorValue,
) -> Result<CoequalizerPresentation, EngineError> {
    if !f.is_parallel_to(g) {
        return Err(EngineError::mismatch("coequalizer: functors not parallel"));
    }
    let a = &f.source;
    let b = &f.target;
    let g_obj = |o: u32| -> Option<u32> {
        let img = g.apply_object(o)?;
        translate_object(&g.target, b, img)
    };
    let g_mor = |m: u32| -> Option<u32> {
        let img = g.apply_morphism(m)?;
        translate_morphism(&g.target, b, img)
    };

    // union-find over B object positions
    let n = b.object_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &x in &a.objects {
        let fo = f
            .apply_object(x)
            .and_then(|o| b.object_position(o))
            .ok_or_else(|| EngineError::invalid("coequalizer: object image"))?;
        let go = g_obj(x)
            .and_then(|o| b.object_position(o))
            .ok_or_else(|| EngineError::invalid("coequalizer: object image"))?;
        let (rf, rg) = (find(&mut parent, fo), find(&mut parent, go));
        if rf != rg {
            let keep = rf.min(rg);
            let drop = rf.max(rg);
            parent[drop] = keep;
        }
    }
    // class ids in representative-position order
    let mut reps: Vec<usize> = (0..n).filter(|&i| find(&mut parent, i) == i).collect();
    reps.sort_unstable();
    let class_of_pos: Vec<u32> = (0..n)
        .map(|i| {
            let r = find(&mut parent, i);
            reps.iter().position(|&x| x == r).unwrap() as u32
        })
        .collect();
    let object_class: BTreeMap<u32, u32> = b
        .objects
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, class_of_pos[i]))
        .collect();

    let generator_objects: Vec<u32> = (0..reps.len() as u32).collect();
    let mut generator_arrows = Vec::new();
    let mut arrow_of_morphism = BTreeMap::new();
    for m in &b.morphisms {
        if b.is_identity(m.id) {
            continue;
        }
        let id = generator_arrows.len() as u32;
        generator_arrows.push(GeneratorArrow {
            id,
            src: object_class[&m.src],
            tgt: object_class[&m.tgt],
        });
        arrow_of_morphism.insert(m.id, id);
    }

    let path_of = |m: u32| -> GeneratorPath {
        if b.is_identity(m) {
            let o = b.morphism(m).unwrap().src;
            GeneratorPath::identity(object_class[&o])
        } else {
            let o = b.morphism(m).unwrap().src;
            GeneratorPath::single(object_class[&o], arrow_of_morphism[&m])
        }
    };

    let mut relations = Vec::new();
    // B's composition table, restricted to nonidentity pairs
    for (&(m1, m2), &mc) in &b.compose {
        if b.is_identity(m1) || b.is_identity(m2) {
            continue;
        }
        let lhs = GeneratorPath {
            start: object_class[&b.morphism(m1).unwrap().src],
            arrows: vec![arrow_of_morphism[&m1], arrow_of_morphism[&m2]],
        };
        let rhs = path_of(mc);
        relations.push((lhs, rhs));
    }
    // identified arrows: f(m) ~ g(m)
    for m in &a.morphisms {
        if a.is_identity(m.id) {
            continue;
        }
        let fm = f
            .apply_morphism(m.id)
            .ok_or_else(|| EngineError::invalid("coequalizer: morphism image"))?;
        let gm = g_mor(m.id).ok_or_else(|| EngineError::invalid("coequalizer: morphism image"))?;
        let lhs = path_of(fm);
        let rhs = path_of(gm);
        if lhs != rhs {
            relations.push((lhs, rhs));
        }
    }

    let presentation = PresentedCategory {
        generator_objects,
        generator_arrows,
        relations,
    };
    debug_assert!(presentation.is_valid());
    Ok(CoequalizerPresentation {
        presentation,
        object_class,
        arrow_of_morphism,
    })
}

/// A pushout of a span presented as the coequalizer of the two legs into
/// the coproduct.
pub struct PushoutPresentation {
    pub coequalizer: CoequalizerPresentation,
    pub coproduct: CoproductCategory,
}

pub fn pushout_presented(
    f: &FunctorValue,
    g: &FunctorValue,
    limits: &Limits,
) -> Result<PushoutPresentation, EngineError> {
    if !f.source.structurally_equal(&g.source) {
        return Err(EngineError::mismatch("pushout: span legs do not share a source"));
    }
    let cp = coproduct_category(&f.target, &g.target, limits)?;
    let left = comp(f, &cp.inj_left)?;
    let right = comp(g, &cp.inj_right)?;
    let coequalizer = coequalizer_presented(&left, &right)?;
    Ok(PushoutPresentation {
        coequalizer,
        coproduct: cp,
    })
}

/// A saturated presentation: the tabulated category plus the element each
/// generator arrow became.
pub struct SaturatedCategory {
    pub category: ExplicitCategory,
    pub generator_morphism: BTreeMap<u32, u32>,
}

struct Completion<'a> {
    pres: &'a PresentedCategory,
    parent: Vec<usize>,
    src: Vec<u32>,
    tgt: Vec<u32>,
    rep: Vec<Vec<u32>>,
    table: HashMap<(usize, u32), usize>,
    pending: VecDeque<(usize, usize)>,
    bound: usize,
    max_elements: usize,
}

impl<'a> Completion<'a> {
    fn new(pres: &'a PresentedCategory, bound: usize, max_elements: usize) -> Self {
        let k = pres.generator_objects.len();
        Completion {
            pres,
            parent: (0..k).collect(),
            src: pres.generator_objects.clone(),
            tgt: pres.generator_objects.clone(),
            rep: vec![Vec::new(); k],
            table: HashMap::new(),
            pending: VecDeque::new(),
            bound,
            max_elements,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn identity_elem(&self, obj: u32) -> usize {
        self.pres
            .generator_objects
            .iter()
            .position(|&o| o == obj)
            .expect("object exists")
    }

    fn define(&mut self, e: usize, gen: &GeneratorArrow) -> Result<usize, EngineError> {
        let root = self.find(e);
        if let Some(&x) = self.table.get(&(root, gen.id)) {
            return Ok(self.find(x));
        }
        let mut rep = self.rep[root].clone();
        rep.push(gen.id);
        if rep.len() > self.bound {
            return Err(EngineError::PossiblyInfinite {
                detail: format!("a morphism class needs a path longer than the bound {}", self.bound),
            });
        }
        if self.parent.len() >= self.max_elements {
            return Err(EngineError::PossiblyInfinite {
                detail: format!("more than {} morphism classes were generated", self.max_elements),
            });
        }
        let idx = self.parent.len();
        self.parent.push(idx);
        self.src.push(self.src[root]);
        self.tgt.push(gen.tgt);
        self.rep.push(rep);
        self.table.insert((root, gen.id), idx);
        Ok(idx)
    }

    fn trace(&mut self, start: usize, arrows: &[u32]) -> Result<usize, EngineError> {
        let mut at = self.find(start);
        for &a in arrows {
            let gen = *self.pres.arrow(a).expect("arrow exists");
            at = self.define(at, &gen)?;
            at = self.find(at);
        }
        Ok(at)
    }

    fn merge(&mut self, a: usize, b: usize) {
        self.pending.push_back((a, b));
        while let Some((x, y)) = self.pending.pop_front() {
            let rx = self.find(x);
            let ry = self.find(y);
            if rx == ry {
                continue;
            }
            let keep = rx.min(ry);
            let drop = rx.max(ry);
            self.parent[drop] = keep;
            if self.rep[drop].len() < self.rep[keep].len() {
                let r = self.rep[drop].clone();
                self.rep[keep] = r;
            }
            // migrate the dropped row
            let moved: Vec<(u32, usize)> = self
                .table
                .iter()
                .filter(|(&(e, _), _)| e == drop)
                .map(|(&(_, g), &v)| (g, v))
                .collect();
            for (g, v) in moved {
                self.table.remove(&(drop, g));
                match self.table.get(&(keep, g)) {
                    Some(&w) => {
                        if self.find(w) != self.find(v) {
                            self.pending.push_back((w, v));
                        }
                    }
                    None => {
                        self.table.insert((keep, g), v);
                    }
                }
            }
        }
    }

    fn live_roots(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut out = Vec::new();
        for i in 0..n {
            if self.find(i) == i {
                out.push(i);
            }
        }
        out
    }

    fn run(&mut self) -> Result<(), EngineError> {
        loop {
            let mut changed = false;
            // close the action table
            let roots = self.live_roots();
            for e in roots {
                for gi in 0..self.pres.generator_arrows.len() {
                    let gen = self.pres.generator_arrows[gi];
                    let re = self.find(e);
                    if re != e {
                        continue;
                    }
                    if self.tgt[e] == gen.src && !self.table.contains_key(&(e, gen.id)) {
                        self.define(e, &gen)?;
                        changed = true;
                    }
                }
            }
            // apply every relation at every element whose target matches
            let roots = self.live_roots();
            for e in roots {
                for ri in 0..self.pres.relations.len() {
                    let (lhs, rhs) = self.pres.relations[ri].clone();
                    let re = self.find(e);
                    if self.tgt[re] != lhs.start {
                        continue;
                    }
                    let l = self.trace(re, &lhs.arrows)?;
                    let r = self.trace(re, &rhs.arrows)?;
                    if self.find(l) != self.find(r) {
                        self.merge(l, r);
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }
}

/// Tabulates a presentation up to the given path-length bound. Succeeds iff
/// the class structure closes without ever needing a path at the bound;
/// otherwise `PossiblyInfinite`.
pub fn saturate(
    pres: &PresentedCategory,
    bound: usize,
    limits: &Limits,
) -> Result<SaturatedCategory, EngineError> {
    let rep_report = pres.validate_presentation();
    if !rep_report.ok {
        return Err(EngineError::invalid(format!(
            "presentation invalid: {rep_report}"
        )));
    }
    let max_elements = (limits.max_morphisms * 4).max(4096);
    let mut tc = Completion::new(pres, bound, max_elements);
    tc.run()?;

    let roots = tc.live_roots();
    limits.check_category(pres.generator_objects.len(), roots.len())?;
    let new_id: HashMap<usize, u32> = roots
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u32))
        .collect();

    let objects = pres.generator_objects.clone();
    let morphisms: Vec<Morphism> = roots
        .iter()
        .map(|&r| Morphism {
            id: new_id[&r],
            src: tc.src[r],
            tgt: tc.tgt[r],
        })
        .collect();
    let identities: BTreeMap<u32, u32> = pres
        .generator_objects
        .iter()
        .map(|&o| {
            let e = tc.identity_elem(o);
            let r = tc.find(e);
            (o, new_id[&r])
        })
        .collect();
    let mut compose = BTreeMap::new();
    for &e1 in &roots {
        for &e2 in &roots {
            if tc.tgt[e1] != tc.src[e2] {
                continue;
            }
            let path = tc.rep[e2].clone();
            let composite = tc.trace(e1, &path)?;
            let rc = tc.find(composite);
            compose.insert((new_id[&e1], new_id[&e2]), new_id[&rc]);
        }
    }
    let category = ExplicitCategory::from_parts(objects, morphisms, identities, compose);
    let report = category.validate_category();
    if !report.ok {
        return Err(EngineError::invalid(format!(
            "saturation produced an invalid category: {report}"
        )));
    }
    let generator_morphism: BTreeMap<u32, u32> = pres
        .generator_arrows
        .iter()
        .map(|gen| {
            let ide = tc.identity_elem(gen.src);
            let root = tc.find(ide);
            let e = tc.table[&(root, gen.id)];
            let r = tc.find(e);
            (gen.id, new_id[&r])
        })
        .collect();
    Ok(SaturatedCategory {
        category,
        generator_morphism,
    })
}
