use crate::category::ExplicitCategory;
use crate::report::{ValidationReport, Violation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A total mapping between two explicit categories. The endpoint categories
/// are embedded so a functor file is self-contained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "FunctorWire", into = "FunctorWire")]
pub struct FunctorValue {
    pub source: Arc<ExplicitCategory>,
    pub target: Arc<ExplicitCategory>,
    pub object_map: BTreeMap<u32, u32>,
    pub morphism_map: BTreeMap<u32, u32>,
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(rename_all = "camelCase")]
struct FunctorWire {
    source_cat: ExplicitCategory,
    target_cat: ExplicitCategory,
    object_map: Vec<(u32, u32)>,
    morphism_map: Vec<(u32, u32)>,
}

impl From<FunctorWire> for FunctorValue {
    fn from(w: FunctorWire) -> Self {
        FunctorValue {
            source: Arc::new(w.source_cat),
            target: Arc::new(w.target_cat),
            object_map: w.object_map.into_iter().collect(),
            morphism_map: w.morphism_map.into_iter().collect(),
        }
    }
}

impl From<FunctorValue> for FunctorWire {
    fn from(f: FunctorValue) -> Self {
        FunctorWire {
            source_cat: (*f.source).clone(),
            target_cat: (*f.target).clone(),
            object_map: f.object_map.into_iter().collect(),
            morphism_map: f.morphism_map.into_iter().collect(),
        }
    }
}

impl FunctorValue {
    pub fn new(
        source: Arc<ExplicitCategory>,
        target: Arc<ExplicitCategory>,
        object_map: BTreeMap<u32, u32>,
        morphism_map: BTreeMap<u32, u32>,
    ) -> Self {
        FunctorValue {
            source,
            target,
            object_map,
            morphism_map,
        }
    }

    pub fn identity(cat: Arc<ExplicitCategory>) -> Self {
        let object_map = cat.objects.iter().map(|&o| (o, o)).collect();
        let morphism_map = cat.morphisms.iter().map(|m| (m.id, m.id)).collect();
        FunctorValue {
            source: cat.clone(),
            target: cat,
            object_map,
            morphism_map,
        }
    }

    /// The unique functor into the one-object category `terminal`.
    pub fn constant_to_terminal(source: Arc<ExplicitCategory>, terminal: Arc<ExplicitCategory>) -> Self {
        let obj = terminal.objects[0];
        let id = terminal.identity_of(obj).expect("terminal identity");
        let object_map = source.objects.iter().map(|&o| (o, obj)).collect();
        let morphism_map = source.morphisms.iter().map(|m| (m.id, id)).collect();
        FunctorValue {
            source,
            target: terminal,
            object_map,
            morphism_map,
        }
    }

    pub fn apply_object(&self, obj: u32) -> Option<u32> {
        self.object_map.get(&obj).copied()
    }

    pub fn apply_morphism(&self, mor: u32) -> Option<u32> {
        self.morphism_map.get(&mor).copied()
    }

    /// Mechanical composition "other after self"; `None` when the middle
    /// categories do not agree structurally.
    pub fn then(&self, other: &FunctorValue) -> Option<FunctorValue> {
        if !self.target.structurally_equal(&other.source) {
            return None;
        }
        // Identity is positional, so translate through positions in case the
        // two middle category values use different id spaces.
        let obj_translate = |o: u32| -> Option<u32> {
            let pos = self.target.object_position(o)?;
            Some(other.source.objects[pos])
        };
        let mor_translate = |m: u32| -> Option<u32> {
            let pos = self.target.morphism_position(m)?;
            Some(other.source.morphisms[pos].id)
        };
        let mut object_map = BTreeMap::new();
        for (&o, &fo) in &self.object_map {
            object_map.insert(o, other.apply_object(obj_translate(fo)?)?);
        }
        let mut morphism_map = BTreeMap::new();
        for (&m, &fm) in &self.morphism_map {
            morphism_map.insert(m, other.apply_morphism(mor_translate(fm)?)?);
        }
        Some(FunctorValue {
            source: self.source.clone(),
            target: other.target.clone(),
            object_map,
            morphism_map,
        })
    }

    pub fn is_parallel_to(&self, other: &FunctorValue) -> bool {
        self.source.structurally_equal(&other.source)
            && self.target.structurally_equal(&other.target)
    }

    /// True when the object and morphism maps are bijections; for a valid
    /// functor this makes it an isomorphism of categories.
    pub fn is_bijective(&self) -> bool {
        let mut obj_images: Vec<u32> = self.object_map.values().copied().collect();
        obj_images.sort_unstable();
        obj_images.dedup();
        let mut mor_images: Vec<u32> = self.morphism_map.values().copied().collect();
        mor_images.sort_unstable();
        mor_images.dedup();
        // total, injective (no image collapses) and surjective, on both levels
        self.object_map.len() == self.source.object_count()
            && obj_images.len() == self.source.object_count()
            && obj_images.len() == self.target.object_count()
            && self.morphism_map.len() == self.source.morphism_count()
            && mor_images.len() == self.source.morphism_count()
            && mor_images.len() == self.target.morphism_count()
    }

    /// Inverse functor of a bijective valid functor.
    pub fn inverted(&self) -> Option<FunctorValue> {
        if !self.is_bijective() {
            return None;
        }
        let object_map = self.object_map.iter().map(|(&a, &b)| (b, a)).collect();
        let morphism_map = self.morphism_map.iter().map(|(&a, &b)| (b, a)).collect();
        Some(FunctorValue {
            source: self.target.clone(),
            target: self.source.clone(),
            object_map,
            morphism_map,
        })
    }

    pub fn validate_functor(&self) -> ValidationReport {
        let mut v = Vec::new();
        let src_rep = self.source.validate_category();
        if !src_rep.ok {
            v.push(Violation::new("source category invalid", src_rep.violations[0].to_string()));
        }
        let tgt_rep = self.target.validate_category();
        if !tgt_rep.ok {
            v.push(Violation::new("target category invalid", tgt_rep.violations[0].to_string()));
        }
        if !v.is_empty() {
            return ValidationReport::from_violations(v);
        }
        self.validate_functor_maps()
    }

    /// The map laws alone, for callers that have already validated the
    /// endpoint categories.
    pub fn validate_functor_maps(&self) -> ValidationReport {
        let mut v = Vec::new();
        for &o in &self.source.objects {
            match self.apply_object(o) {
                None => v.push(Violation::new("object map not total", format!("object {o}"))),
                Some(img) => {
                    if self.target.object_position(img).is_none() {
                        v.push(Violation::new(
                            "object image unknown",
                            format!("object {o} -> {img}"),
                        ));
                    }
                }
            }
        }
        for m in &self.source.morphisms {
            match self.apply_morphism(m.id) {
                None => v.push(Violation::new(
                    "morphism map not total",
                    format!("morphism {}", m.id),
                )),
                Some(img) => match self.target.morphism(img) {
                    None => v.push(Violation::new(
                        "morphism image unknown",
                        format!("morphism {} -> {img}", m.id),
                    )),
                    Some(im) => {
                        if self.apply_object(m.src) != Some(im.src) {
                            v.push(Violation::new(
                                "source not preserved",
                                format!("morphism {} -> {img}", m.id),
                            ));
                        }
                        if self.apply_object(m.tgt) != Some(im.tgt) {
                            v.push(Violation::new(
                                "target not preserved",
                                format!("morphism {} -> {img}", m.id),
                            ));
                        }
                    }
                },
            }
        }
        if !v.is_empty() {
            return ValidationReport::from_violations(v);
        }

        for &o in &self.source.objects {
            let id_o = self.source.identity_of(o).unwrap();
            let img_obj = self.apply_object(o).unwrap();
            if self.apply_morphism(id_o) != self.target.identity_of(img_obj) {
                v.push(Violation::new("identity not preserved", format!("object {o}")));
            }
        }
        for f in &self.source.morphisms {
            for g in self.source.morphisms_from(f.tgt) {
                let fg = self.source.composed(f.id, g.id);
                let img = self
                    .apply_morphism(f.id)
                    .zip(self.apply_morphism(g.id))
                    .and_then(|(a, b)| self.target.composed(a, b));
                let fg_img = fg.and_then(|h| self.apply_morphism(h));
                if img != fg_img || img.is_none() {
                    v.push(Violation::new(
                        "composition not preserved",
                        format!("pair ({}, {})", f.id, g.id),
                    ));
                }
            }
        }
        ValidationReport::from_violations(v)
    }

    pub fn is_valid(&self) -> bool {
        self.validate_functor().ok
    }

    /// Positional normal form used by structural equality.
    pub fn normal_form(&self) -> FunctorNormalForm {
        let omap = self
            .source
            .objects
            .iter()
            .map(|&o| {
                self.apply_object(o)
                    .and_then(|i| self.target.object_position(i))
                    .unwrap_or(usize::MAX)
            })
            .collect();
        let mmap = self
            .source
            .morphisms
            .iter()
            .map(|m| {
                self.apply_morphism(m.id)
                    .and_then(|i| self.target.morphism_position(i))
                    .unwrap_or(usize::MAX)
            })
            .collect();
        FunctorNormalForm {
            source: self.source.normal_form(),
            target: self.target.normal_form(),
            object_map: omap,
            morphism_map: mmap,
        }
    }

    pub fn structurally_equal(&self, other: &FunctorValue) -> bool {
        // shared category values make positional and id comparison coincide
        if Arc::ptr_eq(&self.source, &other.source) && Arc::ptr_eq(&self.target, &other.target) {
            return self.object_map == other.object_map
                && self.morphism_map == other.morphism_map;
        }
        self.normal_form() == other.normal_form()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorNormalForm {
    pub source: crate::category::CategoryNormalForm,
    pub target: crate::category::CategoryNormalForm,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}
