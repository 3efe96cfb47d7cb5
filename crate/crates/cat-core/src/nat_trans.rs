use crate::functor::FunctorValue;
use crate::report::{ValidationReport, Violation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A natural transformation between two parallel functors: one component
/// morphism of the target category per object of the source category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "NatTransWire", into = "NatTransWire")]
pub struct NatTransValue {
    pub source_fun: FunctorValue,
    pub target_fun: FunctorValue,
    pub components: BTreeMap<u32, u32>,
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(rename_all = "camelCase")]
struct NatTransWire {
    source_fun: FunctorValue,
    target_fun: FunctorValue,
    components: Vec<(u32, u32)>,
}

impl From<NatTransWire> for NatTransValue {
    fn from(w: NatTransWire) -> Self {
        NatTransValue {
            source_fun: w.source_fun,
            target_fun: w.target_fun,
            components: w.components.into_iter().collect(),
        }
    }
}

impl From<NatTransValue> for NatTransWire {
    fn from(n: NatTransValue) -> Self {
        NatTransWire {
            source_fun: n.source_fun,
            target_fun: n.target_fun,
            components: n.components.into_iter().collect(),
        }
    }
}

impl NatTransValue {
    pub fn new(
        source_fun: FunctorValue,
        target_fun: FunctorValue,
        components: BTreeMap<u32, u32>,
    ) -> Self {
        NatTransValue {
            source_fun,
            target_fun,
            components,
        }
    }

    pub fn identity(f: &FunctorValue) -> Self {
        let components = f
            .source
            .objects
            .iter()
            .map(|&o| {
                let img = f.apply_object(o).expect("valid functor");
                (o, f.target.identity_of(img).expect("valid category"))
            })
            .collect();
        NatTransValue {
            source_fun: f.clone(),
            target_fun: f.clone(),
            components,
        }
    }

    pub fn component(&self, obj: u32) -> Option<u32> {
        self.components.get(&obj).copied()
    }

    pub fn validate_nat_trans(&self) -> ValidationReport {
        let mut v = Vec::new();
        let s_rep = self.source_fun.validate_functor();
        if !s_rep.ok {
            v.push(Violation::new(
                "source functor invalid",
                s_rep.violations[0].to_string(),
            ));
        }
        let t_rep = self.target_fun.validate_functor();
        if !t_rep.ok {
            v.push(Violation::new(
                "target functor invalid",
                t_rep.violations[0].to_string(),
            ));
        }
        if !v.is_empty() {
            return ValidationReport::from_violations(v);
        }
        self.validate_nat_trans_maps()
    }

    /// Component and naturality laws alone, assuming both functors have
    /// already been validated.
    pub fn validate_nat_trans_maps(&self) -> ValidationReport {
        let mut v = Vec::new();
        if !self.source_fun.is_parallel_to(&self.target_fun) {
            v.push(Violation::new("functors not parallel", "source/target categories differ"));
            return ValidationReport::from_violations(v);
        }

        let cat_a = &self.source_fun.source;
        let cat_b = &self.source_fun.target;
        for &o in &cat_a.objects {
            match self.component(o) {
                None => v.push(Violation::new("component missing", format!("object {o}"))),
                Some(c) => match cat_b.morphism(c) {
                    None => v.push(Violation::new(
                        "component unknown",
                        format!("object {o} -> morphism {c}"),
                    )),
                    Some(m) => {
                        let want_src = self.source_fun.apply_object(o);
                        let want_tgt = self.target_fun.apply_object(o);
                        if Some(m.src) != want_src || Some(m.tgt) != want_tgt {
                            v.push(Violation::new(
                                "component endpoints",
                                format!("object {o}: {} : {} -> {}", m.id, m.src, m.tgt),
                            ));
                        }
                    }
                },
            }
        }
        if !v.is_empty() {
            return ValidationReport::from_violations(v);
        }

        // Naturality: for every h : a -> a' in A,
        //   component(a') after F(h)  ==  G(h) after component(a)
        for h in &cat_a.morphisms {
            let fh = self.source_fun.apply_morphism(h.id).unwrap();
            let gh = self.target_fun.apply_morphism(h.id).unwrap();
            let ca = self.component(h.src).unwrap();
            let ca2 = self.component(h.tgt).unwrap();
            let left = cat_b.composed(fh, ca2);
            let right = cat_b.composed(ca, gh);
            if left != right || left.is_none() {
                v.push(Violation::new("naturality", format!("morphism {}", h.id)));
            }
        }
        ValidationReport::from_violations(v)
    }

    pub fn is_valid(&self) -> bool {
        self.validate_nat_trans().ok
    }

    pub fn normal_form(&self) -> NatTransNormalForm {
        let comps = self
            .source_fun
            .source
            .objects
            .iter()
            .map(|&o| {
                self.component(o)
                    .and_then(|c| self.source_fun.target.morphism_position(c))
                    .unwrap_or(usize::MAX)
            })
            .collect();
        NatTransNormalForm {
            source_fun: self.source_fun.normal_form(),
            target_fun: self.target_fun.normal_form(),
            components: comps,
        }
    }

    pub fn structurally_equal(&self, other: &NatTransValue) -> bool {
        if std::sync::Arc::ptr_eq(&self.source_fun.source, &other.source_fun.source)
            && std::sync::Arc::ptr_eq(&self.source_fun.target, &other.source_fun.target)
        {
            return self.components == other.components
                && self.source_fun.structurally_equal(&other.source_fun)
                && self.target_fun.structurally_equal(&other.target_fun);
        }
        self.normal_form() == other.normal_form()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransNormalForm {
    pub source_fun: crate::functor::FunctorNormalForm,
    pub target_fun: crate::functor::FunctorNormalForm,
    pub components: Vec<usize>,
}
