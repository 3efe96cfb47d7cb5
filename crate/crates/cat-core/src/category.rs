use crate::report::{ValidationReport, Violation};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A morphism record. `src` and `tgt` are object ids of the owning category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub id: u32,
    pub src: u32,
    pub tgt: u32,
}

/// A fully tabulated finite category.
///
/// `compose` is keyed by `(f, g)` with `target(f) = source(g)` and holds the
/// composite "g after f". It is defined exactly on composable pairs and
/// nowhere else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "CategoryWire", into = "CategoryWire")]
pub struct ExplicitCategory {
    pub objects: Vec<u32>,
    pub morphisms: Vec<Morphism>,
    pub identities: BTreeMap<u32, u32>,
    pub compose: BTreeMap<(u32, u32), u32>,
}

/// On-disk shape: identities as `[object, morphism]` pairs and the
/// composition table as `[f, g, gAfterF]` triples, both sorted, so files are
/// deterministic and diffable.
#[derive(Serialize, Deserialize, Clone)]
struct CategoryWire {
    objects: Vec<u32>,
    morphisms: Vec<Morphism>,
    identities: Vec<(u32, u32)>,
    compose: Vec<(u32, u32, u32)>,
}

impl From<CategoryWire> for ExplicitCategory {
    fn from(w: CategoryWire) -> Self {
        ExplicitCategory {
            objects: w.objects,
            morphisms: w.morphisms,
            identities: w.identities.into_iter().collect(),
            compose: w.compose.into_iter().map(|(f, g, h)| ((f, g), h)).collect(),
        }
    }
}

impl From<ExplicitCategory> for CategoryWire {
    fn from(c: ExplicitCategory) -> Self {
        CategoryWire {
            objects: c.objects,
            morphisms: c.morphisms,
            identities: c.identities.into_iter().collect(),
            compose: c
                .compose
                .into_iter()
                .map(|((f, g), h)| (f, g, h))
                .collect(),
        }
    }
}

impl ExplicitCategory {
    pub fn from_parts(
        objects: Vec<u32>,
        morphisms: Vec<Morphism>,
        identities: BTreeMap<u32, u32>,
        compose: BTreeMap<(u32, u32), u32>,
    ) -> Self {
        ExplicitCategory {
            objects,
            morphisms,
            identities,
            compose,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_position(&self, id: u32) -> Option<usize> {
        self.objects.iter().position(|&o| o == id)
    }

    pub fn morphism_position(&self, id: u32) -> Option<usize> {
        self.morphisms.iter().position(|m| m.id == id)
    }

    pub fn morphism(&self, id: u32) -> Option<&Morphism> {
        self.morphisms.iter().find(|m| m.id == id)
    }

    pub fn identity_of(&self, obj: u32) -> Option<u32> {
        self.identities.get(&obj).copied()
    }

    pub fn is_identity(&self, mor: u32) -> bool {
        self.identities.values().any(|&m| m == mor)
    }

    /// The composite "g after f", if `(f, g)` is a composable pair.
    pub fn composed(&self, f: u32, g: u32) -> Option<u32> {
        self.compose.get(&(f, g)).copied()
    }

    /// All morphism ids from object `a` to object `b`, in table order.
    pub fn hom(&self, a: u32, b: u32) -> Vec<u32> {
        self.morphisms
            .iter()
            .filter(|m| m.src == a && m.tgt == b)
            .map(|m| m.id)
            .collect()
    }

    pub fn morphisms_from(&self, a: u32) -> impl Iterator<Item = &Morphism> {
        self.morphisms.iter().filter(move |m| m.src == a)
    }

    /// The two-sided inverse of `mor`, if any.
    pub fn inverse_of(&self, mor: u32) -> Option<u32> {
        let m = self.morphism(mor)?;
        let id_src = self.identity_of(m.src)?;
        let id_tgt = self.identity_of(m.tgt)?;
        self.hom(m.tgt, m.src).into_iter().find(|&g| {
            self.composed(mor, g) == Some(id_src) && self.composed(g, mor) == Some(id_tgt)
        })
    }

    pub fn is_invertible(&self, mor: u32) -> bool {
        self.inverse_of(mor).is_some()
    }

    /// Nonidentity morphisms that are not composites of two nonidentities.
    /// These are the edges drawn in DOT output.
    pub fn generator_morphisms(&self) -> Vec<u32> {
        self.morphisms
            .iter()
            .filter(|m| !self.is_identity(m.id))
            .filter(|m| {
                !self.compose.iter().any(|(&(f, g), &h)| {
                    h == m.id && !self.is_identity(f) && !self.is_identity(g)
                })
            })
            .map(|m| m.id)
            .collect()
    }

    /// Positional normal form: every id replaced by its index in the owning
    /// list. Two categories are structurally equal iff their normal forms
    /// coincide.
    pub fn normal_form(&self) -> CategoryNormalForm {
        let opos: HashMap<u32, usize> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, &o)| (o, i))
            .collect();
        let mpos: HashMap<u32, usize> = self
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id, i))
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| {
                (
                    opos.get(&m.src).copied().unwrap_or(usize::MAX),
                    opos.get(&m.tgt).copied().unwrap_or(usize::MAX),
                )
            })
            .collect();
        let mut identities: Vec<(usize, usize)> = self
            .identities
            .iter()
            .map(|(o, m)| {
                (
                    opos.get(o).copied().unwrap_or(usize::MAX),
                    mpos.get(m).copied().unwrap_or(usize::MAX),
                )
            })
            .collect();
        identities.sort_unstable();
        let mut compose: Vec<(usize, usize, usize)> = self
            .compose
            .iter()
            .map(|(&(f, g), &h)| {
                (
                    mpos.get(&f).copied().unwrap_or(usize::MAX),
                    mpos.get(&g).copied().unwrap_or(usize::MAX),
                    mpos.get(&h).copied().unwrap_or(usize::MAX),
                )
            })
            .collect();
        compose.sort_unstable();
        CategoryNormalForm {
            object_count: self.objects.len(),
            morphisms,
            identities,
            compose,
        }
    }

    pub fn structurally_equal(&self, other: &ExplicitCategory) -> bool {
        // identical tables are structurally equal without renaming
        if std::ptr::eq(self, other) || self == other {
            return true;
        }
        self.normal_form() == other.normal_form()
    }

    /// Exhaustively checks every category law and reports each violation
    /// with a witness.
    pub fn validate_category(&self) -> ValidationReport {
        let mut v = Vec::new();

        // Well-formedness of the tables themselves.
        let mut seen = HashMap::new();
        for (i, &o) in self.objects.iter().enumerate() {
            if let Some(_prev) = seen.insert(o, i) {
                v.push(Violation::new("object ids not unique", format!("object {o}")));
            }
        }
        let mut mseen = HashMap::new();
        for m in &self.morphisms {
            if mseen.insert(m.id, ()).is_some() {
                v.push(Violation::new(
                    "morphism ids not unique",
                    format!("morphism {}", m.id),
                ));
            }
            if self.object_position(m.src).is_none() || self.object_position(m.tgt).is_none() {
                v.push(Violation::new(
                    "unknown object in morphism",
                    format!("morphism {} : {} -> {}", m.id, m.src, m.tgt),
                ));
            }
        }
        if !v.is_empty() {
            // Ill-formed tables make the law loops meaningless.
            return ValidationReport::from_violations(v);
        }

        for &o in &self.objects {
            match self.identity_of(o).and_then(|i| self.morphism(i)) {
                None => v.push(Violation::new("identity missing", format!("object {o}"))),
                Some(m) => {
                    if m.src != o || m.tgt != o {
                        v.push(Violation::new(
                            "identity endpoints",
                            format!("id[{o}] = {} : {} -> {}", m.id, m.src, m.tgt),
                        ));
                    }
                }
            }
        }
        for (o, _) in self.identities.iter() {
            if self.object_position(*o).is_none() {
                v.push(Violation::new(
                    "identity for unknown object",
                    format!("object {o}"),
                ));
            }
        }

        let compose_lookup: HashMap<(u32, u32), u32> =
            self.compose.iter().map(|(&k, &h)| (k, h)).collect();
        let morphism_by_id: HashMap<u32, &Morphism> =
            self.morphisms.iter().map(|m| (m.id, m)).collect();

        // compose total on composable pairs, undefined elsewhere, endpoints right
        for f in &self.morphisms {
            for g in &self.morphisms {
                let composable = f.tgt == g.src;
                match compose_lookup.get(&(f.id, g.id)).copied() {
                    None if composable => v.push(Violation::new(
                        "composition not total",
                        format!("pair ({}, {})", f.id, g.id),
                    )),
                    Some(h) if !composable => v.push(Violation::new(
                        "composition on non-composable pair",
                        format!("pair ({}, {}) = {h}", f.id, g.id),
                    )),
                    Some(h) => match morphism_by_id.get(&h) {
                        None => v.push(Violation::new(
                            "composite morphism unknown",
                            format!("({}, {}) -> {h}", f.id, g.id),
                        )),
                        Some(hm) => {
                            if hm.src != f.src || hm.tgt != g.tgt {
                                v.push(Violation::new(
                                    "composition endpoints",
                                    format!("({}, {}) = {h} : {} -> {}", f.id, g.id, hm.src, hm.tgt),
                                ));
                            }
                        }
                    },
                    None => {}
                }
            }
        }
        for (&(f, g), _) in self.compose.iter() {
            if self.morphism(f).is_none() || self.morphism(g).is_none() {
                v.push(Violation::new(
                    "composition of unknown morphisms",
                    format!("pair ({f}, {g})"),
                ));
            }
        }
        if !v.is_empty() {
            return ValidationReport::from_violations(v);
        }

        // law loops over the same hashed lookup tables
        let composed = |f: u32, g: u32| compose_lookup.get(&(f, g)).copied();
        let mut by_source: HashMap<u32, Vec<&Morphism>> = HashMap::new();
        for m in &self.morphisms {
            by_source.entry(m.src).or_default().push(m);
        }
        let empty: Vec<&Morphism> = Vec::new();

        // identity laws
        for m in &self.morphisms {
            let id_s = self.identity_of(m.src).unwrap();
            let id_t = self.identity_of(m.tgt).unwrap();
            if composed(id_s, m.id) != Some(m.id) {
                v.push(Violation::new("left identity", format!("morphism {}", m.id)));
            }
            if composed(m.id, id_t) != Some(m.id) {
                v.push(Violation::new("right identity", format!("morphism {}", m.id)));
            }
        }

        // associativity over every composable triple
        for f in &self.morphisms {
            for g in by_source.get(&f.tgt).unwrap_or(&empty) {
                for h in by_source.get(&g.tgt).unwrap_or(&empty) {
                    let fg = composed(f.id, g.id);
                    let gh = composed(g.id, h.id);
                    let left = fg.and_then(|fg| composed(fg, h.id));
                    let right = gh.and_then(|gh| composed(f.id, gh));
                    if left != right || left.is_none() {
                        v.push(Violation::new(
                            "associativity",
                            format!("triple ({}, {}, {})", f.id, g.id, h.id),
                        ));
                    }
                }
            }
        }

        ValidationReport::from_violations(v)
    }

    pub fn is_valid(&self) -> bool {
        self.validate_category().ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CategoryNormalForm {
    pub object_count: usize,
    pub morphisms: Vec<(usize, usize)>,
    pub identities: Vec<(usize, usize)>,
    pub compose: Vec<(usize, usize, usize)>,
}
