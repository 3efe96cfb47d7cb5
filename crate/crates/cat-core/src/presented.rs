use crate::report::{ValidationReport, Violation};
use serde::{Deserialize, Serialize};

/// A generating arrow of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorArrow {
    pub id: u32,
    pub src: u32,
    pub tgt: u32,
}

/// A composable path of generator arrows. `arrows` is listed in diagram
/// order (first arrow applied first); the empty path is the identity at
/// `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorPath {
    pub start: u32,
    pub arrows: Vec<u32>,
}

impl GeneratorPath {
    pub fn identity(start: u32) -> Self {
        GeneratorPath {
            start,
            arrows: Vec::new(),
        }
    }

    pub fn single(start: u32, arrow: u32) -> Self {
        GeneratorPath {
            start,
            arrows: vec![arrow],
        }
    }
}

/// A generators-and-relations presentation of a category. Tabulation into an
/// `ExplicitCategory` is a separate, bounded, failure-admitting step — some
/// presentations (the natural-number monoid, the integers) are genuinely
/// infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedCategory {
    pub generator_objects: Vec<u32>,
    pub generator_arrows: Vec<GeneratorArrow>,
    pub relations: Vec<(GeneratorPath, GeneratorPath)>,
}

impl PresentedCategory {
    pub fn arrow(&self, id: u32) -> Option<&GeneratorArrow> {
        self.generator_arrows.iter().find(|a| a.id == id)
    }

    /// Endpoints of a path: `None` when the path is not composable.
    pub fn path_endpoints(&self, path: &GeneratorPath) -> Option<(u32, u32)> {
        let mut at = path.start;
        if !self.generator_objects.contains(&path.start) {
            return None;
        }
        for &a in &path.arrows {
            let arrow = self.arrow(a)?;
            if arrow.src != at {
                return None;
            }
            at = arrow.tgt;
        }
        Some((path.start, at))
    }

    pub fn validate_presentation(&self) -> ValidationReport {
        let mut v = Vec::new();
        for a in &self.generator_arrows {
            if !self.generator_objects.contains(&a.src) || !self.generator_objects.contains(&a.tgt)
            {
                v.push(Violation::new(
                    "unknown object in generator",
                    format!("arrow {} : {} -> {}", a.id, a.src, a.tgt),
                ));
            }
        }
        for (i, (lhs, rhs)) in self.relations.iter().enumerate() {
            match (self.path_endpoints(lhs), self.path_endpoints(rhs)) {
                (Some(l), Some(r)) => {
                    if l != r {
                        v.push(Violation::new(
                            "relation endpoints differ",
                            format!("relation {i}: {l:?} vs {r:?}"),
                        ));
                    }
                }
                _ => v.push(Violation::new(
                    "relation path not composable",
                    format!("relation {i}"),
                )),
            }
        }
        ValidationReport::from_violations(v)
    }

    pub fn is_valid(&self) -> bool {
        self.validate_presentation().ok
    }
}
