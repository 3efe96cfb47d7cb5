use crate::category::ExplicitCategory;
use crate::functor::FunctorValue;
use crate::nat_trans::NatTransValue;
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// The runtime value universe of a Sammy program: a category, a functor, a
/// natural transformation, or the opaque `Cat` constant. `Cat` has no table;
/// every tabulation-requiring operation on it fails upstream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum StructureValue {
    Category { value: Arc<ExplicitCategory> },
    Functor { value: FunctorValue },
    NatTrans { value: NatTransValue },
    OpaqueCat,
}

impl StructureValue {
    pub fn category(c: ExplicitCategory) -> Self {
        StructureValue::Category { value: Arc::new(c) }
    }

    pub fn functor(f: FunctorValue) -> Self {
        StructureValue::Functor { value: f }
    }

    pub fn nat_trans(n: NatTransValue) -> Self {
        StructureValue::NatTrans { value: n }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            StructureValue::Category { .. } => "category",
            StructureValue::Functor { .. } => "functor",
            StructureValue::NatTrans { .. } => "nattrans",
            StructureValue::OpaqueCat => "opaque Cat",
        }
    }

    pub fn as_category(&self) -> Option<&Arc<ExplicitCategory>> {
        match self {
            StructureValue::Category { value } => Some(value),
            _ => None,
        }
    }

    pub fn as_functor(&self) -> Option<&FunctorValue> {
        match self {
            StructureValue::Functor { value } => Some(value),
            _ => None,
        }
    }

    pub fn as_nat_trans(&self) -> Option<&NatTransValue> {
        match self {
            StructureValue::NatTrans { value } => Some(value),
            _ => None,
        }
    }
}

/// Validates the wrapped value against all of its laws.
pub fn validate(s: &StructureValue) -> ValidationReport {
    match s {
        StructureValue::Category { value } => value.validate_category(),
        StructureValue::Functor { value } => value.validate_functor(),
        StructureValue::NatTrans { value } => value.validate_nat_trans(),
        StructureValue::OpaqueCat => ValidationReport::ok(),
    }
}

/// Structural equality: same tag, identical content after index
/// normalization. Cross-kind comparisons are `false`, never an error.
pub fn structures_equal(a: &StructureValue, b: &StructureValue) -> bool {
    match (a, b) {
        (StructureValue::Category { value: x }, StructureValue::Category { value: y }) => {
            x.structurally_equal(y)
        }
        (StructureValue::Functor { value: x }, StructureValue::Functor { value: y }) => {
            x.structurally_equal(y)
        }
        (StructureValue::NatTrans { value: x }, StructureValue::NatTrans { value: y }) => {
            x.structurally_equal(y)
        }
        (StructureValue::OpaqueCat, StructureValue::OpaqueCat) => true,
        _ => false,
    }
}
