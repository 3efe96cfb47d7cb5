//! Core value types for finite categorical structures.
//!
//! Everything in this crate is *fully tabulated*: a category is an explicit
//! list of objects, an explicit list of morphisms, an identity assignment and
//! a composition table. Functors and natural transformations are total maps
//! between such tables. All laws (identity, associativity, functoriality,
//! naturality) are checkable by exhaustive loops, and [`validate`] does
//! exactly that.
//!
//! Values are immutable once built; they can be freely shared between
//! threads. Object and morphism identity is positional: two structures are
//! [`structures_equal`] when their components agree after replacing every id
//! by its position in the owning ordered list.

mod category;
mod constants;
mod dot;
mod error;
mod functor;
mod iso;
mod nat_trans;
mod presented;
mod report;
mod value;

pub use category::{ExplicitCategory, Morphism};
pub use constants::{
    arrow_cat, bang_2_to_1, bang_from_0, chain_cat, discrete_cat, empty_cat, indiscrete_cat,
    iso_pair_cat, pointer_functor, source_functor, target_functor, terminal_cat, thin_category,
};
pub use dot::category_to_dot;
pub use error::CoreError;
pub use functor::FunctorValue;
pub use iso::{
    all_isomorphisms_between, categories_isomorphic, functors_isomorphic, CategoryIso,
    FunctorIsoWitness,
};
pub use nat_trans::NatTransValue;
pub use presented::{GeneratorArrow, GeneratorPath, PresentedCategory};
pub use report::{ValidationReport, Violation};
pub use value::{structures_equal, validate, StructureValue};

use serde::{Deserialize, Serialize};

/// Global size caps guarding every constructor. Functor-category and cone
/// enumeration are exponential, so anything that builds a category checks
/// these first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 64,
            max_morphisms: 512,
        }
    }
}

impl Limits {
    pub fn new(max_objects: usize, max_morphisms: usize) -> Self {
        Limits {
            max_objects,
            max_morphisms,
        }
    }

    /// Loose limits for internal constructions that are allowed to be bigger
    /// than user-facing values (e.g. intermediate products in tests).
    pub fn relaxed() -> Self {
        Limits {
            max_objects: 4096,
            max_morphisms: 1 << 20,
        }
    }

    pub fn check_category(&self, objects: usize, morphisms: usize) -> Result<(), CoreError> {
        if objects > self.max_objects || morphisms > self.max_morphisms {
            Err(CoreError::SizeLimit {
                objects,
                morphisms,
                max_objects: self.max_objects,
                max_morphisms: self.max_morphisms,
            })
        } else {
            Ok(())
        }
    }
}
