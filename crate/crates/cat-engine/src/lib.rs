//! Categorical operations over explicitly tabulated finite categories:
//! opposites, compositions, functor categories, (co)limits by exhaustive
//! cone search, comma categories, Kan extensions and liftings with
//! universal-property verification, the composition functor, and
//! presentation-valued colimits with bounded saturation.

mod basic;
mod circdot;
mod comma;
mod error;
mod functor_cat;
mod kan;
mod limits_ops;
mod presentation;

pub use basic::{
    comp, coproduct_category, hcomp, op0, op1, op_nt, power_category, product_category,
    pullback_categories, vcomp, CoproductCategory, PowerCategory, ProductCategory,
    PullbackCategory,
};
pub use circdot::{composition_functor, CompositionFunctor};
pub use comma::{comma, core_of, coslice, iso_comma, slice, CommaCategory, CommaObject};
pub use error::EngineError;
pub use functor_cat::{all_functors, all_nat_trans, functor_category, pow1, FunctorCategory};
pub use kan::{
    factor_through, formula_discrepancy_count, kan_ext_induced, kan_ext_left,
    kan_ext_left_pointwise, kan_ext_right, kan_ext_right_pointwise, kan_lift_induced,
    kan_lift_left, kan_lift_left_induced, kan_lift_right, verify_left_lift_universal_property,
    verify_ran_universal_property, verify_right_lift_universal_property, whisker_left,
    whisker_right, KanPair,
};
pub use limits_ops::{all_cones, colimit, cone_mediators, limit, Cocone, Cone};
pub use presentation::{
    coequalizer_presented, pushout_presented, saturate, CoequalizerPresentation,
    PushoutPresentation, SaturatedCategory,
};
