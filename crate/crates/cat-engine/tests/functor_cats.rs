use cat_core::*;
use cat_engine::*;
use std::sync::Arc;

#[test]
fn pow0_of_empty_source_is_terminal() {
    let limits = Limits::default();
    let empty = Arc::new(empty_cat());
    let b = Arc::new(chain_cat(3));
    let fc = functor_category(&empty, &b, &limits).unwrap();
    assert!(fc.category.structurally_equal(&terminal_cat()));
}

#[test]
fn pow0_of_terminal_source_is_the_target() {
    let limits = Limits::default();
    let one = Arc::new(terminal_cat());
    for b in [arrow_cat(), chain_cat(3), iso_pair_cat()] {
        let b = Arc::new(b);
        let fc = functor_category(&one, &b, &limits).unwrap();
        assert!(
            categories_isomorphic(&fc.category, &b, &limits)
                .unwrap()
                .is_some(),
            "b^1 should be isomorphic to b"
        );
    }
}

#[test]
fn pow0_two_two_is_the_three_chain() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let fc = functor_category(&two, &two, &limits).unwrap();
    assert_eq!(fc.functors.len(), 3);
    assert_eq!(fc.transformations.len(), 6);
    assert!(categories_isomorphic(&fc.category, &chain_cat(3), &limits)
        .unwrap()
        .is_some());
}

#[test]
fn functor_category_validates() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let sto = Arc::new(iso_pair_cat());
    for (a, b) in [(two.clone(), sto.clone()), (sto, two)] {
        let fc = functor_category(&a, &b, &limits).unwrap();
        assert!(fc.category.validate_category().ok);
        for f in &fc.functors {
            assert!(f.is_valid());
        }
        for n in &fc.transformations {
            assert!(n.is_valid());
        }
    }
}

#[test]
fn pow1_identity_is_identity() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let id2 = FunctorValue::identity(two.clone());
    let p = pow1(&id2, &id2, &limits).unwrap();
    assert!(p.is_valid());
    let fc = functor_category(&two, &two, &limits).unwrap();
    assert!(p.structurally_equal(&FunctorValue::identity(fc.category.clone())));
}

#[test]
fn pow1_evaluation_at_source() {
    // Pow1(s, Id_2) : 2^2 -> 2^1 sends each endofunctor to its value at
    // object 0; checked through the enumerated functor lists.
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let s = source_functor();
    let id2 = FunctorValue::identity(two.clone());
    let p = pow1(&s, &id2, &limits).unwrap();
    assert!(p.is_valid());

    let dom = functor_category(&two, &two, &limits).unwrap();
    let cod = functor_category(&s.source, &two, &limits).unwrap();
    for (i, h) in dom.functors.iter().enumerate() {
        let img = p.apply_object(i as u32).unwrap();
        let img_fun = &cod.functors[cod.category.object_position(img).unwrap()];
        // the functor 1 -> 2 picking h(0)
        assert_eq!(img_fun.apply_object(0), h.apply_object(0));
    }
}

#[test]
fn pow1_mismatch_is_an_error() {
    let limits = Limits::default();
    let s = source_functor();
    // Pow1(s, s) needs 2^2 -> ... with middle categories 2 and 1
    let got = pow1(&s, &s, &limits).and_then(|p| comp(&p, &p));
    assert!(got.is_err());
}

#[test]
fn comma_of_identities_is_the_arrow_category() {
    let limits = Limits::default();
    for c in [arrow_cat(), chain_cat(3), iso_pair_cat(), discrete_cat(2)] {
        let c = Arc::new(c);
        let id = FunctorValue::identity(c.clone());
        let cm = comma(&id, &id, &limits).unwrap();
        let fc = functor_category(&Arc::new(arrow_cat()), &c, &limits).unwrap();
        assert!(
            categories_isomorphic(&cm.base, &fc.category, &limits)
                .unwrap()
                .is_some(),
            "comma(Id, Id) should be C^2"
        );
        assert!(cm.proj_left.is_valid() && cm.proj_right.is_valid());
    }
}

#[test]
fn arrow_category_of_two_is_three_chain() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let id = FunctorValue::identity(two.clone());
    let cm = comma(&id, &id, &limits).unwrap();
    assert_eq!(cm.base.object_count(), 3);
    assert!(categories_isomorphic(&cm.base, &chain_cat(3), &limits)
        .unwrap()
        .is_some());
}
