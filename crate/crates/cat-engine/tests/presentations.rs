use cat_core::*;
use cat_engine::*;
use std::sync::Arc;

#[test]
fn coequalizer_of_source_and_target_presents_the_natural_numbers() {
    // s, t : 1 => 2 coequalize to the one-object free monoid on one
    // generator: 1 object, 1 arrow, no relations; it never saturates
    let s = source_functor();
    let t = target_functor();
    let ce = coequalizer_presented(&s, &t).unwrap();
    assert_eq!(ce.presentation.generator_objects.len(), 1);
    assert_eq!(ce.presentation.generator_arrows.len(), 1);
    assert!(ce.presentation.relations.is_empty());

    let got = saturate(&ce.presentation, 10, &Limits::default());
    assert!(matches!(got, Err(EngineError::PossiblyInfinite { .. })));
}

#[test]
fn coequalizer_into_the_groupoid_presents_the_integers() {
    // s, t : 1 => 2~ give one object with an invertible generator
    let sto = Arc::new(iso_pair_cat());
    let s = pointer_functor(sto.clone(), 0);
    let t = pointer_functor(sto.clone(), 1);
    let ce = coequalizer_presented(&s, &t).unwrap();
    assert_eq!(ce.presentation.generator_objects.len(), 1);
    assert_eq!(ce.presentation.generator_arrows.len(), 2);
    // the two generators are mutually inverse by the relations
    let empty_rhs = ce
        .presentation
        .relations
        .iter()
        .filter(|(l, r)| l.arrows.len() == 2 && r.arrows.is_empty())
        .count();
    assert_eq!(empty_rhs, 2);

    let got = saturate(&ce.presentation, 12, &Limits::default());
    assert!(matches!(got, Err(EngineError::PossiblyInfinite { .. })));
}

#[test]
fn coequalizer_of_identical_functors_presents_the_target() {
    let three = Arc::new(chain_cat(3));
    let id = FunctorValue::identity(three.clone());
    let ce = coequalizer_presented(&id, &id).unwrap();
    assert_eq!(ce.presentation.generator_objects.len(), 3);
    let sat = saturate(&ce.presentation, 8, &Limits::default()).unwrap();
    assert!(categories_isomorphic(&sat.category, &three, &Limits::default())
        .unwrap()
        .is_some());
}

#[test]
fn saturate_identified_parallel_generators() {
    // two parallel generators identified by a relation: 2 objects, 3
    // morphisms
    let pres = PresentedCategory {
        generator_objects: vec![0, 1],
        generator_arrows: vec![
            GeneratorArrow { id: 0, src: 0, tgt: 1 },
            GeneratorArrow { id: 1, src: 0, tgt: 1 },
        ],
        relations: vec![(GeneratorPath::single(0, 0), GeneratorPath::single(0, 1))],
    };
    let sat = saturate(&pres, 6, &Limits::default()).unwrap();
    assert_eq!(sat.category.object_count(), 2);
    assert_eq!(sat.category.morphism_count(), 3);
    assert_eq!(
        sat.generator_morphism[&0],
        sat.generator_morphism[&1]
    );
}

#[test]
fn saturate_free_chain_presentation() {
    // the free category on 0 -> 1 -> 2 -> 3 is the 4-chain
    let pres = PresentedCategory {
        generator_objects: vec![0, 1, 2, 3],
        generator_arrows: vec![
            GeneratorArrow { id: 0, src: 0, tgt: 1 },
            GeneratorArrow { id: 1, src: 1, tgt: 2 },
            GeneratorArrow { id: 2, src: 2, tgt: 3 },
        ],
        relations: vec![],
    };
    let sat = saturate(&pres, 8, &Limits::default()).unwrap();
    assert!(categories_isomorphic(&sat.category, &chain_cat(4), &Limits::default())
        .unwrap()
        .is_some());
}

#[test]
fn pushout_glues_two_chains_end_to_end() {
    // pushout of 2-chain <- 1 -> 2-chain along endpoints glues to a 3-chain
    let two = Arc::new(chain_cat(2));
    let f = pointer_functor(two.clone(), 1); // 1 -> end of the left chain
    let g = pointer_functor(two.clone(), 0); // 1 -> start of the right chain
    let po = pushout_presented(&f, &g, &Limits::default()).unwrap();
    let sat = saturate(&po.coequalizer.presentation, 8, &Limits::default()).unwrap();
    assert!(categories_isomorphic(&sat.category, &chain_cat(3), &Limits::default())
        .unwrap()
        .is_some());
}

#[test]
fn collapse_of_truncated_integers_gives_the_groupoid_chain() {
    // the coequalizer collapsing the nonnegative half of the truncated
    // integer groupoid yields the groupoid chain: objects {-N..N} with all
    // of {0..N} identified
    let n = 2usize;
    // truncated zeta_i: indiscrete on 2N+1 objects, object k = position
    let zeta = Arc::new(indiscrete_cat(2 * n + 1));
    // omega chain 0..N maps in twice: inclusion as objects N..2N
    // (nonnegatives) and the constant at object N (zero)
    let chain = Arc::new(chain_cat(n + 1));
    let inc = {
        let object_map: std::collections::BTreeMap<u32, u32> = chain
            .objects
            .iter()
            .map(|&o| (o, o + n as u32))
            .collect();
        let morphism_map: std::collections::BTreeMap<u32, u32> = chain
            .morphisms
            .iter()
            .map(|m| (m.id, zeta.hom(object_map[&m.src], object_map[&m.tgt])[0]))
            .collect();
        FunctorValue::new(chain.clone(), zeta.clone(), object_map, morphism_map)
    };
    let constant_zero = {
        let object_map: std::collections::BTreeMap<u32, u32> =
            chain.objects.iter().map(|&o| (o, n as u32)).collect();
        let morphism_map: std::collections::BTreeMap<u32, u32> = chain
            .morphisms
            .iter()
            .map(|m| (m.id, zeta.identity_of(n as u32).unwrap()))
            .collect();
        FunctorValue::new(chain.clone(), zeta.clone(), object_map, morphism_map)
    };
    assert!(inc.is_valid() && constant_zero.is_valid());

    let ce = coequalizer_presented(&inc, &constant_zero).unwrap();
    assert_eq!(ce.presentation.generator_objects.len(), n + 1);
    let sat = saturate(&ce.presentation, 6, &Limits::default()).unwrap();
    assert!(
        categories_isomorphic(&sat.category, &indiscrete_cat(n + 1), &Limits::default())
            .unwrap()
            .is_some(),
        "collapapsed category should be the groupoid chain on n+1 objects"
    );
}
