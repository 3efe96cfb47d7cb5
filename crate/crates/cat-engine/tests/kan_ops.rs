use cat_core::*;
use cat_engine::*;
use std::collections::BTreeMap;
use std::sync::Arc;

/// The monotone surjection 3-chain -> 2-chain collapsing {0,1}.
fn galois_g() -> FunctorValue {
    let three = Arc::new(chain_cat(3));
    let two = Arc::new(chain_cat(2));
    let object_map: BTreeMap<u32, u32> = [(0, 0), (1, 0), (2, 1)].into_iter().collect();
    let mut morphism_map = BTreeMap::new();
    for m in &three.morphisms {
        let s = object_map[&m.src];
        let t = object_map[&m.tgt];
        morphism_map.insert(m.id, two.hom(s, t)[0]);
    }
    let f = FunctorValue::new(three, two, object_map, morphism_map);
    assert!(f.is_valid());
    f
}

#[test]
fn kan_ext_along_bang_recovers_the_initial_pointer() {
    // KanEx(! : 2 -> 1, Id_2) is the left adjoint of !, the pointer to 0
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let bang = bang_2_to_1();
    let id2 = FunctorValue::identity(two.clone());
    let pair = kan_ext_right(&bang, &id2, &limits).unwrap();
    assert!(pair
        .functor
        .structurally_equal(&pointer_functor(two.clone(), 0)));
    assert!(verify_ran_universal_property(&bang, &id2, &pair.functor, &pair.alpha, &limits).unwrap());
}

#[test]
fn kan_ext_along_identity_is_identity() {
    let limits = Limits::default();
    let s = source_functor();
    let id1 = FunctorValue::identity(s.source.clone());
    let pair = kan_ext_right(&id1, &s, &limits).unwrap();
    assert!(pair.functor.structurally_equal(&s));
    assert!(pair
        .alpha
        .structurally_equal(&NatTransValue::identity(&s)));
}

#[test]
fn kan_ext_galois_adjoint() {
    // for g collapsing {0,1} |-> 0, 2 |-> 1, the right Kan extension of the
    // identity along g is the left adjoint: 0 |-> 0, 1 |-> 2
    let limits = Limits::default();
    let g = galois_g();
    let id3 = FunctorValue::identity(g.source.clone());
    let pair = kan_ext_right(&g, &id3, &limits).unwrap();
    assert_eq!(pair.functor.apply_object(0), Some(0));
    assert_eq!(pair.functor.apply_object(1), Some(2));
}

#[test]
fn kan_ext_induced_of_the_pair_itself_is_identity() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let bang = bang_2_to_1();
    let id2 = FunctorValue::identity(two.clone());
    let pair = kan_ext_right(&bang, &id2, &limits).unwrap();
    let gamma = kan_ext_induced(&bang, &id2, &pair.functor, &pair.alpha, &limits).unwrap();
    assert!(gamma.structurally_equal(&NatTransValue::identity(&pair.functor)));
}

#[test]
fn kan_ext_induced_galois_unit() {
    // H = constant at 0 with the unique beta : H.G => Id; the mediator into
    // the adjoint R = (0, 2) has components id_0 at 0 and 0 -> 2 at 1
    let limits = Limits::default();
    let g = galois_g();
    let three = g.source.clone();
    let two_chain = g.target.clone();
    let id3 = FunctorValue::identity(three.clone());

    let h = FunctorValue::constant_to_terminal(two_chain.clone(), Arc::new(terminal_cat()));
    let h = comp(&h, &pointer_functor(three.clone(), 0)).unwrap(); // const 0 : 2-chain -> 3-chain
    let hg = comp(&g, &h).unwrap();
    let betas = all_nat_trans(&hg, &id3);
    assert_eq!(betas.len(), 1);
    let gamma = kan_ext_induced(&g, &id3, &h, &betas[0], &limits).unwrap();
    assert_eq!(gamma.component(0), Some(three.identity_of(0).unwrap()));
    assert_eq!(gamma.component(1), Some(three.hom(0, 2)[0]));
}

#[test]
fn kan_ext_induced_rejects_bad_beta() {
    let limits = Limits::default();
    let two = Arc::new(arrow_cat());
    let bang = bang_2_to_1();
    let id2 = FunctorValue::identity(two.clone());
    // H = s has the right shape 1 -> 2, but this beta has the wrong
    // endpoints (an identity on !, not H.G => F)
    let h = source_functor();
    let bad = NatTransValue::identity(&bang);
    assert!(matches!(
        kan_ext_induced(&bang, &id2, &h, &bad, &limits),
        Err(EngineError::InvalidInput { .. })
    ));
    // an H that cannot even compose with G is a mismatch error
    assert!(kan_ext_induced(&bang, &id2, &id2, &bad, &limits).is_err());
}

#[test]
fn kan_ext_left_via_op_is_right_adjoint_for_galois() {
    // the left Kan extension of the identity along g is the right adjoint:
    // 0 |-> 1, 1 |-> 2
    let limits = Limits::default();
    let g = galois_g();
    let id3 = FunctorValue::identity(g.source.clone());
    let pair = kan_ext_left(&g, &id3, &limits).unwrap();
    assert_eq!(pair.functor.apply_object(0), Some(1));
    assert_eq!(pair.functor.apply_object(1), Some(2));
}

#[test]
fn kan_lift_left_of_pointer_along_source() {
    // lifting P_0 : 1 -> 2 along s : 1 -> 2 gives Id_1 with identity alpha
    let limits = Limits::default();
    let s = source_functor();
    let p0 = pointer_functor(Arc::new(arrow_cat()), 0);
    let pair = kan_lift_left(&s, &p0, &limits).unwrap();
    assert!(pair
        .functor
        .structurally_equal(&FunctorValue::identity(s.source.clone())));
    assert!(pair
        .alpha
        .structurally_equal(&NatTransValue::identity(&p0)));
}

/// The clamped successor on a chain.
fn clamped_succ(chain: &Arc<ExplicitCategory>) -> FunctorValue {
    let n = chain.object_count() as u32 - 1;
    let object_map: BTreeMap<u32, u32> = chain
        .objects
        .iter()
        .map(|&o| (o, (o + 1).min(n)))
        .collect();
    let morphism_map: BTreeMap<u32, u32> = chain
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                chain.hom(object_map[&m.src], object_map[&m.tgt])[0],
            )
        })
        .collect();
    FunctorValue::new(chain.clone(), chain.clone(), object_map, morphism_map)
}

#[test]
fn predecessor_by_left_lifting_on_chains() {
    let limits = Limits::default();
    let chain = Arc::new(chain_cat(4));
    let succ = clamped_succ(&chain);
    assert!(succ.is_valid());
    for i in 0..4u32 {
        let pi = pointer_functor(chain.clone(), i);
        let pair = kan_lift_left(&succ, &pi, &limits).unwrap();
        let expect = pointer_functor(chain.clone(), i.saturating_sub(1));
        assert!(
            pair.functor.structurally_equal(&expect),
            "pred(P_{i}) should be P_{}",
            i.saturating_sub(1)
        );
    }
}

#[test]
fn kan_lift_right_and_induced_on_chains() {
    let limits = Limits::default();
    let chain = Arc::new(chain_cat(3));
    let succ = clamped_succ(&chain);
    let p2 = pointer_functor(chain.clone(), 2);
    let pair = kan_lift_right(&succ, &p2, &limits).unwrap();
    assert!(verify_right_lift_universal_property(&succ, &p2, &pair.functor, &pair.alpha, &limits)
        .unwrap());

    // the mediator for (H, beta) = (R, alpha) is the identity
    let gamma = kan_lift_induced(&succ, &p2, &pair.functor, &pair.alpha, &limits).unwrap();
    assert!(gamma.structurally_equal(&NatTransValue::identity(&pair.functor)));
}

#[test]
fn kan_lift_induced_rejects_bad_beta() {
    let limits = Limits::default();
    let chain = Arc::new(chain_cat(3));
    let succ = clamped_succ(&chain);
    let p2 = pointer_functor(chain.clone(), 2);
    let bad = NatTransValue::identity(&succ);
    assert!(matches!(
        kan_lift_induced(&succ, &p2, &p2, &bad, &limits),
        Err(EngineError::InvalidInput { .. })
    ));
}

#[test]
fn factor_through_inclusion_of_chain_in_groupoid() {
    // 0,0,1 factors through 2 -> 2~; 0,1,0 does not
    let sto = Arc::new(iso_pair_cat());
    let two = Arc::new(arrow_cat());
    let inc = {
        let object_map: BTreeMap<u32, u32> = [(0, 0), (1, 1)].into_iter().collect();
        let mut morphism_map = BTreeMap::new();
        for m in &two.morphisms {
            morphism_map.insert(m.id, sto.hom(m.src, m.tgt)[0]);
        }
        FunctorValue::new(two.clone(), sto.clone(), object_map, morphism_map)
    };
    assert!(inc.is_valid());

    let seq = |vals: &[u32]| -> FunctorValue {
        let chain = Arc::new(chain_cat(vals.len()));
        let object_map: BTreeMap<u32, u32> = chain
            .objects
            .iter()
            .map(|&o| (o, vals[o as usize]))
            .collect();
        let morphism_map: BTreeMap<u32, u32> = chain
            .morphisms
            .iter()
            .map(|m| (m.id, sto.hom(object_map[&m.src], object_map[&m.tgt])[0]))
            .collect();
        FunctorValue::new(chain, sto.clone(), object_map, morphism_map)
    };

    let mono = seq(&[0, 0, 1]);
    let lifted = factor_through(&inc, &mono).expect("monotone sequence factors");
    assert!(comp(&lifted, &inc).unwrap().structurally_equal(&mono));

    let drop = seq(&[0, 1, 0]);
    assert!(factor_through(&inc, &drop).is_none());
}

#[test]
fn derived_limits_through_kan_extension_match_direct_limits() {
    // products / pullbacks computed as Ran along ! agree with the cone
    // search on the same diagrams
    let limits = Limits::default();
    let three = Arc::new(chain_cat(3));
    let one = Arc::new(terminal_cat());

    // product of objects 1 and 2 in the 3-chain
    let j = Arc::new(discrete_cat(2));
    let object_map: BTreeMap<u32, u32> = [(0, 1), (1, 2)].into_iter().collect();
    let morphism_map: BTreeMap<u32, u32> = [
        (0, three.identity_of(1).unwrap()),
        (1, three.identity_of(2).unwrap()),
    ]
    .into_iter()
    .collect();
    let d = FunctorValue::new(j.clone(), three.clone(), object_map, morphism_map);
    let bang = FunctorValue::constant_to_terminal(j.clone(), one.clone());

    let via_kan = kan_ext_right(&bang, &d, &limits).unwrap();
    let via_cones = limit(&d, &limits).unwrap();
    assert_eq!(via_kan.functor.apply_object(0), Some(via_cones.apex));

    // pullback of the cospan 0 -> 2 <- 1: the cospan category is thin
    let cospan = Arc::new(thin_category(3, |a, b| a == b || (b == 2 && a < 2)));
    let omap: BTreeMap<u32, u32> = [(0, 0), (1, 1), (2, 2)].into_iter().collect();
    let mmap: BTreeMap<u32, u32> = cospan
        .morphisms
        .iter()
        .map(|m| (m.id, three.hom(omap[&m.src], omap[&m.tgt])[0]))
        .collect();
    let d2 = FunctorValue::new(cospan.clone(), three.clone(), omap, mmap);
    let bang2 = FunctorValue::constant_to_terminal(cospan, one);
    let via_kan2 = kan_ext_right(&bang2, &d2, &limits).unwrap();
    let via_cones2 = limit(&d2, &limits).unwrap();
    assert_eq!(via_kan2.functor.apply_object(0), Some(via_cones2.apex));
    assert_eq!(via_cones2.apex, 0);
}

/// The two-object category with a parallel pair of arrows.
fn parallel_pair() -> ExplicitCategory {
    let objects = vec![0, 1];
    let morphisms = vec![
        Morphism { id: 0, src: 0, tgt: 0 },
        Morphism { id: 1, src: 1, tgt: 1 },
        Morphism { id: 2, src: 0, tgt: 1 },
        Morphism { id: 3, src: 0, tgt: 1 },
    ];
    let identities: BTreeMap<u32, u32> = [(0, 0), (1, 1)].into_iter().collect();
    let mut compose = BTreeMap::new();
    for m in [0u32, 1, 2, 3] {
        let (s, t) = if m < 2 { (m, m) } else { (0, 1) };
        compose.insert((identities[&s], m), m);
        compose.insert((m, identities[&t]), m);
    }
    compose.insert((0, 0), 0);
    compose.insert((1, 1), 1);
    ExplicitCategory::from_parts(objects, morphisms, identities, compose)
}

#[test]
fn equalizer_routes_agree() {
    // the equalizer diagram is a functor from the parallel-pair category;
    // direct cone search and the Kan extension along ! must agree on both
    // existence and value
    let limits = Limits::default();
    let pp = Arc::new(parallel_pair());
    let j = Arc::new(parallel_pair());
    let one = Arc::new(terminal_cat());
    let bang = FunctorValue::constant_to_terminal(j.clone(), one);

    // equalizer of the distinct parallel pair: no cone commutes, no limit
    let d_distinct = FunctorValue::identity(pp.clone());
    assert!(matches!(limit(&d_distinct, &limits), Err(EngineError::NoLimit)));
    assert!(matches!(
        kan_ext_right(&bang, &d_distinct, &limits),
        Err(EngineError::NoKanExtension)
    ));

    // equalizer of an arrow with itself: the domain
    let mut object_map = BTreeMap::new();
    object_map.insert(0u32, 0u32);
    object_map.insert(1, 1);
    let mut morphism_map = BTreeMap::new();
    morphism_map.insert(0u32, 0u32);
    morphism_map.insert(1, 1);
    morphism_map.insert(2, 2);
    morphism_map.insert(3, 2); // both generators to the same arrow
    let d_equal = FunctorValue::new(j.clone(), pp.clone(), object_map, morphism_map);
    assert!(d_equal.is_valid());
    let direct = limit(&d_equal, &limits).unwrap();
    assert_eq!(direct.apex, 0);
    let via_kan = kan_ext_right(&bang, &d_equal, &limits).unwrap();
    assert_eq!(via_kan.functor.apply_object(0), Some(0));
}

#[test]
fn kan_pair_soundness_on_a_small_pair_sweep() {
    // exhaustive functor pairs among 1, 2 and the 2-chain; the acceptance
    // suite runs the full family
    let limits = Limits::default();
    let fam: Vec<Arc<ExplicitCategory>> = vec![
        Arc::new(terminal_cat()),
        Arc::new(arrow_cat()),
    ];
    for c in &fam {
        for a in &fam {
            for b in &fam {
                for g in all_functors(c, a, &limits) {
                    for f in all_functors(c, b, &limits) {
                        if let Ok(pair) = kan_ext_right(&g, &f, &limits) {
                            assert!(verify_ran_universal_property(
                                &g, &f, &pair.functor, &pair.alpha, &limits
                            )
                            .unwrap());
                        }
                    }
                }
            }
        }
    }
}
