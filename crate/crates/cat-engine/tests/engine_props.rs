use cat_core::*;
use cat_engine::*;
use proptest::prelude::*;
use std::sync::Arc;

fn thin_category_strategy() -> impl Strategy<Value = ExplicitCategory> {
    (1usize..=4, proptest::collection::vec(any::<bool>(), 16)).prop_map(|(n, bits)| {
        let mut rel = vec![vec![false; n]; n];
        for (a, row) in rel.iter_mut().enumerate() {
            row[a] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if bits[a * 4 + b] {
                    rel[a][b] = true;
                }
            }
        }
        for _ in 0..n {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if rel[a][b] && rel[b][c] {
                            rel[a][c] = true;
                        }
                    }
                }
            }
        }
        thin_category(n, |a, b| rel[a][b])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn op0_is_an_involution(c in thin_category_strategy()) {
        prop_assert_eq!(op0(&op0(&c)), c);
    }

    #[test]
    fn op0_preserves_validity(c in thin_category_strategy()) {
        prop_assert!(op0(&c).validate_category().ok);
    }

    #[test]
    fn core_is_an_idempotent_groupoid(c in thin_category_strategy()) {
        let core = core_of(&c);
        prop_assert!(core.validate_category().ok);
        prop_assert!(core.morphisms.iter().all(|m| core.is_invertible(m.id)));
        prop_assert!(core_of(&core).structurally_equal(&core));
    }

    #[test]
    fn functor_enumeration_produces_valid_functors(
        a in thin_category_strategy(),
        b in thin_category_strategy(),
    ) {
        let a = Arc::new(a);
        let b = Arc::new(b);
        for f in all_functors(&a, &b, &Limits::relaxed()) {
            prop_assert!(f.is_valid());
        }
    }

    #[test]
    fn comp_is_associative_on_random_chains(
        a in thin_category_strategy(),
        b in thin_category_strategy(),
        c in thin_category_strategy(),
        d in thin_category_strategy(),
        idx in proptest::collection::vec(any::<prop::sample::Index>(), 3),
    ) {
        let limits = Limits::relaxed();
        let (a, b, c, d) = (Arc::new(a), Arc::new(b), Arc::new(c), Arc::new(d));
        let fs = all_functors(&a, &b, &limits);
        let gs = all_functors(&b, &c, &limits);
        let hs = all_functors(&c, &d, &limits);
        if fs.is_empty() || gs.is_empty() || hs.is_empty() {
            return Ok(());
        }
        let f = &fs[idx[0].index(fs.len())];
        let g = &gs[idx[1].index(gs.len())];
        let h = &hs[idx[2].index(hs.len())];
        let left = comp(&comp(f, g).unwrap(), h).unwrap();
        let right = comp(f, &comp(g, h).unwrap()).unwrap();
        prop_assert!(left.structurally_equal(&right));
    }
}
