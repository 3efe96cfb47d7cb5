use cat_core::*;
use proptest::prelude::*;

/// Random thin category: a random relation on up to five objects, closed
/// reflexively and transitively.
fn thin_category_strategy() -> impl Strategy<Value = ExplicitCategory> {
    (1usize..=5, proptest::collection::vec(any::<bool>(), 25)).prop_map(|(n, bits)| {
        let mut rel = vec![vec![false; n]; n];
        for (a, row) in rel.iter_mut().enumerate() {
            row[a] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if bits[a * 5 + b] {
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
    #[test]
    fn random_thin_categories_validate(c in thin_category_strategy()) {
        prop_assert!(c.validate_category().ok);
    }

    #[test]
    fn json_round_trip(c in thin_category_strategy()) {
        let js = serde_json::to_string(&c).unwrap();
        let back: ExplicitCategory = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(&c, &back);
        prop_assert!(c.structurally_equal(&back));
    }

    #[test]
    fn structural_equality_ignores_id_shifts(c in thin_category_strategy(), shift in 1u32..50) {
        let shifted = ExplicitCategory::from_parts(
            c.objects.iter().map(|o| o + shift).collect(),
            c.morphisms
                .iter()
                .map(|m| Morphism { id: m.id + shift, src: m.src + shift, tgt: m.tgt + shift })
                .collect(),
            c.identities.iter().map(|(o, m)| (o + shift, m + shift)).collect(),
            c.compose
                .iter()
                .map(|(&(f, g), &h)| ((f + shift, g + shift), h + shift))
                .collect(),
        );
        prop_assert!(c.structurally_equal(&shifted));
    }

    #[test]
    fn identity_functor_is_valid_and_self_equal(c in thin_category_strategy()) {
        let id = FunctorValue::identity(std::sync::Arc::new(c));
        prop_assert!(id.is_valid());
        prop_assert!(id.structurally_equal(&id.clone()));
    }
}
