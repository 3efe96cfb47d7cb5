use cat_core::Limits;
use stdlib_constructions::*;

fn exists_scan(bound: usize, p: impl Fn(&[usize]) -> bool, xs: &[usize]) -> bool {
    (0..=bound).any(|y| {
        let mut t = xs.to_vec();
        t.push(y);
        p(&t)
    })
}

#[test]
fn exists_quantifier_matches_scan_on_unary_predicates() {
    let limits = Limits::relaxed();
    let bound = 4;
    let (base, power2) = groupoid_power(bound, 2, &limits).unwrap();
    let preds: Vec<(&str, Box<dyn Fn(&[usize]) -> bool>)> = vec![
        ("eq", Box::new(|t: &[usize]| t[0] == t[1])),
        ("never", Box::new(|_| false)),
        ("pin", Box::new(|t: &[usize]| t[1] == 3 && t[0] == 0)),
        ("lt", Box::new(|t: &[usize]| t[0] < t[1])),
    ];
    for (name, p) in &preds {
        let psi = predicate_functor(&base, &power2, p);
        let phi = exists_quantifier(&psi, &base, &power2, 1, &limits).unwrap();
        for x in 0..=bound {
            let got = phi.apply_object(x as u32) == Some(1);
            let want = exists_scan(bound, p, &[x]);
            assert_eq!(got, want, "{name} at {x}");
        }
    }
}

#[test]
fn forall_is_not_exists_not() {
    let limits = Limits::relaxed();
    let bound = 4;
    let (base, power2) = groupoid_power(bound, 2, &limits).unwrap();
    let p = |t: &[usize]| t[1] >= t[0];
    let psi = predicate_functor(&base, &power2, p);
    let phi = forall_quantifier(&psi, &base, &power2, 1, &limits).unwrap();
    for x in 0..=bound {
        let want = (0..=bound).all(|y| p(&[x, y]));
        assert_eq!(phi.apply_object(x as u32) == Some(1), want, "at {x}");
    }
}

#[test]
fn binary_exists_at_small_truncation() {
    let limits = Limits::relaxed();
    let bound = 2;
    let (base, power3) = groupoid_power(bound, 3, &limits).unwrap();
    let p = |t: &[usize]| t[0] + t[1] == t[2];
    let psi = predicate_functor(&base, &power3, p);
    let phi = exists_quantifier(&psi, &base, &power3, 2, &limits).unwrap();
    let (_, power2) = groupoid_power(bound, 2, &limits).unwrap();
    for a in 0..=bound {
        for b in 0..=bound {
            let idx = power2.object_index(&[a as u32, b as u32]).unwrap();
            let want = exists_scan(bound, &p, &[a, b]);
            assert_eq!(phi.apply_object(idx) == Some(1), want, "at ({a},{b})");
        }
    }
}

#[test]
fn not_functor_swaps() {
    let sto = std::sync::Arc::new(cat_core::iso_pair_cat());
    let not = not_functor(&sto);
    assert_eq!(not.apply_object(0), Some(1));
    assert_eq!(not.apply_object(1), Some(0));
    assert!(not.is_valid());
}

#[test]
fn monotone_factoring_examples() {
    let limits = Limits::default();
    let chain = build_number_category(NumberKind::Chain, 6, &limits).unwrap();
    let case = |bits: &[u8]| {
        let f = sequence_functor(&chain, bits);
        let got = monotone_factor_halt(&f);
        (got.factors, got.value)
    };
    assert_eq!(case(&[0, 0, 0, 0, 0, 0, 0]), (true, Some(0)));
    assert_eq!(case(&[0, 0, 0, 1, 1, 1, 1]), (true, Some(1)));
    assert_eq!(case(&[0, 1, 0, 0, 0, 0, 0]), (false, None));
}

#[test]
fn monotone_factoring_agrees_with_scan_exhaustively_small() {
    let limits = Limits::default();
    let n = 5usize;
    let chain = build_number_category(NumberKind::Chain, n - 1, &limits).unwrap();
    for mask in 0..(1u32 << n) {
        let bits: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        let f = sequence_functor(&chain, &bits);
        let got = monotone_factor_halt(&f);
        let (want_factors, want_value) = monotone_scan(&bits);
        assert_eq!(got.factors, want_factors, "bits {bits:?}");
        assert_eq!(got.value, want_value, "bits {bits:?}");
        if let Some(w) = &got.witness {
            assert!(w.is_valid());
        }
    }
}
