use cat_core::{FunctorValue, Limits};
use cat_engine::comp;
use stdlib_constructions::*;

#[test]
fn zero_projection_successor_pass_the_square_check() {
    let limits = Limits::relaxed();
    let (base, power1) = groupoid_power(8, 1, &limits).unwrap();

    // zero built as the composite P_0 . ! through the engine
    let bang = FunctorValue::constant_to_terminal(
        power1.category.clone(),
        std::sync::Arc::new(cat_core::terminal_cat()),
    );
    let p0 = pointer(&base, 0);
    let zero = comp(&bang, &p0).unwrap();
    let table: Vec<(Vec<usize>, usize)> = (0..=8).map(|n| (vec![n], 0)).collect();
    assert!(constructible_function_check(&zero, &base, &power1, &table).unwrap());

    // successor matches below the clamp and fails at the clamped top
    let succ = function_functor(&base, &power1, |xs| xs[0] + 1);
    let below: Vec<(Vec<usize>, usize)> = (0..8).map(|n| (vec![n], n + 1)).collect();
    assert!(constructible_function_check(&succ, &base, &power1, &below).unwrap());
    let at_top = vec![(vec![8usize], 9usize)];
    assert!(!constructible_function_check(&succ, &base, &power1, &at_top).unwrap());

    // binary projection onto the first coordinate
    let (base2, power2) = groupoid_power(8, 2, &limits).unwrap();
    let proj1 = power2.projections[0].clone();
    let table2: Vec<(Vec<usize>, usize)> = (0..=8)
        .flat_map(|a| (0..=8).map(move |b| (vec![a, b], a)))
        .collect();
    assert!(constructible_function_check(&proj1, &base2, &power2, &table2).unwrap());
}

#[test]
fn check_rejects_wrong_tables() {
    let limits = Limits::relaxed();
    let (base, power1) = groupoid_power(4, 1, &limits).unwrap();
    let ident = function_functor(&base, &power1, |xs| xs[0]);
    assert!(!constructible_function_check(&ident, &base, &power1, &[(vec![2], 3)]).unwrap());
}

#[test]
fn recursion_base_case_only() {
    // N = 0 leaves only the base slice
    let limits = Limits::relaxed();
    let (base, power1) = groupoid_power(0, 1, &limits).unwrap();
    let f = function_functor(&base, &power1, |_| 0);
    let (_, power3) = groupoid_power(0, 3, &limits).unwrap();
    let g = function_functor(&base, &power3, |_| 0);
    let h = primitive_recursion(&f, &g, &base, 1, &limits).unwrap();
    assert!(h.is_valid());
}

#[test]
fn recursion_constant_zero() {
    // F = zero, G = projection of the previous value: H stays zero
    let limits = Limits::relaxed();
    let bound = 3;
    let (base, power1) = groupoid_power(bound, 1, &limits).unwrap();
    let f = function_functor(&base, &power1, |_| 0);
    let (_, power3) = groupoid_power(bound, 3, &limits).unwrap();
    let g = function_functor(&base, &power3, |xs| xs[1]); // previous value
    let h = primitive_recursion(&f, &g, &base, 1, &limits).unwrap();

    let (_, power2) = groupoid_power(bound, 2, &limits).unwrap();
    let table: Vec<(Vec<usize>, usize)> = (0..=bound)
        .flat_map(|x| (0..=bound).map(move |n| (vec![x, n], 0)))
        .collect();
    assert!(constructible_function_check(&h, &base, &power2, &table).unwrap());
}

#[test]
fn recursion_addition_small_full_arity() {
    // the full three-argument step functor at a small bound
    let limits = Limits::relaxed();
    let bound = 3;
    let (base, power1) = groupoid_power(bound, 1, &limits).unwrap();
    let f = function_functor(&base, &power1, |xs| xs[0]); // H(x, 0) = x
    let (_, power3) = groupoid_power(bound, 3, &limits).unwrap();
    let g = function_functor(&base, &power3, |xs| xs[1] + 1); // succ of previous
    let h = primitive_recursion(&f, &g, &base, 1, &limits).unwrap();

    // direct recursion oracle with the same clamping
    let oracle = |x: usize, n: usize| -> usize {
        let mut v = x;
        for _ in 0..n {
            v = (v + 1).min(bound);
        }
        v
    };
    let (_, power2) = groupoid_power(bound, 2, &limits).unwrap();
    for x in 0..=bound {
        for n in 0..=bound {
            let table = vec![(vec![x, n], oracle(x, n))];
            assert!(
                constructible_function_check(&h, &base, &power2, &table).unwrap(),
                "H({x},{n})"
            );
        }
    }
}

#[test]
fn recursion_addition_bound_six_carried_argument() {
    // addition with the first argument fixed: for every c the recursion
    // H_c(n) with base c and step succ gives min(c + n, 6); ranging c over
    // the bound covers every input pair at 6 while keeping the step functor
    // domain tabulatable
    let limits = Limits::relaxed();
    let bound = 6;
    let (base, power0) = groupoid_power(bound, 0, &limits).unwrap();
    let (_, power2) = groupoid_power(bound, 2, &limits).unwrap();
    let g = function_functor(&base, &power2, |xs| xs[0] + 1); // succ of previous
    let (_, power1) = groupoid_power(bound, 1, &limits).unwrap();

    for c in 0..=bound {
        let f = function_functor(&base, &power0, |_| c);
        let h = primitive_recursion(&f, &g, &base, 0, &limits).unwrap();
        let table: Vec<(Vec<usize>, usize)> =
            (0..=bound).map(|n| (vec![n], (c + n).min(bound))).collect();
        assert!(
            constructible_function_check(&h, &base, &power1, &table).unwrap(),
            "addition with carried argument {c}"
        );
    }
}

#[test]
fn mu_minimization_examples() {
    let limits = Limits::relaxed();
    let bound = 6;
    let (base, power2) = groupoid_power(bound, 2, &limits).unwrap();
    let (_, power1) = groupoid_power(bound, 1, &limits).unwrap();

    // F(x, y) = [y >= x] encoded as 0 when y >= x: least such y is x
    let f = function_functor(&base, &power2, |xs| usize::from(xs[1] < xs[0]));
    let g = mu_minimization(&f, &base, 1, &limits).unwrap();
    let scan = |x: usize| (0..=bound).find(|&y| y >= x).unwrap();
    let table: Vec<(Vec<usize>, usize)> = (0..=bound).map(|x| (vec![x], scan(x))).collect();
    assert!(constructible_function_check(&g, &base, &power1, &table).unwrap());

    // F constant zero: least witness is 0 everywhere
    let fz = function_functor(&base, &power2, |_| 0);
    let gz = mu_minimization(&fz, &base, 1, &limits).unwrap();
    let tz: Vec<(Vec<usize>, usize)> = (0..=bound).map(|x| (vec![x], 0)).collect();
    assert!(constructible_function_check(&gz, &base, &power1, &tz).unwrap());

    // F never zero: no witness below the bound
    let fn0 = function_functor(&base, &power2, |_| 1);
    assert!(matches!(
        mu_minimization(&fn0, &base, 1, &limits),
        Err(StdlibError::NoWitness { .. })
    ));
}
