use cat_core::{chain_cat, terminal_cat, Limits, StructureValue};
use kolmogorov::*;
use sammy_lang::{OpName, RunLimits};
use stdlib_constructions::{build_number_category, pointer, NumberKind};

/// Per-run limits for exhaustive searches: generous enough for any
/// desk-scale witness, tight enough that looping or exploding candidates
/// are cut off quickly and counted as non-witnesses.
fn search_limits() -> RunLimits {
    RunLimits {
        max_steps: 2_000,
        caps: Limits::new(16, 96),
    }
}

fn query(target: StructureValue, budget: u32) -> KQuery {
    let mut q = KQuery::new(target, budget);
    q.run_limits = search_limits();
    q
}

#[test]
fn k_of_the_terminal_category_is_one() {
    let target = StructureValue::category(terminal_cat());
    let result = ksearch(&query(target, 3));
    assert_eq!(result.min_length(), Some(1));
    let w = result.witness.unwrap();
    assert_eq!(w.cost(), 1);
    assert!(result.programs_tried > 0);
}

#[test]
fn relative_k_of_a_given_structure_is_zero() {
    let c = StructureValue::category(chain_cat(3));
    let mut q = KQuery::new(c.clone(), 2).with_givens(vec![c.clone()]);
    q.run_limits = search_limits();
    let result = ksearch(&q);
    assert_eq!(result.min_length(), Some(0));
    let w = result.witness.unwrap();
    assert_eq!(w.cost(), 0);
    assert_eq!(w.instructions.len(), 2); // INPUT + RETURN
}

#[test]
fn k_of_identity_functor_given_the_category_is_one() {
    // one operation: Ident0 on the given category
    let limits = Limits::default();
    let c = build_number_category(NumberKind::Chain, 2, &limits).unwrap();
    let id = StructureValue::functor(cat_core::FunctorValue::identity(c.category.clone()));
    let given = StructureValue::Category {
        value: c.category.clone(),
    };
    let mut q = KQuery::new(id, 2).with_givens(vec![given]);
    q.run_limits = search_limits();
    let result = ksearch(&q);
    assert_eq!(result.min_length(), Some(1));
}

#[test]
fn k_of_the_three_chain_is_two() {
    // C2 then Pow0 of it with itself; nothing of cost один returns a
    // three-object category
    let target = StructureValue::category(chain_cat(3));
    let result = ksearch(&query(target, 3));
    assert_eq!(result.min_length(), Some(2));
    let w = result.witness.unwrap();
    assert!(w.print().contains("Pow0"), "witness: {}", w.print());
}

#[test]
fn monotonicity_givens_never_hurt() {
    let limits = Limits::default();
    let chain = build_number_category(NumberKind::Chain, 1, &limits).unwrap();
    let targets = [
        StructureValue::category(terminal_cat()),
        StructureValue::category(chain_cat(2)),
        StructureValue::functor(pointer(&chain, 0)),
    ];
    let given = StructureValue::category(chain_cat(2));
    for t in &targets {
        let plain = ksearch(&query(t.clone(), 3));
        let with = ksearch(&query(t.clone(), 3).with_givens(vec![given.clone()]));
        if let (Some(a), Some(b)) = (plain.min_length(), with.min_length()) {
            assert!(b <= a, "given should never hurt: {b} > {a}");
        }
    }
}

#[test]
fn subadditivity_of_composition() {
    // K(g . f) <= K(f) + K(g) + 1 where the searches all conclude
    let f = cat_core::source_functor(); // 1 -> 2, one constant
    let g = cat_core::bang_2_to_1(); // 2 -> 1, one constant
    let composite = cat_engine::comp(&f, &g).unwrap(); // the identity on 1
    let kf = ksearch(&query(StructureValue::functor(f), 3))
        .min_length()
        .unwrap();
    let kg = ksearch(&query(StructureValue::functor(g), 3))
        .min_length()
        .unwrap();
    let kc = ksearch(&query(StructureValue::functor(composite), 3))
        .min_length()
        .unwrap();
    assert!(kc <= kf + kg + 1, "K(comp) = {kc}, K(f) = {kf}, K(g) = {kg}");
}

#[test]
fn parallel_search_matches_sequential() {
    let targets = [
        StructureValue::category(terminal_cat()),
        StructureValue::category(chain_cat(3)),
        StructureValue::category(cat_core::discrete_cat(8)),
    ];
    for t in &targets {
        let q = query(t.clone(), 2);
        let seq = ksearch(&q);
        let par = kolmogorov::ksearch_parallel(&q, &EncodingSpec::standard(), 4);
        assert_eq!(seq.min_length(), par.min_length());
        match (&seq.witness, &par.witness) {
            (Some(a), Some(b)) => assert_eq!(a.instructions, b.instructions),
            (None, None) => {}
            _ => panic!("parallel and sequential disagree"),
        }
    }
}

#[test]
fn unfindable_within_budget_is_reported() {
    // an eight-object discrete category cannot be built in one operation
    let target = StructureValue::category(cat_core::discrete_cat(8));
    let result = ksearch(&query(target, 1));
    assert_eq!(result.status, SearchStatus::NotFoundWithinBudget);
    assert!(result.witness.is_none());
}

#[test]
fn permuted_table_changes_nothing_but_codes() {
    let suite = [
        (StructureValue::category(terminal_cat()), vec![]),
        (StructureValue::category(cat_core::arrow_cat()), vec![]),
    ];
    let report = invariance_harness(
        &EncodingSpec::standard(),
        &EncodingSpec::permuted(5),
        &suite,
        3,
        &search_limits(),
    );
    assert_eq!(report.max_gap, 0);
    assert!(report.all_within_bound);
    assert_eq!(report.budget_exhausted, 0);
}

#[test]
fn comp_macro_gap_is_bounded_by_its_uses() {
    let limits = Limits::default();
    let chain = build_number_category(NumberKind::Chain, 2, &limits).unwrap();
    let succ = stdlib_constructions::successor(&chain);
    let suite = [
        (StructureValue::category(terminal_cat()), vec![]),
        (StructureValue::category(chain_cat(3)), vec![]),
        (StructureValue::functor(pointer(&chain, 0)), vec![]),
        // a target whose cheapest witness is one Comp of its givens
        (
            StructureValue::functor(pointer(&chain, 1)),
            vec![
                StructureValue::functor(pointer(&chain, 0)),
                StructureValue::functor(succ),
            ],
        ),
    ];
    let report = invariance_harness(
        &EncodingSpec::standard(),
        &EncodingSpec::with_macro_cost(OpName::Comp, 2),
        &suite,
        4,
        &search_limits(),
    );
    assert!(report.all_within_bound);
    for t in &report.per_target {
        if let (Some(gap), Some(bound)) = (t.gap, t.overhead_bound) {
            assert!(gap <= bound);
        }
    }
}
