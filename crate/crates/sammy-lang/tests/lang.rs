use cat_core::{arrow_cat, categories_isomorphic, Limits, StructureValue};
use sammy_lang::*;

#[test]
fn parse_two_line_program() {
    let p = parse("X := C1\nRETURN(X)").unwrap();
    assert_eq!(p.instructions.len(), 2);
    assert_eq!(p.cost(), 1);
}

#[test]
fn parse_allows_unbound_variables() {
    // binding is checked at run time
    let p = parse("L: X := Comp(F, G)\nRETURN(X)").unwrap();
    assert_eq!(p.instructions[0].label.as_deref(), Some("L"));
    let err = run(&p, &[], &RunLimits::default()).unwrap_err();
    assert!(matches!(err, RunError::UnboundVariable { .. }));
}

#[test]
fn parse_return_not_last() {
    let err = parse("RETURN(X)\nY := C1").unwrap_err();
    assert!(matches!(err, ParseError::ReturnNotLast { .. }));
}

#[test]
fn parse_error_catalogue() {
    assert!(matches!(
        parse("X := Frobnicate(Y)\nRETURN(X)").unwrap_err(),
        ParseError::UnknownOperation { .. }
    ));
    assert!(matches!(
        parse("L: X := C1\nL: Y := C1\nRETURN(X)").unwrap_err(),
        ParseError::DuplicateLabel { .. }
    ));
    assert!(matches!(
        parse("IF X == X GOTO NOWHERE\nRETURN(X)").unwrap_err(),
        ParseError::UnknownLabel { .. }
    ));
    assert!(matches!(parse("X := C1").unwrap_err(), ParseError::MissingReturn));
    assert!(matches!(
        parse("X := Comp(A)\nRETURN(X)").unwrap_err(),
        ParseError::SyntaxError { .. }
    ));
    assert!(matches!(
        parse("RETURN := C1\nRETURN(X)").unwrap_err(),
        ParseError::SyntaxError { .. }
    ));
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let p = parse("# a comment\n\nX := C1 # trailing\n\nRETURN(X)\n").unwrap();
    assert_eq!(p.instructions.len(), 2);
}

#[test]
fn print_parse_round_trip() {
    let srcs = [
        "X := C1\nRETURN(X)",
        "L: X := C2\nY := Op0(X)\nIF X == Y GOTO L\nRETURN(X, Y)",
        "INPUT F : functor\nA := Source1(F)\nRETURN(A)",
    ];
    for s in srcs {
        let p = parse(s).unwrap();
        let reparsed = parse(&p.print()).unwrap();
        assert_eq!(p.instructions, reparsed.instructions);
    }
}

#[test]
fn run_op0_program_returns_category_isomorphic_to_two() {
    let p = parse("X := C2\nY := Op0(X)\nRETURN(Y)").unwrap();
    let out = run(&p, &[], &RunLimits::default()).unwrap();
    assert_eq!(out.returned.len(), 1);
    let cat = out.returned[0].as_category().unwrap();
    assert!(categories_isomorphic(cat, &arrow_cat(), &Limits::default())
        .unwrap()
        .is_some());
}

#[test]
fn self_loop_hits_the_step_limit() {
    let p = parse("X := C1\nL: IF X == X GOTO L\nRETURN(X)").unwrap();
    let limits = RunLimits {
        max_steps: 1000,
        ..RunLimits::default()
    };
    assert!(matches!(run(&p, &[], &limits), Err(RunError::StepLimit)));
}

#[test]
fn kind_errors_surface_at_application() {
    let p = parse("X := C1\nY := Source1(X)\nRETURN(Y)").unwrap();
    assert!(matches!(
        run(&p, &[], &RunLimits::default()),
        Err(RunError::KindMismatch { .. })
    ));
}

#[test]
fn opaque_cat_is_symbolic() {
    let p = parse("X := CAT\nY := C1\nZ := Pow0(X, Y)\nRETURN(Z)").unwrap();
    assert!(matches!(
        run(&p, &[], &RunLimits::default()),
        Err(RunError::SymbolicCategory { .. })
    ));
    // comparing Cat with itself is fine
    let p2 = parse("X := CAT\nL: IF X == X GOTO E\nE: RETURN(X)").unwrap();
    let out = run(&p2, &[], &RunLimits::default()).unwrap();
    assert!(matches!(out.returned[0], StructureValue::OpaqueCat));

    // the functor constants touching Cat have no table
    let p3 = parse("X := BANG_0_CAT\nRETURN(X)").unwrap();
    assert!(matches!(
        run(&p3, &[], &RunLimits::default()),
        Err(RunError::SymbolicCategory { .. })
    ));
}

#[test]
fn inputs_are_bound_in_declaration_order() {
    let p = parse("INPUT A : category\nINPUT F : functor\nRETURN(F, A)").unwrap();
    let cat = StructureValue::category(arrow_cat());
    let f = StructureValue::functor(cat_core::source_functor());
    let out = run(&p, &[cat.clone(), f.clone()], &RunLimits::default()).unwrap();
    assert!(cat_core::structures_equal(&out.returned[0], &f));
    assert!(cat_core::structures_equal(&out.returned[1], &cat));

    // arity and kind mismatches
    assert!(matches!(
        run(&p, &[cat.clone()], &RunLimits::default()),
        Err(RunError::InputArity { .. })
    ));
    assert!(matches!(
        run(&p, &[f.clone(), cat], &RunLimits::default()),
        Err(RunError::InputKind { .. })
    ));
}

#[test]
fn run_reports_executed_instruction_count() {
    let p = parse("X := C1\nY := C1\nRETURN(X)").unwrap();
    let out = run(&p, &[], &RunLimits::default()).unwrap();
    assert_eq!(out.executed_instructions, 3);
}

#[test]
fn if_compares_across_kinds_as_unequal() {
    // comparing a category with a functor is false, not an error: the
    // self-targeting jump is never taken
    let p = parse("X := C1\nF := Ident0(X)\nL: IF X == F GOTO L\nRETURN(F)").unwrap();
    let out = run(&p, &[], &RunLimits::default()).unwrap();
    assert!(out.returned[0].as_functor().is_some());
}

#[test]
fn circdot_returns_the_composition_functor() {
    let p = parse("X := C2\nF := CircDot(X)\nA := Source1(F)\nRETURN(A, F)").unwrap();
    let out = run(&p, &[], &RunLimits::default()).unwrap();
    let cat = out.returned[0].as_category().unwrap();
    // composable pairs of 2: (id0,id0), (id0,a), (a,id1), (id1,id1)
    assert_eq!(cat.object_count(), 4);
    assert!(out.returned[1].as_functor().unwrap().is_valid());
}

#[test]
fn determinism_of_run() {
    let src = "X := C2\nY := Pow0(X, X)\nRETURN(Y)";
    let p = parse(src).unwrap();
    let a = run(&p, &[], &RunLimits::default()).unwrap();
    let b = run(&p, &[], &RunLimits::default()).unwrap();
    assert!(cat_core::structures_equal(&a.returned[0], &b.returned[0]));
    assert_eq!(a.executed_instructions, b.executed_instructions);
}
