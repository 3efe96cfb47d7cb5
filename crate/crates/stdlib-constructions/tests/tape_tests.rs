use cat_core::{categories_isomorphic, Limits};
use cat_engine::factor_through;
use stdlib_constructions::reference::SimTape;
use stdlib_constructions::*;

fn increment_machine() -> TmMachine {
    // binary increment, least significant bit first: flip trailing ones
    TmMachine {
        states: 2,
        rules: vec![
            TmRule {
                state: 0,
                read: Symbol::One,
                write: Symbol::Zero,
                direction: Direction::Right,
                next: 0,
            },
            TmRule {
                state: 0,
                read: Symbol::Zero,
                write: Symbol::One,
                direction: Direction::Right,
                next: 1,
            },
            TmRule {
                state: 0,
                read: Symbol::Blank,
                write: Symbol::One,
                direction: Direction::Right,
                next: 1,
            },
        ],
    }
}

#[test]
fn symbol_categories() {
    let dot = three_dot();
    assert_eq!(dot.object_count(), 3);
    assert_eq!(dot.morphism_count(), 7); // 3 identities, 0 <-> 1, two into blank
    assert!(dot.validate_category().ok);
    let hat = three_hat();
    assert_eq!(hat.morphism_count(), 9);
    assert!(three_inclusion().is_valid());
}

#[test]
fn string_functors_factor_through_the_dot_category() {
    // a functor chain -> three_hat is a 0/1 string followed by blanks
    // exactly when it factors through the inclusion of three_dot
    let limits = Limits::default();
    let chain = build_number_category(NumberKind::Chain, 4, &limits).unwrap();
    let inc = three_inclusion();
    let as_contents = |syms: &[Symbol]| {
        TapeConfig::from_symbols(4, syms, 1, 0, &limits)
            .unwrap()
            .contents
    };
    use Symbol::*;
    let string = as_contents(&[One, Zero, One, Blank, Blank]);
    assert!(factor_through(&inc, &string).is_some());
    let resumed = as_contents(&[One, Blank, One, Blank, Blank]);
    assert!(factor_through(&inc, &resumed).is_none());
    let _ = chain;
}

#[test]
fn tm_step_matches_the_reference_simulator() {
    let limits = Limits::default();
    let machine = increment_machine();
    use Symbol::*;
    // tape "_1101____", head on the first digit; 20 steps or halt/boundary
    let symbols = vec![Blank, One, One, Zero, One, Blank, Blank, Blank, Blank];
    let bound = 8;
    let mut cat_side = TapeConfig::from_symbols(bound, &symbols, 1, 0, &limits).unwrap();
    let mut sim = SimTape::new(bound, &symbols, 1, 0);
    let mut ops_seen = Vec::new();
    for _ in 0..20 {
        let step = match tm_step(&cat_side, &machine, &limits) {
            Ok(s) => s,
            Err(e) => {
                // the reference simulator must fail the same way
                assert_eq!(reference::step(&sim, &machine).unwrap_err(), e);
                break;
            }
        };
        let expect = reference::step(&sim, &machine).unwrap();
        assert_eq!(step.config.symbols(), expect.cells, "tape contents");
        assert_eq!(step.config.head_position(), expect.head, "head");
        assert_eq!(step.config.state, expect.state, "state");
        ops_seen.push(step.engine_ops);
        cat_side = step.config;
        sim = expect;
    }
    assert!(!ops_seen.is_empty());
}

#[test]
fn write_same_symbol_moves_head_only() {
    let limits = Limits::default();
    let machine = TmMachine {
        states: 1,
        rules: vec![TmRule {
            state: 0,
            read: Symbol::One,
            write: Symbol::One,
            direction: Direction::Right,
            next: 0,
        }],
    };
    use Symbol::*;
    let cfg = TapeConfig::from_symbols(5, &[Blank, One, One, Blank], 1, 0, &limits).unwrap();
    let step = tm_step(&cfg, &machine, &limits).unwrap();
    assert_eq!(step.config.symbols(), cfg.symbols());
    assert_eq!(step.config.head_position(), 2);
}

#[test]
fn engine_op_count_is_independent_of_tape_length() {
    let limits = Limits::default();
    let machine = increment_machine();
    use Symbol::*;
    let mut counts = Vec::new();
    for bound in [6usize, 10, 14] {
        let cfg = TapeConfig::from_symbols(bound, &[Blank, One, One, Zero], 1, 0, &limits).unwrap();
        let step = tm_step(&cfg, &machine, &limits).unwrap();
        counts.push(step.engine_ops);
    }
    assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
}

#[test]
fn boundary_and_missing_rule_errors() {
    let limits = Limits::default();
    let machine = increment_machine();
    use Symbol::*;
    let at_edge = TapeConfig::from_symbols(4, &[One, One], 0, 0, &limits).unwrap();
    assert!(matches!(
        tm_step(&at_edge, &machine, &limits),
        Err(StdlibError::BoundaryHit { position: 0 })
    ));
    let halted = TapeConfig::from_symbols(4, &[Blank, One], 1, 1, &limits).unwrap();
    assert!(matches!(
        tm_step(&halted, &machine, &limits),
        Err(StdlibError::NoRule { .. })
    ));
}

#[test]
fn machine_json_round_trip() {
    let machine = increment_machine();
    let js = serde_json::to_string_pretty(&machine).unwrap();
    assert!(js.contains("\"move\""));
    let back: TmMachine = serde_json::from_str(&js).unwrap();
    assert_eq!(machine, back);
}

#[test]
fn glued_tape_is_a_chain() {
    // after a step, the contents functor still lives on the canonical chain
    let limits = Limits::default();
    let machine = increment_machine();
    use Symbol::*;
    let cfg = TapeConfig::from_symbols(6, &[Blank, One, Zero], 1, 0, &limits).unwrap();
    let step = tm_step(&cfg, &machine, &limits).unwrap();
    assert!(categories_isomorphic(
        &step.config.contents.source,
        &cat_core::chain_cat(7),
        &limits
    )
    .unwrap()
    .is_some());
    assert!(step.config.contents.is_valid());
}
