//! The Turing-machine tape encoding: a contents functor from the truncated
//! chain into the three-symbol groupoid, a pointer functor as the head, and
//! the rule step that splits the tape with comma categories, writes through
//! a symbol pointer, reattaches with coequalizers and moves the head by
//! successor or the Kan-lifting predecessor.

use crate::error::StdlibError;
use crate::numbers::{build_number_category, pointer, successor, NumberKind, TruncatedNumberCategory};
use cat_core::{
    arrow_cat, categories_isomorphic, chain_cat, discrete_cat, indiscrete_cat, pointer_functor,
    thin_category, ExplicitCategory, FunctorValue, Limits,
};
use cat_engine::{
    comma, comp, coequalizer_presented, coproduct_category, kan_lift_left, saturate,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Tape alphabet. The object ids in the symbol categories are 0, 1 and 2
/// for the blank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "_")]
    Blank,
}

impl Symbol {
    pub fn object(self) -> u32 {
        match self {
            Symbol::Zero => 0,
            Symbol::One => 1,
            Symbol::Blank => 2,
        }
    }

    pub fn from_object(o: u32) -> Symbol {
        match o {
            0 => Symbol::Zero,
            1 => Symbol::One,
            _ => Symbol::Blank,
        }
    }

    pub fn display(self) -> &'static str {
        match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Blank => "_",
        }
    }
}

/// The symbol category with invertible 0 <-> 1 and one-way arrows into the
/// blank: a functor from the chain lands here exactly when it is a 0/1
/// string followed by blanks.
pub fn three_dot() -> ExplicitCategory {
    thin_category(3, |a, b| {
        a == b || (a < 2 && b < 2) || (a < 2 && b == 2)
    })
}

/// The full symbol groupoid: all three symbols mutually isomorphic, so any
/// assignment of symbols to tape positions is a functor.
pub fn three_hat() -> ExplicitCategory {
    indiscrete_cat(3)
}

/// The object-identity inclusion of the string category into the groupoid.
pub fn three_inclusion() -> FunctorValue {
    let dot = Arc::new(three_dot());
    let hat = Arc::new(three_hat());
    let object_map: BTreeMap<u32, u32> = dot.objects.iter().map(|&o| (o, o)).collect();
    let morphism_map: BTreeMap<u32, u32> = dot
        .morphisms
        .iter()
        .map(|m| (m.id, hat.hom(m.src, m.tgt)[0]))
        .collect();
    let f = FunctorValue::new(dot, hat, object_map, morphism_map);
    debug_assert!(f.is_valid());
    f
}

/// The functor 1 -> three_hat picking a symbol.
pub fn symbol_pointer(hat: &Arc<ExplicitCategory>, sym: Symbol) -> FunctorValue {
    pointer_functor(hat.clone(), sym.object())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TmRule {
    pub state: u32,
    pub read: Symbol,
    pub write: Symbol,
    #[serde(rename = "move")]
    pub direction: Direction,
    pub next: u32,
}

/// A machine description; the alphabet is fixed to {0, 1, blank}. A missing
/// rule means the machine halts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TmMachine {
    pub states: u32,
    pub rules: Vec<TmRule>,
}

impl TmMachine {
    pub fn rule_for(&self, state: u32, read: Symbol) -> Option<&TmRule> {
        self.rules
            .iter()
            .find(|r| r.state == state && r.read == read)
    }
}

/// A tape configuration: contents as a functor chain -> three_hat, the head
/// as a pointer functor, and the machine state kept as a plain register.
#[derive(Debug, Clone)]
pub struct TapeConfig {
    pub bound: usize,
    pub contents: FunctorValue,
    pub head: FunctorValue,
    pub state: u32,
}

impl TapeConfig {
    pub fn from_symbols(
        bound: usize,
        symbols: &[Symbol],
        head: usize,
        state: u32,
        limits: &Limits,
    ) -> Result<TapeConfig, StdlibError> {
        let chain = build_number_category(NumberKind::Chain, bound, limits)?;
        let hat = Arc::new(three_hat());
        let object_map: BTreeMap<u32, u32> = chain
            .category
            .objects
            .iter()
            .map(|&o| {
                let sym = symbols.get(o as usize).copied().unwrap_or(Symbol::Blank);
                (o, sym.object())
            })
            .collect();
        let morphism_map: BTreeMap<u32, u32> = chain
            .category
            .morphisms
            .iter()
            .map(|m| (m.id, hat.hom(object_map[&m.src], object_map[&m.tgt])[0]))
            .collect();
        let contents = FunctorValue::new(chain.category.clone(), hat, object_map, morphism_map);
        Ok(TapeConfig {
            bound,
            contents,
            head: pointer(&chain, head),
            state,
        })
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        self.contents
            .source
            .objects
            .iter()
            .map(|&o| Symbol::from_object(self.contents.apply_object(o).unwrap()))
            .collect()
    }

    pub fn head_position(&self) -> usize {
        self.head.apply_object(0).unwrap() as usize
    }
}

/// Result of one categorical machine step, with the number of engine
/// operations it performed (the constant-per-rule measure).
#[derive(Debug, Clone)]
pub struct TmStepReport {
    pub config: TapeConfig,
    pub engine_ops: u32,
}

/// One step of the rule translation:
/// 1-2. split the tape with the comma categories at the predecessor and
///      successor pointers, 3. recompose the contents on both sides,
/// 4. take the symbol pointer for the written value, 5-6. reattach the
/// sides through arrow-category bridges with coequalizers, 7. induce the
/// new contents functor on the glued tape, 8. set the state register,
/// 9. move the head by successor or the Kan-lifting predecessor.
pub fn tm_step(
    cfg: &TapeConfig,
    machine: &TmMachine,
    limits: &Limits,
) -> Result<TmStepReport, StdlibError> {
    let mut ops: u32 = 0;
    let chain = cfg.contents.source.clone();
    let hat = cfg.contents.target.clone();
    let n = cfg.bound;
    let i = cfg.head_position();

    // read under the head: F . P_i
    let under_head = comp(&cfg.head, &cfg.contents)?;
    ops += 1;
    let read = Symbol::from_object(under_head.apply_object(0).unwrap());
    let rule = machine
        .rule_for(cfg.state, read)
        .ok_or(StdlibError::NoRule {
            state: cfg.state,
            symbol: read.display().to_string(),
        })?;

    if i == 0 || i == n {
        return Err(StdlibError::BoundaryHit { position: i });
    }

    let trunc = TruncatedNumberCategory {
        kind: NumberKind::Chain,
        bound: n,
        category: chain.clone(),
    };
    let succ = successor(&trunc);

    // the two neighbour pointers: successor composite and Kan-lifting
    // predecessor
    let head_right = comp(&cfg.head, &succ)?;
    ops += 1;
    let head_left = kan_lift_left(&succ, &cfg.head, limits)?.functor;
    ops += 1;

    // left side (omega | P_{i-1}) and right side (P_{i+1} | omega)
    let id_chain = FunctorValue::identity(chain.clone());
    let left_comma = comma(&id_chain, &head_left, limits)?;
    ops += 1;
    let right_comma = comma(&head_right, &id_chain, limits)?;
    ops += 1;

    // both sides retain their old values
    let left_values = comp(&left_comma.proj_left, &cfg.contents)?;
    ops += 1;
    let right_values = comp(&right_comma.proj_right, &cfg.contents)?;
    ops += 1;

    // the new value at position i
    let write_pointer = symbol_pointer(&hat, rule.write);

    // reattach: left + 2 + 1 + 2 + right with endpoint identifications
    let two = arrow_cat();
    let one = cat_core::terminal_cat();
    let c1 = coproduct_category(&left_comma.base, &two, limits)?;
    ops += 1;
    let c2 = coproduct_category(&c1.category, &one, limits)?;
    ops += 1;
    let c3 = coproduct_category(&c2.category, &two, limits)?;
    ops += 1;
    let c4 = coproduct_category(&c3.category, &right_comma.base, limits)?;
    ops += 1;

    // object positions of the pieces inside the coproduct
    let left_count = left_comma.base.object_count() as u32;
    let bridge_a_src = left_count; // first 2: objects left_count, left_count+1
    let bridge_a_tgt = left_count + 1;
    let mid = left_count + 2; // the single object standing for position i
    let bridge_b_src = left_count + 3;
    let bridge_b_tgt = left_count + 4;
    let right_start = left_count + 5;

    // identify: bridge_a source ~ last left cell, bridge_a target ~ mid,
    // bridge_b source ~ mid, bridge_b target ~ first right cell
    let pairs = [
        (bridge_a_src, left_count - 1),
        (bridge_a_tgt, mid),
        (bridge_b_src, mid),
        (bridge_b_tgt, right_start),
    ];
    let span = Arc::new(discrete_cat(pairs.len()));
    let pick = |side: usize| -> FunctorValue {
        let object_map: BTreeMap<u32, u32> = pairs
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| (k as u32, if side == 0 { a } else { b }))
            .collect();
        let morphism_map: BTreeMap<u32, u32> = span
            .morphisms
            .iter()
            .map(|m| {
                (
                    m.id,
                    c4.category.identity_of(object_map[&m.src]).unwrap(),
                )
            })
            .collect();
        FunctorValue::new(span.clone(), c4.category.clone(), object_map, morphism_map)
    };
    let ce = coequalizer_presented(&pick(0), &pick(1))?;
    ops += 1;
    let glued = saturate(&ce.presentation, n + 4, limits)?;
    ops += 1;

    // induced contents on the glued tape: left values, the written symbol,
    // right values; the groupoid target makes the object map a functor
    let mut glued_values: BTreeMap<u32, u32> = BTreeMap::new();
    for (pos, class) in ce.object_class.iter() {
        let value = if *pos < left_count {
            left_values.apply_object(*pos).unwrap()
        } else if *pos == mid || *pos == bridge_a_tgt || *pos == bridge_b_src {
            write_pointer.apply_object(0).unwrap()
        } else if *pos == bridge_a_src {
            left_values.apply_object(left_count - 1).unwrap()
        } else if *pos >= right_start {
            right_values.apply_object(*pos - right_start).unwrap()
        } else {
            // bridge_b target, identified with the first right cell
            right_values.apply_object(0).unwrap()
        };
        glued_values.insert(*class, value);
    }
    let glued_morphisms: BTreeMap<u32, u32> = glued
        .category
        .morphisms
        .iter()
        .map(|m| {
            (
                m.id,
                hat.hom(glued_values[&m.src], glued_values[&m.tgt])[0],
            )
        })
        .collect();
    let glued_cat = Arc::new(glued.category.clone());
    let glued_contents = FunctorValue::new(
        glued_cat.clone(),
        hat.clone(),
        glued_values.clone(),
        glued_morphisms,
    );
    debug_assert!(glued_contents.is_valid());

    // the glued tape is a chain again; a chain isomorphism is unique, so
    // reindexing through it is deterministic
    let iso = categories_isomorphic(&chain_cat(n + 1), &glued_cat, limits)
        .map_err(cat_engine::EngineError::from)?
        .ok_or_else(|| cat_engine::EngineError::invalid("glued tape is not a chain"))?;
    ops += 1;
    let new_contents = comp(&iso.forward, &glued_contents)?;
    ops += 1;
    // re-anchor on the original chain value
    let new_contents = FunctorValue::new(
        chain.clone(),
        hat.clone(),
        new_contents.object_map.clone(),
        new_contents.morphism_map.clone(),
    );
    debug_assert!(new_contents.is_valid());

    let new_head = match rule.direction {
        Direction::Right => head_right,
        Direction::Left => head_left,
    };
    Ok(TmStepReport {
        config: TapeConfig {
            bound: n,
            contents: new_contents,
            head: new_head,
            state: rule.next,
        },
        engine_ops: ops,
    })
}

/// The independent direct simulator used as the oracle for the categorical
/// step: plain array semantics with the same boundary and halting rules.
pub mod reference {
    use super::{Direction, StdlibError, Symbol, TmMachine};

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct SimTape {
        pub cells: Vec<Symbol>,
        pub head: usize,
        pub state: u32,
    }

    impl SimTape {
        pub fn new(bound: usize, symbols: &[Symbol], head: usize, state: u32) -> SimTape {
            let mut cells = vec![Symbol::Blank; bound + 1];
            for (i, s) in symbols.iter().enumerate() {
                if i <= bound {
                    cells[i] = *s;
                }
            }
            SimTape {
                cells,
                head,
                state,
            }
        }
    }

    pub fn step(tape: &SimTape, machine: &TmMachine) -> Result<SimTape, StdlibError> {
        let read = tape.cells[tape.head];
        let rule = machine
            .rule_for(tape.state, read)
            .ok_or(StdlibError::NoRule {
                state: tape.state,
                symbol: read.display().to_string(),
            })?;
        if tape.head == 0 || tape.head + 1 == tape.cells.len() {
            return Err(StdlibError::BoundaryHit {
                position: tape.head,
            });
        }
        let mut next = tape.clone();
        next.cells[tape.head] = rule.write;
        next.head = match rule.direction {
            Direction::Right => tape.head + 1,
            Direction::Left => tape.head - 1,
        };
        next.state = rule.next;
        Ok(next)
    }
}
