//! Program generators for the logarithmic pointer construction: one emitted
//! program per number driven by its binary digits, and one fixed program
//! that reads the digits from an input functor.

use crate::error::StdlibError;
use crate::halt::sequence_functor;
use crate::numbers::{build_number_category, pointer, successor, NumberKind};
use cat_core::{iso_pair_cat, pointer_functor, Limits, StructureValue};
use sammy_lang::{Instruction, InstructionBody, Kind, OpName, Program};
use std::sync::Arc;

/// Binary digits of n, most significant first. `binary_digits(727)` is
/// 1011010111.
pub fn binary_digits(n: u64) -> Vec<bool> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut k = 63 - n.leading_zeros() as i32;
    while k >= 0 {
        out.push(n & (1 << k) != 0);
        k -= 1;
    }
    out
}

struct Emitter {
    instructions: Vec<Instruction>,
    pending_label: Option<String>,
}

impl Emitter {
    fn new() -> Emitter {
        Emitter {
            instructions: Vec::new(),
            pending_label: None,
        }
    }

    fn push(&mut self, body: InstructionBody) {
        self.instructions.push(Instruction {
            label: self.pending_label.take(),
            body,
        });
    }

    fn label_next(&mut self, label: String) {
        self.pending_label = Some(label);
    }

    fn assign(&mut self, var: &str, op: OpName, args: &[&str]) {
        self.push(InstructionBody::Assign {
            var: var.into(),
            op,
            args: args.iter().map(|s| s.to_string()).collect(),
        });
    }
}

/// Emits the doubling program for n: inputs are the pointers P_0 and P_1
/// and the successor on a sufficiently large chain. Each binary digit after
/// the leading one contributes one doubling block (six instructions), plus
/// one extra successor when the digit is one. The instruction count is
/// bounded by 7 * ceil(log2 n) + 3 under the operation-cost rule.
pub fn log_pointer_program(n: u64) -> Program {
    let digits = binary_digits(n);
    let mut e = Emitter::new();
    e.push(InstructionBody::Input {
        var: "P0".into(),
        kind: Kind::Functor,
    });
    e.push(InstructionBody::Input {
        var: "P1".into(),
        kind: Kind::Functor,
    });
    e.push(InstructionBody::Input {
        var: "SUCC".into(),
        kind: Kind::Functor,
    });
    e.push(InstructionBody::Const {
        var: "ONE".into(),
        constant: sammy_lang::ConstName::C1,
    });
    e.assign("IDONE", OpName::Ident0, &["ONE"]);
    e.assign("X", OpName::Comp, &["IDONE", "P1"]);

    for (j, &digit) in digits.iter().enumerate().skip(1) {
        let loop_label = format!("LOOP{j}");
        let done_label = format!("DONE{j}");
        // double the length between P_0 and X
        e.assign("T", OpName::Comp, &["IDONE", "P0"]);
        e.assign("E", OpName::Comp, &["IDONE", "X"]);
        e.label_next(loop_label.clone());
        e.push(InstructionBody::If {
            left: "T".into(),
            right: "E".into(),
            target: done_label.clone(),
        });
        e.assign("X", OpName::Comp, &["X", "SUCC"]);
        e.assign("T", OpName::Comp, &["T", "SUCC"]);
        e.push(InstructionBody::If {
            left: "P0".into(),
            right: "P0".into(),
            target: loop_label,
        });
        e.label_next(done_label);
        if digit {
            e.assign("X", OpName::Comp, &["X", "SUCC"]);
        }
    }
    e.push(InstructionBody::Return {
        vars: vec!["X".into()],
    });
    Program::from_instructions(e.instructions)
}

/// The inputs for `log_pointer_program` over the chain truncated at
/// `bound`: the pointers to 0 and 1 and the clamped successor.
pub fn log_pointer_inputs(bound: usize, limits: &Limits) -> Result<Vec<StructureValue>, StdlibError> {
    let chain = build_number_category(NumberKind::Chain, bound, limits)?;
    Ok(vec![
        StructureValue::functor(pointer(&chain, 0)),
        StructureValue::functor(pointer(&chain, 1)),
        StructureValue::functor(successor(&chain)),
    ])
}

/// The fixed program reading a binary description: at each input digit it
/// doubles the distance between P_0 and the accumulator and adds one more
/// successor when the digit is one. Its size does not depend on n.
pub fn binary_input_pointer_program() -> Program {
    let mut e = Emitter::new();
    for (var, kind) in [
        ("F", Kind::Functor),
        ("SUCCB", Kind::Functor),
        ("PB0", Kind::Functor),
        ("PBLAST", Kind::Functor),
        ("ZERO", Kind::Functor),
        ("SUCC", Kind::Functor),
        ("P0", Kind::Functor),
        ("P1", Kind::Functor),
    ] {
        e.push(InstructionBody::Input {
            var: var.into(),
            kind,
        });
    }
    e.push(InstructionBody::Const {
        var: "ONE".into(),
        constant: sammy_lang::ConstName::C1,
    });
    e.assign("IDONE", OpName::Ident0, &["ONE"]);
    e.assign("X", OpName::Comp, &["IDONE", "P1"]);
    e.assign("I", OpName::Comp, &["IDONE", "PB0"]);
    e.label_next("LOOP".into());
    e.push(InstructionBody::If {
        left: "I".into(),
        right: "PBLAST".into(),
        target: "FIN".into(),
    });
    e.assign("I", OpName::Comp, &["I", "SUCCB"]);
    e.assign("B", OpName::Comp, &["I", "F"]);
    e.assign("T", OpName::Comp, &["IDONE", "P0"]);
    e.assign("E", OpName::Comp, &["IDONE", "X"]);
    e.label_next("DBL".into());
    e.push(InstructionBody::If {
        left: "T".into(),
        right: "E".into(),
        target: "TAIL".into(),
    });
    e.assign("X", OpName::Comp, &["X", "SUCC"]);
    e.assign("T", OpName::Comp, &["T", "SUCC"]);
    e.push(InstructionBody::If {
        left: "P0".into(),
        right: "P0".into(),
        target: "DBL".into(),
    });
    e.label_next("TAIL".into());
    e.push(InstructionBody::If {
        left: "B".into(),
        right: "ZERO".into(),
        target: "LOOP".into(),
    });
    e.assign("X", OpName::Comp, &["X", "SUCC"]);
    e.push(InstructionBody::If {
        left: "P0".into(),
        right: "P0".into(),
        target: "LOOP".into(),
    });
    e.label_next("FIN".into());
    e.push(InstructionBody::Return {
        vars: vec!["X".into()],
    });
    Program::from_instructions(e.instructions)
}

/// Inputs for the fixed binary-reader program: the digit functor for n
/// (most significant digit at position 0) over its own small chain, the
/// bookkeeping pointers on that chain, the 0-reference in the two-object
/// groupoid, and the value-side pointers and successor.
pub fn binary_input_pointer_inputs(
    n: u64,
    bound: usize,
    limits: &Limits,
) -> Result<Vec<StructureValue>, StdlibError> {
    let digits = binary_digits(n);
    let bit_chain = build_number_category(NumberKind::Chain, digits.len() - 1, limits)?;
    let bits: Vec<u8> = digits.iter().map(|&b| b as u8).collect();
    let f = sequence_functor(&bit_chain, &bits);
    let zero = pointer_functor(Arc::new(iso_pair_cat()), 0);
    let value_chain = build_number_category(NumberKind::Chain, bound, limits)?;
    Ok(vec![
        StructureValue::functor(f),
        StructureValue::functor(successor(&bit_chain)),
        StructureValue::functor(pointer(&bit_chain, 0)),
        StructureValue::functor(pointer(&bit_chain, digits.len() - 1)),
        StructureValue::functor(zero),
        StructureValue::functor(successor(&value_chain)),
        StructureValue::functor(pointer(&value_chain, 0)),
        StructureValue::functor(pointer(&value_chain, 1)),
    ])
}
