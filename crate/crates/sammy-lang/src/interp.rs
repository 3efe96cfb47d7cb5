use crate::ast::{ConstName, InstructionBody, Kind, OpName, Program};
use cat_core::{
    arrow_cat, bang_2_to_1, bang_from_0, empty_cat, source_functor, structures_equal,
    target_functor, terminal_cat, FunctorValue, Limits, NatTransValue, StructureValue,
};
use cat_engine::EngineError;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunLimits {
    pub max_steps: u64,
    pub caps: Limits,
}

impl Default for RunLimits {
    fn default() -> Self {
        RunLimits {
            max_steps: 100_000,
            caps: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("unbound variable '{name}'")]
    UnboundVariable { name: String },
    #[error("step limit exceeded")]
    StepLimit,
    #[error("expected {expected} inputs, got {got}")]
    InputArity { expected: usize, got: usize },
    #[error("input '{var}' should be a {expected}, got a {got}")]
    InputKind {
        var: String,
        expected: &'static str,
        got: &'static str,
    },
    #[error("input '{var}' fails validation: {report}")]
    InputInvalid { var: String, report: String },
    #[error("{op} cannot be applied to a {got}")]
    KindMismatch { op: &'static str, got: &'static str },
    #[error("the symbolic category Cat has no table: {context}")]
    SymbolicCategory { context: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub returned: Vec<StructureValue>,
    pub executed_instructions: u64,
}

fn elaborate_constant(c: ConstName) -> Result<StructureValue, RunError> {
    Ok(match c {
        ConstName::C0 => StructureValue::category(empty_cat()),
        ConstName::C1 => StructureValue::category(terminal_cat()),
        ConstName::C2 => StructureValue::category(arrow_cat()),
        ConstName::Cat => StructureValue::OpaqueCat,
        ConstName::S => StructureValue::functor(source_functor()),
        ConstName::T => StructureValue::functor(target_functor()),
        ConstName::Bang01 => StructureValue::functor(bang_from_0(Arc::new(terminal_cat()))),
        ConstName::Bang02 => StructureValue::functor(bang_from_0(Arc::new(arrow_cat()))),
        ConstName::Bang21 => StructureValue::functor(bang_2_to_1()),
        // functors in or out of Cat have no tabulated endpoint
        ConstName::Bang0Cat => {
            return Err(RunError::SymbolicCategory {
                context: "BANG_0_CAT".into(),
            })
        }
        ConstName::BangCat1 => {
            return Err(RunError::SymbolicCategory {
                context: "BANG_CAT_1".into(),
            })
        }
    })
}

fn want_category<'v>(op: OpName, v: &'v StructureValue) -> Result<&'v Arc<cat_core::ExplicitCategory>, RunError> {
    match v {
        StructureValue::Category { value } => Ok(value),
        StructureValue::OpaqueCat => Err(RunError::SymbolicCategory {
            context: op.name().to_string(),
        }),
        _ => Err(RunError::KindMismatch {
            op: op.name(),
            got: v.kind_name(),
        }),
    }
}

fn want_functor<'v>(op: OpName, v: &'v StructureValue) -> Result<&'v FunctorValue, RunError> {
    v.as_functor().ok_or(RunError::KindMismatch {
        op: op.name(),
        got: v.kind_name(),
    })
}

fn want_nat_trans<'v>(op: OpName, v: &'v StructureValue) -> Result<&'v NatTransValue, RunError> {
    v.as_nat_trans().ok_or(RunError::KindMismatch {
        op: op.name(),
        got: v.kind_name(),
    })
}

fn apply_op(op: OpName, args: &[StructureValue], caps: &Limits) -> Result<StructureValue, RunError> {
    use StructureValue as V;
    Ok(match op {
        OpName::Source1 => V::Category {
            value: want_functor(op, &args[0])?.source.clone(),
        },
        OpName::Target1 => V::Category {
            value: want_functor(op, &args[0])?.target.clone(),
        },
        OpName::Source2 => V::functor(want_nat_trans(op, &args[0])?.source_fun.clone()),
        OpName::Target2 => V::functor(want_nat_trans(op, &args[0])?.target_fun.clone()),
        OpName::Ident0 => V::functor(FunctorValue::identity(want_category(op, &args[0])?.clone())),
        OpName::Ident1 => V::nat_trans(NatTransValue::identity(want_functor(op, &args[0])?)),
        OpName::Op0 => V::category(cat_engine::op0(want_category(op, &args[0])?)),
        OpName::Op1 => V::functor(cat_engine::op1(want_functor(op, &args[0])?)),
        OpName::Comp => V::functor(cat_engine::comp(
            want_functor(op, &args[0])?,
            want_functor(op, &args[1])?,
        )?),
        OpName::Hcomp => V::nat_trans(cat_engine::hcomp(
            want_nat_trans(op, &args[0])?,
            want_nat_trans(op, &args[1])?,
        )?),
        OpName::Vcomp => V::nat_trans(cat_engine::vcomp(
            want_nat_trans(op, &args[0])?,
            want_nat_trans(op, &args[1])?,
        )?),
        OpName::Pow0 => {
            let a = want_category(op, &args[0])?;
            let b = want_category(op, &args[1])?;
            V::Category {
                value: cat_engine::functor_category(a, b, caps)?.category,
            }
        }
        OpName::Pow1 => V::functor(cat_engine::pow1(
            want_functor(op, &args[0])?,
            want_functor(op, &args[1])?,
            caps,
        )?),
        OpName::KanEx => V::functor(
            cat_engine::kan_ext_right(
                want_functor(op, &args[0])?,
                want_functor(op, &args[1])?,
                caps,
            )?
            .functor,
        ),
        OpName::KanExInd => V::nat_trans(cat_engine::kan_ext_induced(
            want_functor(op, &args[0])?,
            want_functor(op, &args[1])?,
            want_functor(op, &args[2])?,
            want_nat_trans(op, &args[3])?,
            caps,
        )?),
        OpName::KanLif => V::functor(
            cat_engine::kan_lift_right(
                want_functor(op, &args[0])?,
                want_functor(op, &args[1])?,
                caps,
            )?
            .functor,
        ),
        OpName::KanLifInd => V::nat_trans(cat_engine::kan_lift_induced(
            want_functor(op, &args[0])?,
            want_functor(op, &args[1])?,
            want_functor(op, &args[2])?,
            want_nat_trans(op, &args[3])?,
            caps,
        )?),
        OpName::CircDot => V::functor(
            cat_engine::composition_functor(want_category(op, &args[0])?, caps)?.compose_functor,
        ),
    })
}

/// Executes a program. Input declarations are bound up front from `inputs`
/// in order; at run time an INPUT line is a no-op. `IF a == b` jumps by
/// structural equality. Execution is a pure function of
/// (program, inputs, limits).
pub fn run(
    program: &Program,
    inputs: &[StructureValue],
    limits: &RunLimits,
) -> Result<RunOutcome, RunError> {
    let declarations = program.input_declarations();
    if declarations.len() != inputs.len() {
        return Err(RunError::InputArity {
            expected: declarations.len(),
            got: inputs.len(),
        });
    }
    let mut env: BTreeMap<String, StructureValue> = BTreeMap::new();
    // each distinct category value is validated once, even when several
    // functor inputs share it
    let mut checked_cats: Vec<*const cat_core::ExplicitCategory> = Vec::new();
    let check_cat = |c: &Arc<cat_core::ExplicitCategory>,
                         var: &str,
                         checked: &mut Vec<*const cat_core::ExplicitCategory>|
     -> Result<(), RunError> {
        let ptr = Arc::as_ptr(c);
        if checked.contains(&ptr) {
            return Ok(());
        }
        let report = c.validate_category();
        if !report.ok {
            return Err(RunError::InputInvalid {
                var: var.to_string(),
                report: report.to_string(),
            });
        }
        checked.push(ptr);
        Ok(())
    };
    for ((var, kind), value) in declarations.iter().zip(inputs) {
        let ok = matches!(
            (kind, value),
            (Kind::Category, StructureValue::Category { .. })
                | (Kind::Functor, StructureValue::Functor { .. })
                | (Kind::NatTrans, StructureValue::NatTrans { .. })
        );
        if !ok {
            return Err(RunError::InputKind {
                var: var.clone(),
                expected: kind.name(),
                got: value.kind_name(),
            });
        }
        let report = match value {
            StructureValue::Category { value: c } => {
                check_cat(c, var, &mut checked_cats)?;
                None
            }
            StructureValue::Functor { value: f } => {
                check_cat(&f.source, var, &mut checked_cats)?;
                check_cat(&f.target, var, &mut checked_cats)?;
                Some(f.validate_functor_maps())
            }
            StructureValue::NatTrans { value: n } => {
                check_cat(&n.source_fun.source, var, &mut checked_cats)?;
                check_cat(&n.source_fun.target, var, &mut checked_cats)?;
                check_cat(&n.target_fun.source, var, &mut checked_cats)?;
                check_cat(&n.target_fun.target, var, &mut checked_cats)?;
                let a = n.source_fun.validate_functor_maps();
                let b = n.target_fun.validate_functor_maps();
                if !a.ok {
                    Some(a)
                } else if !b.ok {
                    Some(b)
                } else {
                    Some(n.validate_nat_trans_maps())
                }
            }
            StructureValue::OpaqueCat => None,
        };
        if let Some(report) = report {
            if !report.ok {
                return Err(RunError::InputInvalid {
                    var: var.clone(),
                    report: report.to_string(),
                });
            }
        }
        env.insert(var.clone(), value.clone());
    }

    // label -> instruction index
    let mut label_at = BTreeMap::new();
    for (i, inst) in program.instructions.iter().enumerate() {
        if let Some(l) = &inst.label {
            label_at.insert(l.clone(), i);
        }
    }

    let lookup = |env: &BTreeMap<String, StructureValue>, name: &str| -> Result<StructureValue, RunError> {
        env.get(name).cloned().ok_or_else(|| RunError::UnboundVariable {
            name: name.to_string(),
        })
    };

    let mut pc = 0usize;
    let mut steps = 0u64;
    while pc < program.instructions.len() {
        steps += 1;
        if steps > limits.max_steps {
            return Err(RunError::StepLimit);
        }
        match &program.instructions[pc].body {
            InstructionBody::Input { .. } => {}
            InstructionBody::Const { var, constant } => {
                env.insert(var.clone(), elaborate_constant(*constant)?);
            }
            InstructionBody::Assign { var, op, args } => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(lookup(&env, a)?);
                }
                env.insert(var.clone(), apply_op(*op, &vals, &limits.caps)?);
            }
            InstructionBody::If {
                left,
                right,
                target,
            } => {
                let l = lookup(&env, left)?;
                let r = lookup(&env, right)?;
                if structures_equal(&l, &r) {
                    pc = *label_at.get(target).expect("parse guarantees labels");
                    continue;
                }
            }
            InstructionBody::Return { vars } => {
                let mut returned = Vec::with_capacity(vars.len());
                for v in vars {
                    returned.push(lookup(&env, v)?);
                }
                return Ok(RunOutcome {
                    returned,
                    executed_instructions: steps,
                });
            }
        }
        pc += 1;
    }
    unreachable!("programs end with RETURN")
}
