use sammy_lang::{InstructionBody, OpName, Program};
use std::collections::BTreeMap;

/// An enumeration encoding: the operation order (its token table) and the
/// cost charged per operation. The standard encoding charges one unit per
/// non-Input, non-Return instruction; a variant may expand an operation
/// into a macro costing more.
#[derive(Debug, Clone)]
pub struct EncodingSpec {
    pub name: String,
    pub op_order: Vec<OpName>,
    pub op_costs: BTreeMap<OpName, u32>,
}

impl EncodingSpec {
    pub fn standard() -> EncodingSpec {
        EncodingSpec {
            name: "standard".into(),
            op_order: OpName::ALL.to_vec(),
            op_costs: BTreeMap::new(),
        }
    }

    /// Same costs, operations enumerated in a rotated table order.
    pub fn permuted(rotation: usize) -> EncodingSpec {
        let mut order = OpName::ALL.to_vec();
        let shift = rotation % order.len();
        order.rotate_left(shift);
        EncodingSpec {
            name: format!("permuted-{rotation}"),
            op_order: order,
            op_costs: BTreeMap::new(),
        }
    }

    /// Same table, one operation charged as an n-instruction macro.
    pub fn with_macro_cost(op: OpName, cost: u32) -> EncodingSpec {
        let mut op_costs = BTreeMap::new();
        op_costs.insert(op, cost);
        EncodingSpec {
            name: format!("{}-as-{cost}", op.name()),
            op_order: OpName::ALL.to_vec(),
            op_costs,
        }
    }

    pub fn op_cost(&self, op: OpName) -> u32 {
        self.op_costs.get(&op).copied().unwrap_or(1)
    }

    /// Cost of a program under this encoding: Input and Return lines are
    /// free, constant assignments and conditionals cost one, operation
    /// assignments cost their table entry.
    pub fn program_cost(&self, p: &Program) -> u32 {
        p.instructions
            .iter()
            .map(|i| match &i.body {
                InstructionBody::Input { .. } | InstructionBody::Return { .. } => 0,
                InstructionBody::Const { .. } | InstructionBody::If { .. } => 1,
                InstructionBody::Assign { op, .. } => self.op_cost(*op),
            })
            .sum()
    }
}
