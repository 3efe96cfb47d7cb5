use serde::{Deserialize, Serialize};
use std::fmt;

/// The operation names of the language, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OpName {
    Source1,
    Source2,
    Target1,
    Target2,
    Ident0,
    Ident1,
    Op0,
    Op1,
    Comp,
    Hcomp,
    Vcomp,
    Pow0,
    Pow1,
    KanEx,
    KanExInd,
    KanLif,
    KanLifInd,
    CircDot,
}

impl OpName {
    pub const ALL: [OpName; 18] = [
        OpName::Source1,
        OpName::Source2,
        OpName::Target1,
        OpName::Target2,
        OpName::Ident0,
        OpName::Ident1,
        OpName::Op0,
        OpName::Op1,
        OpName::Comp,
        OpName::Hcomp,
        OpName::Vcomp,
        OpName::Pow0,
        OpName::Pow1,
        OpName::KanEx,
        OpName::KanExInd,
        OpName::KanLif,
        OpName::KanLifInd,
        OpName::CircDot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OpName::Source1 => "Source1",
            OpName::Source2 => "Source2",
            OpName::Target1 => "Target1",
            OpName::Target2 => "Target2",
            OpName::Ident0 => "Ident0",
            OpName::Ident1 => "Ident1",
            OpName::Op0 => "Op0",
            OpName::Op1 => "Op1",
            OpName::Comp => "Comp",
            OpName::Hcomp => "Hcomp",
            OpName::Vcomp => "Vcomp",
            OpName::Pow0 => "Pow0",
            OpName::Pow1 => "Pow1",
            OpName::KanEx => "KanEx",
            OpName::KanExInd => "KanExInd",
            OpName::KanLif => "KanLif",
            OpName::KanLifInd => "KanLifInd",
            OpName::CircDot => "CircDot",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            OpName::Source1
            | OpName::Source2
            | OpName::Target1
            | OpName::Target2
            | OpName::Ident0
            | OpName::Ident1
            | OpName::Op0
            | OpName::Op1
            | OpName::CircDot => 1,
            OpName::Comp
            | OpName::Hcomp
            | OpName::Vcomp
            | OpName::Pow0
            | OpName::Pow1
            | OpName::KanEx
            | OpName::KanLif => 2,
            OpName::KanExInd | OpName::KanLifInd => 4,
        }
    }

    pub fn from_name(s: &str) -> Option<OpName> {
        OpName::ALL.iter().copied().find(|o| o.name() == s)
    }
}

/// The constant names of the language, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConstName {
    C0,
    C1,
    C2,
    Cat,
    S,
    T,
    Bang01,
    Bang02,
    Bang0Cat,
    BangCat1,
    Bang21,
}

impl ConstName {
    pub const ALL: [ConstName; 11] = [
        ConstName::C0,
        ConstName::C1,
        ConstName::C2,
        ConstName::Cat,
        ConstName::S,
        ConstName::T,
        ConstName::Bang01,
        ConstName::Bang02,
        ConstName::Bang0Cat,
        ConstName::BangCat1,
        ConstName::Bang21,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstName::C0 => "C0",
            ConstName::C1 => "C1",
            ConstName::C2 => "C2",
            ConstName::Cat => "CAT",
            ConstName::S => "S",
            ConstName::T => "T",
            ConstName::Bang01 => "BANG_0_1",
            ConstName::Bang02 => "BANG_0_2",
            ConstName::Bang0Cat => "BANG_0_CAT",
            ConstName::BangCat1 => "BANG_CAT_1",
            ConstName::Bang21 => "BANG_2_1",
        }
    }

    pub fn from_name(s: &str) -> Option<ConstName> {
        ConstName::ALL.iter().copied().find(|c| c.name() == s)
    }
}

/// Kind tags for input declarations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    Category,
    Functor,
    NatTrans,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Category, Kind::Functor, Kind::NatTrans];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Functor => "functor",
            Kind::NatTrans => "nattrans",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        Kind::ALL.iter().copied().find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InstructionBody {
    Assign {
        var: String,
        op: OpName,
        args: Vec<String>,
    },
    Const {
        var: String,
        constant: ConstName,
    },
    If {
        left: String,
        right: String,
        target: String,
    },
    Input {
        var: String,
        kind: Kind,
    },
    Return {
        vars: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instruction {
    pub label: Option<String>,
    pub body: InstructionBody,
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "{l}: ")?;
        }
        match &self.body {
            InstructionBody::Assign { var, op, args } => {
                write!(f, "{var} := {}({})", op.name(), args.join(", "))
            }
            InstructionBody::Const { var, constant } => write!(f, "{var} := {}", constant.name()),
            InstructionBody::If {
                left,
                right,
                target,
            } => write!(f, "IF {left} == {right} GOTO {target}"),
            InstructionBody::Input { var, kind } => write!(f, "INPUT {var} : {}", kind.name()),
            InstructionBody::Return { vars } => write!(f, "RETURN({})", vars.join(", ")),
        }
    }
}

/// A parsed program. Equality is on the instruction list; the source text is
/// kept for display only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Program {
    pub instructions: Vec<Instruction>,
    pub source: String,
    pub token_count: usize,
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.instructions == other.instructions
    }
}
impl Eq for Program {}

impl Program {
    /// Builds a program from instructions, with canonical source text and
    /// token count filled in.
    pub fn from_instructions(instructions: Vec<Instruction>) -> Program {
        let source = print_instructions(&instructions);
        let token_count = crate::goedel::token_count(&instructions);
        Program {
            instructions,
            source,
            token_count,
        }
    }

    /// Canonical source text for the instruction list.
    pub fn print(&self) -> String {
        print_instructions(&self.instructions)
    }

    /// Number of instructions counted as operations: everything except
    /// Input and Return lines.
    pub fn cost(&self) -> usize {
        self.instructions
            .iter()
            .filter(|i| {
                !matches!(
                    i.body,
                    InstructionBody::Input { .. } | InstructionBody::Return { .. }
                )
            })
            .count()
    }

    pub fn input_declarations(&self) -> Vec<(String, Kind)> {
        self.instructions
            .iter()
            .filter_map(|i| match &i.body {
                InstructionBody::Input { var, kind } => Some((var.clone(), *kind)),
                _ => None,
            })
            .collect()
    }
}

pub fn print_instructions(instructions: &[Instruction]) -> String {
    let mut out = String::new();
    for i in instructions {
        out.push_str(&i.to_string());
        out.push('\n');
    }
    out
}
