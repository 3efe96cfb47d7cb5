//! The Sammy language: labeled assignments over the categorical operation
//! table, conditional goto by structural equality, input declarations, and
//! a Return of up to three structures. Plus numbering of programs and a
//! canonical length-ordered enumeration.

mod ast;
mod enumerate;
mod goedel;
mod interp;
mod parser;

pub use ast::{
    print_instructions, ConstName, Instruction, InstructionBody, Kind, OpName, Program,
};
pub use enumerate::enumerate;
pub use goedel::{
    decode, encode, serialize_tokens, token_count, GoedelCode, BASE, CANONICAL_LABELS,
    CANONICAL_VARS,
};
pub use interp::{run, RunError, RunLimits, RunOutcome};
pub use parser::{parse, validate_instructions, ParseError};
