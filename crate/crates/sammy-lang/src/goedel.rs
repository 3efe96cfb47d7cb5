//! Numbering of programs.
//!
//! A program is flattened into a token string over a fixed table of 119
//! tokens and read as a bijective base-119 numeral, so the numbering is a
//! bijection between valid programs and a decidable set of naturals, and
//! comparing codes is exactly length-lexicographic comparison of token
//! strings: programs with more tokens always have larger codes.
//!
//! Every instruction serializes to a fixed shape — label slot, head token,
//! six payload slots — so over the canonical name alphabet each instruction
//! costs exactly 8 tokens. Names outside the canonical alphabet are spelled
//! out character by character with a terminator.

use crate::ast::{ConstName, Instruction, InstructionBody, Kind, OpName, Program};
use crate::parser::validate_instructions;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const BASE: u32 = 119;

const TOK_HEAD_ASSIGN_OP: u16 = 0;
const TOK_HEAD_ASSIGN_CONST: u16 = 1;
const TOK_HEAD_IF: u16 = 2;
const TOK_HEAD_RETURN: u16 = 3;
const TOK_HEAD_INPUT: u16 = 4;
const OP_BASE: u16 = 5; // 18 operations
const CONST_BASE: u16 = 23; // 11 constants
const KIND_BASE: u16 = 34; // 3 kinds
const TOK_NO_LABEL: u16 = 37;
const TOK_NIL: u16 = 38;
const TOK_END_NAME: u16 = 39;
const CANON_VAR_BASE: u16 = 40; // 8 canonical variable names
const CANON_LABEL_BASE: u16 = 48; // 8 canonical label names
const CHAR_BASE: u16 = 56; // 26 + 26 + 10 + 1 = 63 identifier characters

pub const CANONICAL_VARS: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];
pub const CANONICAL_LABELS: [&str; 8] = ["L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"];

fn char_token(c: char) -> Option<u16> {
    match c {
        'A'..='Z' => Some(CHAR_BASE + (c as u16 - 'A' as u16)),
        'a'..='z' => Some(CHAR_BASE + 26 + (c as u16 - 'a' as u16)),
        '0'..='9' => Some(CHAR_BASE + 52 + (c as u16 - '0' as u16)),
        '_' => Some(CHAR_BASE + 62),
        _ => None,
    }
}

fn token_char(t: u16) -> Option<char> {
    let off = t.checked_sub(CHAR_BASE)?;
    match off {
        0..=25 => Some((b'A' + off as u8) as char),
        26..=51 => Some((b'a' + (off - 26) as u8) as char),
        52..=61 => Some((b'0' + (off - 52) as u8) as char),
        62 => Some('_'),
        _ => None,
    }
}

fn push_name(out: &mut Vec<u16>, name: &str) {
    if let Some(i) = CANONICAL_VARS.iter().position(|&v| v == name) {
        out.push(CANON_VAR_BASE + i as u16);
        return;
    }
    if let Some(i) = CANONICAL_LABELS.iter().position(|&v| v == name) {
        out.push(CANON_LABEL_BASE + i as u16);
        return;
    }
    for c in name.chars() {
        out.push(char_token(c).expect("identifier characters only"));
    }
    out.push(TOK_END_NAME);
}

/// Flattens instructions to the token string. Each instruction is
/// label-slot, head, and exactly six payload slots (padded with nil).
pub fn serialize_tokens(instructions: &[Instruction]) -> Vec<u16> {
    let mut out = Vec::new();
    for inst in instructions {
        match &inst.label {
            None => out.push(TOK_NO_LABEL),
            Some(l) => push_name(&mut out, l),
        }
        match &inst.body {
            InstructionBody::Assign { var, op, args } => {
                out.push(TOK_HEAD_ASSIGN_OP);
                push_name(&mut out, var);
                let idx = OpName::ALL.iter().position(|o| o == op).unwrap() as u16;
                out.push(OP_BASE + idx);
                for a in args {
                    push_name(&mut out, a);
                }
                for _ in args.len()..4 {
                    out.push(TOK_NIL);
                }
            }
            InstructionBody::Const { var, constant } => {
                out.push(TOK_HEAD_ASSIGN_CONST);
                push_name(&mut out, var);
                let idx = ConstName::ALL.iter().position(|c| c == constant).unwrap() as u16;
                out.push(CONST_BASE + idx);
                for _ in 0..4 {
                    out.push(TOK_NIL);
                }
            }
            InstructionBody::If {
                left,
                right,
                target,
            } => {
                out.push(TOK_HEAD_IF);
                push_name(&mut out, left);
                push_name(&mut out, right);
                push_name(&mut out, target);
                for _ in 0..3 {
                    out.push(TOK_NIL);
                }
            }
            InstructionBody::Input { var, kind } => {
                out.push(TOK_HEAD_INPUT);
                push_name(&mut out, var);
                let idx = Kind::ALL.iter().position(|k| k == kind).unwrap() as u16;
                out.push(KIND_BASE + idx);
                for _ in 0..4 {
                    out.push(TOK_NIL);
                }
            }
            InstructionBody::Return { vars } => {
                out.push(TOK_HEAD_RETURN);
                for v in vars {
                    push_name(&mut out, v);
                }
                for _ in vars.len()..6 {
                    out.push(TOK_NIL);
                }
            }
        }
    }
    out
}

pub fn token_count(instructions: &[Instruction]) -> usize {
    serialize_tokens(instructions).len()
}

struct TokenReader<'t> {
    toks: &'t [u16],
    pos: usize,
}

impl<'t> TokenReader<'t> {
    fn next(&mut self) -> Option<u16> {
        let t = self.toks.get(self.pos).copied()?;
        self.pos += 1;
        Some(t)
    }

    fn peek(&self) -> Option<u16> {
        self.toks.get(self.pos).copied()
    }

    fn read_name(&mut self) -> Option<String> {
        let t = self.next()?;
        if (CANON_VAR_BASE..CANON_VAR_BASE + 8).contains(&t) {
            return Some(CANONICAL_VARS[(t - CANON_VAR_BASE) as usize].to_string());
        }
        if (CANON_LABEL_BASE..CANON_LABEL_BASE + 8).contains(&t) {
            return Some(CANONICAL_LABELS[(t - CANON_LABEL_BASE) as usize].to_string());
        }
        let mut s = String::new();
        let mut cur = t;
        loop {
            if cur == TOK_END_NAME {
                break;
            }
            s.push(token_char(cur)?);
            cur = self.next()?;
        }
        // must be a real identifier in canonical (shortest) encoding
        if s.is_empty()
            || s.chars().next().unwrap().is_ascii_digit()
            || CANONICAL_VARS.contains(&s.as_str())
            || CANONICAL_LABELS.contains(&s.as_str())
            || crate::parser::is_reserved(&s)
        {
            return None;
        }
        Some(s)
    }

    fn expect_nil(&mut self, n: usize) -> Option<()> {
        for _ in 0..n {
            if self.next()? != TOK_NIL {
                return None;
            }
        }
        Some(())
    }
}

fn parse_tokens(toks: &[u16]) -> Option<Vec<Instruction>> {
    let mut r = TokenReader { toks, pos: 0 };
    let mut out = Vec::new();
    while r.peek().is_some() {
        let label = if r.peek() == Some(TOK_NO_LABEL) {
            r.next();
            None
        } else {
            Some(r.read_name()?)
        };
        let head = r.next()?;
        let body = match head {
            TOK_HEAD_ASSIGN_OP => {
                let var = r.read_name()?;
                let op_tok = r.next()?;
                let idx = op_tok.checked_sub(OP_BASE)? as usize;
                let op = *OpName::ALL.get(idx)?;
                let mut args = Vec::with_capacity(op.arity());
                for _ in 0..op.arity() {
                    args.push(r.read_name()?);
                }
                r.expect_nil(4 - op.arity())?;
                InstructionBody::Assign { var, op, args }
            }
            TOK_HEAD_ASSIGN_CONST => {
                let var = r.read_name()?;
                let c_tok = r.next()?;
                let idx = c_tok.checked_sub(CONST_BASE)? as usize;
                let constant = *ConstName::ALL.get(idx)?;
                r.expect_nil(4)?;
                InstructionBody::Const { var, constant }
            }
            TOK_HEAD_IF => {
                let left = r.read_name()?;
                let right = r.read_name()?;
                let target = r.read_name()?;
                r.expect_nil(3)?;
                InstructionBody::If {
                    left,
                    right,
                    target,
                }
            }
            TOK_HEAD_INPUT => {
                let var = r.read_name()?;
                let k_tok = r.next()?;
                let idx = k_tok.checked_sub(KIND_BASE)? as usize;
                let kind = *Kind::ALL.get(idx)?;
                r.expect_nil(4)?;
                InstructionBody::Input { var, kind }
            }
            TOK_HEAD_RETURN => {
                let mut vars = vec![r.read_name()?];
                while vars.len() < 3 && r.peek() != Some(TOK_NIL) {
                    vars.push(r.read_name()?);
                }
                r.expect_nil(6 - vars.len())?;
                InstructionBody::Return { vars }
            }
            _ => return None,
        };
        out.push(Instruction { label, body });
    }
    Some(out)
}

/// A nonnegative integer encoding a program, arbitrary precision. Printed
/// and serialized in decimal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GoedelCode(pub BigUint);

impl fmt::Display for GoedelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for GoedelCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for GoedelCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let n = s
            .parse::<BigUint>()
            .map_err(|e| serde::de::Error::custom(format!("invalid code: {e}")))?;
        Ok(GoedelCode(n))
    }
}

/// Encodes a program as a bijective base-119 numeral over its token string.
pub fn encode(p: &Program) -> GoedelCode {
    let toks = serialize_tokens(&p.instructions);
    let mut n = BigUint::zero();
    let base = BigUint::from(BASE);
    for t in toks {
        n = n * &base + BigUint::from(t as u32 + 1);
    }
    GoedelCode(n)
}

/// Decodes a number back into a program; `None` for numbers outside the
/// image of `encode`.
pub fn decode(code: &GoedelCode) -> Option<Program> {
    let mut digits: Vec<u16> = Vec::new();
    let mut n = code.0.clone();
    let base = BigUint::from(BASE);
    let one = BigUint::one();
    while !n.is_zero() {
        let r = (&n % &base).to_u32_digits().first().copied().unwrap_or(0);
        if r == 0 {
            digits.push((BASE - 1) as u16); // digit value BASE -> token BASE-1
            n = &n / &base - &one;
        } else {
            digits.push((r - 1) as u16);
            n = &n / &base;
        }
    }
    digits.reverse();
    let instructions = parse_tokens(&digits)?;
    validate_instructions(&instructions, |i| i + 1).ok()?;
    Some(Program::from_instructions(instructions))
}
