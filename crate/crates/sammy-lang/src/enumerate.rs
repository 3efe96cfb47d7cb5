//! Canonical enumeration of programs in length-lexicographic token order.
//!
//! The stream ranges over programs in canonical form: variables are drawn
//! from the canonical alphabet A..H and introduced in alphabetical order of
//! first occurrence, labels likewise from L1..L8 in order of first
//! occurrence, and a line carries a label only if some IF references it.
//! Every program is alpha-renameable into this form without changing its
//! length, so searches over the stream see a representative of every
//! program shape. Within one line count the emission order is exactly the
//! lexicographic order of the token serialization, so Goedel codes are
//! strictly increasing along the stream.

use crate::ast::{ConstName, Instruction, InstructionBody, Kind, OpName, Program};
use crate::goedel::{CANONICAL_LABELS, CANONICAL_VARS};

const TOKENS_PER_LINE: usize = 8;

#[derive(Clone)]
struct GenState {
    used_vars: usize,
    intro_labels: usize,
    placed: u8,
    referenced: u8,
}

impl GenState {
    fn new() -> Self {
        GenState {
            used_vars: 0,
            intro_labels: 0,
            placed: 0,
            referenced: 0,
        }
    }

    fn var_options(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.used_vars).collect();
        if self.used_vars < CANONICAL_VARS.len() {
            v.push(self.used_vars);
        }
        v
    }

    fn use_var(&mut self, idx: usize) {
        if idx == self.used_vars {
            self.used_vars += 1;
        }
    }
}

/// Generates all restricted-growth variable sequences of the given length,
/// in lexicographic order, threading the state through.
fn var_sequences(state: &GenState, len: usize) -> Vec<(Vec<usize>, GenState)> {
    let mut out = Vec::new();
    fn rec(state: GenState, len: usize, acc: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, GenState)>) {
        if acc.len() == len {
            out.push((acc.clone(), state));
            return;
        }
        for idx in state.var_options() {
            let mut st = state.clone();
            st.use_var(idx);
            acc.push(idx);
            rec(st, len, acc, out);
            acc.pop();
        }
    }
    rec(state.clone(), len, &mut Vec::new(), &mut out);
    out
}

fn var_name(i: usize) -> String {
    CANONICAL_VARS[i].to_string()
}

fn label_name(i: usize) -> String {
    CANONICAL_LABELS[i].to_string()
}

/// Bodies for a non-final line, in token-lexicographic order, each with the
/// successor state.
fn non_return_bodies(state: &GenState) -> Vec<(InstructionBody, GenState)> {
    let mut out = Vec::new();
    // operation assignments
    for (seq, st) in var_sequences(state, 1) {
        for op in OpName::ALL {
            for (args, st2) in var_sequences(&st, op.arity()) {
                out.push((
                    InstructionBody::Assign {
                        var: var_name(seq[0]),
                        op,
                        args: args.into_iter().map(var_name).collect(),
                    },
                    st2.clone(),
                ));
            }
        }
    }
    // constant assignments
    for (seq, st) in var_sequences(state, 1) {
        for c in ConstName::ALL {
            out.push((
                InstructionBody::Const {
                    var: var_name(seq[0]),
                    constant: c,
                },
                st.clone(),
            ));
        }
    }
    // conditionals
    for (operands, st) in var_sequences(state, 2) {
        let mut targets: Vec<usize> = (0..st.intro_labels).collect();
        if st.intro_labels < CANONICAL_LABELS.len() {
            targets.push(st.intro_labels);
        }
        for t in targets {
            let mut st2 = st.clone();
            if t == st2.intro_labels {
                st2.intro_labels += 1;
            }
            st2.referenced |= 1 << t;
            out.push((
                InstructionBody::If {
                    left: var_name(operands[0]),
                    right: var_name(operands[1]),
                    target: label_name(t),
                },
                st2,
            ));
        }
    }
    // input declarations
    for (seq, st) in var_sequences(state, 1) {
        for k in Kind::ALL {
            out.push((
                InstructionBody::Input {
                    var: var_name(seq[0]),
                    kind: k,
                },
                st.clone(),
            ));
        }
    }
    out
}

/// Return bodies in token order: at each optional slot the empty (nil)
/// continuation precedes any variable.
fn return_bodies(state: &GenState) -> Vec<(InstructionBody, GenState)> {
    let mut out = Vec::new();
    fn rec(
        state: GenState,
        acc: &mut Vec<usize>,
        out: &mut Vec<(InstructionBody, GenState)>,
    ) {
        if !acc.is_empty() {
            out.push((
                InstructionBody::Return {
                    vars: acc.iter().map(|&i| var_name(i)).collect(),
                },
                state.clone(),
            ));
        }
        if acc.len() == 3 {
            return;
        }
        for idx in state.var_options() {
            let mut st = state.clone();
            st.use_var(idx);
            acc.push(idx);
            rec(st, acc, out);
            acc.pop();
        }
    }
    // order check: RETURN(A) must precede RETURN(A, ...). The recursion
    // pushes the shorter form before extending it, which matches the nil
    // token sorting below the name tokens.
    rec(state.clone(), &mut Vec::new(), &mut out);
    out
}

fn label_options(state: &GenState) -> Vec<(Option<usize>, GenState)> {
    let mut out = vec![(None, state.clone())];
    for i in 0..state.intro_labels {
        if state.placed & (1 << i) == 0 {
            let mut st = state.clone();
            st.placed |= 1 << i;
            out.push((Some(i), st));
        }
    }
    if state.intro_labels < CANONICAL_LABELS.len() {
        let mut st = state.clone();
        st.placed |= 1 << st.intro_labels;
        st.intro_labels += 1;
        out.push((Some(state.intro_labels), st));
    }
    out
}

fn generate_k_lines(k: usize) -> Vec<Program> {
    let mut out = Vec::new();
    let mut lines: Vec<Instruction> = Vec::with_capacity(k);
    fn rec(i: usize, k: usize, state: &GenState, lines: &mut Vec<Instruction>, out: &mut Vec<Program>) {
        if i == k {
            if state.placed == state.referenced {
                out.push(Program::from_instructions(lines.clone()));
            }
            return;
        }
        for (label, st) in label_options(state) {
            let bodies = if i + 1 == k {
                return_bodies(&st)
            } else {
                non_return_bodies(&st)
            };
            for (body, st2) in bodies {
                lines.push(Instruction {
                    label: label.map(label_name),
                    body,
                });
                rec(i + 1, k, &st2, lines, out);
                lines.pop();
            }
        }
    }
    rec(0, k, &GenState::new(), &mut lines, &mut out);
    out
}

/// Streams every canonical-form program whose token count is within the
/// bound, in length-lexicographic order, without duplicates.
pub fn enumerate(max_tokens: usize) -> impl Iterator<Item = Program> {
    let max_lines = max_tokens / TOKENS_PER_LINE;
    (1..=max_lines).flat_map(|k| generate_k_lines(k).into_iter())
}
