//! The shortest-program search: enumerate candidate programs in cost
//! layers, cheapest first, run each under the per-run limits, and return
//! the first whose returned structure is isomorphic to the target.
//!
//! The candidate space is the canonical 8-variable alphabet with several
//! minimality-preserving prunes: arguments must be bound, kinds must fit
//! the operation (a kind-mismatched program can never return), a variable
//! may not be overwritten while holding an unread operation result, every
//! costed instruction must be read by the time the program returns, and
//! labels appear only where referenced. Any witness can be alpha-renamed
//! and stripped of dead lines into this space without increasing its cost,
//! so the first hit is minimal.

use crate::encoding::EncodingSpec;
use crate::iso::structure_isomorphic;
use crate::query::{KQuery, KResult, SearchStatus};
use cat_core::StructureValue;
use sammy_lang::{
    run, ConstName, Instruction, InstructionBody, Kind, OpName, Program, RunError,
    CANONICAL_LABELS, CANONICAL_VARS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VKind {
    Cat,
    Fun,
    Nt,
}

fn op_signature(op: OpName) -> (&'static [VKind], VKind) {
    use VKind::*;
    match op {
        OpName::Source1 | OpName::Target1 => (&[Fun], Cat),
        OpName::Source2 | OpName::Target2 => (&[Nt], Fun),
        OpName::Ident0 => (&[Cat], Fun),
        OpName::Ident1 => (&[Fun], Nt),
        OpName::Op0 => (&[Cat], Cat),
        OpName::Op1 => (&[Fun], Fun),
        OpName::Comp | OpName::Pow1 | OpName::KanEx | OpName::KanLif => (&[Fun, Fun], Fun),
        OpName::Hcomp | OpName::Vcomp => (&[Nt, Nt], Nt),
        OpName::Pow0 => (&[Cat, Cat], Cat),
        OpName::KanExInd | OpName::KanLifInd => (&[Fun, Fun, Fun, Nt], Nt),
        OpName::CircDot => (&[Cat], Fun),
    }
}

fn const_kind(c: ConstName) -> Option<VKind> {
    use VKind::*;
    Some(match c {
        ConstName::C0 | ConstName::C1 | ConstName::C2 => Cat,
        // the opaque constant and the Cat-involving functor constants can
        // never be part of a returning witness that beats a tabulated one,
        // except CAT itself as a returned value
        ConstName::Cat => Cat,
        ConstName::S | ConstName::T | ConstName::Bang01 | ConstName::Bang02 | ConstName::Bang21 => {
            Fun
        }
        ConstName::Bang0Cat | ConstName::BangCat1 => return None,
    })
}

#[derive(Clone)]
struct GenState {
    kinds: Vec<VKind>,
    /// bit i set when variable i holds a costed result not yet read
    unread: u16,
    /// a write clobbered an unread result; only a conditional (which can
    /// jump backwards) can make such a program live
    needs_if: bool,
    has_if: bool,
    intro_labels: usize,
    placed: u16,
    referenced: u16,
    remaining: u32,
}

impl GenState {
    fn read(&mut self, var: usize) {
        self.unread &= !(1 << var);
    }

    fn write(&mut self, var: usize, kind: VKind) {
        if self.unread & (1 << var) != 0 {
            self.needs_if = true;
        }
        if var == self.kinds.len() {
            self.kinds.push(kind);
        } else {
            self.kinds[var] = kind;
        }
        self.unread |= 1 << var;
    }
}

enum Mode {
    /// evaluate candidates as they are generated, stopping at the first hit
    Sequential,
    /// collect the candidate bodies of one layer for batch evaluation
    Collect(Vec<Vec<Instruction>>),
}

struct Search<'q> {
    query: &'q KQuery,
    enc: &'q EncodingSpec,
    input_lines: Vec<Instruction>,
    programs_tried: u64,
    runs_timed_out: u64,
    found: Option<(u32, Program)>,
    mode: Mode,
}

impl<'q> Search<'q> {
    fn assignable_vars(&self, st: &GenState) -> Vec<usize> {
        let mut out: Vec<usize> = (0..st.kinds.len()).collect();
        if st.kinds.len() < CANONICAL_VARS.len() {
            out.push(st.kinds.len());
        }
        out
    }

    fn vars_of_kind(&self, st: &GenState, k: VKind) -> Vec<usize> {
        (0..st.kinds.len()).filter(|&i| st.kinds[i] == k).collect()
    }

    fn candidate(&mut self, lines: &[Instruction]) -> bool {
        if let Mode::Collect(buf) = &mut self.mode {
            buf.push(lines.to_vec());
            return false;
        }
        let mut instructions = self.input_lines.clone();
        instructions.extend_from_slice(lines);
        let program = Program::from_instructions(instructions);
        self.programs_tried += 1;
        match evaluate_candidate(&program, self.query) {
            Evaluation::Hit => {
                let cost = self.enc.program_cost(&program);
                self.found = Some((cost, program));
                true
            }
            Evaluation::TimedOut => {
                self.runs_timed_out += 1;
                false
            }
            Evaluation::Miss => false,
        }
    }

    /// Depth-first generation of the body at exactly the layer cost; the
    /// final line is the Return.
    fn gen(&mut self, st: &GenState, lines: &mut Vec<Instruction>) -> bool {
        if st.remaining == 0 {
            // close with a Return over each bound variable
            for var in 0..st.kinds.len() {
                let mut st2 = st.clone();
                st2.read(var);
                // liveness pruning is only sound for straight-line programs;
                // a conditional can jump backwards into anything
                if !st2.has_if && (st2.unread != 0 || st2.needs_if) {
                    continue;
                }
                // a pending label may land on the Return
                let mut layouts: Vec<(Option<usize>, GenState)> = vec![(None, st2.clone())];
                for l in 0..st2.intro_labels {
                    if st2.placed & (1 << l) == 0 {
                        let mut st3 = st2.clone();
                        st3.placed |= 1 << l;
                        layouts.push((Some(l), st3));
                    }
                }
                for (label, st3) in layouts {
                    if st3.placed != st3.referenced {
                        continue;
                    }
                    lines.push(Instruction {
                        label: label.map(|l| CANONICAL_LABELS[l].to_string()),
                        body: InstructionBody::Return {
                            vars: vec![CANONICAL_VARS[var].to_string()],
                        },
                    });
                    let hit = self.candidate(lines);
                    lines.pop();
                    if hit {
                        return true;
                    }
                }
            }
            return false;
        }

        // label slot for this line
        let mut label_opts: Vec<(Option<usize>, GenState)> = vec![(None, st.clone())];
        for l in 0..st.intro_labels {
            if st.placed & (1 << l) == 0 {
                let mut s = st.clone();
                s.placed |= 1 << l;
                label_opts.push((Some(l), s));
            }
        }
        if st.intro_labels < CANONICAL_LABELS.len() {
            let mut s = st.clone();
            s.placed |= 1 << s.intro_labels;
            s.intro_labels += 1;
            label_opts.push((Some(st.intro_labels), s));
        }

        for (label, st_l) in label_opts {
            let label_name = label.map(|l| CANONICAL_LABELS[l].to_string());

            // operation assignments, in table order
            for &op in &self.enc.op_order {
                let cost = self.enc.op_cost(op);
                if cost > st_l.remaining {
                    continue;
                }
                let (arg_kinds, result) = op_signature(op);
                let pools: Vec<Vec<usize>> =
                    arg_kinds.iter().map(|&k| self.vars_of_kind(&st_l, k)).collect();
                if pools.iter().any(|p| p.is_empty()) {
                    continue;
                }
                let mut tuple = vec![0usize; pools.len()];
                if self.gen_args(&st_l, lines, &label_name, op, result, cost, &pools, &mut tuple, 0)
                {
                    return true;
                }
            }
            // constant assignments
            if st_l.remaining >= 1 {
                for var in self.assignable_vars(&st_l) {
                    for c in ConstName::ALL {
                        let Some(kind) = const_kind(c) else { continue };
                        let mut st2 = st_l.clone();
                        st2.write(var, kind);
                        st2.remaining -= 1;
                        lines.push(Instruction {
                            label: label_name.clone(),
                            body: InstructionBody::Const {
                                var: CANONICAL_VARS[var].to_string(),
                                constant: c,
                            },
                        });
                        let hit = self.gen(&st2, lines);
                        lines.pop();
                        if hit {
                            return true;
                        }
                    }
                }
                // conditionals
                for left in 0..st_l.kinds.len() {
                    for right in 0..st_l.kinds.len() {
                        let mut targets: Vec<usize> = (0..st_l.intro_labels).collect();
                        if st_l.intro_labels < CANONICAL_LABELS.len() {
                            targets.push(st_l.intro_labels);
                        }
                        for t in targets {
                            let mut st2 = st_l.clone();
                            st2.read(left);
                            st2.read(right);
                            st2.has_if = true;
                            if t == st2.intro_labels {
                                st2.intro_labels += 1;
                            }
                            st2.referenced |= 1 << t;
                            st2.remaining -= 1;
                            lines.push(Instruction {
                                label: label_name.clone(),
                                body: InstructionBody::If {
                                    left: CANONICAL_VARS[left].to_string(),
                                    right: CANONICAL_VARS[right].to_string(),
                                    target: CANONICAL_LABELS[t].to_string(),
                                },
                            });
                            let hit = self.gen(&st2, lines);
                            lines.pop();
                            if hit {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn gen_args(
        &mut self,
        st: &GenState,
        lines: &mut Vec<Instruction>,
        label: &Option<String>,
        op: OpName,
        result: VKind,
        cost: u32,
        pools: &[Vec<usize>],
        tuple: &mut Vec<usize>,
        depth: usize,
    ) -> bool {
        if depth == pools.len() {
            for var in self.assignable_vars(st) {
                // arguments are read before the variable is written, so a
                // result may overwrite one of its own arguments
                let mut st2 = st.clone();
                for &a in tuple.iter() {
                    st2.read(a);
                }
                st2.write(var, result);
                st2.remaining -= cost;
                lines.push(Instruction {
                    label: label.clone(),
                    body: InstructionBody::Assign {
                        var: CANONICAL_VARS[var].to_string(),
                        op,
                        args: tuple
                            .iter()
                            .map(|&a| CANONICAL_VARS[a].to_string())
                            .collect(),
                    },
                });
                let hit = self.gen(&st2, lines);
                lines.pop();
                if hit {
                    return true;
                }
            }
            return false;
        }
        for &cand in &pools[depth] {
            tuple[depth] = cand;
            if self.gen_args(st, lines, label, op, result, cost, pools, tuple, depth + 1) {
                return true;
            }
        }
        false
    }
}

fn kind_of(v: &StructureValue) -> Option<(Kind, VKind)> {
    match v {
        StructureValue::Category { .. } => Some((Kind::Category, VKind::Cat)),
        StructureValue::Functor { .. } => Some((Kind::Functor, VKind::Fun)),
        StructureValue::NatTrans { .. } => Some((Kind::NatTrans, VKind::Nt)),
        StructureValue::OpaqueCat => None,
    }
}

enum Evaluation {
    Hit,
    Miss,
    TimedOut,
}

fn evaluate_candidate(program: &Program, query: &KQuery) -> Evaluation {
    match run(program, &query.givens, &query.run_limits) {
        Ok(out) => {
            if structure_isomorphic(&out.returned[0], &query.target, &query.run_limits.caps) {
                Evaluation::Hit
            } else {
                Evaluation::Miss
            }
        }
        Err(RunError::StepLimit) => Evaluation::TimedOut,
        Err(RunError::Engine(e)) if e.is_resource_limit() => Evaluation::TimedOut,
        Err(_) => Evaluation::Miss,
    }
}

fn input_prelude(query: &KQuery) -> (Vec<Instruction>, Vec<VKind>) {
    let mut input_lines = Vec::new();
    let mut kinds = Vec::new();
    for (i, g) in query.givens.iter().enumerate() {
        let (decl, vk) = kind_of(g).expect("givens must be tabulated structures");
        input_lines.push(Instruction {
            label: None,
            body: InstructionBody::Input {
                var: CANONICAL_VARS[i].to_string(),
                kind: decl,
            },
        });
        kinds.push(vk);
    }
    (input_lines, kinds)
}

fn layer_state(kinds: &[VKind], layer: u32) -> GenState {
    GenState {
        kinds: kinds.to_vec(),
        unread: 0,
        needs_if: false,
        has_if: false,
        intro_labels: 0,
        placed: 0,
        referenced: 0,
        remaining: layer,
    }
}

fn finish(query: &KQuery, found: Option<(u32, Program)>, tried: u64, timed_out: u64) -> KResult {
    let (status, witness) = match found {
        Some((cost, program)) => (
            SearchStatus::Found {
                min_length: cost,
                witness_source: program.print(),
            },
            Some(program),
        ),
        None => (SearchStatus::NotFoundWithinBudget, None),
    };
    // soundness: a found witness must replay to an isomorphic structure
    if let Some(p) = &witness {
        let out = run(p, &query.givens, &query.run_limits).expect("witness replays");
        assert!(structure_isomorphic(
            &out.returned[0],
            &query.target,
            &query.run_limits.caps
        ));
    }
    KResult {
        status,
        witness,
        programs_tried: tried,
        runs_timed_out: timed_out,
    }
}

/// Runs the search under an explicit enumeration encoding.
pub fn ksearch_with_encoding(query: &KQuery, enc: &EncodingSpec) -> KResult {
    let (input_lines, kinds) = input_prelude(query);
    let mut search = Search {
        query,
        enc,
        input_lines,
        programs_tried: 0,
        runs_timed_out: 0,
        found: None,
        mode: Mode::Sequential,
    };
    for layer in 0..=query.budget {
        let st = layer_state(&kinds, layer);
        let mut lines = Vec::new();
        if search.gen(&st, &mut lines) {
            break;
        }
    }
    finish(
        query,
        search.found,
        search.programs_tried,
        search.runs_timed_out,
    )
}

/// Candidate evaluation spread over worker threads, layer by layer. The
/// search result is the candidate with the smallest enumeration index, so
/// the outcome matches the sequential search exactly; only wall-clock time
/// and the tried/timed-out accounting differ (a whole layer is evaluated).
pub fn ksearch_parallel(query: &KQuery, enc: &EncodingSpec, threads: usize) -> KResult {
    let threads = threads.max(1);
    let (input_lines, kinds) = input_prelude(query);
    let mut tried = 0u64;
    let mut timed_out = 0u64;
    for layer in 0..=query.budget {
        let mut search = Search {
            query,
            enc,
            input_lines: input_lines.clone(),
            programs_tried: 0,
            runs_timed_out: 0,
            found: None,
            mode: Mode::Collect(Vec::new()),
        };
        let st = layer_state(&kinds, layer);
        let mut lines = Vec::new();
        search.gen(&st, &mut lines);
        let bodies = match search.mode {
            Mode::Collect(b) => b,
            Mode::Sequential => unreachable!(),
        };
        let programs: Vec<Program> = bodies
            .into_iter()
            .map(|body| {
                let mut instructions = input_lines.clone();
                instructions.extend(body);
                Program::from_instructions(instructions)
            })
            .collect();
        tried += programs.len() as u64;

        let chunk = programs.len().div_ceil(threads).max(1);
        let results = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (c, slice) in programs.chunks(chunk).enumerate() {
                handles.push(scope.spawn(move || {
                    let mut hit: Option<usize> = None;
                    let mut slow = 0u64;
                    for (i, p) in slice.iter().enumerate() {
                        match evaluate_candidate(p, query) {
                            Evaluation::Hit => {
                                hit = Some(c * chunk + i);
                                break;
                            }
                            Evaluation::TimedOut => slow += 1,
                            Evaluation::Miss => {}
                        }
                    }
                    (hit, slow)
                }));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("worker"))
                .collect::<Vec<_>>()
        });
        let mut best: Option<usize> = None;
        for (hit, slow) in results {
            timed_out += slow;
            if let Some(i) = hit {
                best = Some(best.map_or(i, |b| b.min(i)));
            }
        }
        if let Some(i) = best {
            let program = programs[i].clone();
            let cost = enc.program_cost(&program);
            return finish(query, Some((cost, program)), tried, timed_out);
        }
    }
    finish(query, None, tried, timed_out)
}

/// Shortest-program search under the standard encoding.
pub fn ksearch(query: &KQuery) -> KResult {
    ksearch_with_encoding(query, &EncodingSpec::standard())
}

/// Relative complexity: the target given one structure as input.
pub fn relative_k(
    target: &StructureValue,
    given: &StructureValue,
    budget: u32,
) -> KResult {
    ksearch(&KQuery::new(target.clone(), budget).with_givens(vec![given.clone()]))
}
