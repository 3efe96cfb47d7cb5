//! Reusable builders for the standard constructions, all explicitly
//! truncated: number categories, computable-function functors and their
//! closure operations, the tape encoding with the per-rule step, the
//! bounded existential quantifier, the monotone factoring test, lollipops,
//! and the logarithmic pointer programs.

mod connectivity;
mod error;
mod functions;
mod halt;
mod lollipop;
mod numbers;
mod pointer_programs;
mod quantifier;
mod tape;

pub use connectivity::{is_connected, is_connected_by_graph, is_discrete, is_discrete_by_graph};
pub use error::StdlibError;
pub use functions::{
    constructible_function_check, function_functor, groupoid_power, mu_minimization,
    primitive_recursion,
};
pub use halt::{monotone_factor_halt, monotone_scan, sequence_functor, MonotoneFactor};
pub use lollipop::{lollipop, lollipop_projection, periodicity_scan, rational_factor_test};
pub use numbers::{
    build_number_category, inclusion, pointer, predecessor, successor, NumberKind,
    TruncatedNumberCategory,
};
pub use pointer_programs::{
    binary_digits, binary_input_pointer_inputs, binary_input_pointer_program, log_pointer_inputs,
    log_pointer_program,
};
pub use quantifier::{
    exists_quantifier, forall_quantifier, not_functor, predicate_functor, two_inclusion,
};
pub use tape::{
    reference, symbol_pointer, three_dot, three_hat, three_inclusion, tm_step, Direction, Symbol,
    TapeConfig, TmMachine, TmRule, TmStepReport,
};
