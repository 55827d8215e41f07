//! Symbols, sequences, weighted instances, and the Consensus Patterns objective.

mod io;
mod objective;
mod types;

pub use io::{parse_instance, parse_solutions, write_instance, write_solution, SolutionRecord};
pub(crate) use io::{directives, parse_num};
pub use objective::{
    best_offset, best_offsets, column_majority, cost_at, hamming, solution_for, total_cost,
    verify_parts, verify_solution, window, ColumnMajority, VerifyReport,
};
pub use types::{Alphabet, PatternInstance, Sequence, Solution, Symbol, WeightedString};
