//! k-periodic long exact sequences of graded pieces, checked lane by lane.
//!
//! Morphisms of mixed Hodge structures are strict, so a sequence that is exact
//! on `Gr^P_l` stays exact after taking `Gr_F^p Gr^W_q`. Each fixed `(l, q, p)`
//! therefore gives an integer chain that must admit an exact sequence of
//! vector spaces with those dimensions.

mod check;
mod exactness;
mod lanes;
mod solve;
mod template;

pub use check::{check_sequence, check_sequence_with, map_rank, RankPin};
pub use exactness::{chain_feasibility, check_exactness, FeasibilityResult};
pub use lanes::{extract_lanes, Lane, LaneEntry};
pub use solve::{solve_unknown, Solution};
pub use template::{builtin_template, builtin_templates, SequenceTemplate, Term, BUILTIN_NAMES};
