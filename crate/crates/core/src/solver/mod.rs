//! Exact solvers: branch-and-bound minimum hitting set over distinguisher
//! constraints, a brute-force oracle, the radius sweep for throttling
//! numbers, and export of the covering integer program.

mod exhaustive;
mod hitting_set;
mod ip;
mod throttle;

pub use exhaustive::{exhaustive_min_resolving, exhaustive_min_resolving_up_to, EXHAUSTIVE_ORDER_LIMIT};
pub use hitting_set::{
    min_hitting_set, min_hitting_set_with, SolveBudget, SolveHints, SolveOutcome, SolveRecord, SolveStatus,
};
pub use ip::{build_ip, export_ip, IpModel, IpRow};
pub use throttle::{
    dimension_profile, throttling_number, throttling_number_for, truncated_dimension, truncated_dimension_for,
    DimValue, ThrottlingResult,
};
