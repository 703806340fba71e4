//! Closed forms for throttling numbers of standard families and the
//! characterizations of throttling numbers `0`, `1` and `n - 1`.

mod extremal;
mod formulas;

pub use extremal::{
    classify_extremal, is_extremal_thdim, low_throttle_class, ExtremalClass, ExtremalLabel, LowThrottle,
};
pub use formulas::{dim_k_cycle, dim_k_path, path_cycle_sweep, th_formula, FormulaValue, DEFAULT_SLACK};
