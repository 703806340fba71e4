//! Explicit graphs and landmark configurations: hardness-reduction graphs,
//! the small-throttling caterpillar, and verified layouts on grids,
//! circulants, cycles and spiders.

mod configs;
mod reductions;

pub use configs::{
    circulant_config, cycle_variant_config, grid_resolving_set, min_throttle_tree, spider_config, Configuration,
};
pub use reductions::{emdt_reduction, mdt_reduction, mmdt_reduction, ReductionOutput};
