//! Benchmark instances shared by the criterion suites.

use throttle_core::{generate, parse_family, Graph, Variant};

/// One benchmark case: a family string, a variant and a radius for the
/// single-radius benches.
pub struct Instance {
    pub name: &'static str,
    pub variant: Variant,
    pub radius: u32,
}

pub const INSTANCES: &[Instance] = &[
    Instance { name: "cycle:25", variant: Variant::Mdim, radius: 4 },
    Instance { name: "cycle:40", variant: Variant::Dim, radius: 3 },
    Instance { name: "hypercube:5", variant: Variant::Dim, radius: 2 },
    Instance { name: "grid:P6xP6", variant: Variant::Dim, radius: 3 },
    Instance { name: "kbipartite:5,5", variant: Variant::Edim, radius: 1 },
];

pub fn graph(name: &str) -> Graph {
    generate(&parse_family(name).expect("benchmark family parses")).expect("benchmark family generates")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_generate() {
        for inst in INSTANCES {
            assert!(graph(inst.name).order() > 0, "{}", inst.name);
        }
    }
}
