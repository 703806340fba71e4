//! Invariant suites over graph corpora, each comparing a characterization
//! or identity against exact solver values.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::constructions::{emdt_reduction, mdt_reduction, mmdt_reduction, ReductionOutput};
use crate::corpus::{all_labeled_graphs, random_connected_subgraph, random_graph, random_tree, rng};
use crate::error::{Error, Result};
use crate::families::{classify_extremal, is_extremal_thdim, low_throttle_class, ExtremalLabel, LowThrottle};
use crate::graph::{all_pairs_distances, Graph};
use crate::resolve::{compile_constraints, TargetFamily, Variant};
use crate::solver::{exhaustive_min_resolving, min_hitting_set, throttling_number, truncated_dimension, SolveBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    ExtremalCharacterization,
    LowThrottle,
    SubtreeMonotone,
    OracleEquivalence,
    ReductionIdentity,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::ExtremalCharacterization,
        Property::LowThrottle,
        Property::SubtreeMonotone,
        Property::OracleEquivalence,
        Property::ReductionIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::ExtremalCharacterization => "extremal-characterization",
            Property::LowThrottle => "low-throttle",
            Property::SubtreeMonotone => "subtree-monotone",
            Property::OracleEquivalence => "oracle-equivalence",
            Property::ReductionIdentity => "reduction-identity",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown property {s:?}")))
    }
}

/// Result of one suite: how many cases ran and a description of each
/// counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub property: Property,
    pub cases: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl CheckReport {
    fn new(property: Property) -> Self {
        CheckReport { property, cases: 0, failures: Vec::new(), passed: true }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            self.failures.push(describe());
        }
    }
}

fn th(g: &Graph, variant: Variant) -> Option<usize> {
    throttling_number(g, variant, &SolveBudget::unlimited(), 0).ok()?.value
}

fn show(g: &Graph) -> String {
    format!("n={} edges={:?}", g.order(), g.edges())
}

/// Over every labeled graph of order `n`: `th_dim = n - 1` iff the triple
/// condition holds iff the classifier names a class; the triple condition is
/// invariant under complementation.
pub fn extremal_characterization(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(Property::ExtremalCharacterization);
    for g in all_labeled_graphs(n) {
        let extremal_by_solver = th(&g, Variant::Dim) == Some(n - 1);
        let triple = is_extremal_thdim(&g)?;
        let classified = classify_extremal(&g)?.label != ExtremalLabel::NotExtremal;
        let dual = is_extremal_thdim(&g.complement())?;
        report.case(extremal_by_solver == triple && triple == classified && triple == dual, || {
            format!(
                "{}: solver={extremal_by_solver} triple={triple} classified={classified} complement={dual}",
                show(&g)
            )
        });
    }
    Ok(report)
}

/// Throttling numbers 0 and 1 are predicted from the target count alone.
/// Runs every labeled graph of order `n` plus edgeless graphs up to `n`.
pub fn low_throttle(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(Property::LowThrottle);
    let corpus = all_labeled_graphs(n).chain((1..=n).map(Graph::empty));
    for g in corpus {
        for variant in Variant::STANDARD {
            let predicted = low_throttle_class(&g, variant)?;
            let value = th(&g, variant);
            let actual = match value {
                Some(0) => LowThrottle::Zero,
                Some(1) => LowThrottle::One,
                _ => LowThrottle::Higher,
            };
            report.case(predicted == actual, || {
                format!("{} {variant}: predicted {predicted:?}, solver th={value:?}", show(&g))
            });
        }
    }
    Ok(report)
}

/// A connected subtree never has a larger throttling number than its tree.
pub fn subtree_monotone(samples: usize, max_order: usize, seed: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new(Property::SubtreeMonotone);
    let mut rng = rng(seed);
    for _ in 0..samples {
        let n = rng.random_range(1..=max_order);
        let tree = random_tree(n, &mut rng);
        let sub = random_connected_subgraph(&tree, &mut rng);
        for variant in Variant::STANDARD {
            let (big, small) = (th(&tree, variant), th(&sub, variant));
            report.case(small <= big && big.is_some(), || {
                format!("{variant}: tree {} th={big:?}, subtree {} th={small:?}", show(&tree), show(&sub))
            });
        }
    }
    Ok(report)
}

/// Branch-and-bound optimum equals the brute-force optimum on random
/// instances with every standard variant and `r` in `0..=4`.
pub fn oracle_equivalence(instances: usize, max_order: usize, seed: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new(Property::OracleEquivalence);
    let mut rng = rng(seed);
    for _ in 0..instances {
        let n = rng.random_range(1..=max_order);
        let p = rng.random_range(0.15..0.7);
        let g = random_graph(n, p, &mut rng);
        let variant = Variant::STANDARD[rng.random_range(0..3)];
        let r = rng.random_range(0..=4);
        let tf = TargetFamily::standard(&g, variant)?;
        let fast = min_hitting_set(&compile_constraints(&all_pairs_distances(&g), &tf, r), &SolveBudget::unlimited());
        let slow = exhaustive_min_resolving(&g, &tf, r)?;
        report.case(fast.value == slow.value && fast.status == slow.status, || {
            format!("{} {variant} r={r}: solver {:?}, exhaustive {:?}", show(&g), fast.value, slow.value)
        });
    }
    Ok(report)
}

/// The identity checked for one base graph and reduction.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionCase {
    pub base: String,
    pub reduction: &'static str,
    pub reduced_order: usize,
    pub base_dimension: Option<usize>,
    pub predicted: Option<usize>,
    pub actual: Option<usize>,
}

impl ReductionCase {
    pub fn holds(&self) -> bool {
        self.predicted.is_some() && self.predicted == self.actual
    }
}

fn reduction_case(base: &str, g: &Graph, name: &'static str, out: ReductionOutput) -> Result<ReductionCase> {
    let dim = truncated_dimension(g, out.variant, g.order() as u32, &SolveBudget::unlimited())?.value;
    Ok(ReductionCase {
        base: base.to_string(),
        reduction: name,
        reduced_order: out.reduced.order(),
        base_dimension: dim,
        predicted: dim.map(|d| out.predicted(d)),
        actual: th(&out.reduced, out.variant),
    })
}

/// Every applicable reduction applied to `g`: the vertex and mixed ones
/// always, the edge one only when `g` has an edge.
pub fn reduction_cases(base: &str, g: &Graph) -> Result<Vec<ReductionCase>> {
    let mut cases = vec![reduction_case(base, g, "mdt", mdt_reduction(g)?)?];
    if g.size() > 0 {
        cases.push(reduction_case(base, g, "emdt", emdt_reduction(g)?)?);
    }
    cases.push(reduction_case(base, g, "mmdt", mmdt_reduction(g)?)?);
    Ok(cases)
}

pub fn reduction_identity(bases: &[(String, Graph)]) -> Result<CheckReport> {
    let mut report = CheckReport::new(Property::ReductionIdentity);
    for (name, g) in bases {
        for case in reduction_cases(name, g)? {
            report.case(case.holds(), || {
                format!(
                    "{} on {} (order {}): predicted {:?}, solver {:?}",
                    case.reduction, case.base, case.reduced_order, case.predicted, case.actual
                )
            });
        }
    }
    Ok(report)
}
