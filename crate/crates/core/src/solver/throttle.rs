use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{min_hitting_set_with, SolveBudget, SolveHints, SolveOutcome, SolveStatus};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, Vertex};
use crate::resolve::{compile_from, SubsetDistances, TargetFamily, Variant};

/// What the sweep learned about `xdim_r` at one radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimValue {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
    Infeasible,
}

impl DimValue {
    fn from_outcome(out: &SolveOutcome) -> Self {
        match (out.status, out.bounds) {
            (SolveStatus::Optimal, Some((k, _))) => DimValue::Exact(k),
            (SolveStatus::BudgetExhausted, Some((lower, upper))) => DimValue::Bounds { lower, upper },
            _ => DimValue::Infeasible,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            DimValue::Exact(k) => Some(k),
            _ => None,
        }
    }
}

impl std::fmt::Display for DimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimValue::Exact(k) => write!(f, "{k}"),
            DimValue::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
            DimValue::Infeasible => f.write_str("infeasible"),
        }
    }
}

/// Outcome of the radius sweep for one graph and target family.
///
/// When `status` is optimal, `value = r_star + k_star` is the throttling
/// number and `witness` is a distance-`r_star` resolving set of size
/// `k_star`. Under budget exhaustion `bounds` is the certified interval and
/// the other fields describe the best configuration found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThrottlingResult {
    pub variant: Variant,
    pub r_min: u32,
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub bounds: Option<(usize, usize)>,
    pub r_star: Option<u32>,
    pub k_star: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    /// Radii actually solved. Radii skipped by pruning are absent.
    pub per_r: BTreeMap<u32, DimValue>,
    /// Largest radius considered; `xdim_r` is constant from here on.
    pub cap: u32,
    /// The cap was below the order of the graph.
    pub cap_active: bool,
    pub nodes: u64,
}

fn standard_family(g: &Graph, variant: Variant) -> Result<TargetFamily> {
    if variant == Variant::Custom {
        return Err(Error::InvalidTargets("custom variant needs an explicit target family".into()));
    }
    TargetFamily::standard(g, variant)
}

/// `xdim_r(G)` for a standard variant.
pub fn truncated_dimension(g: &Graph, variant: Variant, r: u32, budget: &SolveBudget) -> Result<SolveOutcome> {
    let tf = standard_family(g, variant)?;
    Ok(truncated_dimension_for(g, &tf, r, budget))
}

pub fn truncated_dimension_for(g: &Graph, tf: &TargetFamily, r: u32, budget: &SolveBudget) -> SolveOutcome {
    let dm = all_pairs_distances(g);
    let sd = SubsetDistances::new(&dm, tf);
    min_hitting_set_with(&compile_from(&sd, g.order(), r), budget, &SolveHints::default())
}

/// `xdim_r` for every `r` in `radii`, each solved independently with no
/// pruning between radii.
pub fn dimension_profile(
    g: &Graph,
    tf: &TargetFamily,
    radii: std::ops::RangeInclusive<u32>,
    budget: &SolveBudget,
) -> BTreeMap<u32, SolveOutcome> {
    let dm = all_pairs_distances(g);
    let sd = SubsetDistances::new(&dm, tf);
    radii.map(|r| (r, min_hitting_set_with(&compile_from(&sd, g.order(), r), budget, &SolveHints::default()))).collect()
}

/// `th_xdim(G)` for a standard variant, minimizing over `r >= r_min`.
pub fn throttling_number(g: &Graph, variant: Variant, budget: &SolveBudget, r_min: u32) -> Result<ThrottlingResult> {
    let tf = standard_family(g, variant)?;
    Ok(throttling_number_for(g, &tf, budget, r_min))
}

/// Radius sweep minimizing `r + xdim_r` over `r >= r_min`.
///
/// Let `D` be the largest finite distance. For `r >= D` truncation loses
/// nothing (unreachable still reads `r + 1 > D`), so `xdim_r` is constant
/// and the sweep stops at `cap = max(r_min, min(n, D))`. The dimension at
/// the cap is solved first: it is a lower bound for every smaller radius.
/// Radii are then visited upward; each solve is primed with the previous
/// witness, which stays resolving at a larger radius. The loop stops as
/// soon as `r` alone, or `r` plus the cap bound, reaches the best value.
/// Ties go to the smallest radius.
///
/// The node limit and the wall limit in `budget` apply to the sweep as a
/// whole.
pub fn throttling_number_for(g: &Graph, tf: &TargetFamily, budget: &SolveBudget, r_min: u32) -> ThrottlingResult {
    let dm = all_pairs_distances(g);
    sweep(g.order(), &dm, tf, budget, r_min)
}

pub(crate) fn sweep(
    n: usize,
    dm: &DistanceMatrix,
    tf: &TargetFamily,
    budget: &SolveBudget,
    r_min: u32,
) -> ThrottlingResult {
    let sd = SubsetDistances::new(dm, tf);
    let diameter = dm.max_finite();
    let cap = r_min.max(diameter.min(n as u32));
    let mut meter = Meter::new(budget);

    let at_cap = min_hitting_set_with(&compile_from(&sd, n, cap), &meter.next(), &SolveHints::default());
    meter.charge(at_cap.nodes);
    let mut result = ThrottlingResult {
        variant: tf.variant(),
        r_min,
        status: SolveStatus::Infeasible,
        value: None,
        bounds: None,
        r_star: None,
        k_star: None,
        witness: None,
        per_r: BTreeMap::new(),
        cap,
        cap_active: (cap as usize) < n,
        nodes: at_cap.nodes,
    };
    let Some((floor, _)) = at_cap.bounds else {
        result.per_r.insert(cap, DimValue::Infeasible);
        return result;
    };

    let mut best: Option<(usize, u32, Vec<Vertex>)> = None;
    let mut lower = usize::MAX;
    let mut prev: Option<Vec<Vertex>> = None;
    let mut stopped_at = cap + 1;
    for r in r_min..=cap {
        if let Some((val, _, _)) = &best {
            if r as usize >= *val || r as usize + floor >= *val {
                stopped_at = r;
                break;
            }
        }
        let out = if r == cap {
            at_cap.clone()
        } else {
            let hints = SolveHints { incumbent: prev.take(), lower_bound: floor };
            let out = min_hitting_set_with(&compile_from(&sd, n, r), &meter.next(), &hints);
            meter.charge(out.nodes);
            result.nodes += out.nodes;
            out
        };
        result.per_r.insert(r, DimValue::from_outcome(&out));
        if let Some((lo, hi)) = out.bounds {
            lower = lower.min(r as usize + lo);
            let witness = out.witness.clone().expect("bounded outcome has a witness");
            if best.as_ref().is_none_or(|(val, _, _)| r as usize + hi < *val) {
                best = Some((r as usize + hi, r, witness.clone()));
            }
            prev = Some(witness);
        }
    }
    lower = lower.min(stopped_at as usize + floor);

    let (upper, r_star, witness) = best.expect("the cap radius is feasible");
    result.r_star = Some(r_star);
    result.k_star = Some(upper - r_star as usize);
    result.witness = Some(witness);
    result.bounds = Some((lower.min(upper), upper));
    if lower >= upper {
        result.status = SolveStatus::Optimal;
        result.value = Some(upper);
    } else {
        result.status = SolveStatus::BudgetExhausted;
    }
    result
}

/// Shares one node and wall budget across the solves of a sweep.
struct Meter {
    base: SolveBudget,
    nodes_left: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: &SolveBudget) -> Self {
        Meter { base: *budget, nodes_left: budget.node_limit, deadline: budget.wall_limit.map(|d| Instant::now() + d) }
    }

    fn next(&self) -> SolveBudget {
        SolveBudget {
            node_limit: self.nodes_left,
            wall_limit: self.deadline.map(|d| d.saturating_duration_since(Instant::now())),
            ..self.base
        }
    }

    fn charge(&mut self, nodes: u64) {
        if let Some(left) = &mut self.nodes_left {
            *left = left.saturating_sub(nodes);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_family};

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    fn th(s: &str, variant: Variant) -> ThrottlingResult {
        throttling_number(&g(s), variant, &SolveBudget::unlimited(), 0).unwrap()
    }

    #[test]
    fn truncated_dimension_examples() {
        let b = SolveBudget::unlimited();
        assert_eq!(truncated_dimension(&g("cycle:10"), Variant::Dim, 1, &b).unwrap().value, Some(4));
        assert_eq!(truncated_dimension(&g("kbipartite:2,3"), Variant::Edim, 0, &b).unwrap().value, Some(3));
        let out = truncated_dimension(&g("path:4"), Variant::Mdim, 0, &b).unwrap();
        let w = out.witness.unwrap();
        assert!(w.contains(&0) && w.contains(&3));
        assert_eq!(truncated_dimension(&g("complete:4"), Variant::Dim, 0, &b).unwrap().value, Some(3));
    }

    #[test]
    fn throttling_examples() {
        assert_eq!(th("complete:5", Variant::Dim).value, Some(4));
        assert_eq!(th("kbipartite:2,3", Variant::Dim).value, Some(4));
        let k5 = th("complete:5", Variant::Mdim);
        assert_eq!(k5.value, Some(5));
    }

    #[test]
    fn ties_prefer_small_radius_and_cap_is_reported() {
        // K_n: r = 0 with n - 1 landmarks ties r = 1 with n - 1 landmarks
        let r = th("complete:4", Variant::Dim);
        assert_eq!((r.r_star, r.k_star), (Some(0), Some(3)));
        assert_eq!(r.cap, 1);
        assert!(r.cap_active);
    }

    #[test]
    fn r_min_one_changes_edgeless_values() {
        let e = g("empty:3");
        let r0 = throttling_number(&e, Variant::Dim, &SolveBudget::unlimited(), 0).unwrap();
        let r1 = throttling_number(&e, Variant::Dim, &SolveBudget::unlimited(), 1).unwrap();
        assert_eq!(r0.value, Some(2));
        assert_eq!(r1.value, Some(3));
    }

    #[test]
    fn single_target_costs_r_min() {
        let r = th("complete:1", Variant::Dim);
        assert_eq!(r.value, Some(0));
        assert_eq!(r.witness, Some(vec![]));
    }

    #[test]
    fn zero_node_budget_gives_interval() {
        let c = g("cycle:25");
        let tight = SolveBudget { node_limit: Some(0), ..SolveBudget::default() };
        let r = throttling_number(&c, Variant::Mdim, &tight, 0).unwrap();
        let (lo, hi) = r.bounds.unwrap();
        assert!(lo <= 9 && 9 <= hi, "{lo} {hi}");
    }

    #[test]
    fn cycle_25_mixed_and_edge() {
        // r = 4 with every fifth vertex, and r = 3 with {0, 4, 12, 16}
        assert_eq!(th("cycle:25", Variant::Mdim).value, Some(9));
        assert_eq!(th("cycle:25", Variant::Edim).value, Some(7));
    }
}
