use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Vertex;
use crate::resolve::{ConstraintSystem, Variant};

/// Limits on a single branch-and-bound run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveBudget {
    /// Maximum number of search nodes; `None` means unlimited.
    pub node_limit: Option<u64>,
    /// Wall-clock limit; `None` means unlimited.
    pub wall_limit: Option<Duration>,
    /// Return the lexicographically smallest optimal witness.
    pub canonical_witness: bool,
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn canonical() -> Self {
        SolveBudget { canonical_witness: true, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    BudgetExhausted,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::BudgetExhausted => "budget_exhausted",
        })
    }
}

/// Result of one minimum hitting-set solve.
///
/// `value` is set only when optimal. `bounds` is the certified
/// `[lower, upper]` interval (degenerate when optimal). `witness` is the
/// best hitting set known: optimal when `status` is optimal, an
/// upper-bound certificate when the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    pub bounds: Option<(usize, usize)>,
    pub nodes: u64,
}

impl SolveOutcome {
    pub(crate) fn optimal(witness: Vec<Vertex>, nodes: u64) -> Self {
        let k = witness.len();
        SolveOutcome {
            status: SolveStatus::Optimal,
            value: Some(k),
            witness: Some(witness),
            bounds: Some((k, k)),
            nodes,
        }
    }

    pub(crate) fn infeasible(nodes: u64) -> Self {
        SolveOutcome { status: SolveStatus::Infeasible, value: None, witness: None, bounds: None, nodes }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    pub fn lower(&self) -> Option<usize> {
        self.bounds.map(|b| b.0)
    }

    pub fn upper(&self) -> Option<usize> {
        self.bounds.map(|b| b.1)
    }

    /// Diagnostic record for machine-readable output.
    pub fn record(&self, variant: Variant, r: u32) -> SolveRecord {
        SolveRecord {
            variant,
            r,
            value: self.value,
            witness: if self.is_optimal() { self.witness.clone() } else { None },
            nodes: self.nodes,
            status: self.status,
            bounds: if self.status == SolveStatus::BudgetExhausted { self.bounds } else { None },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub variant: Variant,
    pub r: u32,
    pub value: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    pub nodes: u64,
    pub status: SolveStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<(usize, usize)>,
}

/// Extra information a caller may already have about the instance.
#[derive(Clone, Debug, Default)]
pub struct SolveHints {
    /// A known hitting set. Ignored if it misses a constraint.
    pub incumbent: Option<Vec<Vertex>>,
    /// A known lower bound on the optimum.
    pub lower_bound: usize,
}

pub fn min_hitting_set(cs: &ConstraintSystem, budget: &SolveBudget) -> SolveOutcome {
    min_hitting_set_with(cs, budget, &SolveHints::default())
}

/// Exact minimum hitting set of the reduced constraints of `cs`.
///
/// Mandatory vertices are fixed first. The rest is branch-and-bound that
/// starts from the better of a greedy cover and the hinted incumbent,
/// branches on the smallest unhit constraint (include `v_i`, exclude
/// `v_1..v_{i-1}`), and prunes with the larger of a disjoint-packing bound
/// and a max-degree bound.
pub fn min_hitting_set_with(cs: &ConstraintSystem, budget: &SolveBudget, hints: &SolveHints) -> SolveOutcome {
    if !cs.is_feasible() {
        return SolveOutcome::infeasible(0);
    }
    let n = cs.order();
    let mandatory = VertexSet::from_iter(n, cs.mandatory().iter().copied());
    let free: Vec<VertexSet> =
        cs.reduced().map(|c| &c.distinguishers).filter(|s| !s.intersects(&mandatory)).cloned().collect();
    let fixed = mandatory.len();

    let mut best = greedy_cover(&free, n);
    if let Some(inc) = &hints.incumbent {
        if inc.iter().all(|&v| v < n) && cs.is_hit_by(inc) {
            let inc_free: Vec<Vertex> = inc.iter().copied().filter(|&v| !mandatory.contains(v)).collect();
            let inc_free = prune_redundant(&free, n, inc_free);
            if inc_free.len() < best.len() {
                best = inc_free;
            }
        }
    }

    let all: Vec<u32> = (0..free.len() as u32).collect();
    let root_lb =
        lower_bound(&free, &all, &VertexSet::new(n)).unwrap_or(0).max(hints.lower_bound.saturating_sub(fixed));

    let mut search = Search::new(&free, n, best, root_lb, budget);
    if search.best.len() > root_lb {
        let mut chosen = Vec::new();
        let mut excluded = VertexSet::new(n);
        search.run(&all, &mut chosen, &mut excluded);
    }
    let nodes = search.nodes;
    let exhausted = search.exhausted;
    let mut witness: Vec<Vertex> = mandatory.iter().chain(search.best.iter().copied()).collect();
    witness.sort_unstable();
    let upper = witness.len();
    let lower = if exhausted { fixed + root_lb } else { upper };

    if lower < upper {
        return SolveOutcome {
            status: SolveStatus::BudgetExhausted,
            value: None,
            witness: Some(witness),
            bounds: Some((lower, upper)),
            nodes,
        };
    }
    if budget.canonical_witness {
        let sets: Vec<VertexSet> = cs.reduced().map(|c| c.distinguishers.clone()).collect();
        if let Some(w) = lex_smallest_cover(&sets, n, upper) {
            witness = w;
        }
    }
    SolveOutcome::optimal(witness, nodes)
}

/// Repeatedly takes the vertex hitting the most unhit sets (lowest index
/// on ties), then drops vertices that became redundant.
pub(crate) fn greedy_cover(sets: &[VertexSet], n: usize) -> Vec<Vertex> {
    let mut unhit: Vec<usize> = (0..sets.len()).collect();
    let mut chosen = Vec::new();
    let mut hits = vec![0usize; n];
    while !unhit.is_empty() {
        hits.iter_mut().for_each(|h| *h = 0);
        for &k in &unhit {
            for v in sets[k].iter() {
                hits[v] += 1;
            }
        }
        let v = (0..n).max_by_key(|&v| (hits[v], std::cmp::Reverse(v))).expect("non-empty universe");
        if hits[v] == 0 {
            // an empty set is left; callers filter those out beforehand
            break;
        }
        chosen.push(v);
        unhit.retain(|&k| !sets[k].contains(v));
    }
    prune_redundant(sets, n, chosen)
}

fn prune_redundant(sets: &[VertexSet], n: usize, mut chosen: Vec<Vertex>) -> Vec<Vertex> {
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let rest = VertexSet::from_iter(n, chosen.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
        if sets.iter().all(|s| s.intersects(&rest)) {
            chosen.remove(i);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Lower bound on the number of non-excluded vertices needed to hit every
/// set in `active`, or `None` when some set has no allowed vertex left.
fn lower_bound(sets: &[VertexSet], active: &[u32], excluded: &VertexSet) -> Option<usize> {
    if active.is_empty() {
        return Some(0);
    }
    let n = excluded.universe();
    let mut sized: Vec<(usize, u32)> = Vec::with_capacity(active.len());
    let mut hits = vec![0u32; n];
    for &k in active {
        let s = &sets[k as usize];
        let size = s.difference_count(excluded);
        if size == 0 {
            return None;
        }
        sized.push((size, k));
        for v in s.difference(excluded) {
            hits[v] += 1;
        }
    }
    sized.sort_unstable();
    let mut used = VertexSet::new(n);
    let mut packing = 0;
    for &(_, k) in &sized {
        let s = &sets[k as usize];
        if !s.intersects(&used) {
            packing += 1;
            used.union_with(s);
            used.difference_with(excluded);
        }
    }
    let max_hits = hits.iter().copied().max().unwrap_or(1).max(1) as usize;
    let degree = active.len().div_ceil(max_hits);
    Some(packing.max(degree))
}

struct Search<'a> {
    sets: &'a [VertexSet],
    n: usize,
    best: Vec<Vertex>,
    floor: usize,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: bool,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(sets: &'a [VertexSet], n: usize, best: Vec<Vertex>, floor: usize, budget: &SolveBudget) -> Self {
        Search {
            sets,
            n,
            best,
            floor,
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: budget.wall_limit.map(|d| Instant::now() + d),
            exhausted: false,
            done: false,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        let over_nodes = self.node_limit.is_some_and(|l| self.nodes > l);
        // the clock is read only every 256 nodes
        let over_time = self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d);
        self.exhausted |= over_nodes || over_time;
        self.exhausted
    }

    fn run(&mut self, active: &[u32], chosen: &mut Vec<Vertex>, excluded: &mut VertexSet) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        if active.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
                self.best.sort_unstable();
                self.done = self.best.len() <= self.floor;
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }
        let Some(lb) = lower_bound(self.sets, active, excluded) else {
            return;
        };
        if chosen.len() + lb >= self.best.len() {
            return;
        }

        let (_, pivot) = active
            .iter()
            .map(|&k| (self.sets[k as usize].difference_count(excluded), k))
            .min()
            .expect("active is non-empty");
        let mut hits = vec![0u32; self.n];
        for &k in active {
            for v in self.sets[k as usize].difference(excluded) {
                hits[v] += 1;
            }
        }
        let mut candidates: Vec<Vertex> = self.sets[pivot as usize].difference(excluded).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(hits[v]), v));

        let mut newly_excluded = Vec::with_capacity(candidates.len());
        for v in candidates {
            if chosen.len() + lb.max(1) >= self.best.len() {
                break;
            }
            let next: Vec<u32> = active.iter().copied().filter(|&k| !self.sets[k as usize].contains(v)).collect();
            chosen.push(v);
            self.run(&next, chosen, excluded);
            chosen.pop();
            if self.done || self.exhausted {
                break;
            }
            excluded.insert(v);
            newly_excluded.push(v);
        }
        for v in newly_excluded {
            excluded.remove(v);
        }
    }
}

/// Lexicographically smallest hitting set of exactly `k` vertices, assuming
/// none of size `k - 1` exists.
fn lex_smallest_cover(sets: &[VertexSet], n: usize, k: usize) -> Option<Vec<Vertex>> {
    fn dfs(
        sets: &[VertexSet],
        n: usize,
        k: usize,
        v: Vertex,
        unhit: &[u32],
        prefix: &mut VertexSet,
        chosen: &mut Vec<Vertex>,
    ) -> bool {
        if unhit.is_empty() {
            return true;
        }
        if chosen.len() == k || v == n {
            return false;
        }
        match lower_bound(sets, unhit, prefix) {
            Some(lb) if chosen.len() + lb <= k => {}
            _ => return false,
        }
        prefix.insert(v);
        let next: Vec<u32> = unhit.iter().copied().filter(|&c| !sets[c as usize].contains(v)).collect();
        if next.len() < unhit.len() {
            chosen.push(v);
            if dfs(sets, n, k, v + 1, &next, prefix, chosen) {
                return true;
            }
            chosen.pop();
        }
        let found = dfs(sets, n, k, v + 1, unhit, prefix, chosen);
        prefix.remove(v);
        found
    }

    let all: Vec<u32> = (0..sets.len() as u32).collect();
    let mut chosen = Vec::with_capacity(k);
    let mut prefix = VertexSet::new(n);
    dfs(sets, n, k, 0, &all, &mut prefix, &mut chosen).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(n: usize, sets: &[&[Vertex]]) -> ConstraintSystem {
        ConstraintSystem::from_sets(n, sets.iter().map(|s| VertexSet::from_iter(n, s.iter().copied())).collect())
    }

    #[test]
    fn single_constraint_canonical() {
        let cs = system(6, &[&[2, 5]]);
        let out = min_hitting_set(&cs, &SolveBudget::canonical());
        assert_eq!(out.value, Some(1));
        assert_eq!(out.witness, Some(vec![2]));
    }

    #[test]
    fn canonical_prefers_lexicographic_order() {
        // optimum 2, attained by {0,3}, {1,3} and {2,3}
        let cs = system(4, &[&[0, 3], &[1, 3], &[2, 3], &[0, 1, 2]]);
        let canon = min_hitting_set(&cs, &SolveBudget::canonical());
        assert_eq!(canon.witness, Some(vec![0, 3]));
    }

    #[test]
    fn mandatory_and_infeasible() {
        let cs = system(5, &[&[4], &[0, 1], &[1, 2]]);
        let out = min_hitting_set(&cs, &SolveBudget::unlimited());
        assert_eq!(out.witness, Some(vec![1, 4]));
        let bad = system(3, &[&[0], &[]]);
        assert_eq!(min_hitting_set(&bad, &SolveBudget::unlimited()).status, SolveStatus::Infeasible);
    }

    #[test]
    fn greedy_is_not_always_optimal_but_search_is() {
        // classic greedy trap: vertex 6 hits the most sets but {0,1} suffices
        let cs = system(7, &[&[0, 6], &[0, 2], &[0, 3], &[1, 6], &[1, 4], &[1, 5], &[0, 1]]);
        let out = min_hitting_set(&cs, &SolveBudget::unlimited());
        assert_eq!(out.value, Some(2));
    }

    #[test]
    fn budget_exhaustion_certifies_interval() {
        // odd-cycle style instance: sets {i, i+1 mod 9}; optimum 5
        let sets: Vec<Vec<Vertex>> = (0..9).map(|i| vec![i, (i + 1) % 9]).collect();
        let refs: Vec<&[Vertex]> = sets.iter().map(|s| s.as_slice()).collect();
        let cs = system(9, &refs);
        let exact = min_hitting_set(&cs, &SolveBudget::unlimited());
        assert_eq!(exact.value, Some(5));
        let tight = SolveBudget { node_limit: Some(0), ..SolveBudget::default() };
        let out = min_hitting_set(&cs, &tight);
        let (lo, hi) = out.bounds.unwrap();
        assert!(lo <= 5 && 5 <= hi);
        if out.status == SolveStatus::BudgetExhausted {
            assert!(lo < hi && out.value.is_none());
        }
    }

    #[test]
    fn hints_are_respected() {
        let sets: Vec<Vec<Vertex>> = (0..9).map(|i| vec![i, (i + 1) % 9]).collect();
        let refs: Vec<&[Vertex]> = sets.iter().map(|s| s.as_slice()).collect();
        let cs = system(9, &refs);
        let hints = SolveHints { incumbent: Some(vec![0, 2, 4, 6, 8]), lower_bound: 5 };
        let out = min_hitting_set_with(&cs, &SolveBudget::unlimited(), &hints);
        assert_eq!(out.value, Some(5));
        assert_eq!(out.nodes, 0);
    }

    #[test]
    fn record_serializes() {
        let cs = system(3, &[&[1]]);
        let out = min_hitting_set(&cs, &SolveBudget::unlimited());
        let json = serde_json::to_string(&out.record(Variant::Dim, 2)).unwrap();
        assert_eq!(json, r#"{"variant":"dim","r":2,"value":1,"witness":[1],"nodes":0,"status":"optimal"}"#);
    }
}
