use std::fmt::Write as _;

use rayon::prelude::*;

use super::{SubsetDistances, TargetFamily};
use crate::bitset::VertexSet;
use crate::graph::{DistanceMatrix, Vertex};

/// Distinguisher set of one target pair: the vertices whose truncated
/// readings differ between the two targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub i: usize,
    pub j: usize,
    pub distinguishers: VertexSet,
}

/// Hitting-set form of distance-`r` resolving for one target family.
///
/// A landmark set resolves the family iff it intersects every distinguisher
/// set. `pairs` holds one constraint per unordered target pair, sorted by
/// `(i, j)`; `kept` indexes the constraints that survive dominance
/// reduction (no kept set contains another; equal sets keep the first).
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    order: usize,
    radius: u32,
    pairs: Vec<Constraint>,
    kept: Vec<usize>,
    mandatory: Vec<Vertex>,
    infeasible: Option<(usize, usize)>,
}

impl ConstraintSystem {
    /// Builds a system directly from distinguisher sets, e.g. for a bare
    /// hitting-set instance. Pair indices are the positions in `sets`.
    pub fn from_sets(order: usize, sets: Vec<VertexSet>) -> Self {
        let pairs =
            sets.into_iter().enumerate().map(|(k, distinguishers)| Constraint { i: k, j: k, distinguishers }).collect();
        Self::reduce(order, 0, pairs)
    }

    fn reduce(order: usize, radius: u32, pairs: Vec<Constraint>) -> Self {
        let infeasible = pairs.iter().find(|c| c.distinguishers.is_empty()).map(|c| (c.i, c.j));
        let mut by_size: Vec<usize> = (0..pairs.len()).collect();
        by_size.sort_by_key(|&k| (pairs[k].distinguishers.len(), k));
        let mut kept: Vec<usize> = Vec::new();
        for k in by_size {
            let set = &pairs[k].distinguishers;
            if !kept.iter().any(|&q| pairs[q].distinguishers.is_subset(set)) {
                kept.push(k);
            }
        }
        kept.sort_unstable();
        let mut mandatory: Vec<Vertex> = kept
            .iter()
            .filter(|&&k| pairs[k].distinguishers.len() == 1)
            .filter_map(|&k| pairs[k].distinguishers.first())
            .collect();
        mandatory.sort_unstable();
        ConstraintSystem { order, radius, pairs, kept, mandatory, infeasible }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Every pair constraint, before reduction.
    pub fn pairs(&self) -> &[Constraint] {
        &self.pairs
    }

    /// Constraints surviving dominance reduction, in `(i, j)` order.
    pub fn reduced(&self) -> impl Iterator<Item = &Constraint> + '_ {
        self.kept.iter().map(|&k| &self.pairs[k])
    }

    pub fn reduced_len(&self) -> usize {
        self.kept.len()
    }

    /// Vertices forced by a singleton distinguisher set.
    pub fn mandatory(&self) -> &[Vertex] {
        &self.mandatory
    }

    /// First pair (in `(i, j)` order) that no vertex distinguishes.
    pub fn infeasible_pair(&self) -> Option<(usize, usize)> {
        self.infeasible
    }

    pub fn is_feasible(&self) -> bool {
        self.infeasible.is_none()
    }

    pub fn distinguishers(&self, i: usize, j: usize) -> Option<&VertexSet> {
        let (i, j) = (i.min(j), i.max(j));
        self.pairs.binary_search_by_key(&(i, j), |c| (c.i, c.j)).ok().map(|k| &self.pairs[k].distinguishers)
    }

    /// True iff `set` meets every distinguisher set.
    pub fn is_hit_by(&self, set: &[Vertex]) -> bool {
        let s = VertexSet::from_iter(self.order, set.iter().copied());
        self.reduced().all(|c| c.distinguishers.intersects(&s))
    }

    /// One line per constraint: `i j : v1 v2 ...`. With `all`, every pair
    /// is listed; otherwise only the reduced system.
    pub fn dump(&self, all: bool) -> String {
        let mut out = String::new();
        let rows: Vec<&Constraint> = if all { self.pairs.iter().collect() } else { self.reduced().collect() };
        for c in rows {
            let _ = write!(out, "{} {} :", c.i, c.j);
            for v in c.distinguishers.iter() {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Distinguisher constraints of `tf` at radius `r`, dominance-reduced.
pub fn compile_constraints(dm: &DistanceMatrix, tf: &TargetFamily, r: u32) -> ConstraintSystem {
    let sd = SubsetDistances::new(dm, tf);
    compile_from(&sd, dm.order(), r)
}

pub(crate) fn compile_from(sd: &SubsetDistances, n: usize, r: u32) -> ConstraintSystem {
    let cap = r + 1;
    let t = sd.targets();
    let pairs: Vec<Constraint> = (0..t)
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = sd.row(i);
            (i + 1..t).map(move |j| {
                let b = sd.row(j);
                let distinguishers = VertexSet::from_iter(n, (0..n).filter(|&v| a[v].min(cap) != b[v].min(cap)));
                Constraint { i, j, distinguishers }
            })
        })
        .collect();
    ConstraintSystem::reduce(n, r, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, generate, parse_family, Graph};
    use crate::resolve::Variant;

    fn system(s: &str, variant: Variant, r: u32) -> (Graph, ConstraintSystem) {
        let g = generate(&parse_family(s).unwrap()).unwrap();
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let cs = compile_constraints(&all_pairs_distances(&g), &tf, r);
        (g, cs)
    }

    #[test]
    fn twins_in_complete_graph() {
        let (_, cs) = system("complete:3", Variant::Dim, 1);
        assert_eq!(cs.distinguishers(0, 1).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(cs.pairs().len(), 3);
        assert!(cs.mandatory().is_empty());
    }

    #[test]
    fn asymmetric_path_pair() {
        let (_, cs) = system("path:4", Variant::Dim, 3);
        assert_eq!(cs.distinguishers(0, 3).unwrap().to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn mixed_complete_forces_every_vertex() {
        let (g, cs) = system("complete:4", Variant::Mdim, 0);
        // target 0 is {0}; the edge {0,1} is target 4
        assert_eq!(cs.distinguishers(0, 4).unwrap().to_vec(), vec![1]);
        assert_eq!(cs.mandatory(), &[0, 1, 2, 3]);
        assert!(cs.is_hit_by(&(0..g.order()).collect::<Vec<_>>()));
        assert!(!cs.is_hit_by(&[0, 1, 2]));
    }

    #[test]
    fn reduction_drops_supersets() {
        let (_, cs) = system("path:3", Variant::Dim, 1);
        assert_eq!(cs.pairs().len(), 3);
        assert_eq!(cs.reduced_len(), 1);
        assert_eq!(cs.dump(false), "0 2 : 0 2\n");
        assert_eq!(cs.dump(true).lines().count(), 3);
    }

    #[test]
    fn empty_set_is_infeasible() {
        let cs = ConstraintSystem::from_sets(3, vec![VertexSet::from_iter(3, [1]), VertexSet::new(3)]);
        assert_eq!(cs.infeasible_pair(), Some((1, 1)));
    }

    #[test]
    fn equal_sets_keep_first() {
        let s = VertexSet::from_iter(4, [1, 2]);
        let cs = ConstraintSystem::from_sets(4, vec![s.clone(), s.clone(), VertexSet::from_iter(4, [1, 2, 3])]);
        assert_eq!(cs.reduced().map(|c| c.i).collect::<Vec<_>>(), vec![0]);
    }
}
