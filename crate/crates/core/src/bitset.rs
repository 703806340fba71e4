use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::Vertex;

/// Fixed-width set of vertices over `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(universe))
    }

    pub fn from_iter(universe: usize, items: impl IntoIterator<Item = Vertex>) -> Self {
        let mut s = Self::new(universe);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0.set(v, false);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.minimum()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.maximum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    /// Removes every element of `other` from `self`.
    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }

    /// `|self \ other|`
    pub fn difference_count(&self, other: &VertexSet) -> usize {
        self.0.difference_count(&other.0)
    }

    /// Elements of `self` not in `other`.
    pub fn difference<'a>(&'a self, other: &'a VertexSet) -> impl Iterator<Item = Vertex> + 'a {
        self.0.difference(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_iter(70, [1, 65]);
        let b = VertexSet::from_iter(70, [1, 3, 65]);
        assert!(a.is_subset(&b) && !b.is_subset(&a));
        assert_eq!(b.difference_count(&a), 1);
        assert_eq!(b.difference(&a).collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.first(), Some(1));
        assert!(a.intersects(&b));
        assert_eq!(format!("{a:?}"), "{1, 65}");
    }
}
