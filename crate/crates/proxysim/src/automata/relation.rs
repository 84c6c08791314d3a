use std::fmt;

use fixedbitset::FixedBitSet;

use crate::automata::State;
use crate::error::{Error, Result};

/// A binary relation on the states `0..n` of an automaton, stored as one
/// bit row per state. `contains(x, y)` reads as "x is related to y".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateRelation {
    rows: Vec<FixedBitSet>,
}

impl StateRelation {
    pub fn empty(n: usize) -> Self {
        StateRelation { rows: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn full(n: usize) -> Self {
        let mut row = FixedBitSet::with_capacity(n);
        row.insert_range(..);
        StateRelation { rows: vec![row; n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(State, State) -> bool) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    /// Builds a relation from pairs; fails if a pair is out of range.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (State, State)>) -> Result<Self> {
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            r.insert(i, j);
        }
        Ok(r)
    }

    /// Number of states the relation is defined over.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: State, y: State) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: State, y: State) {
        self.rows[x].insert(y);
    }

    pub fn remove(&mut self, x: State, y: State) {
        self.rows[x].set(y, false);
    }

    /// The set of states `y` with `x R y`.
    pub fn row(&self, x: State) -> &FixedBitSet {
        &self.rows[x]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_clear())
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (State, State)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.ones().map(move |j| (i, j)))
    }

    pub fn inverse(&self) -> Self {
        let mut r = Self::empty(self.dim());
        for (i, j) in self.pairs() {
            r.insert(j, i);
        }
        r
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "relation dimensions differ");
        let mut r = self.clone();
        for (a, b) in r.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
        r
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "relation dimensions differ");
        let mut r = self.clone();
        for (a, b) in r.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
        r
    }

    /// Relational composition: `x (self ∘ other) z` iff `x self y` and
    /// `y other z` for some `y`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "relation dimensions differ");
        let mut r = Self::empty(self.dim());
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.ones() {
                r.rows[x].union_with(&other.rows[y]);
            }
        }
        r
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.dim()).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(i, j)| self.contains(j, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    /// Smallest reflexive and transitive relation containing `self`.
    pub fn reflexive_transitive_closure(&self) -> Self {
        let n = self.dim();
        let mut r = self.clone();
        for i in 0..n {
            r.insert(i, i);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = r.rows[k].clone();
            for i in 0..n {
                if r.rows[i].contains(k) {
                    r.rows[i].union_with(&row_k);
                }
            }
        }
        r
    }

    /// `R* ∩ (R*)⁻¹`, the equivalence induced by a relation.
    pub fn induced_equivalence(&self) -> Self {
        let c = self.reflexive_transitive_closure();
        c.intersection(&c.inverse())
    }
}

impl fmt::Debug for StateRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_closure() {
        let r = StateRelation::from_pairs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let rr = r.compose(&r);
        assert_eq!(rr.pairs().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let c = r.reflexive_transitive_closure();
        assert!(c.is_preorder());
        assert!(c.contains(0, 3));
        assert!(!c.contains(3, 0));
        assert_eq!(c.len(), 4 + 3 + 2 + 1);
    }

    #[test]
    fn induced_equivalence_of_cycle() {
        let r = StateRelation::from_pairs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let e = r.induced_equivalence();
        assert!(e.is_equivalence());
        assert!(e.contains(0, 1));
        assert!(!e.contains(1, 2));
    }

    #[test]
    fn out_of_range_pair_is_rejected() {
        assert!(StateRelation::from_pairs(2, [(0, 2)]).is_err());
    }

    #[test]
    fn full_and_identity() {
        assert_eq!(StateRelation::full(3).len(), 9);
        assert!(StateRelation::identity(3).is_equivalence());
        assert!(StateRelation::identity(3).is_subset(&StateRelation::full(3)));
    }
}
