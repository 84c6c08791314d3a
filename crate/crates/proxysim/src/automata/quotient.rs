use crate::automata::{Nba, State, StateRelation};
use crate::error::{Error, Result};

/// Assignment of states to equivalence classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientMap {
    class_of: Vec<usize>,
    n_classes: usize,
}

impl QuotientMap {
    /// Classes numbered by their smallest member.
    pub fn from_equivalence(eq: &StateRelation) -> Result<QuotientMap> {
        if !eq.is_equivalence() {
            return Err(Error::NotEquivalence);
        }
        let n = eq.dim();
        let mut class_of = vec![usize::MAX; n];
        let mut n_classes = 0;
        for q in 0..n {
            if class_of[q] == usize::MAX {
                for r in eq.row(q).ones() {
                    class_of[r] = n_classes;
                }
                n_classes += 1;
            }
        }
        Ok(QuotientMap { class_of, n_classes })
    }

    pub fn class_of(&self, q: State) -> usize {
        self.class_of[q]
    }

    pub fn n_classes(&self) -> usize {
        self.n_classes
    }

    /// Members of each class, in index order.
    pub fn classes(&self) -> Vec<Vec<State>> {
        let mut out = vec![Vec::new(); self.n_classes];
        for (q, &c) in self.class_of.iter().enumerate() {
            out[c].push(q);
        }
        out
    }
}

/// `R* ∩ (R*)⁻¹`.
pub fn induced_equivalence(r: &StateRelation) -> StateRelation {
    r.induced_equivalence()
}

/// The naive quotient of `a` by the equivalence `eq`.
///
/// A class is initial (accepting) if some member is, and carries every
/// transition of its members. Class names join member names with `|`.
pub fn quotient(a: &Nba, eq: &StateRelation) -> Result<(Nba, QuotientMap)> {
    if eq.dim() != a.n_states() {
        return Err(Error::DimensionMismatch { expected: a.n_states(), found: eq.dim() });
    }
    let map = QuotientMap::from_equivalence(eq)?;
    let names = map
        .classes()
        .iter()
        .map(|c| c.iter().map(|&q| a.state_name(q)).collect::<Vec<_>>().join("|"))
        .collect();
    let q = Nba::with_names(
        names,
        a.alphabet().to_vec(),
        a.initial_states().map(|q| map.class_of(q)),
        a.accepting_states().map(|q| map.class_of(q)),
        a.transitions().iter().map(|&(p, s, q)| (map.class_of(p), s, map.class_of(q))),
    )?;
    Ok((q, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fig_3;

    #[test]
    fn identity_quotient_is_input() {
        let a = fig_3();
        let (q, m) = quotient(&a, &StateRelation::identity(a.n_states())).unwrap();
        assert_eq!(q, a);
        assert_eq!(m.n_classes(), a.n_states());
    }

    #[test]
    fn rejects_non_equivalence() {
        let a = fig_3();
        let r = StateRelation::from_pairs(5, [(0, 1)]).unwrap();
        assert_eq!(quotient(&a, &r).unwrap_err(), Error::NotEquivalence);
        assert!(quotient(&a, &StateRelation::identity(3)).is_err());
    }

    #[test]
    fn merging_fig3_middle_states() {
        let a = fig_3();
        let r = StateRelation::from_pairs(5, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let eq = r.induced_equivalence();
        let (q, m) = quotient(&a, &eq).unwrap();
        assert_eq!(q.n_states(), 3);
        assert_eq!(m.class_of(1), m.class_of(3));
        assert_eq!(q.state_name(1), "q1|q2|q3");
    }
}
