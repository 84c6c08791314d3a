use crate::automata::{Nba, Symbol};
use crate::error::{Error, Result};
use crate::langops::{explore, OmegaAutomaton};

/// Synchronous product accepting `L(a) ∩ L(b)`.
///
/// The phase bit alternates between waiting for an accepting state of `a`
/// (phase 0) and of `b` (phase 1); accepting states are the accepting
/// states of `a` in phase 0.
pub struct Intersection<A, B> {
    a: A,
    b: B,
}

impl<A: OmegaAutomaton, B: OmegaAutomaton> Intersection<A, B> {
    pub fn new(a: A, b: B) -> Self {
        assert_eq!(a.n_symbols(), b.n_symbols(), "alphabet sizes differ");
        Intersection { a, b }
    }
}

impl<A: OmegaAutomaton, B: OmegaAutomaton> OmegaAutomaton for Intersection<A, B> {
    type State = (A::State, B::State, bool);

    fn n_symbols(&self) -> usize {
        self.a.n_symbols()
    }

    fn initial_states(&self) -> Vec<Self::State> {
        let bs = self.b.initial_states();
        self.a
            .initial_states()
            .into_iter()
            .flat_map(|x| bs.iter().map(move |y| (x.clone(), y.clone(), false)))
            .collect()
    }

    fn successors(&self, (x, y, phase): &Self::State, s: Symbol) -> Vec<Self::State> {
        let xs = self.a.successors(x, s);
        if xs.is_empty() {
            return Vec::new();
        }
        let ys = self.b.successors(y, s);
        let next = if !phase { self.a.is_accepting(x) } else { !self.b.is_accepting(y) };
        xs.iter().flat_map(|x2| ys.iter().map(move |y2| (x2.clone(), y2.clone(), next))).collect()
    }

    fn is_accepting(&self, (x, _, phase): &Self::State) -> bool {
        !phase && self.a.is_accepting(x)
    }
}

/// The product of two automata over the same alphabet as an explicit NBA.
pub fn intersect(a: &Nba, b: &Nba) -> Result<Nba> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let g = explore(&Intersection::new(a, b), usize::MAX, "intersection")?;
    let names = g
        .states
        .iter()
        .map(|(x, y, p)| format!("{}&{}#{}", a.state_name(*x), b.state_name(*y), u8::from(*p)))
        .collect();
    let tr = g.edges.iter().enumerate().flat_map(|(i, es)| es.iter().map(move |&(s, j)| (i, s, j)));
    Nba::with_names(
        names,
        a.alphabet().to_vec(),
        g.initial.iter().copied(),
        (0..g.len()).filter(|&i| g.accepting[i]),
        tr,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fig_3, LassoWord};
    use crate::langops::{accepts_lasso, complement, is_empty};

    #[test]
    fn product_with_universal_and_complement() {
        let a = fig_3();
        let u = Nba::from_names(&["a", "b"], &["u"], &["u"], &["u"], &[("u", "a", "u"), ("u", "b", "u")]).unwrap();
        let p = intersect(&a, &u).unwrap();
        for w in LassoWord::enumerate(2, 3, 2) {
            assert_eq!(accepts_lasso(&p, &w), accepts_lasso(&a, &w));
        }
        let c = complement(&a, 50_000).unwrap();
        assert!(is_empty(&intersect(&a, &c).unwrap()).is_none());
        let e = Nba::from_names(&["a", "b"], &["e"], &["e"], &[], &[]).unwrap();
        assert!(is_empty(&intersect(&a, &e).unwrap()).is_none());
    }
}
