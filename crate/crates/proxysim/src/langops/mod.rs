//! ω-language operations: membership of lasso words, emptiness with
//! witnesses, rank-based complementation, intersection, inclusion,
//! equivalence and universality.
//!
//! Constructions are on the fly over [`OmegaAutomaton`]; the explicit
//! [`complement`] and [`intersect`] materialize the reachable part.

mod complement;
mod explore;
mod product;
mod ramsey;

pub use complement::{complement, DualTable, RankComplement, RankState};
pub use explore::{explore, Explored};
pub use product::{intersect, Intersection};
pub use ramsey::profile_includes;

use std::hash::Hash;

use fixedbitset::FixedBitSet;

use crate::automata::{LassoWord, Nba, State, Symbol};
use crate::error::{Error, Result};

/// Default bound on reachable complement states.
pub const DEFAULT_COMPLEMENT_CAP: usize = 50_000;

/// A Büchi automaton given by its successor function.
pub trait OmegaAutomaton {
    type State: Clone + Eq + Hash;
    fn n_symbols(&self) -> usize;
    fn initial_states(&self) -> Vec<Self::State>;
    fn successors(&self, s: &Self::State, a: Symbol) -> Vec<Self::State>;
    fn is_accepting(&self, s: &Self::State) -> bool;
}

impl OmegaAutomaton for Nba {
    type State = State;

    fn n_symbols(&self) -> usize {
        Nba::n_symbols(self)
    }

    fn initial_states(&self) -> Vec<State> {
        Nba::initial_states(self).collect()
    }

    fn successors(&self, s: &State, a: Symbol) -> Vec<State> {
        Nba::successors(self, *s, a).to_vec()
    }

    fn is_accepting(&self, s: &State) -> bool {
        Nba::is_accepting(self, *s)
    }
}

impl<A: OmegaAutomaton + ?Sized> OmegaAutomaton for &A {
    type State = A::State;

    fn n_symbols(&self) -> usize {
        (**self).n_symbols()
    }

    fn initial_states(&self) -> Vec<Self::State> {
        (**self).initial_states()
    }

    fn successors(&self, s: &Self::State, a: Symbol) -> Vec<Self::State> {
        (**self).successors(s, a)
    }

    fn is_accepting(&self, s: &Self::State) -> bool {
        (**self).is_accepting(s)
    }
}

/// The run graph of an automaton over the positions of one lasso word,
/// seen as an automaton over a single letter.
struct OnLasso<'a, A> {
    a: A,
    w: &'a LassoWord,
}

impl<A: OmegaAutomaton> OmegaAutomaton for OnLasso<'_, A> {
    type State = (A::State, usize);

    fn n_symbols(&self) -> usize {
        1
    }

    fn initial_states(&self) -> Vec<Self::State> {
        self.a.initial_states().into_iter().map(|s| (s, 0)).collect()
    }

    fn successors(&self, (s, i): &Self::State, _: Symbol) -> Vec<Self::State> {
        let j = self.w.next_position(*i);
        self.a.successors(s, self.w.symbol_at(*i)).into_iter().map(|t| (t, j)).collect()
    }

    fn is_accepting(&self, (s, _): &Self::State) -> bool {
        self.a.is_accepting(s)
    }
}

/// Membership of `u·v^ω` for any on-the-fly automaton. Cycles of the product
/// with the lasso positions only exist inside the period.
pub fn accepts_lasso_with<A: OmegaAutomaton>(a: A, w: &LassoWord, cap: usize) -> Result<bool> {
    w.check_alphabet(a.n_symbols())?;
    let g = explore(&OnLasso { a, w }, cap, "lasso product")?;
    Ok(g.accepting_lasso().is_some())
}

/// True iff `u·v^ω ∈ L(a)`.
///
/// # Panics
/// If the word uses symbols outside the alphabet of `a`.
pub fn accepts_lasso(a: &Nba, w: &LassoWord) -> bool {
    accepts_lasso_with(a, w, usize::MAX).expect("lasso symbols must belong to the alphabet")
}

/// `None` iff the language is empty, otherwise an accepted lasso.
pub fn is_empty(a: &Nba) -> Option<LassoWord> {
    explore(a, usize::MAX, "emptiness").expect("no cap").accepting_lasso()
}

/// States that are reachable and can reach an accepting cycle.
pub fn useful_states(a: &Nba) -> FixedBitSet {
    let g = explore(a, usize::MAX, "trim").expect("no cap");
    let live = g.live();
    let mut keep = FixedBitSet::with_capacity(a.n_states());
    for (i, &s) in g.states.iter().enumerate() {
        if live[i] {
            keep.insert(s);
        }
    }
    keep
}

/// Removes states that contribute to no accepting run. The language and
/// the alphabet are unchanged.
pub fn trim_useless(a: &Nba) -> Nba {
    let keep = useful_states(a);
    if keep.count_ones(..) == a.n_states() {
        a.clone()
    } else {
        a.restrict(&keep)
    }
}

fn check_alphabets(a: &Nba, b: &Nba) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

/// Decides `L(a) ⊆ L(b)`; on failure returns a lasso accepted by `a` and
/// rejected by `b`. The complement of `b` is explored only along words `a`
/// can read, bounded by `cap` product states. The profile semigroup
/// ([`profile_includes`]) is tried first with a tenth of the cap, since it
/// is often far smaller on dense automata.
pub fn includes(a: &Nba, b: &Nba, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    check_alphabets(a, b)?;
    if a.n_states().max(b.n_states()) <= 64 {
        match profile_includes(&trim_useless(a), &trim_useless(b), (cap / 10).max(1)) {
            Err(Error::CapExceeded { .. }) => log::debug!("profile semigroup over the cap, complementing"),
            r => return r,
        }
    }
    rank_includes(a, b, cap)
}

/// [`includes`] through the rank-based complement only.
pub fn rank_includes(a: &Nba, b: &Nba, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    check_alphabets(a, b)?;
    if a == b {
        return Ok((true, None));
    }
    let a = trim_useless(a);
    if a.n_states() == 0 {
        return Ok((true, None));
    }
    let b = trim_useless(b);
    let comp = RankComplement::new(DualTable::from_nba(&b), b.initial_states().collect());
    let prod = Intersection::new(&a, &comp);
    let g = explore(&prod, cap, "inclusion product")?;
    match g.accepting_lasso() {
        None => Ok((true, None)),
        Some(w) => Ok((false, Some(w))),
    }
}

/// Decides `L(a) = L(b)`, returning a lasso in the symmetric difference
/// when they differ.
pub fn equivalent(a: &Nba, b: &Nba, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    check_alphabets(a, b)?;
    if a == b {
        return Ok((true, None));
    }
    let (ok, w) = includes(a, b, cap)?;
    if !ok {
        return Ok((false, w));
    }
    includes(b, a, cap)
}

/// Decides `L(a) = Σ^ω`, returning a rejected lasso otherwise.
pub fn universal(a: &Nba, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    if a.n_symbols() == 0 {
        // no infinite words at all
        return Ok((true, None));
    }
    let k = a.n_symbols();
    let all = Nba::with_names(vec!["all".into()], a.alphabet().to_vec(), [0], [0], (0..k).map(|x| (0, x, 0)))?;
    includes(&all, a, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fig_3, fig_7, fig_9, random_nba};

    fn lasso(u: &[Symbol], v: &[Symbol]) -> LassoWord {
        LassoWord::new(u.to_vec(), v.to_vec()).unwrap()
    }

    fn loop_all(k: usize) -> Nba {
        let alpha = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Nba::new(1, alpha, [0], [0], (0..k).map(|a| (0, a, 0))).unwrap()
    }

    #[test]
    fn fig3_membership() {
        let a = fig_3();
        assert!(accepts_lasso(&a, &lasso(&[0, 0], &[0])));
        assert!(accepts_lasso(&a, &lasso(&[0, 1], &[0])));
        assert!(accepts_lasso(&a, &lasso(&[1, 1], &[0])));
        assert!(!accepts_lasso(&a, &lasso(&[1, 0], &[0])));
    }

    #[test]
    fn emptiness() {
        assert!(is_empty(&fig_7()).is_none());
        assert!(is_empty(&fig_9()).is_none());
        let w = is_empty(&loop_all(1)).unwrap();
        assert!(w.prefix().is_empty());
        assert_eq!(w.period().len(), 1);
        let w = is_empty(&fig_3()).unwrap();
        assert!(accepts_lasso(&fig_3(), &w));
    }

    #[test]
    fn universality_basics() {
        assert!(universal(&loop_all(2), 1000).unwrap().0);
        let none = Nba::new(1, vec!["a".into()], [0], [], [(0, 0, 0)]).unwrap();
        let (u, w) = universal(&none, 1000).unwrap();
        assert!(!u);
        assert!(!accepts_lasso(&none, &w.unwrap()));
    }

    #[test]
    fn complement_of_universal_and_empty() {
        assert!(is_empty(&complement(&loop_all(2), 1000).unwrap()).is_none());
        let none = Nba::new(2, vec!["a".into(), "b".into()], [0], [], [(0, 0, 1)]).unwrap();
        let c = complement(&none, 1000).unwrap();
        for w in LassoWord::enumerate(2, 3, 3) {
            assert!(accepts_lasso(&c, &w));
        }
    }

    #[test]
    fn complement_xor_small_random() {
        for seed in 0..20 {
            let a = random_nba(3, 2, 0.4, 0.4, seed);
            let c = complement(&a, 50_000).unwrap();
            for w in LassoWord::enumerate(2, 2, 2) {
                assert_ne!(accepts_lasso(&a, &w), accepts_lasso(&c, &w), "seed {seed} {w:?}");
            }
        }
    }

    #[test]
    fn inclusion_witness_validates() {
        let a = fig_3();
        let (ok, w) = includes(&loop_all(2), &a, 10_000).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert!(!accepts_lasso(&a, &w));
        assert!(includes(&a, &loop_all(2), 10_000).unwrap().0);
        assert!(equivalent(&a, &a.reverse().reverse(), 10_000).unwrap().0);
    }

    #[test]
    fn alphabet_mismatch() {
        assert_eq!(includes(&loop_all(1), &loop_all(2), 10).unwrap_err(), Error::AlphabetMismatch);
    }
}
