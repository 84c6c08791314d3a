use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::automata::{LassoWord, Nba, State, StateRelation};
use crate::error::{Error, Result};
use crate::langops::{explore, DualTable, RankComplement, DEFAULT_COMPLEMENT_CAP};
use crate::par::Exec;
use crate::simulations::delayed_sim;

use super::aba::{product_aba, product_state};
use super::pebble::{kpebble_delayed, lasso_bit_game, lasso_kpebble_delayed, DEFAULT_PEBBLE_CAP};

/// Limits and switches for [`fx_delayed_sim`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FxOptions {
    /// Largest automaton [`fx_delayed_sim`] accepts.
    pub max_states: usize,
    /// Cap on complement states explored per pair.
    pub complement_cap: usize,
    /// Cap on breakpoint states when validating witnesses.
    pub mh_cap: usize,
    /// Lasso sizes tried by the refutation search.
    pub search_prefix: usize,
    pub search_period: usize,
    /// Try the lasso search and delayed simulation before complementing.
    pub shortcuts: bool,
    pub exec: Exec,
}

impl Default for FxOptions {
    fn default() -> Self {
        FxOptions {
            max_states: 4,
            complement_cap: DEFAULT_COMPLEMENT_CAP,
            mh_cap: 20_000,
            search_prefix: 4,
            search_period: 4,
            shortcuts: true,
            exec: Exec::default(),
        }
    }
}

/// Fixed-word delayed simulation with a refuting word for every unrelated
/// pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FxRelation {
    pub relation: StateRelation,
    pub counterexamples: BTreeMap<(State, State), LassoWord>,
}

struct PairCtx<'a> {
    a: &'a Nba,
    table: Arc<DualTable>,
    de: Option<StateRelation>,
    /// Sorted by length; the first `n_short` are tried before the
    /// positive shortcuts.
    lassos: Vec<LassoWord>,
    n_short: usize,
    opts: &'a FxOptions,
}

impl<'a> PairCtx<'a> {
    fn new(a: &'a Nba, opts: &'a FxOptions) -> PairCtx<'a> {
        let (de, mut lassos) = if opts.shortcuts {
            (Some(delayed_sim(a)), LassoWord::enumerate(a.n_symbols(), opts.search_prefix, opts.search_period))
        } else {
            (None, Vec::new())
        };
        lassos.sort_by_key(|w| w.positions());
        let n_short = lassos.partition_point(|w| w.positions() <= 3);
        PairCtx { a, table: Arc::new(product_aba(a).dual_table()), de, lassos, n_short, opts }
    }

    fn refute(&self, q: State, s: State, range: std::ops::Range<usize>) -> Result<Option<LassoWord>> {
        for w in &self.lassos[range] {
            if !lasso_bit_game(self.a, q, s, w)? {
                return Ok(Some(w.clone()));
            }
        }
        Ok(None)
    }

    /// `None` when `q ⊑fx s`, otherwise a word Duplicator loses on.
    fn check(&self, q: State, s: State) -> Result<Option<LassoWord>> {
        if q == s {
            return Ok(None);
        }
        if self.opts.shortcuts {
            if let Some(w) = self.refute(q, s, 0..self.n_short)? {
                return Ok(Some(w));
            }
            // both games give Duplicator less information than a fixed word
            if self.de.as_ref().is_some_and(|de| de.contains(q, s))
                || kpebble_delayed(self.a, q, s, self.a.n_states(), DEFAULT_PEBBLE_CAP)?
            {
                return Ok(None);
            }
            if let Some(w) = self.refute(q, s, self.n_short..self.lassos.len())? {
                return Ok(Some(w));
            }
        }
        // ⟨q,s,0⟩ accepts the words Duplicator wins; search the complement
        let start = product_state(self.a.n_states(), q, s, false);
        let c = RankComplement::new(self.table.clone(), vec![start]);
        let cap = self.opts.complement_cap;
        let ex = explore(&c, cap, "fixed-word complement").map_err(|e| match e {
            Error::CapExceeded { .. } => Error::PairCapExceeded {
                q: self.a.state_name(q).to_string(),
                s: self.a.state_name(s).to_string(),
                cap,
            },
            e => e,
        })?;
        Ok(ex.accepting_lasso())
    }
}

/// Fixed-word delayed simulation: `q ⊑fx s` iff Duplicator wins the
/// delayed game from `(q, s)` on every word announced in advance, decided
/// as universality of `⟨q, s, 0⟩` in [`product_aba`].
pub fn fx_delayed_sim(a: &Nba, opts: &FxOptions) -> Result<FxRelation> {
    let n = a.n_states();
    if n > opts.max_states {
        return Err(Error::TooLarge { what: "fixed-word simulation", states: n, limit: opts.max_states });
    }
    let ctx = PairCtx::new(a, opts);
    let results = opts.exec.map(n * n, |i| ctx.check(i / n, i % n));
    let mut relation = StateRelation::empty(n);
    let mut counterexamples = BTreeMap::new();
    for (i, r) in results.into_iter().enumerate() {
        match r? {
            None => relation.insert(i / n, i % n),
            Some(w) => {
                counterexamples.insert((i / n, i % n), w);
            }
        }
    }
    Ok(FxRelation { relation, counterexamples })
}

/// The fixed-word check for a single pair, without the size guard.
pub fn fx_pair(a: &Nba, q: State, s: State, opts: &FxOptions) -> Result<Option<LassoWord>> {
    if q >= a.n_states() || s >= a.n_states() {
        return Err(Error::InvalidArgument("state out of range".into()));
    }
    PairCtx::new(a, opts).check(q, s)
}

/// Universality of `q` decided as `u ⊑fx ι`, where `u` carries an accepting
/// loop on every letter and `ι` starts the runs of `q`.
pub fn universal_by_fx(q: &Nba, opts: &FxOptions) -> Result<bool> {
    let k = q.n_symbols();
    if k == 0 {
        return Ok(true);
    }
    let inits: Vec<State> = q.initial_states().collect();
    if inits.is_empty() {
        return Ok(false);
    }
    let n = q.n_states();
    let (u, iota) = (n, n + 1);
    let mut trans: Vec<(State, usize, State)> = q.transitions().to_vec();
    for x in 0..k {
        trans.push((u, x, u));
        for &i in &inits {
            trans.extend(q.successors(i, x).iter().map(|&r| (iota, x, r)));
        }
    }
    let mut names = q.names().to_vec();
    names.push(fresh_name(&names, "u"));
    names.push(fresh_name(&names, "i"));
    let accepting: Vec<State> = q.accepting_states().chain([u]).collect();
    let joined = Nba::with_names(names, q.alphabet().to_vec(), [iota], accepting, trans)?;
    Ok(fx_pair(&joined, u, iota, opts)?.is_none())
}

fn fresh_name(taken: &[String], base: &str) -> String {
    (0..).map(|i| format!("{base}{i}")).find(|c| !taken.contains(c)).expect("unbounded")
}

/// Outcome of [`collapse_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Related, and Duplicator wins the single-pebble game on every sample.
    PositiveConsistent,
    /// Related, yet Duplicator loses on this sampled word.
    PositiveInconsistent(LassoWord),
    /// Unrelated, and Duplicator loses the refuting word with up to `kmax`
    /// pebbles.
    CollapseConfirmed,
    /// Unrelated, yet `k` pebbles win the refuting word.
    CollapseViolation { k: usize, word: LassoWord },
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::PositiveInconsistent(_) | Verdict::CollapseViolation { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PositiveConsistent => f.write_str("POSITIVE-CONSISTENT"),
            Verdict::PositiveInconsistent(_) => f.write_str("POSITIVE-INCONSISTENT"),
            Verdict::CollapseConfirmed => f.write_str("COLLAPSE-CONFIRMED"),
            Verdict::CollapseViolation { k, .. } => write!(f, "COLLAPSE-VIOLATION (k={k})"),
        }
    }
}

/// Lassos sampled by [`collapse_check`].
pub fn collapse_sample(n_symbols: usize) -> Vec<LassoWord> {
    LassoWord::enumerate(n_symbols, 3, 3)
}

/// Checks that more pebbles do not help Duplicator: related pairs must win
/// every sampled word with one pebble, and the refuting word of an
/// unrelated pair must be lost with every `k ≤ kmax`.
pub fn collapse_check(a: &Nba, q: State, s: State, kmax: usize, opts: &FxOptions) -> Result<Verdict> {
    let w = fx_pair(a, q, s, opts)?;
    collapse_check_with(a, q, s, w.as_ref(), kmax, &collapse_sample(a.n_symbols()))
}

/// [`collapse_check`] given the pair's refuting word, if any.
pub fn collapse_check_with(
    a: &Nba,
    q: State,
    s: State,
    refuting: Option<&LassoWord>,
    kmax: usize,
    sample: &[LassoWord],
) -> Result<Verdict> {
    match refuting {
        None => {
            for w in sample {
                if !lasso_kpebble_delayed(a, q, s, 1, w)? {
                    return Ok(Verdict::PositiveInconsistent(w.clone()));
                }
            }
            Ok(Verdict::PositiveConsistent)
        }
        Some(w) => {
            for k in 1..=kmax {
                if lasso_kpebble_delayed(a, q, s, k, w)? {
                    return Ok(Verdict::CollapseViolation { k, word: w.clone() });
                }
            }
            Ok(Verdict::CollapseConfirmed)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fig_7, random_nba};
    use crate::fixedword::{Aba, MhView};
    use crate::langops::{accepts_lasso_with, universal};

    #[test]
    fn fig7_only_one_direction() {
        let a = fig_7();
        let fx = fx_delayed_sim(&a, &FxOptions::default()).unwrap();
        assert!(!fx.relation.contains(0, 1) && fx.relation.contains(1, 0));
        assert_eq!(fx.counterexamples[&(0, 1)], LassoWord::new(vec![], vec![0]).unwrap());
        assert_eq!(collapse_check(&a, 0, 1, 3, &FxOptions::default()).unwrap(), Verdict::CollapseConfirmed);
        assert_eq!(collapse_check(&a, 1, 0, 3, &FxOptions::default()).unwrap(), Verdict::PositiveConsistent);
    }

    #[test]
    fn shortcuts_do_not_change_the_relation() {
        let exact = FxOptions { shortcuts: false, ..FxOptions::default() };
        for seed in 0..40 {
            let a = random_nba(2, 2, 0.5, 0.4, seed);
            let fast = fx_delayed_sim(&a, &FxOptions::default()).unwrap();
            let slow = fx_delayed_sim(&a, &exact).unwrap();
            assert_eq!(fast.relation, slow.relation, "seed {seed}");
            assert!(fast.relation.is_preorder());
        }
    }

    #[test]
    fn counterexamples_are_lost_and_rejected() {
        let exact = FxOptions { shortcuts: false, ..FxOptions::default() };
        for seed in 0..30 {
            let a = random_nba(2, 2, 0.5, 0.4, seed);
            let aba = product_aba(&a);
            let fx = fx_delayed_sim(&a, &exact).unwrap();
            for (&(q, s), w) in &fx.counterexamples {
                assert!(!lasso_bit_game(&a, q, s, w).unwrap());
                let mh = MhView::new(&aba, product_state(2, q, s, false));
                assert!(!accepts_lasso_with(mh, w, 20_000).unwrap());
            }
        }
    }

    #[test]
    fn breakpoint_language_is_the_word_game() {
        for seed in 0..10 {
            let a = random_nba(2, 2, 0.5, 0.5, seed);
            let aba = Aba::clone(&product_aba(&a));
            for (q, s) in [(0, 1), (1, 0)] {
                let mh = super::super::mh_to_nba(&aba, product_state(2, q, s, false), 20_000).unwrap();
                for w in LassoWord::enumerate(2, 3, 3) {
                    let game = lasso_kpebble_delayed(&a, q, s, 1, &w).unwrap();
                    assert_eq!(crate::langops::accepts_lasso(&mh, &w), game, "seed {seed} {w:?}");
                }
            }
        }
    }

    #[test]
    fn universality_reduction() {
        for seed in 0..15 {
            let q = random_nba(2, 2, 0.6, 0.6, seed);
            let (u, _) = universal(&q, 10_000).unwrap();
            assert_eq!(universal_by_fx(&q, &FxOptions::default()).unwrap(), u, "seed {seed}");
        }
    }

    #[test]
    fn size_guard() {
        let a = random_nba(5, 2, 0.3, 0.3, 1);
        assert!(matches!(fx_delayed_sim(&a, &FxOptions::default()), Err(Error::TooLarge { .. })));
    }
}
