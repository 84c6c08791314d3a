//! Direct, delayed and backward direct simulation, and delayed containment.
//!
//! Entry `(q, s)` of every relation returned here means "`s` simulates `q`"
//! (`q ⊑ s`). A state without any outgoing transition is simulated by every
//! state in the forward games: Spoiler is stuck and loses.

use fixedbitset::FixedBitSet;

use crate::automata::{LassoWord, Nba, State, StateRelation, Symbol};
use crate::error::Result;
use crate::games::{solve_buchi, GameGraph};
use crate::langops;
use crate::par::Exec;

/// Bitsets of `a`-successors (or predecessors) per `(state, symbol)`.
fn step_sets(a: &Nba, backward: bool) -> Vec<FixedBitSet> {
    let (n, k) = (a.n_states(), a.n_symbols());
    let mut out = vec![FixedBitSet::with_capacity(n); n * k];
    for &(p, s, q) in a.transitions() {
        if backward {
            out[q * k + s].insert(p);
        } else {
            out[p * k + s].insert(q);
        }
    }
    out
}

/// Greatest fixpoint: drop `(q, s)` while some step of `q` has no step of
/// `s` on the same symbol landing in the relation.
fn refine(a: &Nba, mut r: StateRelation, backward: bool) -> StateRelation {
    let (n, k) = (a.n_states(), a.n_symbols());
    let steps = step_sets(a, backward);
    loop {
        let mut changed = false;
        for q in 0..n {
            for s in 0..n {
                if !r.contains(q, s) {
                    continue;
                }
                let ok = (0..k).all(|x| {
                    let ts = &steps[s * k + x];
                    steps[q * k + x].ones().all(|q2| !r.row(q2).is_disjoint(ts))
                });
                if !ok {
                    r.remove(q, s);
                    changed = true;
                }
            }
        }
        if !changed {
            return r;
        }
    }
}

/// Forward direct simulation `⊑di`.
pub fn direct_sim(a: &Nba) -> StateRelation {
    let init = StateRelation::from_fn(a.n_states(), |q, s| {
        !a.has_moves(q) || !a.is_accepting(q) || a.is_accepting(s)
    });
    refine(a, init, false)
}

/// Backward direct simulation `⊑bw`: predecessors are matched and both the
/// accepting and the initial labels must be respected.
pub fn backward_direct_sim(a: &Nba) -> StateRelation {
    let init = StateRelation::from_fn(a.n_states(), |q, s| {
        (!a.is_accepting(q) || a.is_accepting(s)) && (!a.is_initial(q) || a.is_initial(s))
    });
    refine(a, init, true)
}

/// One move of a player in a bit game: read `symbol`, go to `dst`; `flag`
/// says whether the move is accepting for the purpose of the obligation bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct BitMove {
    pub symbol: Symbol,
    pub dst: State,
    pub flag: bool,
}

/// Solves the obligation-bit game shared by delayed simulation and the
/// delayed transformers.
///
/// Spoiler positions are `(x, y, b)` with Spoiler in `x`, Duplicator in
/// `y`. Spoiler plays `m ∈ spoiler[x]`, raising the bit to 1 if `m.flag`.
/// Duplicator answers with `d ∈ dup[y]` on the same symbol, clearing the bit
/// if `d.flag`, subject to `keep(m.dst, d.dst)`. Duplicator wins plays that
/// clear the bit infinitely often. Returns the pairs `(x, y)` won from bit 0.
pub(crate) fn solve_bit_game(
    n: usize,
    k: usize,
    spoiler: &[Vec<BitMove>],
    dup: &[Vec<BitMove>],
    keep: impl Fn(State, State) -> bool,
) -> StateRelation {
    let sp = |x: usize, y: usize, b: usize| (x * n + y) * 2 + b;
    // Duplicator position: (y, symbol, x', bit after Spoiler's move)
    let dp = |y: usize, a: usize, x2: usize, b: usize| ((y * k + a) * n + x2) * 2 + b;
    let mut g = GameGraph::new(n * n * 2, n * k * n * 2);
    // Duplicator answers grouped by symbol.
    let mut by_sym: Vec<Vec<Vec<BitMove>>> = vec![vec![Vec::new(); k]; n];
    for (y, ms) in dup.iter().enumerate() {
        for m in ms {
            by_sym[y][m.symbol].push(*m);
        }
    }
    let mut used = vec![false; n * k * n * 2];
    for x in 0..n {
        for y in 0..n {
            for b in 0..2 {
                let p = sp(x, y, b);
                if b == 0 {
                    g.set_target(p, true);
                }
                for m in &spoiler[x] {
                    let bh = if m.flag { 1 } else { b };
                    let d = dp(y, m.symbol, m.dst, bh);
                    g.add_move0(p, d);
                    if !used[d] {
                        used[d] = true;
                        for r in &by_sym[y][m.symbol] {
                            if keep(m.dst, r.dst) {
                                let b2 = if r.flag { 0 } else { bh };
                                g.add_move1(d, sp(m.dst, r.dst, b2));
                            }
                        }
                    }
                }
            }
        }
    }
    let win = solve_buchi(&g);
    StateRelation::from_fn(n, |x, y| win.contains(sp(x, y, 0)))
}

/// Plain moves of `a` with the source's accepting flag.
pub(crate) fn plain_moves(a: &Nba) -> Vec<Vec<BitMove>> {
    let mut out = vec![Vec::new(); a.n_states()];
    for &(p, s, q) in a.transitions() {
        out[p].push(BitMove { symbol: s, dst: q, flag: a.is_accepting(p) });
    }
    out
}

/// Forward delayed simulation `⊑de`: every accepting visit of Spoiler must
/// eventually be answered by an accepting visit of Duplicator.
pub fn delayed_sim(a: &Nba) -> StateRelation {
    let moves = plain_moves(a);
    solve_bit_game(a.n_states(), a.n_symbols(), &moves, &moves, |_, _| true)
}

/// The automaton of all infinite paths of `a` from `q`, labelled with the
/// symbol and whether the source is accepting (`x/0`, `x/1`).
pub fn path_nba(a: &Nba, q: State) -> Nba {
    let alphabet = annotated_alphabet(a);
    let tr = a.transitions().iter().map(|&(p, s, r)| (p, 2 * s + a.is_accepting(p) as usize, r));
    Nba::with_names(a.names().to_vec(), alphabet, [q], 0..a.n_states(), tr).expect("valid construction")
}

/// The automaton of annotated words on which a path of `a` from `s` meets
/// every accepting visit of the annotation later (or at the same index).
pub fn match_nba(a: &Nba, s: State) -> Nba {
    let n = a.n_states();
    let alphabet = annotated_alphabet(a);
    let names = (0..2 * n).map(|i| format!("{}#{}", a.state_name(i / 2), i % 2)).collect();
    let mut tr = Vec::new();
    for &(p, x, p2) in a.transitions() {
        for b in 0..2 {
            for f in 0..2 {
                let bn = usize::from((b == 1 || f == 1) && !a.is_accepting(p));
                tr.push((2 * p + b, 2 * x + f, 2 * p2 + bn));
            }
        }
    }
    Nba::with_names(names, alphabet, [2 * s], (0..n).map(|p| 2 * p), tr).expect("valid construction")
}

fn annotated_alphabet(a: &Nba) -> Vec<String> {
    a.alphabet().iter().flat_map(|x| [format!("{x}/0"), format!("{x}/1")]).collect()
}

/// Decides delayed containment `q ⊑de-cont s`: for every infinite path from
/// `q`, some path from `s` over the same word answers each accepting visit.
///
/// `cap` bounds the complement construction.
pub fn delayed_containment(a: &Nba, q: State, s: State, cap: usize) -> Result<bool> {
    if q == s {
        return Ok(true);
    }
    let (ok, _) = langops::includes(&path_nba(a, q), &match_nba(a, s), cap)?;
    Ok(ok)
}

/// Like [`delayed_containment`] with a counterexample: an annotated lasso
/// over `x/f` symbols when containment fails.
pub fn delayed_containment_witness(a: &Nba, q: State, s: State, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    langops::includes(&path_nba(a, q), &match_nba(a, s), cap)
}

/// The full delayed-containment relation, one inclusion check per pair.
pub fn delayed_containment_relation(a: &Nba, cap: usize, exec: Exec) -> Result<StateRelation> {
    let n = a.n_states();
    let cells = exec.map(n * n, |i| delayed_containment(a, i / n, i % n, cap));
    let mut r = StateRelation::empty(n);
    for (i, c) in cells.into_iter().enumerate() {
        if c? {
            r.insert(i / n, i % n);
        }
    }
    Ok(r)
}
