//! Jump games: Duplicator (and for τ₁ also Spoiler) may first move to an
//! `R`-larger proxy state and take the transition from there.
//!
//! Entry `(s, q)` of a transformer result means `s τ(R) q`: Duplicator in
//! `s` wins against Spoiler in `q`. Callers that want a simulation-style
//! relation invert it (see [`crate::proxy`]).

use std::collections::BTreeSet;

use crate::automata::{Nba, State, StateRelation};
use crate::error::{Error, Result};
use crate::simulations::{plain_moves, solve_bit_game, BitMove};

/// A deduplicated jump from `src`: some proxy `p` with `src R p` and
/// `p →symbol dst`; `proxy_final` records whether such a proxy is accepting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JumpMove {
    pub symbol: usize,
    pub dst: State,
    pub proxy_final: bool,
}

fn check_dim(a: &Nba, r: &StateRelation) -> Result<()> {
    if r.dim() != a.n_states() {
        return Err(Error::DimensionMismatch { expected: a.n_states(), found: r.dim() });
    }
    Ok(())
}

/// Jump moves of every state, distinct by `(symbol, dst, proxy_final)`.
pub fn jump_moves(a: &Nba, r: &StateRelation) -> Vec<Vec<JumpMove>> {
    (0..a.n_states())
        .map(|s| {
            let mut set = BTreeSet::new();
            for p in r.row(s).ones() {
                for x in 0..a.n_symbols() {
                    for &d in a.successors(p, x) {
                        set.insert(JumpMove { symbol: x, dst: d, proxy_final: a.is_accepting(p) });
                    }
                }
            }
            set.into_iter().collect()
        })
        .collect()
}

fn as_bit_moves(j: &[Vec<JumpMove>]) -> Vec<Vec<BitMove>> {
    j.iter()
        .map(|v| v.iter().map(|m| BitMove { symbol: m.symbol, dst: m.dst, flag: m.proxy_final }).collect())
        .collect()
}

/// Greatest `T ⊆ init` such that for `(s, q) ∈ T` every Spoiler move of `q`
/// is answered by a Duplicator move of `s` on the same symbol, accepting if
/// Spoiler's is, landing in `T`.
fn refine_direct(n: usize, spoiler: &[Vec<BitMove>], dup: &[Vec<BitMove>], mut t: StateRelation) -> StateRelation {
    loop {
        let mut changed = false;
        for s in 0..n {
            for q in 0..n {
                if !t.contains(s, q) {
                    continue;
                }
                let ok = spoiler[q].iter().all(|m| {
                    dup[s].iter().any(|d| {
                        d.symbol == m.symbol && (!m.flag || d.flag) && t.contains(d.dst, m.dst)
                    })
                });
                if !ok {
                    t.remove(s, q);
                    changed = true;
                }
            }
        }
        if !changed {
            return t;
        }
    }
}

/// τ₀(R): only Duplicator jumps; an accepting Spoiler state must be met by
/// an accepting proxy in the same round.
pub fn tau0(a: &Nba, r: &StateRelation) -> Result<StateRelation> {
    check_dim(a, r)?;
    let dup = as_bit_moves(&jump_moves(a, r));
    Ok(refine_direct(a.n_states(), &plain_moves(a), &dup, StateRelation::full(a.n_states())))
}

/// τ₁(R): both players jump; an accepting Spoiler proxy must be met by an
/// accepting Duplicator proxy in the same round.
pub fn tau1(a: &Nba, r: &StateRelation) -> Result<StateRelation> {
    check_dim(a, r)?;
    let j = as_bit_moves(&jump_moves(a, r));
    Ok(refine_direct(a.n_states(), &j, &j, StateRelation::full(a.n_states())))
}

/// τ₀ᵈᵉ(R): as τ₀ with the delayed winning condition.
pub fn tau0_de(a: &Nba, r: &StateRelation) -> Result<StateRelation> {
    check_dim(a, r)?;
    let dup = as_bit_moves(&jump_moves(a, r));
    Ok(solve_bit_game(a.n_states(), a.n_symbols(), &plain_moves(a), &dup, |_, _| true).inverse())
}

/// τ₁ᵈᵉ(R): as τ₁ with the delayed winning condition.
pub fn tau1_de(a: &Nba, r: &StateRelation) -> Result<StateRelation> {
    check_dim(a, r)?;
    let j = as_bit_moves(&jump_moves(a, r));
    Ok(solve_bit_game(a.n_states(), a.n_symbols(), &j, &j, |_, _| true).inverse())
}

/// Which τ₀ game an appealing-fragment check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tau0Variant {
    Direct,
    Delayed,
}

/// True iff `t` is transitive and Duplicator wins the τ₀-style game over `r`
/// from every pair of `t` while only ever moving to pairs of `t`.
pub fn is_appealing_fragment(a: &Nba, t: &StateRelation, r: &StateRelation, variant: Tau0Variant) -> Result<bool> {
    check_dim(a, r)?;
    check_dim(a, t)?;
    if !t.is_transitive() {
        return Ok(false);
    }
    let dup = as_bit_moves(&jump_moves(a, r));
    let spoiler = plain_moves(a);
    let n = a.n_states();
    Ok(match variant {
        Tau0Variant::Direct => refine_direct(n, &spoiler, &dup, t.clone()) == *t,
        Tau0Variant::Delayed => {
            let win = solve_bit_game(n, a.n_symbols(), &spoiler, &dup, |q2, s2| t.contains(s2, q2));
            t.pairs().all(|(s, q)| win.contains(q, s))
        }
    })
}

/// Pairs on which τ₀(R) changes if Duplicator's same-round obligation is
/// read on its current state `s` instead of the proxy it jumps from.
/// Each such pair is logged at debug level.
pub fn tau0_reading_gap(a: &Nba, r: &StateRelation) -> Result<Vec<(State, State)>> {
    let official = tau0(a, r)?;
    let n = a.n_states();
    let jumps = jump_moves(a, r);
    let dup: Vec<Vec<BitMove>> = jumps
        .iter()
        .enumerate()
        .map(|(s, v)| {
            let mut m: Vec<_> =
                v.iter().map(|j| BitMove { symbol: j.symbol, dst: j.dst, flag: a.is_accepting(s) }).collect();
            m.dedup();
            m
        })
        .collect();
    let alt = refine_direct(n, &plain_moves(a), &dup, StateRelation::full(n));
    let gap: Vec<_> = official.pairs().filter(|&(s, q)| !alt.contains(s, q)).chain(
        alt.pairs().filter(|&(s, q)| !official.contains(s, q)),
    )
    .collect();
    for (s, q) in &gap {
        log::debug!("tau0 readings differ on ({}, {})", a.state_name(*s), a.state_name(*q));
    }
    Ok(gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fig_2, fig_3, fig_9};
    use crate::simulations::{backward_direct_sim, delayed_sim, direct_sim};

    #[test]
    fn identity_degenerates_to_simulation() {
        for a in [fig_3(), fig_9(), fig_2(4)] {
            let id = StateRelation::identity(a.n_states());
            assert_eq!(tau0(&a, &id).unwrap().inverse(), direct_sim(&a));
            assert_eq!(tau1(&a, &id).unwrap().inverse(), direct_sim(&a));
            assert_eq!(tau0_de(&a, &id).unwrap().inverse(), delayed_sim(&a));
            assert_eq!(tau1_de(&a, &id).unwrap().inverse(), delayed_sim(&a));
        }
    }

    #[test]
    fn fig3_tau0_is_not_transitive() {
        let a = fig_3();
        let t = tau0(&a, &backward_direct_sim(&a)).unwrap();
        // (s, q) reads "s τ₀ q"
        assert!(t.contains(3, 2) && t.contains(2, 1));
        assert!(!t.contains(3, 1));
        assert!(t.contains(1, 3));
        assert!(!t.is_transitive());
    }

    #[test]
    fn fig9_caption_fragment() {
        let a = fig_9();
        let t = StateRelation::from_fn(7, |i, j| {
            i == j || j == 6 || ((2..=4).contains(&i) && (2..=4).contains(&j)) || ((2..=4).contains(&i) && j == 5)
        });
        let bw = backward_direct_sim(&a);
        assert!(t.is_subset(&tau0_de(&a, &bw).unwrap()));
        assert!(is_appealing_fragment(&a, &t, &bw, Tau0Variant::Delayed).unwrap());
    }

    #[test]
    fn dimension_is_checked() {
        assert!(tau0(&fig_3(), &StateRelation::identity(2)).is_err());
    }
}
