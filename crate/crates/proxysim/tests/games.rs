//! The game solvers against brute force over memoryless Duplicator
//! strategies. Büchi and safety games are positionally determined, so
//! Duplicator wins from `p` iff one memoryless strategy wins against every
//! Spoiler behaviour.

use fixedbitset::FixedBitSet;
use proptest::prelude::*;
use proxysim::games::{solve_buchi, solve_safety, GameGraph};

#[derive(Clone, Debug)]
struct Spec {
    moves0: Vec<Vec<usize>>,
    moves1: Vec<Vec<usize>>,
    target: Vec<bool>,
}

fn arb_game() -> impl Strategy<Value = Spec> {
    (1usize..5, 1usize..5).prop_flat_map(|(n0, n1)| {
        (
            proptest::collection::vec(proptest::collection::vec(0..n1, 0..3), n0),
            proptest::collection::vec(proptest::collection::vec(0..n0, 0..3), n1),
            proptest::collection::vec(any::<bool>(), n0),
        )
            .prop_map(|(moves0, moves1, target)| Spec { moves0, moves1, target })
    })
}

fn build(s: &Spec) -> GameGraph {
    let mut g = GameGraph::new(s.moves0.len(), s.moves1.len());
    for (p, ms) in s.moves0.iter().enumerate() {
        for &d in ms {
            g.add_move0(p, d);
        }
        g.set_target(p, s.target[p]);
    }
    for (d, ms) in s.moves1.iter().enumerate() {
        for &p in ms {
            g.add_move1(d, p);
        }
    }
    g
}

/// All memoryless Duplicator strategies; `None` where it has no move.
fn strategies(s: &Spec) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![Vec::new()];
    for ms in &s.moves1 {
        let mut next = Vec::new();
        for st in &out {
            if ms.is_empty() {
                let mut st = st.clone();
                st.push(None);
                next.push(st);
            }
            for &p in ms {
                let mut st = st.clone();
                st.push(Some(p));
                next.push(st);
            }
        }
        out = next;
    }
    out
}

/// Successor graph on Spoiler positions under a Duplicator strategy;
/// `None` means Spoiler can force a Duplicator dead end.
fn spoiler_graph(s: &Spec, st: &[Option<usize>]) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut next = vec![Vec::new(); s.moves0.len()];
    let mut to_stuck = vec![false; s.moves0.len()];
    for (p, ms) in s.moves0.iter().enumerate() {
        for &d in ms {
            match st[d] {
                Some(q) => next[p].push(q),
                None => to_stuck[p] = true,
            }
        }
    }
    (next, to_stuck)
}

fn reachable(next: &[Vec<usize>], from: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; next.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(p) = stack.pop() {
        for &q in &next[p] {
            if allowed(q) && !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// Spoiler escapes if it reaches a Duplicator dead end, or a cycle through
/// `bad` positions only.
fn spoiler_escapes(s: &Spec, st: &[Option<usize>], from: usize, bad: &dyn Fn(usize) -> bool) -> bool {
    let (next, to_stuck) = spoiler_graph(s, st);
    let reach = reachable(&next, from, &|_| true);
    (0..next.len()).filter(|&p| reach[p]).any(|p| {
        to_stuck[p]
            || (bad(p) && next[p].iter().any(|&q| bad(q) && reachable(&next, q, bad)[p]))
    })
}

fn buchi_oracle(s: &Spec) -> Vec<bool> {
    let strats = strategies(s);
    (0..s.moves0.len())
        .map(|p| strats.iter().any(|st| !spoiler_escapes(s, st, p, &|q| !s.target[q])))
        .collect()
}

fn safety_oracle(s: &Spec, safe: &[bool]) -> Vec<bool> {
    let strats = strategies(s);
    (0..s.moves0.len())
        .map(|p| {
            strats.iter().any(|st| {
                let (next, to_stuck) = spoiler_graph(s, st);
                let reach = reachable(&next, p, &|_| true);
                (0..next.len()).all(|q| !reach[q] || (safe[q] && !to_stuck[q]))
            })
        })
        .collect()
}

fn to_vec(b: &FixedBitSet, n: usize) -> Vec<bool> {
    (0..n).map(|i| b.contains(i)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn buchi_matches_strategy_enumeration(s in arb_game()) {
        let win = solve_buchi(&build(&s));
        prop_assert_eq!(to_vec(&win, s.moves0.len()), buchi_oracle(&s));
    }

    #[test]
    fn safety_matches_strategy_enumeration(s in arb_game(), safe_bits in proptest::collection::vec(any::<bool>(), 4)) {
        let n = s.moves0.len();
        let safe: Vec<bool> = (0..n).map(|i| safe_bits[i]).collect();
        let mut set = FixedBitSet::with_capacity(n);
        for (i, &b) in safe.iter().enumerate() {
            set.set(i, b);
        }
        let win = solve_safety(&build(&s), &set);
        prop_assert_eq!(to_vec(&win, n), safety_oracle(&s, &safe));
    }
}
