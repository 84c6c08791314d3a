use std::collections::HashSet;
use std::sync::Arc;

use crate::automata::{Nba, Symbol};
use crate::error::Result;
use crate::langops::{explore, OmegaAutomaton};

/// The dual transition structure of an alternating automaton.
///
/// For state `q` and symbol `a`, `choices(q, a)` lists the minimal models of
/// the dual of `δ(q, a)`: a refuting run picks one of them and must then
/// refute every state in it. No entry means `δ(q, a)` is `true` (cannot be
/// refuted); a single empty entry means it is `false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTable {
    n: usize,
    k: usize,
    accepting: Vec<bool>,
    choices: Vec<Vec<Vec<u32>>>,
}

impl DualTable {
    /// `choices` is indexed by `q * n_symbols + a`; each model must be sorted.
    ///
    /// # Panics
    /// On inconsistent dimensions or out-of-range states.
    pub fn new(n_symbols: usize, accepting: Vec<bool>, choices: Vec<Vec<Vec<u32>>>) -> Self {
        let n = accepting.len();
        assert_eq!(choices.len(), n * n_symbols, "dual table dimensions");
        assert!(choices.iter().flatten().flatten().all(|&q| (q as usize) < n), "state out of range");
        DualTable { n, k: n_symbols, accepting, choices }
    }

    /// An NBA is the alternating automaton with disjunctive transitions;
    /// the dual of `∨ succ` is `∧ succ`.
    pub fn from_nba(a: &Nba) -> Self {
        let k = a.n_symbols();
        let mut choices = Vec::with_capacity(a.n_states() * k);
        for q in 0..a.n_states() {
            for x in 0..k {
                choices.push(vec![a.successors(q, x).iter().map(|&s| s as u32).collect()]);
            }
        }
        DualTable::new(k, (0..a.n_states()).map(|q| a.is_accepting(q)).collect(), choices)
    }

    pub fn n_states(&self) -> usize {
        self.n
    }

    pub fn n_symbols(&self) -> usize {
        self.k
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn choices(&self, q: usize, a: Symbol) -> &[Vec<u32>] {
        &self.choices[q * self.k + a]
    }
}

/// A state of the rank-based complement.
///
/// `Subset` is the initial phase tracking the reachable level. `Ranked`
/// carries a tight level ranking (ranks in `[0, 2n)`, even on accepting
/// states, every odd rank up to the maximum used) and the breakpoint set of
/// even-ranked states still owing a visit to an odd rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RankState {
    Subset(Vec<u32>),
    Ranked { states: Vec<u32>, ranks: Vec<u16>, owing: Vec<u32> },
}

impl RankState {
    /// Largest rank in use.
    pub fn max_rank(&self) -> Option<u16> {
        match self {
            RankState::Subset(_) => None,
            RankState::Ranked { ranks, .. } => ranks.iter().copied().max(),
        }
    }
}

/// The complement of the language of an alternating automaton from a set
/// of start states (their conjunction), built on the fly.
#[derive(Clone, Debug)]
pub struct RankComplement {
    table: Arc<DualTable>,
    start: Vec<u32>,
}

fn union_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let x = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        v.push(x);
    }
    v
}

fn is_subset_sorted(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

/// Keeps the ⊆-minimal sets.
fn minimize(mut sets: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| is_subset_sorted(m, &s)) {
            out.push(s);
        }
    }
    out
}

impl RankComplement {
    pub fn new(table: impl Into<Arc<DualTable>>, start: Vec<usize>) -> Self {
        let mut start: Vec<u32> = start.into_iter().map(|q| q as u32).collect();
        start.sort_unstable();
        start.dedup();
        RankComplement { table: table.into(), start }
    }

    pub fn table(&self) -> &DualTable {
        &self.table
    }

    /// Minimal successor levels of a level, or none if some state cannot be
    /// refuted.
    fn subset_step(&self, level: &[u32], a: Symbol) -> Vec<Vec<u32>> {
        let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
        for &t in level {
            let ch = self.table.choices(t as usize, a);
            if ch.is_empty() {
                return Vec::new();
            }
            let mut next = Vec::with_capacity(acc.len() * ch.len());
            for x in &acc {
                for c in ch {
                    next.push(union_sorted(x, c));
                }
            }
            acc = minimize(next);
        }
        acc
    }

    /// All tight rankings of `states` with max rank exactly `r` and rank of
    /// `states[i]` at most `bounds[i]`.
    fn tight_rankings(&self, states: &[u32], bounds: &[u16], r: u16, out: &mut Vec<Vec<u16>>) {
        let n_odd = (r as usize).div_ceil(2);
        let free: Vec<usize> = {
            // number of non-accepting states from position i on
            let mut v = vec![0; states.len() + 1];
            for i in (0..states.len()).rev() {
                v[i] = v[i + 1] + usize::from(!self.table.is_accepting(states[i] as usize));
            }
            v
        };
        let mut cur = Vec::with_capacity(states.len());
        let mut covered = vec![0u32; n_odd];
        #[allow(clippy::too_many_arguments)]
        fn go(
            me: &RankComplement,
            i: usize,
            states: &[u32],
            bounds: &[u16],
            r: u16,
            free: &[usize],
            cur: &mut Vec<u16>,
            covered: &mut Vec<u32>,
            missing: usize,
            out: &mut Vec<Vec<u16>>,
        ) {
            if missing > free[i] {
                return;
            }
            if i == states.len() {
                out.push(cur.clone());
                return;
            }
            let acc = me.table.is_accepting(states[i] as usize);
            let top = bounds[i].min(r);
            for rank in 0..=top {
                if acc && rank % 2 == 1 {
                    continue;
                }
                let slot = (rank % 2 == 1).then_some(rank as usize / 2);
                let mut m = missing;
                if let Some(s) = slot {
                    if covered[s] == 0 {
                        m -= 1;
                    }
                    covered[s] += 1;
                }
                cur.push(rank);
                go(me, i + 1, states, bounds, r, free, cur, covered, m, out);
                cur.pop();
                if let Some(s) = slot {
                    covered[s] -= 1;
                }
            }
        }
        go(self, 0, states, bounds, r, &free, &mut cur, &mut covered, n_odd, out);
    }

    fn ranked(states: Vec<u32>, ranks: Vec<u16>, owing_from: Option<&[u32]>) -> RankState {
        let owing = match owing_from {
            None => Vec::new(),
            Some(pool) => states
                .iter()
                .zip(&ranks)
                .filter(|&(s, r)| r % 2 == 0 && pool.binary_search(s).is_ok())
                .map(|(&s, _)| s)
                .collect(),
        };
        RankState::Ranked { states, ranks, owing }
    }
}

impl OmegaAutomaton for RankComplement {
    type State = RankState;

    fn n_symbols(&self) -> usize {
        self.table.n_symbols()
    }

    fn initial_states(&self) -> Vec<RankState> {
        vec![RankState::Subset(self.start.clone())]
    }

    fn is_accepting(&self, s: &RankState) -> bool {
        matches!(s, RankState::Ranked { owing, .. } if owing.is_empty())
    }

    fn successors(&self, s: &RankState, a: Symbol) -> Vec<RankState> {
        let mut out = Vec::new();
        match s {
            RankState::Subset(level) => {
                for next in self.subset_step(level, a) {
                    let m = next.len();
                    if m == 0 {
                        out.push(RankState::Ranked { states: vec![], ranks: vec![], owing: vec![] });
                    } else {
                        let mut rankings = Vec::new();
                        let bounds = vec![u16::MAX; m];
                        for r in (1..2 * m as u16).step_by(2) {
                            self.tight_rankings(&next, &bounds, r, &mut rankings);
                        }
                        for f in rankings {
                            out.push(Self::ranked(next.clone(), f, None));
                        }
                    }
                    out.push(RankState::Subset(next));
                }
            }
            RankState::Ranked { states, ranks, owing } => {
                if states.is_empty() {
                    return vec![s.clone()];
                }
                let r = *ranks.iter().max().expect("nonempty");
                // partial successor: (state, bound) pairs sorted by state, owing successors
                let mut acc: Vec<(Vec<(u32, u16)>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
                for (i, &t) in states.iter().enumerate() {
                    let ch = self.table.choices(t as usize, a);
                    if ch.is_empty() {
                        return Vec::new();
                    }
                    let in_owing = owing.binary_search(&t).is_ok();
                    let mut next = HashSet::new();
                    for (lvl, op) in &acc {
                        for c in ch {
                            let mut l = lvl.clone();
                            for &x in c {
                                match l.binary_search_by_key(&x, |e| e.0) {
                                    Ok(p) => l[p].1 = l[p].1.min(ranks[i]),
                                    Err(p) => l.insert(p, (x, ranks[i])),
                                }
                            }
                            let op2 = if in_owing { union_sorted(op, c) } else { op.clone() };
                            next.insert((l, op2));
                        }
                    }
                    acc = next.into_iter().collect();
                }
                acc.sort();
                for (lvl, op) in acc {
                    if lvl.is_empty() {
                        out.push(RankState::Ranked { states: vec![], ranks: vec![], owing: vec![] });
                        continue;
                    }
                    let st: Vec<u32> = lvl.iter().map(|e| e.0).collect();
                    let bounds: Vec<u16> = lvl.iter().map(|e| e.1).collect();
                    let mut rankings = Vec::new();
                    self.tight_rankings(&st, &bounds, r, &mut rankings);
                    let pool = if owing.is_empty() { &st } else { &op };
                    for f in rankings {
                        out.push(Self::ranked(st.clone(), f, Some(pool)));
                    }
                }
            }
        }
        out
    }
}

/// The complement of `a` as an explicit automaton over the same alphabet.
/// Fails if more than `cap` states are reachable.
pub fn complement(a: &Nba, cap: usize) -> Result<Nba> {
    let comp = RankComplement::new(DualTable::from_nba(a), a.initial_states().collect());
    let g = explore(&comp, cap, "complement")?;
    let names = (0..g.len()).map(|i| format!("c{i}")).collect();
    let tr = g.edges.iter().enumerate().flat_map(|(i, es)| es.iter().map(move |&(x, j)| (i, x, j)));
    Nba::with_names(
        names,
        a.alphabet().to_vec(),
        g.initial.iter().copied(),
        (0..g.len()).filter(|&i| g.accepting[i]),
        tr,
    )
}
