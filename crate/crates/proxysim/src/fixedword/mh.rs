use std::collections::HashMap;
use std::sync::Arc;

use crate::automata::{Nba, Symbol};
use crate::error::{Error, Result};
use crate::langops::OmegaAutomaton;

use super::aba::Aba;

/// A breakpoint state `(S, O)`: the current level and the states still owing
/// a visit to an accepting state.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MhState {
    pub level: Vec<u32>,
    pub owing: Vec<u32>,
}

/// The breakpoint (Miyano-Hayashi) construction, built on demand.
/// Accepting states have `O = ∅`.
#[derive(Clone, Debug)]
pub struct MhView {
    models: Arc<Vec<Vec<Vec<u32>>>>,
    accepting: Vec<bool>,
    k: usize,
    start: usize,
}

fn subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut u: Vec<u32> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

impl MhView {
    pub fn new(aba: &Aba, start: usize) -> MhView {
        MhView {
            models: Arc::new(aba.model_table()),
            accepting: (0..aba.n_states()).map(|q| aba.is_accepting(q)).collect(),
            k: aba.n_symbols(),
            start,
        }
    }

    fn strip_accepting(&self, s: &[u32]) -> Vec<u32> {
        s.iter().copied().filter(|&u| !self.accepting[u as usize]).collect()
    }
}

impl OmegaAutomaton for MhView {
    type State = MhState;

    fn n_symbols(&self) -> usize {
        self.k
    }

    fn initial_states(&self) -> Vec<MhState> {
        let level = vec![self.start as u32];
        vec![MhState { owing: self.strip_accepting(&level), level }]
    }

    fn is_accepting(&self, s: &MhState) -> bool {
        s.owing.is_empty()
    }

    fn successors(&self, s: &MhState, a: Symbol) -> Vec<MhState> {
        let reset = s.owing.is_empty();
        // partial (level, owing) pairs, one model picked per state so far
        let mut acc: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
        for &u in &s.level {
            let ms = &self.models[u as usize * self.k + a];
            let owes = !reset && s.owing.binary_search(&u).is_ok();
            let mut next = Vec::with_capacity(acc.len() * ms.len());
            for (l, o) in &acc {
                for m in ms {
                    let o2 = if owes { union(o, m) } else { o.clone() };
                    next.push((union(l, m), o2));
                }
            }
            acc = prune(next);
            if acc.is_empty() {
                return Vec::new();
            }
        }
        let mut out: Vec<MhState> = acc
            .into_iter()
            .map(|(l, o)| {
                let owing = if reset { self.strip_accepting(&l) } else { self.strip_accepting(&o) };
                MhState { level: l, owing }
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Drops pairs dominated componentwise by another pair. Smaller levels and
/// smaller owing sets accept more words, so the union language is kept.
fn prune(mut v: Vec<(Vec<u32>, Vec<u32>)>) -> Vec<(Vec<u32>, Vec<u32>)> {
    v.sort_by(|a, b| (a.0.len() + a.1.len()).cmp(&(b.0.len() + b.1.len())).then_with(|| a.cmp(b)));
    v.dedup();
    let mut out: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for p in v {
        if !out.iter().any(|m| subset(&m.0, &p.0) && subset(&m.1, &p.1)) {
            out.push(p);
        }
    }
    out
}

/// Materializes the breakpoint automaton of `aba` from `start`, failing once
/// more than `cap` states are reachable.
pub fn mh_to_nba(aba: &Aba, start: usize, cap: usize) -> Result<Nba> {
    let view = MhView::new(aba, start);
    let mut index: HashMap<MhState, usize> = HashMap::new();
    let mut states: Vec<MhState> = Vec::new();
    let mut trans = Vec::new();
    for s in view.initial_states() {
        index.insert(s.clone(), 0);
        states.push(s);
    }
    let mut i = 0;
    while i < states.len() {
        for a in 0..view.k {
            for t in view.successors(&states[i], a) {
                let j = match index.get(&t) {
                    Some(&j) => j,
                    None => {
                        if states.len() >= cap {
                            return Err(Error::CapExceeded { what: "breakpoint construction", cap });
                        }
                        index.insert(t.clone(), states.len());
                        states.push(t);
                        states.len() - 1
                    }
                };
                trans.push((i, a, j));
            }
        }
        i += 1;
    }
    let name = |v: &[u32]| v.iter().map(|&u| aba.state_name(u as usize)).collect::<Vec<_>>().join(";");
    let names = states.iter().map(|s| format!("{{{}}}/{{{}}}", name(&s.level), name(&s.owing))).collect();
    let accepting: Vec<usize> = (0..states.len()).filter(|&i| states[i].owing.is_empty()).collect();
    Nba::with_names(names, aba.alphabet().to_vec(), [0], accepting, trans)
}
