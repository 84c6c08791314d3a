use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Dense state index.
pub type State = usize;
/// Dense symbol index into the alphabet.
pub type Symbol = usize;

/// A nondeterministic Büchi automaton over a finite alphabet.
///
/// States and symbols are dense indices. Names are kept for I/O only.
/// The transition set is stored sorted by `(src, symbol, dst)` without
/// duplicates, together with successor and predecessor tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nba {
    alphabet: Vec<String>,
    names: Vec<String>,
    initial: FixedBitSet,
    accepting: FixedBitSet,
    transitions: Vec<(State, Symbol, State)>,
    succ: Vec<Vec<State>>,
    pred: Vec<Vec<State>>,
}

fn check_name(kind: &str, name: &str) -> Result<()> {
    if name.is_empty()
        || name.trim() != name
        || name.contains(',')
        || name.contains("->")
        || name.contains('\n')
    {
        return Err(Error::InvalidAutomaton(format!("bad {kind} name {name:?}")));
    }
    Ok(())
}

impl Nba {
    /// Builds an automaton with default state names `q0, q1, ...`.
    ///
    /// Duplicate transitions are merged. Fails on out-of-range indices and
    /// on empty or repeated symbol names.
    pub fn new(
        n_states: usize,
        alphabet: Vec<String>,
        initial: impl IntoIterator<Item = State>,
        accepting: impl IntoIterator<Item = State>,
        transitions: impl IntoIterator<Item = (State, Symbol, State)>,
    ) -> Result<Nba> {
        let names = (0..n_states).map(|i| format!("q{i}")).collect();
        Self::with_names(names, alphabet, initial, accepting, transitions)
    }

    /// Like [`Nba::new`] with explicit state names.
    pub fn with_names(
        names: Vec<String>,
        alphabet: Vec<String>,
        initial: impl IntoIterator<Item = State>,
        accepting: impl IntoIterator<Item = State>,
        transitions: impl IntoIterator<Item = (State, Symbol, State)>,
    ) -> Result<Nba> {
        let n = names.len();
        let k = alphabet.len();
        for s in &alphabet {
            check_name("symbol", s)?;
        }
        for nm in &names {
            check_name("state", nm)?;
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(d) = alphabet.iter().find(|s| !seen.insert(s.as_str())) {
            return Err(Error::InvalidAutomaton(format!("duplicate symbol {d:?}")));
        }
        seen.clear();
        if let Some(d) = names.iter().find(|s| !seen.insert(s.as_str())) {
            return Err(Error::InvalidAutomaton(format!("duplicate state name {d:?}")));
        }
        let bits = |it: &mut dyn Iterator<Item = State>, what: &str| -> Result<FixedBitSet> {
            let mut b = FixedBitSet::with_capacity(n);
            for q in it {
                if q >= n {
                    return Err(Error::InvalidAutomaton(format!("{what} state {q} out of range")));
                }
                b.insert(q);
            }
            Ok(b)
        };
        let initial = bits(&mut initial.into_iter(), "initial")?;
        let accepting = bits(&mut accepting.into_iter(), "accepting")?;
        let mut transitions: Vec<_> = transitions.into_iter().collect();
        for &(p, a, q) in &transitions {
            if p >= n || q >= n || a >= k {
                return Err(Error::InvalidAutomaton(format!("transition ({p},{a},{q}) out of range")));
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        let mut succ = vec![Vec::new(); n * k];
        let mut pred = vec![Vec::new(); n * k];
        for &(p, a, q) in &transitions {
            succ[p * k + a].push(q);
            pred[q * k + a].push(p);
        }
        for v in &mut pred {
            v.sort_unstable();
        }
        Ok(Nba { alphabet, names, initial, accepting, transitions, succ, pred })
    }

    /// Builds an automaton from names; transitions are `(src, symbol, dst)`.
    /// States are numbered in the order of `states`, symbols in the order
    /// of `alphabet`.
    pub fn from_names(
        alphabet: &[&str],
        states: &[&str],
        initial: &[&str],
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Nba> {
        let st: HashMap<&str, usize> = states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let sy: HashMap<&str, usize> = alphabet.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let look = |m: &HashMap<&str, usize>, s: &str| {
            m.get(s).copied().ok_or_else(|| Error::InvalidAutomaton(format!("unknown name {s:?}")))
        };
        let init = initial.iter().map(|s| look(&st, s)).collect::<Result<Vec<_>>>()?;
        let acc = accepting.iter().map(|s| look(&st, s)).collect::<Result<Vec<_>>>()?;
        let tr = transitions
            .iter()
            .map(|(p, a, q)| Ok((look(&st, p)?, look(&sy, a)?, look(&st, q)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::with_names(
            states.iter().map(|s| s.to_string()).collect(),
            alphabet.iter().map(|s| s.to_string()).collect(),
            init,
            acc,
            tr,
        )
    }

    pub fn n_states(&self) -> usize {
        self.names.len()
    }

    pub fn n_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_name(&self, q: State) -> &str {
        &self.names[q]
    }

    pub fn symbol_name(&self, a: Symbol) -> &str {
        &self.alphabet[a]
    }

    pub fn state_index(&self, name: &str) -> Option<State> {
        self.names.iter().position(|n| n == name)
    }

    pub fn symbol_index(&self, name: &str) -> Option<Symbol> {
        self.alphabet.iter().position(|n| n == name)
    }

    pub fn is_initial(&self, q: State) -> bool {
        self.initial.contains(q)
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting.contains(q)
    }

    pub fn initial_states(&self) -> impl Iterator<Item = State> + '_ {
        self.initial.ones()
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = State> + '_ {
        self.accepting.ones()
    }

    pub fn initial_set(&self) -> &FixedBitSet {
        &self.initial
    }

    pub fn accepting_set(&self) -> &FixedBitSet {
        &self.accepting
    }

    /// All transitions sorted by `(src, symbol, dst)`.
    pub fn transitions(&self) -> &[(State, Symbol, State)] {
        &self.transitions
    }

    pub fn n_transitions(&self) -> usize {
        self.transitions.len()
    }

    /// Sorted `a`-successors of `q`.
    pub fn successors(&self, q: State, a: Symbol) -> &[State] {
        &self.succ[q * self.n_symbols() + a]
    }

    /// Sorted `a`-predecessors of `q`.
    pub fn predecessors(&self, q: State, a: Symbol) -> &[State] {
        &self.pred[q * self.n_symbols() + a]
    }

    /// True if `q` has at least one outgoing transition.
    pub fn has_moves(&self, q: State) -> bool {
        (0..self.n_symbols()).any(|a| !self.successors(q, a).is_empty())
    }

    /// True if every state has a successor on every symbol.
    pub fn is_total(&self) -> bool {
        self.succ.iter().all(|v| !v.is_empty())
    }

    /// Flips every transition. Initial and accepting sets are unchanged.
    pub fn reverse(&self) -> Nba {
        Nba::with_names(
            self.names.clone(),
            self.alphabet.clone(),
            self.initial.ones(),
            self.accepting.ones(),
            self.transitions.iter().map(|&(p, a, q)| (q, a, p)),
        )
        .expect("reversal preserves validity")
    }

    /// Routes every missing `(state, symbol)` pair to a fresh rejecting
    /// sink. Total automata are returned unchanged.
    pub fn complete(&self) -> Nba {
        if self.is_total() {
            return self.clone();
        }
        let n = self.n_states();
        let k = self.n_symbols();
        let mut sink = "sink".to_string();
        while self.names.contains(&sink) {
            sink.push('_');
        }
        let mut names = self.names.clone();
        names.push(sink);
        let mut tr = self.transitions.clone();
        for q in 0..=n {
            for a in 0..k {
                if q == n || self.successors(q, a).is_empty() {
                    tr.push((q, a, n));
                }
            }
        }
        Nba::with_names(names, self.alphabet.clone(), self.initial.ones(), self.accepting.ones(), tr)
            .expect("completion preserves validity")
    }

    /// States reachable from some initial state.
    pub fn reachable(&self) -> FixedBitSet {
        let mut seen = self.initial.clone();
        let mut stack: Vec<State> = self.initial.ones().collect();
        let k = self.n_symbols();
        while let Some(p) = stack.pop() {
            for a in 0..k {
                for &q in self.successors(p, a) {
                    if !seen.put(q) {
                        stack.push(q);
                    }
                }
            }
        }
        seen
    }

    /// The sub-automaton induced by `keep`, renumbered in index order.
    pub fn restrict(&self, keep: &FixedBitSet) -> Nba {
        let mut map = vec![usize::MAX; self.n_states()];
        let mut names = Vec::new();
        for q in keep.ones().filter(|&q| q < self.n_states()) {
            map[q] = names.len();
            names.push(self.names[q].clone());
        }
        let tr = self
            .transitions
            .iter()
            .filter(|&&(p, _, q)| map[p] != usize::MAX && map[q] != usize::MAX)
            .map(|&(p, a, q)| (map[p], a, map[q]));
        Nba::with_names(
            names,
            self.alphabet.clone(),
            self.initial.ones().filter(|&q| map[q] != usize::MAX).map(|q| map[q]),
            self.accepting.ones().filter(|&q| map[q] != usize::MAX).map(|q| map[q]),
            tr,
        )
        .expect("restriction preserves validity")
    }

    /// Removes states not reachable from an initial state.
    pub fn trim_unreachable(&self) -> Nba {
        let r = self.reachable();
        if r.count_ones(..) == self.n_states() {
            return self.clone();
        }
        self.restrict(&r)
    }

    /// Same automaton with the states renumbered so that state `i` of the
    /// result is state `order[i]` of `self`.
    pub fn permute(&self, order: &[State]) -> Result<Nba> {
        let n = self.n_states();
        let mut inv = vec![usize::MAX; n];
        for (i, &q) in order.iter().enumerate() {
            if q >= n || inv[q] != usize::MAX {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            inv[q] = i;
        }
        if order.len() != n {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        Nba::with_names(
            order.iter().map(|&q| self.names[q].clone()).collect(),
            self.alphabet.clone(),
            self.initial.ones().map(|q| inv[q]),
            self.accepting.ones().map(|q| inv[q]),
            self.transitions.iter().map(|&(p, a, q)| (inv[p], a, inv[q])),
        )
    }

    /// True if both automata have the same named states, symbols, labels and
    /// transitions, regardless of index assignment.
    pub fn same_by_names(&self, other: &Nba) -> bool {
        if self.n_states() != other.n_states() || self.n_symbols() != other.n_symbols() {
            return false;
        }
        let order: Option<Vec<State>> = self.names.iter().map(|n| other.state_index(n)).collect();
        let Some(order) = order else { return false };
        let Ok(b) = other.permute(&order) else { return false };
        let sym: Option<Vec<Symbol>> = self.alphabet.iter().map(|s| b.symbol_index(s)).collect();
        let Some(sym) = sym else { return false };
        let mut tr: Vec<_> = b.transitions.iter().map(|&(p, a, q)| (p, a, q)).collect();
        let inv: HashMap<Symbol, Symbol> = sym.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        for t in &mut tr {
            t.1 = inv[&t.1];
        }
        tr.sort_unstable();
        self.initial == b.initial && self.accepting == b.accepting && self.transitions == tr
    }
}
