use crate::automata::{Nba, State, Symbol};
use crate::error::{Error, Result};
use crate::langops::DualTable;

/// A positive Boolean formula over automaton states.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PosFormula {
    True,
    False,
    Var(usize),
    And(Vec<PosFormula>),
    Or(Vec<PosFormula>),
}

/// Keeps the ⊆-minimal sorted sets.
pub(crate) fn minimal_sets(mut sets: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    for s in &mut sets {
        s.sort_unstable();
        s.dedup();
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.iter().all(|x| s.binary_search(x).is_ok())) {
            out.push(s);
        }
    }
    out
}

impl PosFormula {
    /// Conjunction with constant folding.
    pub fn and(parts: Vec<PosFormula>) -> PosFormula {
        let mut keep = Vec::new();
        for p in parts {
            match p {
                PosFormula::True => {}
                PosFormula::False => return PosFormula::False,
                p => keep.push(p),
            }
        }
        match keep.len() {
            0 => PosFormula::True,
            1 => keep.pop().expect("one part"),
            _ => PosFormula::And(keep),
        }
    }

    /// Disjunction with constant folding.
    pub fn or(parts: Vec<PosFormula>) -> PosFormula {
        let mut keep = Vec::new();
        for p in parts {
            match p {
                PosFormula::False => {}
                PosFormula::True => return PosFormula::True,
                p => keep.push(p),
            }
        }
        match keep.len() {
            0 => PosFormula::False,
            1 => keep.pop().expect("one part"),
            _ => PosFormula::Or(keep),
        }
    }

    pub fn eval(&self, v: &impl Fn(usize) -> bool) -> bool {
        match self {
            PosFormula::True => true,
            PosFormula::False => false,
            PosFormula::Var(x) => v(*x),
            PosFormula::And(ps) => ps.iter().all(|p| p.eval(v)),
            PosFormula::Or(ps) => ps.iter().any(|p| p.eval(v)),
        }
    }

    /// Swaps conjunction with disjunction and `true` with `false`.
    pub fn dual(&self) -> PosFormula {
        match self {
            PosFormula::True => PosFormula::False,
            PosFormula::False => PosFormula::True,
            PosFormula::Var(x) => PosFormula::Var(*x),
            PosFormula::And(ps) => PosFormula::Or(ps.iter().map(PosFormula::dual).collect()),
            PosFormula::Or(ps) => PosFormula::And(ps.iter().map(PosFormula::dual).collect()),
        }
    }

    /// The ⊆-minimal sets of variables whose truth satisfies the formula.
    /// `True` has the single model `∅`; `False` has none.
    pub fn minimal_models(&self) -> Vec<Vec<u32>> {
        match self {
            PosFormula::True => vec![Vec::new()],
            PosFormula::False => Vec::new(),
            PosFormula::Var(x) => vec![vec![*x as u32]],
            PosFormula::Or(ps) => minimal_sets(ps.iter().flat_map(|p| p.minimal_models()).collect()),
            PosFormula::And(ps) => {
                let mut acc = vec![Vec::new()];
                for p in ps {
                    let ms = p.minimal_models();
                    let mut next = Vec::new();
                    for a in &acc {
                        for m in &ms {
                            let mut u: Vec<u32> = a.clone();
                            u.extend_from_slice(m);
                            next.push(u);
                        }
                    }
                    acc = minimal_sets(next);
                }
                acc
            }
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            PosFormula::True | PosFormula::False => None,
            PosFormula::Var(x) => Some(*x),
            PosFormula::And(ps) | PosFormula::Or(ps) => ps.iter().filter_map(PosFormula::max_var).max(),
        }
    }
}

/// An alternating Büchi automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aba {
    names: Vec<String>,
    alphabet: Vec<String>,
    delta: Vec<PosFormula>,
    accepting: Vec<bool>,
}

impl Aba {
    /// `delta` is indexed by `state * |alphabet| + symbol`.
    pub fn new(names: Vec<String>, alphabet: Vec<String>, delta: Vec<PosFormula>, accepting: Vec<bool>) -> Result<Aba> {
        let n = names.len();
        if accepting.len() != n || delta.len() != n * alphabet.len() {
            return Err(Error::InvalidAutomaton("alternating automaton dimensions disagree".into()));
        }
        if delta.iter().filter_map(PosFormula::max_var).any(|x| x >= n) {
            return Err(Error::InvalidAutomaton("formula refers to an unknown state".into()));
        }
        Ok(Aba { names, alphabet, delta, accepting })
    }

    /// The NBA read as an alternating automaton with disjunctive transitions.
    pub fn from_nba(a: &Nba) -> Aba {
        let delta = (0..a.n_states())
            .flat_map(|q| {
                (0..a.n_symbols())
                    .map(move |x| PosFormula::or(a.successors(q, x).iter().map(|&r| PosFormula::Var(r)).collect()))
            })
            .collect();
        Aba {
            names: a.names().to_vec(),
            alphabet: a.alphabet().to_vec(),
            delta,
            accepting: (0..a.n_states()).map(|q| a.is_accepting(q)).collect(),
        }
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

    pub fn state_name(&self, q: usize) -> &str {
        &self.names[q]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn delta(&self, q: usize, a: Symbol) -> &PosFormula {
        &self.delta[q * self.n_symbols() + a]
    }

    /// Minimal models of every transition formula, indexed like `delta`.
    pub fn model_table(&self) -> Vec<Vec<Vec<u32>>> {
        self.delta.iter().map(PosFormula::minimal_models).collect()
    }

    /// Minimal models of the dual formulas, for complementation.
    pub fn dual_table(&self) -> DualTable {
        DualTable::new(
            self.n_symbols(),
            self.accepting.clone(),
            self.delta.iter().map(|f| f.dual().minimal_models()).collect(),
        )
    }
}

/// Index of `⟨q, s, b⟩` in [`product_aba`].
pub fn product_state(n: usize, q: State, s: State, b: bool) -> usize {
    (q * n + s) * 2 + usize::from(b)
}

/// The alternating automaton over `Q × Q × {0,1}` whose state `⟨q, s, 0⟩`
/// accepts exactly the words on which Duplicator wins the delayed
/// simulation game from `(q, s)` knowing the whole word:
/// `δ(⟨q,s,b⟩, a) = ⋀_{q→a q'} ⋁_{s→a s'} ⟨q', s', b'⟩` where `b'` is 0 if
/// `s ∈ F`, 1 if `q ∈ F`, and `b` otherwise. Accepting states have `b = 0`.
pub fn product_aba(a: &Nba) -> Aba {
    let (n, k) = (a.n_states(), a.n_symbols());
    let mut names = vec![String::new(); 2 * n * n];
    let mut delta = vec![PosFormula::True; 2 * n * n * k];
    let mut accepting = vec![false; 2 * n * n];
    for q in 0..n {
        for s in 0..n {
            for b in [false, true] {
                let i = product_state(n, q, s, b);
                names[i] = format!("{}.{}.{}", a.state_name(q), a.state_name(s), u8::from(b));
                accepting[i] = !b;
                let b2 = if a.is_accepting(s) {
                    false
                } else {
                    a.is_accepting(q) || b
                };
                for x in 0..k {
                    delta[i * k + x] = PosFormula::and(
                        a.successors(q, x)
                            .iter()
                            .map(|&q2| {
                                PosFormula::or(
                                    a.successors(s, x)
                                        .iter()
                                        .map(|&s2| PosFormula::Var(product_state(n, q2, s2, b2)))
                                        .collect(),
                                )
                            })
                            .collect(),
                    );
                }
            }
        }
    }
    Aba { names, alphabet: a.alphabet().to_vec(), delta, accepting }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fig_7;

    #[test]
    fn models_and_duals() {
        use PosFormula::*;
        let f = PosFormula::and(vec![PosFormula::or(vec![Var(0), Var(1)]), Var(2)]);
        assert_eq!(f.minimal_models(), vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(f.dual().minimal_models(), vec![vec![2], vec![0, 1]]);
        assert_eq!(True.minimal_models(), vec![Vec::<u32>::new()]);
        assert!(False.minimal_models().is_empty());
        assert_eq!(PosFormula::and(vec![]), True);
        assert_eq!(PosFormula::or(vec![]), False);
        assert!(f.eval(&|x| x != 0));
        assert!(!f.eval(&|x| x == 0));
    }

    #[test]
    fn single_loop_product() {
        let a = Nba::new(1, vec!["a".into()], [0], [0], [(0, 0, 0)]).unwrap();
        let p = product_aba(&a);
        assert_eq!(p.delta(0, 0), &PosFormula::Var(0));
        assert!(p.is_accepting(0) && !p.is_accepting(1));
    }

    #[test]
    fn dead_ends_give_constants() {
        // q1 has no successors: δ(⟨q1,·,·⟩) is true; δ(⟨q0,q1,·⟩) is false
        let a = Nba::new(2, vec!["a".into()], [0], [], [(0, 0, 0)]).unwrap();
        let p = product_aba(&a);
        assert_eq!(p.delta(product_state(2, 1, 0, false), 0), &PosFormula::True);
        assert_eq!(p.delta(product_state(2, 0, 1, false), 0), &PosFormula::False);
        let f7 = product_aba(&fig_7());
        assert_eq!(f7.n_states(), 32);
    }
}
