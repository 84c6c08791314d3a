use std::collections::{HashMap, VecDeque};

use crate::automata::{LassoWord, Symbol};
use crate::error::{Error, Result};
use crate::langops::OmegaAutomaton;

/// The reachable part of an on-the-fly automaton, in breadth-first order.
#[derive(Clone, Debug)]
pub struct Explored<S> {
    pub states: Vec<S>,
    pub initial: Vec<usize>,
    pub edges: Vec<Vec<(Symbol, usize)>>,
    pub accepting: Vec<bool>,
}

/// Breadth-first exploration, failing once more than `cap` states are found.
pub fn explore<A: OmegaAutomaton>(a: &A, cap: usize, what: &'static str) -> Result<Explored<A::State>> {
    let mut index: HashMap<A::State, usize> = HashMap::new();
    let mut g = Explored { states: Vec::new(), initial: Vec::new(), edges: Vec::new(), accepting: Vec::new() };
    let mut queue = VecDeque::new();
    let mut add = |s: A::State, g: &mut Explored<A::State>, queue: &mut VecDeque<usize>| -> Result<usize> {
        if let Some(&i) = index.get(&s) {
            return Ok(i);
        }
        if g.states.len() >= cap {
            return Err(Error::CapExceeded { what, cap });
        }
        let i = g.states.len();
        g.accepting.push(a.is_accepting(&s));
        g.states.push(s.clone());
        g.edges.push(Vec::new());
        index.insert(s, i);
        queue.push_back(i);
        Ok(i)
    };
    for s in a.initial_states() {
        let i = add(s, &mut g, &mut queue)?;
        if !g.initial.contains(&i) {
            g.initial.push(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        for x in 0..a.n_symbols() {
            let succ = a.successors(&g.states[i], x);
            for t in succ {
                let j = add(t, &mut g, &mut queue)?;
                g.edges[i].push((x, j));
            }
        }
    }
    Ok(g)
}

impl<S> Explored<S> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Strongly connected component id per node (Tarjan, iterative).
    pub fn scc(&self) -> Vec<usize> {
        let n = self.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut next = 0;
        let mut n_comp = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(top) = call.last_mut() {
                let v = top.0;
                if top.1 < self.edges[v].len() {
                    let w = self.edges[v][top.1].1;
                    top.1 += 1;
                    if index[w] == usize::MAX {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(u, _)) = call.last() {
                        low[u] = low[u].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp[w] = n_comp;
                            if w == v {
                                break;
                            }
                        }
                        n_comp += 1;
                    }
                }
            }
        }
        comp
    }

    /// Nodes lying on some cycle through an accepting node: the accepting
    /// node's component is nontrivial.
    fn accepting_cycle_nodes(&self, comp: &[usize]) -> Vec<bool> {
        let n = self.len();
        let mut size = vec![0usize; n];
        for &c in comp {
            size[c] += 1;
        }
        let mut self_loop = vec![false; n];
        for v in 0..n {
            if self.edges[v].iter().any(|&(_, w)| w == v) {
                self_loop[v] = true;
            }
        }
        (0..n).map(|v| self.accepting[v] && (size[comp[v]] > 1 || self_loop[v])).collect()
    }

    /// Nodes from which an accepting cycle is reachable.
    pub fn live(&self) -> Vec<bool> {
        let comp = self.scc();
        let mut live = self.accepting_cycle_nodes(&comp);
        let n = self.len();
        let mut rev = vec![Vec::new(); n];
        for v in 0..n {
            for &(_, w) in &self.edges[v] {
                rev[w].push(v);
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| live[v]).collect();
        while let Some(w) = stack.pop() {
            for &v in &rev[w] {
                if !live[v] {
                    live[v] = true;
                    stack.push(v);
                }
            }
        }
        live
    }

    /// A shortest-prefix accepted lasso, if any: a path from an initial node
    /// to an accepting node on a cycle, then the cycle.
    pub fn accepting_lasso(&self) -> Option<LassoWord> {
        let comp = self.scc();
        let good = self.accepting_cycle_nodes(&comp);
        // BFS from the initial nodes; nodes are already in BFS order, but
        // recompute parents to get paths.
        let n = self.len();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &i in &self.initial {
            seen[i] = true;
            queue.push_back(i);
        }
        let mut target = None;
        while let Some(v) = queue.pop_front() {
            if good[v] {
                target = Some(v);
                break;
            }
            for &(x, w) in &self.edges[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, x));
                    queue.push_back(w);
                }
            }
        }
        let f = target?;
        let mut prefix = Vec::new();
        let mut v = f;
        while let Some((p, x)) = parent[v] {
            prefix.push(x);
            v = p;
        }
        prefix.reverse();
        // shortest cycle from f back to f inside its component
        let mut cpar: Vec<Option<(usize, Symbol)>> = vec![None; n];
        let mut queue = VecDeque::new();
        let mut cseen = vec![false; n];
        queue.push_back(f);
        let mut closing = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &(x, w) in &self.edges[v] {
                if w == f {
                    closing = Some((v, x));
                    break 'bfs;
                }
                if comp[w] == comp[f] && !cseen[w] {
                    cseen[w] = true;
                    cpar[w] = Some((v, x));
                    queue.push_back(w);
                }
            }
        }
        let (mut v, x) = closing.expect("accepting node lies on a cycle");
        let mut period = vec![x];
        while v != f {
            let (p, y) = cpar[v].expect("cycle path");
            period.push(y);
            v = p;
        }
        period.reverse();
        Some(LassoWord::new(prefix, period).expect("nonempty period"))
    }
}
