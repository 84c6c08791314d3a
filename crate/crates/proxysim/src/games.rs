//! Two-player games between Spoiler and Duplicator on a bipartite arena.
//!
//! Spoiler moves from positions in `P0` to Duplicator positions in `P1`,
//! Duplicator answers back into `P0`. A player without a move loses, so a
//! Spoiler dead end is won by Duplicator and a Duplicator dead end is won by
//! Spoiler. Duplicator's objectives are safety (stay in a set) and Büchi
//! (visit `target` infinitely often).

use fixedbitset::FixedBitSet;

/// A bipartite arena with dense position indices on both sides.
#[derive(Clone, Debug)]
pub struct GameGraph {
    moves0: Vec<Vec<u32>>,
    moves1: Vec<Vec<u32>>,
    target: FixedBitSet,
}

impl GameGraph {
    pub fn new(n0: usize, n1: usize) -> Self {
        GameGraph {
            moves0: vec![Vec::new(); n0],
            moves1: vec![Vec::new(); n1],
            target: FixedBitSet::with_capacity(n0),
        }
    }

    pub fn n0(&self) -> usize {
        self.moves0.len()
    }

    pub fn n1(&self) -> usize {
        self.moves1.len()
    }

    /// Adds a fresh Spoiler position and returns its index.
    pub fn add_spoiler(&mut self) -> usize {
        self.moves0.push(Vec::new());
        self.target.grow(self.moves0.len());
        self.moves0.len() - 1
    }

    /// Adds a fresh Duplicator position and returns its index.
    pub fn add_duplicator(&mut self) -> usize {
        self.moves1.push(Vec::new());
        self.moves1.len() - 1
    }

    /// Spoiler move `p → d`.
    pub fn add_move0(&mut self, p: usize, d: usize) {
        assert!(d < self.n1(), "Duplicator position out of range");
        self.moves0[p].push(d as u32);
    }

    /// Duplicator move `d → p`.
    pub fn add_move1(&mut self, d: usize, p: usize) {
        assert!(p < self.n0(), "Spoiler position out of range");
        self.moves1[d].push(p as u32);
    }

    pub fn set_target(&mut self, p: usize, on: bool) {
        self.target.set(p, on);
    }

    pub fn target(&self) -> &FixedBitSet {
        &self.target
    }

    pub fn moves0(&self, p: usize) -> &[u32] {
        &self.moves0[p]
    }

    pub fn moves1(&self, d: usize) -> &[u32] {
        &self.moves1[d]
    }

    fn normalized(&self) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
        let dedup = |m: &Vec<Vec<u32>>| {
            m.iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.sort_unstable();
                    v.dedup();
                    v
                })
                .collect::<Vec<_>>()
        };
        (dedup(&self.moves0), dedup(&self.moves1))
    }
}

/// Spoiler positions from which Duplicator forces the next Spoiler position
/// into `x`: `{p : ∀ p→d ∃ d→z, z ∈ x}`.
pub fn cpre(g: &GameGraph, x: &FixedBitSet) -> FixedBitSet {
    let good: Vec<bool> = (0..g.n1()).map(|d| g.moves1(d).iter().any(|&z| x.contains(z as usize))).collect();
    let mut out = FixedBitSet::with_capacity(g.n0());
    for p in 0..g.n0() {
        if g.moves0(p).iter().all(|&d| good[d as usize]) {
            out.insert(p);
        }
    }
    out
}

/// Incremental solver for `µY. seed ∪ CPre(Y)` (Duplicator's attractor).
struct Attractor {
    pred0: Vec<Vec<u32>>,
    pred1: Vec<Vec<u32>>,
    out_deg: Vec<u32>,
}

impl Attractor {
    fn new(g: &GameGraph) -> Self {
        let (m0, m1) = g.normalized();
        let mut pred0 = vec![Vec::new(); g.n1()];
        let mut pred1 = vec![Vec::new(); g.n0()];
        for (p, ds) in m0.iter().enumerate() {
            for &d in ds {
                pred0[d as usize].push(p as u32);
            }
        }
        for (d, ps) in m1.iter().enumerate() {
            for &p in ps {
                pred1[p as usize].push(d as u32);
            }
        }
        let out_deg = m0.iter().map(|v| v.len() as u32).collect();
        Attractor { pred0, pred1, out_deg }
    }

    fn run(&self, seed: &FixedBitSet) -> FixedBitSet {
        let n0 = self.out_deg.len();
        let mut inside = FixedBitSet::with_capacity(n0);
        let mut forced = vec![false; self.pred0.len()];
        let mut count = self.out_deg.clone();
        let mut stack = Vec::new();
        for p in 0..n0 {
            if seed.contains(p) || count[p] == 0 {
                inside.insert(p);
                stack.push(p);
            }
        }
        while let Some(z) = stack.pop() {
            for &d in &self.pred1[z] {
                let d = d as usize;
                if forced[d] {
                    continue;
                }
                forced[d] = true;
                for &p in &self.pred0[d] {
                    let p = p as usize;
                    count[p] -= 1;
                    if count[p] == 0 && !inside.put(p) {
                        stack.push(p);
                    }
                }
            }
        }
        inside
    }
}

/// Duplicator's winning region for "target infinitely often":
/// `νX. µY. (target ∩ CPre(X)) ∪ CPre(Y)`.
///
/// Spoiler dead ends are absorbing wins for Duplicator.
pub fn solve_buchi(g: &GameGraph) -> FixedBitSet {
    let attr = Attractor::new(g);
    let mut x = FixedBitSet::with_capacity(g.n0());
    x.insert_range(..);
    loop {
        let mut seed = cpre(g, &x);
        seed.intersect_with(g.target());
        let y = attr.run(&seed);
        if y == x {
            return x;
        }
        x = y;
    }
}

/// Duplicator's winning region for "stay in `safe` forever":
/// `νX. safe ∩ CPre(X)`.
pub fn solve_safety(g: &GameGraph, safe: &FixedBitSet) -> FixedBitSet {
    let mut x = safe.clone();
    x.grow(g.n0());
    loop {
        let mut y = cpre(g, &x);
        y.intersect_with(safe);
        if y == x {
            return x;
        }
        x = y;
    }
}
