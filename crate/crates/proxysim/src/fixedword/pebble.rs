use std::collections::HashMap;
use std::hash::Hash;

use crate::automata::{LassoWord, Nba, State};
use crate::error::{Error, Result};
use crate::games::{solve_buchi, GameGraph};

/// Default bound on explored pebble-game positions.
pub const DEFAULT_PEBBLE_CAP: usize = 200_000;

/// How pending obligations are tracked in the k-pebble game.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WindowDiscipline {
    /// One owing set per pending obligation, kept as a chain ordered by age.
    /// Büchi target: the oldest obligation was just discharged, or none is
    /// pending.
    #[default]
    Exact,
    /// A single owing set plus a `pending` flag for accepting visits of
    /// Spoiler inside the active window. Target: `O = ∅` and not pending.
    Greedy,
}

/// Obligation bookkeeping carried by a Spoiler position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Book {
    Chain { chain: Vec<Vec<u32>>, flag: bool },
    Greedy { owing: Vec<u32>, pending: bool },
}

impl Book {
    fn initial(d: WindowDiscipline) -> Book {
        match d {
            WindowDiscipline::Exact => Book::Chain { chain: Vec::new(), flag: false },
            WindowDiscipline::Greedy => Book::Greedy { owing: Vec::new(), pending: false },
        }
    }

    pub fn is_target(&self) -> bool {
        match self {
            Book::Chain { flag, .. } => *flag,
            Book::Greedy { owing, pending } => owing.is_empty() && !pending,
        }
    }
}

/// A Spoiler position: Spoiler state, pebbles, bookkeeping, word position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PebblePosition {
    pub q: u32,
    pub pebbles: Vec<u32>,
    pub book: Book,
    pub idx: u32,
}

/// States of `next` not accepting and reachable from `prev` only through
/// members of `owing`.
fn propagate(a: &Nba, x: usize, prev: &[u32], owing: impl Fn(u32) -> bool, next: &[u32]) -> Vec<u32> {
    next.iter()
        .copied()
        .filter(|&s2| {
            !a.is_accepting(s2 as usize)
                && prev.iter().all(|&s| owing(s) || !a.successors(s as usize, x).contains(&(s2 as usize)))
        })
        .collect()
}

/// Bookkeeping after a round where Spoiler sat at `q`, pebbles moved from
/// `prev` to `next` reading `x`.
pub(crate) fn update_book(a: &Nba, q: State, x: usize, prev: &[u32], book: &Book, next: &[u32]) -> Book {
    let q_acc = a.is_accepting(q);
    match book {
        Book::Chain { chain, .. } => {
            let mut c = chain.clone();
            if q_acc {
                let fresh: Vec<u32> = prev.iter().copied().filter(|&s| !a.is_accepting(s as usize)).collect();
                if !fresh.is_empty() && c.last() != Some(&fresh) {
                    c.push(fresh);
                }
            }
            let mut out: Vec<Vec<u32>> = Vec::with_capacity(c.len());
            let mut first_discharged = false;
            for (i, o) in c.iter().enumerate() {
                let o2 = propagate(a, x, prev, |s| o.binary_search(&s).is_ok(), next);
                if o2.is_empty() {
                    first_discharged |= i == 0;
                } else if out.last() != Some(&o2) {
                    out.push(o2);
                }
            }
            let flag = out.is_empty() || first_discharged;
            Book::Chain { chain: out, flag }
        }
        Book::Greedy { owing, pending } => {
            if !owing.is_empty() {
                let o2 = propagate(a, x, prev, |s| owing.binary_search(&s).is_ok(), next);
                Book::Greedy { owing: o2, pending: *pending || q_acc }
            } else if q_acc || *pending {
                let o2 = propagate(a, x, prev, |s| !a.is_accepting(s as usize), next);
                Book::Greedy { owing: o2, pending: false }
            } else {
                Book::Greedy { owing: Vec::new(), pending: false }
            }
        }
    }
}

/// Nonempty subsets of `from` with at most `k` elements.
fn small_subsets(from: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(from: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..from.len() {
            cur.push(from[i]);
            go(from, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(from, k, 0, &mut cur, &mut out);
    out
}

fn post(a: &Nba, s: &[u32], x: usize) -> Vec<u32> {
    let mut v: Vec<u32> = s.iter().flat_map(|&p| a.successors(p as usize, x).iter().map(|&r| r as u32)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn check_args(a: &Nba, q: State, s: State, k: usize, w: &LassoWord) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("at least one pebble is needed".into()));
    }
    if q >= a.n_states() || s >= a.n_states() {
        return Err(Error::InvalidArgument("state out of range".into()));
    }
    w.check_alphabet(a.n_symbols())
}

struct Indexer<K> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
    cap: usize,
}

impl<K: Clone + Eq + Hash> Indexer<K> {
    fn new(cap: usize) -> Self {
        Indexer { index: HashMap::new(), keys: Vec::new(), cap }
    }

    fn get(&mut self, key: K) -> Result<(usize, bool)> {
        if let Some(&i) = self.index.get(&key) {
            return Ok((i, false));
        }
        if self.keys.len() >= self.cap {
            return Err(Error::CapExceeded { what: "pebble game", cap: self.cap });
        }
        self.index.insert(key.clone(), self.keys.len());
        self.keys.push(key);
        Ok((self.keys.len() - 1, true))
    }
}

/// The explored arena of a k-pebble w-delayed game.
pub struct PebbleArena {
    pub positions: Vec<PebblePosition>,
    pub game: GameGraph,
    /// Duplicator position → (Spoiler source, symbol, Spoiler target state).
    pub dup_info: Vec<(usize, usize, u32)>,
}

/// Builds the reachable part of the game from `(q, {s})` at word position 0.
pub fn pebble_arena(
    a: &Nba,
    q: State,
    s: State,
    k: usize,
    w: &LassoWord,
    discipline: WindowDiscipline,
    cap: usize,
) -> Result<PebbleArena> {
    check_args(a, q, s, k, w)?;
    build_arena(a, q, s, k, Some(w), discipline, cap)
}

/// With `w = None` Spoiler picks every letter as the game goes.
fn build_arena(
    a: &Nba,
    q: State,
    s: State,
    k: usize,
    w: Option<&LassoWord>,
    discipline: WindowDiscipline,
    cap: usize,
) -> Result<PebbleArena> {
    let mut idx: Indexer<PebblePosition> = Indexer::new(cap);
    let mut game = GameGraph::new(0, 0);
    let mut dup_info = Vec::new();
    let start = PebblePosition { q: q as u32, pebbles: vec![s as u32], book: Book::initial(discipline), idx: 0 };
    idx.get(start)?;
    game.add_spoiler();
    let all: Vec<usize> = (0..a.n_symbols()).collect();
    let mut i = 0;
    while i < idx.keys.len() {
        let p = idx.keys[i].clone();
        game.set_target(i, p.book.is_target());
        let (letters, nidx) = match w {
            Some(w) => (std::slice::from_ref(&w.symbol_at(p.idx as usize)).to_vec(), w.next_position(p.idx as usize) as u32),
            None => (all.clone(), 0),
        };
        for x in letters {
            let targets = post(a, &p.pebbles, x);
            let choices = small_subsets(&targets, k);
            for &q2 in a.successors(p.q as usize, x) {
                let d = game.add_duplicator();
                dup_info.push((i, x, q2 as u32));
                game.add_move0(i, d);
                for s2 in &choices {
                    let book = update_book(a, p.q as usize, x, &p.pebbles, &p.book, s2);
                    let key = PebblePosition { q: q2 as u32, pebbles: s2.clone(), book, idx: nidx };
                    let (j, fresh) = idx.get(key)?;
                    if fresh {
                        game.add_spoiler();
                    }
                    game.add_move1(d, j);
                }
            }
        }
        i += 1;
    }
    Ok(PebbleArena { positions: idx.keys, game, dup_info })
}

/// Letter-by-letter k-pebble delayed simulation: Spoiler picks each letter
/// as it moves. Contained in the fixed-word relation for every `k`.
pub fn kpebble_delayed(a: &Nba, q: State, s: State, k: usize, cap: usize) -> Result<bool> {
    if k == 0 || q >= a.n_states() || s >= a.n_states() {
        return Err(Error::InvalidArgument("need k ≥ 1 and states in range".into()));
    }
    let arena = build_arena(a, q, s, k, None, WindowDiscipline::Exact, cap)?;
    Ok(solve_buchi(&arena.game).contains(0))
}

/// Whether Duplicator wins the k-pebble w-delayed game from `(q, {s})`.
pub fn lasso_kpebble_delayed(a: &Nba, q: State, s: State, k: usize, w: &LassoWord) -> Result<bool> {
    lasso_kpebble_delayed_with(a, q, s, k, w, WindowDiscipline::Exact, DEFAULT_PEBBLE_CAP)
}

pub fn lasso_kpebble_delayed_with(
    a: &Nba,
    q: State,
    s: State,
    k: usize,
    w: &LassoWord,
    discipline: WindowDiscipline,
    cap: usize,
) -> Result<bool> {
    let arena = pebble_arena(a, q, s, k, w, discipline, cap)?;
    Ok(solve_buchi(&arena.game).contains(0))
}

/// The single-pebble w-game with one obligation bit: Spoiler's accepting
/// visit sets the bit, Duplicator's clears it.
pub fn lasso_bit_game(a: &Nba, q: State, s: State, w: &LassoWord) -> Result<bool> {
    check_args(a, q, s, 1, w)?;
    let (n, m) = (a.n_states(), w.positions());
    let sp = |q: usize, s: usize, b: bool, i: usize| ((i * n + q) * n + s) * 2 + usize::from(b);
    let n0 = m * n * n * 2;
    let mut game = GameGraph::new(n0, 0);
    for i in 0..m {
        let x = w.symbol_at(i);
        let i2 = w.next_position(i);
        for q1 in 0..n {
            for s1 in 0..n {
                for b in [false, true] {
                    let p = sp(q1, s1, b, i);
                    game.set_target(p, !b);
                    let bh = b || a.is_accepting(q1);
                    let b2 = bh && !a.is_accepting(s1);
                    for &q2 in a.successors(q1, x) {
                        let d = game.add_duplicator();
                        game.add_move0(p, d);
                        for &s2 in a.successors(s1, x) {
                            game.add_move1(d, sp(q2, s2, b2, i2));
                        }
                    }
                }
            }
        }
    }
    Ok(solve_buchi(&game).contains(sp(q, s, false, 0)))
}

/// One round of a concrete play: Spoiler state, pebbles, symbol read.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Round {
    pub q: u32,
    pub pebbles: Vec<u32>,
    pub symbol: usize,
}

/// Checks the winning condition literally on the eventually periodic play
/// `rounds[..loop_start] (rounds[loop_start..])^ω`: every accepting visit of
/// Spoiler must be followed by a round where all pebbles have been accepting
/// since that visit. Each obligation's owing set evolves deterministically
/// along the play, so it is followed until it empties or repeats.
pub fn literal_condition(a: &Nba, rounds: &[Round], loop_start: usize) -> bool {
    let len = rounds.len();
    let next = |j: usize| if j + 1 < len { j + 1 } else { loop_start };
    (0..len).filter(|&i| a.is_accepting(rounds[i].q as usize)).all(|i| {
        let mut owing: Vec<u32> =
            rounds[i].pebbles.iter().copied().filter(|&s| !a.is_accepting(s as usize)).collect();
        let mut j = i;
        let mut seen = std::collections::HashSet::new();
        while !owing.is_empty() {
            if !seen.insert((j, owing.clone())) {
                return false;
            }
            let j2 = next(j);
            owing = propagate(a, rounds[j].symbol, &rounds[j].pebbles, |s| owing.binary_search(&s).is_ok(), &rounds[j2].pebbles);
            j = j2;
        }
        true
    })
}

/// Plays both players by a memoryless choice function drawn from `seed`
/// over arena positions and reports whether the encoding's Büchi verdict
/// on the resulting play disagrees with [`literal_condition`].
/// Returns `None` if the play ends in a dead end.
pub fn encoding_discrepancy(arena: &PebbleArena, a: &Nba, w: &LassoWord, seed: u64) -> Option<bool> {
    use std::hash::{DefaultHasher, Hasher};
    let pick = |key: &(u32, &[u32], u32), n: usize| {
        let mut h = DefaultHasher::new();
        seed.hash(&mut h);
        key.hash(&mut h);
        (h.finish() % n as u64) as usize
    };
    let g = &arena.game;
    // the play is determined by the choice function on (q, pebbles, idx),
    // so it cycles once a full position repeats
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut trace: Vec<usize> = Vec::new();
    let mut p = 0;
    loop {
        if let Some(&at) = seen.get(&p) {
            let rounds: Vec<Round> = trace
                .iter()
                .map(|&t| {
                    let pos = &arena.positions[t];
                    Round { q: pos.q, pebbles: pos.pebbles.clone(), symbol: w.symbol_at(pos.idx as usize) }
                })
                .collect();
            let encoded = trace[at..].iter().any(|&t| g.target().contains(t));
            return Some(encoded != literal_condition(a, &rounds, at));
        }
        seen.insert(p, trace.len());
        trace.push(p);
        let pos = &arena.positions[p];
        let key = (pos.q, pos.pebbles.as_slice(), pos.idx);
        let m0 = g.moves0(p);
        if m0.is_empty() {
            return None;
        }
        let d = m0[pick(&key, m0.len())] as usize;
        let m1 = g.moves1(d);
        if m1.is_empty() {
            return None;
        }
        let q2 = arena.dup_info[d].2;
        p = m1[pick(&(q2, pos.pebbles.as_slice(), pos.idx + 1000), m1.len())] as usize;
    }
}
