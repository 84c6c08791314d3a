//! Inclusion by transition profiles. A profile of a finite word records, for
//! every pair of states, whether the word leads from one to the other and
//! whether it can do so through an accepting state. `L(a) ⊄ L(b)` iff some
//! profiles `s` (of `u`) and idempotent `e` (of `v`) with `s·e = s` let `a`
//! loop accepting on `v` after `u` while `b` cannot.

use std::collections::HashMap;

use crate::automata::{LassoWord, Nba, Symbol};
use crate::error::{Error, Result};

/// Reach rows then accepting-reach rows, for `a` and then `b`.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Profile(Vec<u64>);

struct Layout {
    na: usize,
    nb: usize,
}

impl Layout {
    /// (offset, size) of the two blocks.
    fn blocks(&self) -> [(usize, usize); 2] {
        [(0, self.na), (2 * self.na, self.nb)]
    }

    fn letter(&self, a: &Nba, b: &Nba, x: Symbol) -> Profile {
        let mut rows = vec![0u64; 2 * (self.na + self.nb)];
        for (aut, (off, n)) in [a, b].into_iter().zip(self.blocks()) {
            for p in 0..n {
                let mut r = 0u64;
                for &q in aut.successors(p, x) {
                    r |= 1 << q;
                }
                rows[off + p] = r;
                if aut.is_accepting(p) {
                    rows[off + n + p] = r;
                }
            }
        }
        Profile(rows)
    }

    fn compose(&self, g: &Profile, h: &Profile) -> Profile {
        let mut rows = vec![0u64; g.0.len()];
        for (off, n) in self.blocks() {
            for p in 0..n {
                let (mut r, mut acc) = (0u64, 0u64);
                let (gr, ga) = (g.0[off + p], g.0[off + n + p]);
                for m in 0..n {
                    if gr >> m & 1 == 1 {
                        r |= h.0[off + m];
                        acc |= h.0[off + n + m];
                        if ga >> m & 1 == 1 {
                            acc |= h.0[off + m];
                        }
                    }
                }
                rows[off + p] = r;
                rows[off + n + p] = acc;
            }
        }
        Profile(rows)
    }

    /// Whether `u·v^ω` is accepted by the block at `block`, given the
    /// profile `s` of `u` and the idempotent profile `e` of `v`.
    fn accepts(&self, aut: &Nba, block: usize, s: &Profile, e: &Profile) -> bool {
        let (off, n) = self.blocks()[block];
        aut.initial_states().any(|i| (0..n).any(|p| s.0[off + i] >> p & 1 == 1 && e.0[off + n + p] >> p & 1 == 1))
    }
}

/// Decides `L(a) ⊆ L(b)` over the profile semigroup, failing when it has
/// more than `cap` elements. Both automata must have at most 64 states.
pub fn profile_includes(a: &Nba, b: &Nba, cap: usize) -> Result<(bool, Option<LassoWord>)> {
    for n in [a.n_states(), b.n_states()] {
        if n > 64 {
            return Err(Error::TooLarge { what: "profile inclusion", states: n, limit: 64 });
        }
    }
    let lay = Layout { na: a.n_states(), nb: b.n_states() };
    let letters: Vec<Profile> = (0..a.n_symbols()).map(|x| lay.letter(a, b, x)).collect();
    let mut index: HashMap<Profile, usize> = HashMap::new();
    let mut profiles: Vec<Profile> = Vec::new();
    // representative word of each profile, as (parent, last letter)
    let mut parent: Vec<(Option<usize>, Symbol)> = Vec::new();
    for (x, g) in letters.iter().enumerate() {
        if !index.contains_key(g) {
            index.insert(g.clone(), profiles.len());
            profiles.push(g.clone());
            parent.push((None, x));
        }
    }
    let mut i = 0;
    while i < profiles.len() {
        for (x, l) in letters.iter().enumerate() {
            let h = lay.compose(&profiles[i], l);
            if !index.contains_key(&h) {
                if profiles.len() >= cap {
                    return Err(Error::CapExceeded { what: "profile semigroup", cap });
                }
                index.insert(h.clone(), profiles.len());
                profiles.push(h);
                parent.push((Some(i), x));
            }
        }
        i += 1;
    }
    let word = |mut j: usize| {
        let mut w = Vec::new();
        loop {
            let (p, x) = parent[j];
            w.push(x);
            match p {
                Some(p) => j = p,
                None => break,
            }
        }
        w.reverse();
        w
    };
    for e in profiles.iter().filter(|e| lay.compose(e, e) == **e) {
        for s in &profiles {
            if lay.accepts(a, 0, s, e) && !lay.accepts(b, 1, s, e) && lay.compose(s, e) == *s {
                let w = LassoWord::new(word(index[s]), word(index[e]))?;
                return Ok((false, Some(w)));
            }
        }
    }
    Ok((true, None))
}
