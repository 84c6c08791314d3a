#![allow(dead_code)]

use proptest::prelude::*;
use proxysim::automata::random_nba;
use proxysim::{Nba, StateRelation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` automata over two letters with 1..=max_states states and
/// transition density spread over 0.3..=0.8.
pub fn corpus(count: usize, max_states: usize, base: u64) -> Vec<Nba> {
    (0..count)
        .map(|i| {
            let seed = base + i as u64;
            let n = 1 + i % max_states;
            let density = 0.3 + 0.05 * ((seed * 7) % 11) as f64;
            random_nba(n, 2, density, 0.4, seed)
        })
        .collect()
}

/// Reflexive-transitive closure of a random relation on `n` states.
pub fn random_preorder(n: usize, density: f64, seed: u64) -> StateRelation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    StateRelation::from_fn(n, |_, _| rng.gen::<f64>() < density).reflexive_transitive_closure()
}

/// Random automata with up to `max_states` states over two letters.
pub fn arb_nba(max_states: usize) -> impl Strategy<Value = Nba> {
    (1..=max_states, 0.2f64..0.8, 0.0f64..0.8, any::<u64>())
        .prop_map(|(n, d, f, seed)| random_nba(n, 2, d, f, seed))
}

/// An automaton with a preorder on its states.
pub fn arb_nba_preorder(max_states: usize) -> impl Strategy<Value = (Nba, StateRelation)> {
    (arb_nba(max_states), 0.0f64..0.5, any::<u64>()).prop_map(|(a, d, seed)| {
        let r = random_preorder(a.n_states(), d, seed);
        (a, r)
    })
}
