use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::Nba;

/// A seeded random automaton over the symbols `a, b, c, …`.
///
/// Each of the `n²·|Σ|` possible transitions is present with probability
/// `transition_density`, each state is accepting with probability
/// `final_density`, and each state is initial with probability 0.3. State 0
/// is made initial if no other state was drawn.
///
/// # Panics
/// If `n_states` or `n_symbols` is zero, or `n_symbols > 26`.
pub fn random_nba(n_states: usize, n_symbols: usize, transition_density: f64, final_density: f64, seed: u64) -> Nba {
    assert!(n_states >= 1 && (1..=26).contains(&n_symbols));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = (0..n_symbols).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut initial: Vec<usize> = (0..n_states).filter(|_| rng.gen_bool(0.3)).collect();
    if initial.is_empty() {
        initial.push(0);
    }
    let accepting: Vec<usize> = (0..n_states).filter(|_| rng.gen::<f64>() < final_density).collect();
    let mut tr = Vec::new();
    for p in 0..n_states {
        for a in 0..n_symbols {
            for q in 0..n_states {
                if rng.gen::<f64>() < transition_density {
                    tr.push((p, a, q));
                }
            }
        }
    }
    Nba::new(n_states, alphabet, initial, accepting, tr).expect("generated automaton is valid")
}
