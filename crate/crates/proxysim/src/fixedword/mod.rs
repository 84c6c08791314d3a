//! Fixed-word delayed simulation: Spoiler announces the whole input word,
//! then both players move letter by letter.
//!
//! The relation is decided through the alternating product automaton
//! ([`product_aba`]), whose state `⟨q, s, 0⟩` accepts the words Duplicator
//! wins from `(q, s)`. The per-word k-pebble game and the collapse check
//! cross-validate it.

mod aba;
mod fx;
mod mh;
mod pebble;

pub use aba::{product_aba, product_state, Aba, PosFormula};
pub use fx::{
    collapse_check, collapse_check_with, collapse_sample, fx_delayed_sim, fx_pair, universal_by_fx, FxOptions,
    FxRelation, Verdict,
};
pub use mh::{mh_to_nba, MhState, MhView};
pub use pebble::{
    encoding_discrepancy, kpebble_delayed, lasso_bit_game, lasso_kpebble_delayed, lasso_kpebble_delayed_with, literal_condition,
    pebble_arena, Book, PebbleArena, PebblePosition, Round, WindowDiscipline, DEFAULT_PEBBLE_CAP,
};
