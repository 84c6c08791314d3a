//! Reduction of nondeterministic Büchi automata by quotienting with
//! simulation preorders, proxy simulations and fixed-word delayed simulation.
//!
//! The crate is organised bottom-up:
//!
//! - [`automata`]: the [`Nba`] type, relations on states, BA text I/O,
//!   quotients and fixtures.
//! - [`games`]: two-player game graphs with safety and Büchi solvers.
//! - [`simulations`]: direct, delayed and backward simulation, and
//!   delayed containment.
//! - [`transformers`]: the relation transformers that produce proxy
//!   simulations, and the appealing-fragment check.
//! - [`proxy`]: proxy simulations and the reduction pipeline.
//! - [`fixedword`]: fixed-word delayed simulation through an alternating
//!   product automaton, plus the multipebble lasso game.
//! - [`langops`]: ω-language operations used as an oracle.
//!
//! Pairwise computations run on rayon when the `parallel` feature is on;
//! see [`par::Exec`].

pub mod automata;
pub mod error;
pub mod fixedword;
pub mod games;
pub mod langops;
pub mod par;
pub mod proxy;
pub mod simulations;
pub mod transformers;

pub use automata::{LassoWord, Nba, QuotientMap, State, StateRelation, Symbol};
pub use error::{Error, Result};
pub use par::Exec;
