//! Automata, relations on their states, I/O and quotients.

mod fixtures;
mod io;
mod lasso;
mod nba;
mod quotient;
mod random;
mod relation;

pub use fixtures::{fig_1a, fig_2, fig_3, fig_7, fig_9};
pub use io::{parse_ba, write_ba, write_dot};
pub use lasso::LassoWord;
pub use nba::{Nba, State, Symbol};
pub use quotient::{induced_equivalence, quotient, QuotientMap};
pub use random::random_nba;
pub use relation::StateRelation;
