use std::fmt;

use crate::automata::{Nba, Symbol};
use crate::error::{Error, Result};

/// An ultimately periodic word `prefix · period^ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LassoWord {
    prefix: Vec<Symbol>,
    period: Vec<Symbol>,
}

impl LassoWord {
    pub fn new(prefix: Vec<Symbol>, period: Vec<Symbol>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("lasso period must be nonempty".into()));
        }
        Ok(LassoWord { prefix, period })
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    /// Number of distinct positions: `|prefix| + |period|`.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// Symbol read at lasso position `i < positions()`.
    pub fn symbol_at(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[i - self.prefix.len()]
        }
    }

    /// Position following `i`, wrapping from the end of the period.
    pub fn next_position(&self, i: usize) -> usize {
        if i + 1 == self.positions() {
            self.prefix.len()
        } else {
            i + 1
        }
    }

    /// Largest symbol index used plus one (0 for none).
    pub fn symbol_bound(&self) -> usize {
        self.prefix.iter().chain(&self.period).map(|&s| s + 1).max().unwrap_or(0)
    }

    pub fn check_alphabet(&self, n_symbols: usize) -> Result<()> {
        if self.symbol_bound() > n_symbols {
            return Err(Error::InvalidArgument("lasso uses a symbol outside the alphabet".into()));
        }
        Ok(())
    }

    /// Every lasso with `|prefix| ≤ max_prefix` and `1 ≤ |period| ≤ max_period`
    /// over `n_symbols` letters.
    pub fn enumerate(n_symbols: usize, max_prefix: usize, max_period: usize) -> Vec<LassoWord> {
        let words = |max_len: usize, min_len: usize| {
            let mut out = Vec::new();
            let mut layer = vec![Vec::new()];
            for len in 0..=max_len {
                if len >= min_len {
                    out.extend(layer.iter().cloned());
                }
                layer = layer
                    .iter()
                    .flat_map(|w: &Vec<Symbol>| {
                        (0..n_symbols).map(move |a| {
                            let mut v = w.clone();
                            v.push(a);
                            v
                        })
                    })
                    .collect();
            }
            out
        };
        let prefixes = words(max_prefix, 0);
        let periods = words(max_period, 1);
        prefixes
            .iter()
            .flat_map(|u| periods.iter().map(move |v| LassoWord { prefix: u.clone(), period: v.clone() }))
            .collect()
    }

    /// Renders the word with the automaton's symbol names.
    pub fn display<'a>(&'a self, a: &'a Nba) -> impl fmt::Display + 'a {
        DisplayLasso { w: self, names: a.alphabet() }
    }

    /// Renders one part as space-free text: symbol names joined by `.`.
    pub fn render_part(part: &[Symbol], names: &[String]) -> String {
        part.iter().map(|&s| names[s].as_str()).collect::<Vec<_>>().join(".")
    }
}

struct DisplayLasso<'a> {
    w: &'a LassoWord,
    names: &'a [String],
}

impl fmt::Display for DisplayLasso<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u={} v={}",
            LassoWord::render_part(&self.w.prefix, self.names),
            LassoWord::render_part(&self.w.period, self.names)
        )
    }
}
