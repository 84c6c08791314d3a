//! The BA text format and DOT export.
//!
//! ```text
//! [0]            <- initial states, one per line
//! a,[0]->[1]     <- transitions `symbol,src->dst`
//! b,[1]->[1]
//! [1]            <- accepting states
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::automata::Nba;
use crate::error::{Error, Result};

enum Line<'a> {
    Name(&'a str),
    Transition(&'a str, &'a str, &'a str),
}

fn classify(line: &str, no: usize) -> Result<Line<'_>> {
    let err = |msg: &str| Error::Parse { line: no, msg: msg.to_string() };
    if !line.contains("->") {
        if line.contains(',') {
            return Err(err("state name may not contain ','"));
        }
        return Ok(Line::Name(line));
    }
    let (sym, rest) = line.split_once(',').ok_or_else(|| err("transition is missing ','"))?;
    let (src, dst) = rest.split_once("->").ok_or_else(|| err("transition is missing '->'"))?;
    let (sym, src, dst) = (sym.trim(), src.trim(), dst.trim());
    if sym.is_empty() || src.is_empty() || dst.is_empty() {
        return Err(err("empty symbol or state name"));
    }
    if dst.contains("->") || dst.contains(',') || src.contains(',') {
        return Err(err("malformed transition"));
    }
    Ok(Line::Transition(sym, src, dst))
}

/// Parses the BA format. States and symbols are numbered in order of first
/// appearance. Without any transition line the first name is read as the
/// initial state and the remaining names as accepting states.
pub fn parse_ba(text: &str) -> Result<Nba> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim();
        if !l.is_empty() {
            lines.push((i + 1, classify(l, i + 1)?));
        }
    }
    if lines.is_empty() {
        return Err(Error::EmptyInput);
    }
    let first_t = lines.iter().position(|(_, l)| matches!(l, Line::Transition(..)));
    let last_t = lines.iter().rposition(|(_, l)| matches!(l, Line::Transition(..)));
    let (init_end, acc_start) = match (first_t, last_t) {
        (Some(f), Some(l)) => (f, l + 1),
        _ => (1, 1),
    };

    let mut names: Vec<String> = Vec::new();
    let mut state_ix: HashMap<String, usize> = HashMap::new();
    let mut alphabet: Vec<String> = Vec::new();
    let mut sym_ix: HashMap<String, usize> = HashMap::new();
    let mut intern = |s: &str, names: &mut Vec<String>| -> usize {
        *state_ix.entry(s.to_string()).or_insert_with(|| {
            names.push(s.to_string());
            names.len() - 1
        })
    };
    let (mut initial, mut accepting, mut trans) = (Vec::new(), Vec::new(), Vec::new());
    for (pos, (no, line)) in lines.iter().enumerate() {
        match *line {
            Line::Name(s) if pos < init_end => initial.push(intern(s, &mut names)),
            Line::Name(s) if pos >= acc_start => accepting.push(intern(s, &mut names)),
            Line::Name(_) => {
                return Err(Error::Parse { line: *no, msg: "state name between transitions".into() })
            }
            Line::Transition(a, p, q) => {
                let p = intern(p, &mut names);
                let q = intern(q, &mut names);
                let a = *sym_ix.entry(a.to_string()).or_insert_with(|| {
                    alphabet.push(a.to_string());
                    alphabet.len() - 1
                });
                trans.push((p, a, q));
            }
        }
    }
    Nba::with_names(names, alphabet, initial, accepting, trans).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

/// Writes the BA format: initial states in index order, transitions sorted
/// by symbol index and then by source and target name, then accepting
/// states in index order.
///
/// Sorting transitions by name makes the output independent of how a
/// parser numbers the states, so `write ∘ parse` is idempotent.
pub fn write_ba(a: &Nba) -> String {
    let mut out = String::new();
    for q in a.initial_states() {
        out.push_str(a.state_name(q));
        out.push('\n');
    }
    let mut tr = a.transitions().to_vec();
    tr.sort_unstable_by_key(|&(p, s, q)| (s, a.state_name(p), a.state_name(q)));
    for (p, s, q) in tr {
        let _ = writeln!(out, "{},{}->{}", a.symbol_name(s), a.state_name(p), a.state_name(q));
    }
    for q in a.accepting_states() {
        out.push_str(a.state_name(q));
        out.push('\n');
    }
    out
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: accepting states are double circles and parallel
/// edges share one label.
pub fn write_dot(a: &Nba) -> String {
    let mut out = String::from("digraph nba {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..a.n_states() {
        let shape = if a.is_accepting(q) { " [shape=doublecircle]" } else { "" };
        let _ = writeln!(out, "  {}{};", quoted(a.state_name(q)), shape);
    }
    for (i, q) in a.initial_states().enumerate() {
        let _ = writeln!(out, "  __init{i} [shape=point];");
        let _ = writeln!(out, "  __init{i} -> {};", quoted(a.state_name(q)));
    }
    let mut edges: Vec<((usize, usize), Vec<&str>)> = Vec::new();
    for &(p, s, q) in a.transitions() {
        match edges.iter_mut().find(|(k, _)| *k == (p, q)) {
            Some((_, labels)) => labels.push(a.symbol_name(s)),
            None => edges.push(((p, q), vec![a.symbol_name(s)])),
        }
    }
    edges.sort_by_key(|(k, _)| *k);
    for ((p, q), labels) in edges {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quoted(a.state_name(p)),
            quoted(a.state_name(q)),
            quoted(&labels.join(","))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fig_1a, fig_2, fig_3, fig_7, fig_9};

    #[test]
    fn parses_small_example() {
        let a = parse_ba("[0]\na,[0]->[1]\nb,[1]->[1]\n[1]\n").unwrap();
        assert_eq!(a.n_states(), 2);
        assert_eq!(a.initial_states().collect::<Vec<_>>(), vec![0]);
        assert_eq!(a.accepting_states().collect::<Vec<_>>(), vec![1]);
        assert_eq!(a.n_transitions(), 2);
        assert_eq!(a.alphabet(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn blank_lines_and_crlf_are_ignored() {
        let a = parse_ba("\r\n[0]\r\n\r\na,[0]->[0]\r\n\n[0]\r\n").unwrap();
        assert_eq!(a.n_transitions(), 1);
        assert!(a.is_accepting(0));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_ba("").unwrap_err(), Error::EmptyInput);
        assert_eq!(parse_ba(" \n\n").unwrap_err(), Error::EmptyInput);
        match parse_ba("x\na,x->y\nz\nb,y->y\n").unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_ba("x\n,x->y\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ba("x\na,x->y->z\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ba("x\nax->y\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn no_transitions() {
        let a = parse_ba("i\nf\ng\n").unwrap();
        assert_eq!(a.n_states(), 3);
        assert!(a.is_initial(0) && !a.is_initial(1));
        assert!(a.is_accepting(1) && a.is_accepting(2));
        let one = Nba::new(1, vec!["a".into()], [0], [0], []).unwrap();
        assert_eq!(write_ba(&one), "q0\nq0\n");
        let back = parse_ba(&write_ba(&one)).unwrap();
        assert!(back.is_initial(0) && back.is_accepting(0) && back.n_states() == 1);
        // unused symbols are not representable in the format
        assert_eq!(back.n_symbols(), 0);
    }

    #[test]
    fn fixtures_round_trip() {
        for a in [fig_1a(), fig_2(4), fig_3(), fig_7(), fig_9()] {
            let text = write_ba(&a);
            let b = parse_ba(&text).unwrap();
            assert!(b.same_by_names(&a), "{text}");
            let normal = write_ba(&b);
            assert_eq!(write_ba(&parse_ba(&normal).unwrap()), normal);
        }
    }

    #[test]
    fn random_round_trip_is_stable_after_one_cycle() {
        for seed in 0..100 {
            let a = crate::automata::random_nba(5, 3, 0.3, 0.4, seed);
            let normal = write_ba(&parse_ba(&write_ba(&a)).unwrap());
            assert_eq!(write_ba(&parse_ba(&normal).unwrap()), normal, "seed {seed}");
        }
    }

    #[test]
    fn fig7_lists_its_accepting_states() {
        let text = write_ba(&fig_7());
        let tail: Vec<_> = text.lines().skip_while(|l| !l.contains("->")).filter(|l| !l.contains("->")).collect();
        assert_eq!(tail, vec!["p0", "p2"]);
    }

    #[test]
    fn dot_output() {
        let d = write_dot(&fig_1a());
        assert!(d.contains("\"p''\" [shape=doublecircle]"));
        assert!(d.contains("\"p'\" -> \"p''\" [label=\"b,c\"]"));
        assert!(d.starts_with("digraph"));
    }
}
