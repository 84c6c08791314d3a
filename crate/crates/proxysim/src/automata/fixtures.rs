//! Small automata used throughout the tests and by `gen`.

use crate::automata::Nba;

/// Two branches from `p` and `q` that differ only in how early the second
/// letter is resolved; proxy simulation merges `p` with `q` and `p'` with
/// `q'_b`.
pub fn fig_1a() -> Nba {
    let mut t = vec![("p", "a", "p'"), ("p'", "b", "p''"), ("p'", "c", "p''")];
    for x in ["a", "b", "c"] {
        t.push(("p''", x, "p''"));
    }
    t.extend([
        ("q", "a", "q'_b"),
        ("q", "b", "q'_b"),
        ("q", "a", "q'_c"),
        ("q", "b", "q'_c"),
        ("q", "c", "q'_c"),
        ("q'_b", "b", "p''"),
        ("q'_c", "c", "p''"),
    ]);
    Nba::from_names(
        &["a", "b", "c"],
        &["p", "p'", "p''", "q", "q'_b", "q'_c"],
        &["p", "q"],
        &["p''"],
        &t,
    )
    .expect("fixture is valid")
}

/// A ring `q0 … q{k-1}` plus a hub `s`; the delayed proxy quotient has two
/// states while every other relation here stays trivial.
///
/// # Panics
/// If `k < 3`.
pub fn fig_2(k: usize) -> Nba {
    assert!(k >= 3, "fig_2 needs k >= 3");
    let s = k;
    let mut t = vec![(0, 1, 0)];
    for i in 0..k - 1 {
        t.push((i, 0, i + 1));
    }
    t.push((k - 1, 0, 0));
    t.push((k - 1, 1, 0));
    t.push((s, 1, s));
    for i in 0..k {
        t.push((s, 1, i));
        t.push((i, 0, s));
    }
    let mut names: Vec<String> = (0..k).map(|i| format!("q{i}")).collect();
    names.push("s".into());
    Nba::with_names(names, vec!["a".into(), "b".into()], [0], [0], t).expect("fixture is valid")
}

/// Merging `q1`, `q2` and `q3` would add the word `b a^ω`.
pub fn fig_3() -> Nba {
    Nba::from_names(
        &["a", "b"],
        &["q0", "q1", "q2", "q3", "q4"],
        &["q0"],
        &["q4"],
        &[
            ("q0", "a", "q1"),
            ("q0", "a", "q2"),
            ("q0", "b", "q3"),
            ("q1", "a", "q4"),
            ("q2", "b", "q4"),
            ("q3", "b", "q4"),
            ("q4", "a", "q4"),
        ],
    )
    .expect("fixture is valid")
}

/// Empty language, but `p0` and `p1` are delayed-containment equivalent and
/// merging them accepts `a^ω`.
pub fn fig_7() -> Nba {
    Nba::from_names(
        &["a"],
        &["p0", "p1", "p2", "p3"],
        &["p0"],
        &["p0", "p2"],
        &[("p0", "a", "p1"), ("p1", "a", "p1"), ("p1", "a", "p2"), ("p2", "a", "p3"), ("p3", "a", "p3")],
    )
    .expect("fixture is valid")
}

/// Empty language with an appealing fragment of the delayed jump game whose
/// quotient accepts `a^ω`.
pub fn fig_9() -> Nba {
    let t = [
        ("q0", "q1"),
        ("q0", "q2"),
        ("q0", "q3"),
        ("q0", "q4"),
        ("q1", "q2"),
        ("q2", "q2"),
        ("q2", "q3"),
        ("q3", "q5"),
        ("q4", "q3"),
        ("q5", "q6"),
        ("q6", "q6"),
    ]
    .map(|(p, q)| (p, "a", q));
    Nba::from_names(
        &["a"],
        &["q0", "q1", "q2", "q3", "q4", "q5", "q6"],
        &["q0"],
        &["q1", "q4", "q5"],
        &t,
    )
    .expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((fig_1a().n_states(), fig_1a().n_transitions()), (6, 13));
        // chain (k-1) + wrap (2) + b-loop on q0 + hub loop + 2k spokes
        assert_eq!((fig_2(4).n_states(), fig_2(4).n_transitions()), (5, 15));
        assert_eq!(fig_3().n_transitions(), 7);
        assert_eq!(fig_7().n_transitions(), 5);
        assert_eq!(fig_9().n_transitions(), 11);
    }

    #[test]
    #[should_panic]
    fn fig2_needs_three() {
        fig_2(2);
    }
}
