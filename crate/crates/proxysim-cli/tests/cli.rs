use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proxysim::automata::{fig_1a, fig_7, parse_ba, quotient, write_ba};
use proxysim::proxy::proxy_direct;
use proxysim::simulations::delayed_containment_relation;
use proxysim::Exec;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_proxysim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, name: &str) -> PathBuf {
    let p = dir.join(format!("{}.ba", name.replace(':', "_")));
    let o = run(&["gen", name, "-o", p.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fig2_delayed_proxy_has_two_states() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig2:6");
    let o = run(&["reduce", "--pipeline", "proxy-de", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_ba(&stdout(&o)).unwrap().n_states(), 2);
}

#[test]
fn fig1a_proxy_direct_has_four_states() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig1a");
    let out = d.path().join("out.ba");
    let o = run(&["reduce", "--pipeline", "proxy-di", s(&f), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_ba(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.n_states(), 4);
    let o = run(&["verify", s(&f), s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "EQUIVALENT");
}

#[test]
fn empty_pipeline_normalizes() {
    let d = TempDir::new().unwrap();
    for name in ["fig1a", "fig3", "fig7", "fig9", "fig2:4"] {
        let f = gen(d.path(), name);
        for flag in ["--pipeline", "--pipeline="] {
            let o = run(&["reduce", flag, s(&f)]);
            assert_eq!(o.status.code(), Some(0));
            assert_eq!(stdout(&o), fs::read_to_string(&f).unwrap(), "{name} {flag}");
        }
    }
    // a hand-written file with shuffled lines comes back in normal form
    let messy = d.path().join("messy.ba");
    fs::write(&messy, "x\n b , y -> x\na,x->y\n\ny\n").unwrap();
    let once = stdout(&run(&["reduce", "--pipeline", s(&messy)]));
    let again = d.path().join("again.ba");
    fs::write(&again, &once).unwrap();
    assert_eq!(stdout(&run(&["reduce", "--pipeline", s(&again)])), once);
}

#[test]
fn stats_line_is_json() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig1a");
    let o = run(&["reduce", "--pipeline", "di,proxy-di,trim", "--stats", s(&f), "-o", s(&d.path().join("o.ba"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["states_in"], 6);
    assert_eq!(v["states_out"], 4);
    let steps = v["per_step"].as_array().unwrap();
    let names: Vec<_> = steps.iter().map(|x| x["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["di", "proxy-di", "trim"]);
    for st in steps {
        assert!(st["before"].as_u64().unwrap() >= st["after"].as_u64().unwrap());
        assert!(st["millis"].is_u64());
    }
}

#[test]
fn sim_prints_sorted_pairs() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig1a");
    let o = run(&["sim", "bw-di", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert!(lines.contains(&"p <= q") && lines.contains(&"q <= p"));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);

    let one = d.path().join("one.ba");
    fs::write(&one, "x\na,x->x\nx\n").unwrap();
    assert_eq!(stdout(&run(&["sim", "di", s(&one)])), "x <= x\n");

    let f7 = gen(d.path(), "fig7");
    let text = stdout(&run(&["sim", "de-cont", s(&f7)]));
    assert!(text.lines().any(|l| l == "p0 <= p1"));
    assert!(text.lines().any(|l| l == "p1 <= p0"));
}

#[test]
fn sim_matches_library() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig1a");
    let a = fig_1a();
    let r = proxy_direct(&a);
    let text = stdout(&run(&["sim", "proxy-di", s(&f)]));
    assert_eq!(text.lines().count(), r.len());
    for (x, y) in r.pairs() {
        let l = format!("{} <= {}", a.state_name(x), a.state_name(y));
        assert!(text.lines().any(|m| m == l), "{l}");
    }
}

#[test]
fn verify_fig7_containment_quotient() {
    let d = TempDir::new().unwrap();
    let f = gen(d.path(), "fig7");
    let a = fig_7();
    let r = delayed_containment_relation(&a, 50_000, Exec::Sequential).unwrap();
    let (q, _) = quotient(&a, &r.induced_equivalence()).unwrap();
    let qf = d.path().join("q.ba");
    fs::write(&qf, write_ba(&q)).unwrap();
    let o = run(&["verify", s(&f), s(&qf)]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    let line = text.trim();
    assert!(line.starts_with("COUNTEREXAMPLE u="), "{line}");
    let v = line.split(" v=").nth(1).unwrap();
    assert!(v.split('.').all(|x| x == "a"), "{line}");

    let o = run(&["verify", s(&f), s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "EQUIVALENT");
}

#[test]
fn verify_aligns_alphabets_by_name() {
    let d = TempDir::new().unwrap();
    let x = d.path().join("x.ba");
    let y = d.path().join("y.ba");
    fs::write(&x, "p\na,p->p\nb,p->p\np\n").unwrap();
    fs::write(&y, "r\nb,r->r\na,r->r\nr\n").unwrap();
    assert_eq!(run(&["verify", s(&x), s(&y)]).status.code(), Some(0));
    // a symbol only one side reads makes the languages differ
    let z = d.path().join("z.ba");
    fs::write(&z, "r\nb,r->r\na,r->r\nc,r->r\nr\n").unwrap();
    let o = run(&["verify", s(&x), s(&z)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains('c'));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "random", "--states", "5", "--seed", "7"]);
    let b = run(&["gen", "random", "--states", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "random", "--states", "5", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
    let f2 = stdout(&run(&["gen", "fig2:4"]));
    assert_eq!(parse_ba(&f2).unwrap().n_states(), 5);
    let f7 = stdout(&run(&["gen", "fig7"]));
    assert!(parse_ba(&f7).unwrap().same_by_names(&fig_7()));
}

#[test]
fn exit_codes() {
    let d = TempDir::new().unwrap();
    let bad = d.path().join("bad.ba");
    fs::write(&bad, "a,p->\n").unwrap();
    assert_eq!(run(&["reduce", "--pipeline", "di", s(&bad)]).status.code(), Some(1));
    assert_eq!(run(&["sim", "di", s(&d.path().join("missing.ba"))]).status.code(), Some(1));
    assert_eq!(run(&["gen", "fig4"]).status.code(), Some(1));
    assert_eq!(run(&["gen", "fig2:2"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let f = gen(d.path(), "fig7");
    assert_eq!(run(&["reduce", "--pipeline", "di,bogus", s(&f)]).status.code(), Some(1));
    assert_eq!(run(&["sim", "trim", s(&f)]).status.code(), Some(1));
    let o = run(&["reduce", "--pipeline", "fx-de", "--fx-max-states", "3", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let f2 = gen(d.path(), "fig2:8");
    assert_eq!(run(&["sim", "de-cont", "--complement-cap", "1", s(&f2)]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "--pipeline", "fx-de", s(&f)]).status.code(), Some(0));
}
