//! `proxysim`: reduce Büchi automata by simulation quotients, print the
//! relations, compare languages and generate test inputs.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 a cap was exceeded,
//! 3 `verify` found a counterexample.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use proxysim::automata::{fig_1a, fig_2, fig_3, fig_7, fig_9, parse_ba, random_nba, write_ba};
use proxysim::fixedword::FxOptions;
use proxysim::langops::{equivalent, DEFAULT_COMPLEMENT_CAP};
use proxysim::proxy::{reduce_pipeline, PipelineOptions, Step};
use proxysim::simulations::delayed_containment_relation;
use proxysim::{Error, Exec, Nba, StateRelation};

#[derive(Parser, Debug)]
#[command(name = "proxysim", version, about = "Simulation-based reduction of Büchi automata")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Quotient an automaton by a sequence of preorders.
    Reduce {
        /// Comma-separated steps: di, de, bw-di, proxy-di, proxy-de, fx-de, trim, complete.
        /// Given without a value, the input is only normalized.
        #[arg(long, num_args = 0..=1, default_value = "proxy-de", value_delimiter = ',', default_missing_value = "")]
        pipeline: Vec<String>,
        /// Print a one-line JSON report after the automaton.
        #[arg(long)]
        stats: bool,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Print a relation as `x <= y` lines.
    Sim {
        /// A pipeline step name with a preorder, or `de-cont`.
        relation: String,
        input: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Compare the languages of two automata.
    Verify {
        original: PathBuf,
        reduced: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Write a fixture (fig1a, fig2:K, fig3, fig7, fig9) or a random automaton.
    Gen {
        name: String,
        #[arg(long, default_value_t = 5)]
        states: usize,
        #[arg(long, default_value_t = 2)]
        symbols: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0.3)]
        final_density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
struct Caps {
    /// Bound on complement states per inclusion or fixed-word pair check.
    #[arg(long, default_value_t = DEFAULT_COMPLEMENT_CAP)]
    complement_cap: usize,
    /// Bound on breakpoint states used to validate fixed-word witnesses.
    #[arg(long, default_value_t = FxOptions::default().mh_cap)]
    mh_cap: usize,
    /// Largest automaton the fixed-word relation is computed for.
    #[arg(long, default_value_t = FxOptions::default().max_states)]
    fx_max_states: usize,
    /// Run pair computations on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Caps {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }

    fn pipeline_options(&self) -> PipelineOptions {
        PipelineOptions {
            fx: FxOptions {
                max_states: self.fx_max_states,
                complement_cap: self.complement_cap,
                mh_cap: self.mh_cap,
                exec: self.exec(),
                ..FxOptions::default()
            },
        }
    }
}

#[derive(Serialize)]
struct StepStats {
    name: &'static str,
    before: usize,
    after: usize,
    millis: u128,
}

#[derive(Serialize)]
struct Stats {
    states_in: usize,
    states_out: usize,
    per_step: Vec<StepStats>,
}

enum Failure {
    Usage(String),
    Cap(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::PairCapExceeded { .. } | Error::TooLarge { .. } => {
                Failure::Cap(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<Nba, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_ba(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_reduce(pipeline: &[String], stats: bool, input: &Path, output: Option<&Path>, caps: &Caps) -> Outcome {
    let steps = pipeline
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Step>())
        .collect::<proxysim::Result<Vec<_>>>()?;
    let a = read(input)?;
    let (r, report) = reduce_pipeline(&a, &steps, &caps.pipeline_options())?;
    emit(&write_ba(&r), output)?;
    if stats {
        let s = Stats {
            states_in: report.states_in,
            states_out: report.states_out,
            per_step: report
                .steps
                .iter()
                .map(|s| StepStats {
                    name: s.step.name(),
                    before: s.before,
                    after: s.after,
                    millis: s.elapsed.as_millis(),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&s).expect("stats serialize"));
    }
    Ok(())
}

fn relation(a: &Nba, name: &str, caps: &Caps) -> std::result::Result<StateRelation, Failure> {
    if name == "de-cont" {
        return Ok(delayed_containment_relation(a, caps.complement_cap, caps.exec())?);
    }
    let step: Step = name.parse()?;
    step.preorder(a, &caps.pipeline_options())?
        .ok_or_else(|| Failure::Usage(format!("step {name:?} has no relation")))
}

fn cmd_sim(name: &str, input: &Path, caps: &Caps) -> Outcome {
    let a = read(input)?;
    let r = relation(&a, name, caps)?;
    let mut lines: Vec<String> =
        r.pairs().map(|(x, y)| format!("{} <= {}", a.state_name(x), a.state_name(y))).collect();
    lines.sort();
    let mut out = io::stdout().lock();
    for l in lines {
        writeln!(out, "{l}")?;
    }
    Ok(())
}

/// Rebuilds `a` over `alphabet`, which must contain every symbol of `a`.
fn over_alphabet(a: &Nba, alphabet: &[String]) -> proxysim::Result<Nba> {
    let idx = |x: &str| alphabet.iter().position(|y| y == x).expect("symbol in union");
    let t = a.transitions().iter().map(|&(p, x, q)| (p, idx(a.symbol_name(x)), q));
    Nba::with_names(a.names().to_vec(), alphabet.to_vec(), a.initial_states(), a.accepting_states(), t)
}

fn cmd_verify(original: &Path, reduced: &Path, caps: &Caps) -> Outcome {
    let a = read(original)?;
    let b = read(reduced)?;
    let mut alphabet = a.alphabet().to_vec();
    for x in b.alphabet() {
        if !alphabet.contains(x) {
            alphabet.push(x.clone());
        }
    }
    let a = over_alphabet(&a, &alphabet)?;
    let b = over_alphabet(&b, &alphabet)?;
    match equivalent(&a, &b, caps.complement_cap)? {
        (true, _) => {
            println!("EQUIVALENT");
            Ok(())
        }
        (false, w) => {
            let w = w.expect("a differing language has a witness");
            Err(Failure::Counterexample(format!("COUNTEREXAMPLE {}", w.display(&a))))
        }
    }
}

fn fixture(name: &str) -> Option<Nba> {
    Some(match name {
        "fig1a" => fig_1a(),
        "fig3" => fig_3(),
        "fig7" => fig_7(),
        "fig9" => fig_9(),
        _ => {
            let k: usize = name.strip_prefix("fig2:")?.parse().ok()?;
            if k < 3 {
                return None;
            }
            fig_2(k)
        }
    })
}

fn cmd_gen(name: &str, p: &GenParams, output: Option<&Path>) -> Outcome {
    let a = if name == "random" {
        if !(0.0..=1.0).contains(&p.density) || !(0.0..=1.0).contains(&p.final_density) {
            return Err(Failure::Usage("densities must lie in [0, 1]".into()));
        }
        if p.states == 0 || p.symbols == 0 {
            return Err(Failure::Usage("random automata need at least one state and one symbol".into()));
        }
        random_nba(p.states, p.symbols, p.density, p.final_density, p.seed)
    } else {
        fixture(name).ok_or_else(|| Failure::Usage(format!("unknown fixture {name:?}")))?
    };
    emit(&write_ba(&a), output)
}

struct GenParams {
    states: usize,
    symbols: usize,
    density: f64,
    final_density: f64,
    seed: u64,
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Reduce { pipeline, stats, input, output, caps } => {
            cmd_reduce(&pipeline, stats, &input, output.as_deref(), &caps)
        }
        Cmd::Sim { relation, input, caps } => cmd_sim(&relation, &input, &caps),
        Cmd::Verify { original, reduced, caps } => cmd_verify(&original, &reduced, &caps),
        Cmd::Gen { name, states, symbols, density, final_density, seed, output } => {
            let p = GenParams { states, symbols, density, final_density, seed };
            cmd_gen(&name, &p, output.as_deref())
        }
    }
}

/// `--pipeline` may be given bare. When the next word is not a list of step
/// names it is kept as a positional argument instead of the pipeline value.
fn bare_pipeline(args: Vec<String>) -> Vec<String> {
    let is_steps = |w: &str| w.split(',').all(|s| s.trim().is_empty() || s.trim().parse::<Step>().is_ok());
    let mut out = Vec::with_capacity(args.len());
    for (i, a) in args.iter().enumerate() {
        match args.get(i + 1) {
            Some(next) if a == "--pipeline" && !next.starts_with('-') && !is_steps(next) => {
                out.push("--pipeline=".to_string())
            }
            _ => out.push(a.clone()),
        }
    }
    out
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse_from(bare_pipeline(std::env::args().collect())) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Counterexample(m)) => {
            println!("{m}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn bare_pipeline_keeps_the_input() {
        assert_eq!(bare_pipeline(args("p reduce --pipeline in.ba")), args("p reduce --pipeline= in.ba"));
        assert_eq!(bare_pipeline(args("p reduce --pipeline di,de in.ba")), args("p reduce --pipeline di,de in.ba"));
        assert_eq!(bare_pipeline(args("p reduce --pipeline --stats x")), args("p reduce --pipeline --stats x"));
        let cli = Cli::try_parse_from(bare_pipeline(args("p reduce --pipeline in.ba"))).unwrap();
        match cli.cmd {
            Cmd::Reduce { pipeline, input, .. } => {
                assert!(pipeline.iter().all(|s| s.is_empty()));
                assert_eq!(input, PathBuf::from("in.ba"));
            }
            _ => panic!("parsed as another command"),
        }
    }

    #[test]
    fn default_pipeline() {
        match Cli::try_parse_from(args("p reduce in.ba")).unwrap().cmd {
            Cmd::Reduce { pipeline, .. } => assert_eq!(pipeline, ["proxy-de"]),
            _ => panic!("parsed as another command"),
        }
    }
}
