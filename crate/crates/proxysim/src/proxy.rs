//! Proxy simulations and the reduction pipeline.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::automata::{quotient, Nba, StateRelation};
use crate::error::{Error, Result};
use crate::fixedword::{fx_delayed_sim, FxOptions};
use crate::simulations::{backward_direct_sim, delayed_sim, direct_sim};
use crate::transformers::{tau1, tau1_de};

/// Direct proxy simulation `⊑xy^di = τ₁(⊑bw)⁻¹`.
pub fn proxy_direct(a: &Nba) -> StateRelation {
    tau1(a, &backward_direct_sim(a)).expect("dimensions agree").inverse()
}

/// Delayed proxy simulation `⊑xy^de = τ₁ᵈᵉ(⊑bw)⁻¹`.
pub fn proxy_delayed(a: &Nba) -> StateRelation {
    tau1_de(a, &backward_direct_sim(a)).expect("dimensions agree").inverse()
}

/// One pipeline step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Di,
    De,
    BwDi,
    ProxyDi,
    ProxyDe,
    FxDe,
    Trim,
    Complete,
}

impl Step {
    pub const ALL: [Step; 8] =
        [Step::Di, Step::De, Step::BwDi, Step::ProxyDi, Step::ProxyDe, Step::FxDe, Step::Trim, Step::Complete];

    pub fn name(self) -> &'static str {
        match self {
            Step::Di => "di",
            Step::De => "de",
            Step::BwDi => "bw-di",
            Step::ProxyDi => "proxy-di",
            Step::ProxyDe => "proxy-de",
            Step::FxDe => "fx-de",
            Step::Trim => "trim",
            Step::Complete => "complete",
        }
    }

    /// The preorder a quotient step uses; `None` for the structural steps.
    pub fn preorder(self, a: &Nba, opts: &PipelineOptions) -> Result<Option<StateRelation>> {
        Ok(Some(match self {
            Step::Di => direct_sim(a),
            Step::De => delayed_sim(a),
            Step::BwDi => backward_direct_sim(a),
            Step::ProxyDi => proxy_direct(a),
            Step::ProxyDe => proxy_delayed(a),
            Step::FxDe => fx_delayed_sim(a, &opts.fx)?.relation,
            Step::Trim | Step::Complete => return Ok(None),
        }))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Step> {
        Step::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown pipeline step {s:?}")))
    }
}

/// Settings for steps that need them.
#[derive(Clone, Debug, Default)]
pub struct PipelineOptions {
    pub fx: FxOptions,
}

/// Size and time of one executed step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub step: Step,
    pub before: usize,
    pub after: usize,
    pub elapsed: Duration,
}

/// What a pipeline run did.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionReport {
    pub states_in: usize,
    pub states_out: usize,
    pub steps: Vec<StepReport>,
}

/// Quotients `a` by the equivalence induced by each step's preorder in turn,
/// recomputing the preorder on the current automaton and dropping states
/// that became unreachable. `trim` and `complete` transform directly.
pub fn reduce_pipeline(a: &Nba, steps: &[Step], opts: &PipelineOptions) -> Result<(Nba, ReductionReport)> {
    let mut cur = a.clone();
    let mut report = ReductionReport { states_in: a.n_states(), ..Default::default() };
    for &step in steps {
        let start = Instant::now();
        let before = cur.n_states();
        cur = match step {
            Step::Trim => cur.trim_unreachable(),
            Step::Complete => cur.complete(),
            _ => {
                let pre = step.preorder(&cur, opts)?.expect("quotient step");
                let (q, _) = quotient(&cur, &pre.induced_equivalence())?;
                q.trim_unreachable()
            }
        };
        log::info!("{step}: {before} -> {} states", cur.n_states());
        report.steps.push(StepReport { step, before, after: cur.n_states(), elapsed: start.elapsed() });
    }
    report.states_out = cur.n_states();
    Ok((cur, report))
}
