mod common;

use proptest::prelude::*;
use proxysim::langops::{equivalent, DEFAULT_COMPLEMENT_CAP};
use proxysim::proxy::{reduce_pipeline, PipelineOptions, Step};
use proxysim::Error;

fn arb_steps() -> impl Strategy<Value = Vec<Step>> {
    let quotient_steps = [Step::Di, Step::De, Step::BwDi, Step::ProxyDi, Step::ProxyDe, Step::Trim, Step::Complete];
    proptest::collection::vec(proptest::sample::select(quotient_steps.to_vec()), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pipelines_keep_the_language(a in common::arb_nba(5), steps in arb_steps()) {
        let (r, rep) = reduce_pipeline(&a, &steps, &PipelineOptions::default()).unwrap();
        prop_assert!(equivalent(&a, &r, DEFAULT_COMPLEMENT_CAP).unwrap().0);
        prop_assert_eq!(rep.steps.len(), steps.len());
        prop_assert_eq!(rep.states_in, a.n_states());
        prop_assert_eq!(rep.states_out, r.n_states());
        for w in rep.steps.windows(2) {
            prop_assert_eq!(w[0].after, w[1].before);
        }
        for s in &rep.steps {
            if s.step != Step::Complete {
                prop_assert!(s.after <= s.before);
            }
        }
    }

    #[test]
    fn fixed_word_step_on_small_automata(a in common::arb_nba(3)) {
        let (r, _) = reduce_pipeline(&a, &[Step::FxDe], &PipelineOptions::default()).unwrap();
        prop_assert!(equivalent(&a, &r, DEFAULT_COMPLEMENT_CAP).unwrap().0);
    }
}

#[test]
fn fixed_word_step_respects_the_size_guard() {
    let a = proxysim::automata::fig_2(5);
    let err = reduce_pipeline(&a, &[Step::FxDe], &PipelineOptions::default()).unwrap_err();
    assert!(matches!(err, Error::TooLarge { .. }));
}
