mod common;

use proptest::prelude::*;
use proxysim::langops::{
    accepts_lasso, complement, equivalent, includes, intersect, is_empty, profile_includes, rank_includes,
    trim_useless, universal, DEFAULT_COMPLEMENT_CAP,
};
use proxysim::LassoWord;

const CAP: usize = DEFAULT_COMPLEMENT_CAP;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_splits_every_lasso(a in common::arb_nba(4)) {
        let c = complement(&a, CAP).unwrap();
        for w in LassoWord::enumerate(2, 2, 3) {
            prop_assert_ne!(accepts_lasso(&a, &w), accepts_lasso(&c, &w));
        }
    }

    #[test]
    fn intersection_is_conjunction(a in common::arb_nba(3), b in common::arb_nba(3)) {
        let p = intersect(&a, &b).unwrap();
        for w in LassoWord::enumerate(2, 2, 2) {
            prop_assert_eq!(accepts_lasso(&p, &w), accepts_lasso(&a, &w) && accepts_lasso(&b, &w));
        }
    }

    #[test]
    fn inclusion_witnesses_separate(a in common::arb_nba(4), b in common::arb_nba(4)) {
        let (inc, w) = includes(&a, &b, CAP).unwrap();
        prop_assert_eq!(rank_includes(&a, &b, CAP).unwrap().0, inc);
        prop_assert_eq!(profile_includes(&a, &b, CAP).unwrap().0, inc);
        match w {
            Some(w) => prop_assert!(!inc && accepts_lasso(&a, &w) && !accepts_lasso(&b, &w)),
            None => {
                prop_assert!(inc);
                for w in LassoWord::enumerate(2, 2, 2) {
                    prop_assert!(!accepts_lasso(&a, &w) || accepts_lasso(&b, &w));
                }
            }
        }
    }

    #[test]
    fn equivalence_and_trimming(a in common::arb_nba(4)) {
        prop_assert!(equivalent(&a, &a, CAP).unwrap().0);
        let t = trim_useless(&a);
        prop_assert!(t.n_states() <= a.n_states());
        prop_assert!(equivalent(&a, &t, CAP).unwrap().0);
        prop_assert_eq!(is_empty(&a).is_none(), t.n_states() == 0);
        if let Some(w) = is_empty(&a) {
            prop_assert!(accepts_lasso(&a, &w));
        }
    }

    #[test]
    fn universality_is_an_empty_complement(a in common::arb_nba(4)) {
        let (u, w) = universal(&a, CAP).unwrap();
        let c = complement(&a, CAP).unwrap();
        prop_assert_eq!(u, is_empty(&c).is_none());
        if let Some(w) = w {
            prop_assert!(!accepts_lasso(&a, &w));
        }
    }
}
