mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ararank::certificates::{
    check_gsv, check_gsv_with, check_prop1, check_sv, prop1_to_gsv, sv_to_gsv, FailureReason, GsvOptions,
    Prop1Certificate,
};
use ararank::combinatorics::MonomialIdeal;
use ararank::oracle::compare_radicals;
use ararank::ring::{SquarefreeMonomial, VarSet};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn constructive_layered_certificates_pass_the_cancellation_check(seed in any::<u64>(), n in 3usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sv = constructive_sv(&mut rng, n);
        prop_assert!(check_sv(&sv).accepted, "{:?}", sv);
        let gsv = sv_to_gsv(&sv).unwrap();
        let res = check_gsv(&gsv);
        prop_assert!(res.accepted, "{:?} {:?}", gsv, res.trace);
        prop_assert_eq!(res.emitted, sv.candidates());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn minimal_primes_match_brute_force(
        n in 1usize..=12,
        raw in prop::collection::vec(prop::collection::vec(0usize..12, 1..=4), 1..=8),
    ) {
        let edges: Vec<VarSet> = raw
            .iter()
            .map(|e| VarSet::from_indices(e.iter().map(|&v| v % n)))
            .collect();
        let ideal = MonomialIdeal::new(&qq(n), edges.iter().map(|&e| SquarefreeMonomial::new(e))).unwrap();
        let mut primes: Vec<VarSet> = ideal.minimal_primes().iter().map(|p| p.vars).collect();
        primes.sort_by(|a, b| a.lex_cmp(*b));
        prop_assert_eq!(primes, brute_force_covers(&edges, n));
    }

    #[test]
    fn memoized_and_plain_exploration_agree(seed in any::<u64>(), n in 3usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cert = random_grouping(&mut rng, n, 7);
        let memo = check_gsv_with(&cert, GsvOptions { memoize: true });
        let plain = check_gsv_with(&cert, GsvOptions { memoize: false });
        prop_assert_eq!(memo.accepted, plain.accepted, "{:?}", cert);
        prop_assert!(memo.explored_states <= plain.explored_states);
        for res in [memo, plain] {
            if let Some(trace) = &res.trace {
                let left = cert.replay(trace).map_err(TestCaseError::fail)?;
                match &trace.failure {
                    FailureReason::NoSingletonPart { remaining } => prop_assert_eq!(&left, remaining),
                    other => prop_assert!(false, "unexpected failure {:?}", other),
                }
            }
        }
    }

    #[test]
    fn five_element_criterion_converts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = qq(6);
        let m: Vec<SquarefreeMonomial> = (0..5).map(|_| random_monomial(&mut rng, 6, 3)).collect();
        let cert = Prop1Certificate::new(m[0], m[1], m[2], m[3], m[4]);
        let res = check_prop1(&cert, &ring).unwrap();
        if res.accepted {
            let gsv = prop1_to_gsv(&cert, &ring).unwrap();
            prop_assert!(check_gsv(&gsv).accepted, "{:?}", cert);
        }
    }
}

/// Accepted random groupings generate the radical of their generators.
#[test]
fn accepted_random_groupings_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    let mut tries = 0;
    while checked < 25 {
        tries += 1;
        assert!(tries < 100_000, "only {checked} accepted groupings found");
        let n = rng.gen_range(3..=6);
        let cert = random_grouping(&mut rng, n, 7);
        if cert.generators().len() < 3 {
            continue;
        }
        let res = check_gsv(&cert);
        if !res.accepted {
            continue;
        }
        let ideal = MonomialIdeal::new(cert.ring(), cert.generators().iter().copied()).unwrap();
        let cmp = compare_radicals(&ideal, &res.emitted).unwrap();
        assert!(cmp.equal(), "{cert:?}: {cmp:?}");
        checked += 1;
    }
}
