mod common;

use std::collections::BTreeSet;

use revarc::oracle::{exhaustive_sequence_exists, lambda_bruteforce};
use revarc::{
    arc_connectivity, find_reversible_arc, min_in_tight_set_entered_by, monotone_sequence,
    thresholds, Error, Mode, Status,
};

const MODES: [Mode; 3] = [Mode::First, Mode::Best, Mode::Random(99)];

#[test]
fn single_step_guarantee() {
    let mut rng = common::rng(1);
    let mut checked = 0;
    let mut i = 0;
    while checked < 600 {
        i += 1;
        let n = 3 + i % 7;
        let k = 2 + i % 3;
        let Some((d, f)) = common::guarantee_instance(&mut rng, n, k) else {
            continue;
        };
        checked += 1;
        let before = lambda_bruteforce(&d).unwrap();
        for mode in MODES {
            let out = find_reversible_arc(&d, &f, k, mode).unwrap();
            let id = out
                .chosen
                .expect("guarantee instance must have a reversible arc");
            assert!(f.contains(id));
            let after = lambda_bruteforce(&d.reverse_arc(id).unwrap()).unwrap();
            assert_eq!(out.lambda_before, before);
            assert_eq!(out.lambda_after, Some(after));
            assert!(after >= before);
        }
    }
}

#[test]
fn sequences_are_monotone_and_replayable() {
    let mut rng = common::rng(2);
    let mut checked = 0;
    let mut i = 0;
    while checked < 300 {
        i += 1;
        let n = 3 + i % 7;
        let k = 2 + i % 3;
        let Some((d, f)) = common::guarantee_instance(&mut rng, n, k) else {
            continue;
        };
        checked += 1;
        for mode in MODES {
            let report = monotone_sequence(&d, &f, k, mode).unwrap();
            let mut current = d.clone();
            let mut seen = BTreeSet::new();
            let mut last = lambda_bruteforce(&d).unwrap();
            assert_eq!(report.initial_lambda, last);
            for step in &report.steps {
                assert!(f.contains(step.arc) && seen.insert(step.arc));
                current = current.reverse_arc(step.arc).unwrap();
                let lambda = lambda_bruteforce(&current).unwrap();
                assert_eq!(lambda, step.lambda);
                assert!(lambda >= last);
                last = lambda;
            }
            assert_eq!(current, report.final_digraph);
            let target = thresholds(k).unwrap().target;
            match report.status {
                Status::ReachedK => assert!(last >= k),
                Status::ReachedGuarantee => assert!(last >= target && last < k),
                Status::Blocked(_) => panic!("blocked below the target"),
            }
            if k <= 3 {
                assert_eq!(report.status, Status::ReachedK);
            }
        }
    }
}

#[test]
fn random_mode_is_deterministic_per_seed() {
    let mut rng = common::rng(3);
    let mut checked = 0;
    while checked < 50 {
        let Some((d, f)) = common::guarantee_instance(&mut rng, 7, 3) else {
            continue;
        };
        checked += 1;
        for seed in [0, 17] {
            let a = monotone_sequence(&d, &f, 3, Mode::Random(seed)).unwrap();
            let b = monotone_sequence(&d, &f, 3, Mode::Random(seed)).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(
            monotone_sequence(&d, &f, 3, Mode::First).unwrap(),
            monotone_sequence(&d, &f, 3, Mode::First).unwrap()
        );
    }
}

#[test]
fn agrees_with_exhaustive_search() {
    let mut rng = common::rng(4);
    let mut checked = 0;
    let mut i = 0;
    while checked < 150 {
        i += 1;
        let n = 3 + i % 4;
        let k = 2 + i % 2;
        let Some((d, f)) = common::guarantee_instance(&mut rng, n, k) else {
            continue;
        };
        if f.len() > 12 {
            continue;
        }
        checked += 1;
        let shortest = exhaustive_sequence_exists(&d, &f, k)
            .unwrap()
            .expect("a monotone sequence exists for k <= 3");
        let report = monotone_sequence(&d, &f, k, Mode::Best).unwrap();
        assert!(shortest.len() <= report.steps.len());
    }
}

#[test]
fn reversal_lowers_lambda_iff_arc_enters_a_tight_set() {
    let mut rng = common::rng(5);
    for i in 0..400 {
        let n = 2 + i % 7;
        let d = common::random_multidigraph(&mut rng, n, 0.5, 2);
        let lambda = arc_connectivity(&d).unwrap().value;
        for arc in d.arcs() {
            let drops = lambda_bruteforce(&d.reverse_arc(arc.id).unwrap()).unwrap() < lambda;
            assert_eq!(
                min_in_tight_set_entered_by(&d, arc, lambda).is_some(),
                drops
            );
        }
    }
}

#[test]
fn input_validation() {
    let fx = revarc::fixture("triangle_example").unwrap();
    assert!(matches!(
        find_reversible_arc(&fx.digraph, &fx.f, 1, Mode::First),
        Err(Error::InvalidK { .. })
    ));
    assert!(matches!(
        find_reversible_arc(&fx.digraph, &fx.f, 3, Mode::First),
        Err(Error::ReversalTooWeak { lambda: 2, k: 3 })
    ));
    let reversed = fx.digraph.reverse_set(&fx.f).unwrap();
    assert_eq!(
        find_reversible_arc(&reversed, &revarc::ArcSet::new(), 2, Mode::First),
        Err(Error::EmptyReversalSet)
    );
    // Already at k: the sequence is empty.
    let report = monotone_sequence(&reversed, &revarc::ArcSet::new(), 2, Mode::First).unwrap();
    assert!(report.steps.is_empty());
    assert_eq!(report.status, Status::ReachedK);
}
