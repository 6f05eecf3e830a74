mod common;

use revarc::oracle::all_cuts;
use revarc::tight_sets::{crosses, uncross_traced};
use revarc::{
    arc_connectivity, blocking_certificate, build_blocking_family, find_reversible_arc,
    split_certificate, thresholds, verify_certificate, ArcSet, Error, Mode, TightFamily, VertexSet,
};

/// Arcs entering at least one in-tight set, and the family of all their
/// minimal tight sets.
fn blocked_arcs_family(d: &revarc::Digraph) -> Option<(ArcSet, TightFamily)> {
    let lambda = arc_connectivity(d).ok()?.value;
    if lambda == 0 {
        return None;
    }
    let f: ArcSet = d
        .arcs()
        .iter()
        .filter(|a| revarc::min_in_tight_set_entered_by(d, a, lambda).is_some())
        .map(|a| a.id)
        .collect();
    if f.is_empty() {
        return None;
    }
    Some((f.clone(), build_blocking_family(d, &f).ok()?))
}

#[test]
fn uncrossing_invariants_on_random_digraphs() {
    let mut rng = common::rng(5);
    let mut families = 0;
    let mut crossing_inputs = 0;
    for i in 0..600 {
        let n = 3 + i % 7;
        let d = common::random_connected(&mut rng, n, 1 + i % 3, n);
        let Some((f, family)) = blocked_arcs_family(&d) else {
            continue;
        };
        families += 1;
        if !family.is_cross_free() {
            crossing_inputs += 1;
        }
        let (out, trace) = uncross_traced(&family, &d).unwrap();

        // Potential strictly decreases at every replacement.
        assert!(trace.windows(2).all(|w| w[1] < w[0]), "{trace:?}");
        assert_eq!(*trace.last().unwrap(), out.potential());

        // Every output member is still in-tight.
        for z in &out.members {
            assert_eq!(d.in_degree(z), family.lambda);
        }

        // Pairwise: no crossing pair, and laminar after splitting at any root.
        for (a, x) in out.members.iter().enumerate() {
            for y in &out.members[a + 1..] {
                assert!(!crosses(x, y));
            }
        }
        for root in 0..n {
            let cert = split_certificate(&out, root, family.lambda + 1);
            let sets: Vec<&VertexSet> = cert.sets().collect();
            for (a, x) in sets.iter().enumerate() {
                for y in &sets[a + 1..] {
                    assert!(x.is_laminar_with(y), "{x:?} {y:?}");
                }
            }
        }

        // Coverage over every arc of the digraph is unchanged.
        let all = d.all_arcs();
        assert_eq!(family.covered(&d, &all), out.covered(&d, &all));
        assert_eq!(out.covered(&d, &f), f);
    }
    assert!(families > 300, "{families}");
    assert!(crossing_inputs > 0, "no crossing inputs were generated");
}

#[test]
fn tight_uncrossing_against_enumerated_tight_sets() {
    // Uncrossing the family of *all* in-tight sets yields in-tight sets only.
    let mut rng = common::rng(8);
    for i in 0..80 {
        let n = 3 + i % 5;
        let d = common::random_connected(&mut rng, n, 2, 2);
        let lambda = arc_connectivity(&d).unwrap().value;
        let tight: Vec<VertexSet> = all_cuts(&d)
            .unwrap()
            .into_iter()
            .filter(|&(_, deg)| deg == lambda)
            .map(|(m, _)| VertexSet::from_members(n, (0..n).filter(|v| m >> v & 1 == 1)))
            .collect();
        let family = TightFamily::new(lambda, tight);
        let (out, trace) = uncross_traced(&family, &d).unwrap();
        assert!(out.is_cross_free());
        assert!(trace.windows(2).all(|w| w[1] < w[0]));
        assert!(out.members.iter().all(|z| d.in_degree(z) == lambda));
    }
}

#[test]
fn certificates_verify_on_random_blocked_instances() {
    // Reversing random F inside k-arc-connected digraphs; whenever no F arc
    // is reversible (necessarily above the guarantee floor), the certificate
    // must satisfy every property.
    let mut rng = common::rng(21);
    let mut blocked = 0;
    for i in 0..4000 {
        let n = 3 + i % 7;
        let k = 2 + i % 3;
        let h = common::random_connected(&mut rng, n, k, i % 4);
        let f = common::random_subset(&mut rng, &h, 0.2 + 0.1 * (i % 3) as f64);
        if f.is_empty() {
            continue;
        }
        let d = h.reverse_set(&f).unwrap();
        let lambda = arc_connectivity(&d).unwrap().value;
        if lambda >= k {
            continue;
        }
        let root = i % n;
        let out = revarc::Search::new(k)
            .with_root(root)
            .find_reversible_arc(&d, &f)
            .unwrap();
        if out.chosen.is_none() {
            blocked += 1;
            assert!(lambda > thresholds(k).unwrap().guarantee_floor);
            let cert = out.certificate.unwrap();
            assert_eq!(cert.root, root);
            let report = verify_certificate(&d, &f, &cert);
            assert!(report.is_valid(), "{report}");
        }
    }
    eprintln!("blocked random instances: {blocked}");
}

#[test]
fn scaled_and_relabeled_fixtures_stay_blocked() {
    let mut rng = common::rng(33);
    for name in ["fig1", "fig2"] {
        let fx = revarc::fixture(name).unwrap();
        for t in 1..=2 {
            let (d, f) = common::scale(&fx.digraph, &fx.f, t);
            let (d, f) = common::relabel(&mut rng, &d, &f);
            let k = fx.k * t;
            assert_eq!(arc_connectivity(&d).unwrap().value, fx.expected_lambda * t);
            let root = t % d.vertex_count();
            let out = revarc::Search::new(k)
                .with_root(root)
                .find_reversible_arc(&d, &f)
                .unwrap();
            assert_eq!(out.chosen, None, "{name} x{t}");
            let report = verify_certificate(&d, &f, &out.certificate.unwrap());
            assert!(report.is_valid(), "{name} x{t}\n{report}");
        }
    }
}

#[test]
fn reversible_arc_prevents_certificate() {
    let fx = revarc::fixture("triangle_example").unwrap();
    assert_eq!(
        blocking_certificate(&fx.digraph, &fx.f, 2, 0),
        Err(Error::ArcNotBlocked(revarc::ArcId(0)))
    );
    let out = find_reversible_arc(&fx.digraph, &fx.f, 2, Mode::First).unwrap();
    assert!(out.certificate.is_none());
}

#[test]
fn surplus_recounted_from_arc_lists() {
    for name in ["fig1", "fig2"] {
        let fx = revarc::fixture(name).unwrap();
        let cert = blocking_certificate(&fx.digraph, &fx.f, fx.k, 0).unwrap();
        let gap = fx.k - cert.lambda;
        let f_arcs: Vec<_> = fx.f.iter().map(|id| *fx.digraph.arc(id).unwrap()).collect();
        for x in &cert.f_in {
            let leaving = f_arcs
                .iter()
                .filter(|a| x.contains(a.tail) && !x.contains(a.head))
                .count();
            let entering = f_arcs
                .iter()
                .filter(|a| !x.contains(a.tail) && x.contains(a.head))
                .count();
            assert!(entering >= 1 && leaving >= entering + gap);
        }
        for y in &cert.f_out {
            let leaving = f_arcs
                .iter()
                .filter(|a| y.contains(a.tail) && !y.contains(a.head))
                .count();
            let entering = f_arcs
                .iter()
                .filter(|a| !y.contains(a.tail) && y.contains(a.head))
                .count();
            assert!(leaving >= 1 && entering >= leaving + gap);
        }
    }
}
