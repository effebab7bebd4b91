use std::collections::HashSet;

use proptest::prelude::*;
use spiderlc::chromatic::two_row_x_alpha_fast;
use spiderlc::schur2::is_2s_positive;
use spiderlc::verifier::{
    audit_phi, c522_domain, classify_alpha, extract_c0, phi, phi_inverse, sweep_cases,
    verify_elimination, verify_pineapple, verify_deletion_slice, verify_leaf_clique_slice, verify_spider, CaseTag,
    SpiderOptions,
};
use spiderlc::{Graph, SpiderShape, WeightMap};

fn partitions(total: usize, max: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(total)).rev() {
        for rest in partitions(total - first, first) {
            let mut p = vec![first];
            p.extend(rest);
            out.push(p);
        }
    }
    out
}

fn spiders(max_vertices: usize) -> Vec<Vec<usize>> {
    (1..max_vertices).flat_map(|s| partitions(s, s)).collect()
}

#[test]
fn case_claims_hold_exhaustively() {
    let mut seen = HashSet::new();
    for lambda in spiders(8) {
        let shape = SpiderShape::new(&lambda).unwrap();
        let sweep = sweep_cases(&shape, 6).unwrap();
        assert!(
            sweep.violations.is_empty(),
            "{lambda:?}: {:?}",
            &sweep.violations[..1]
        );
        assert_eq!(sweep.cases.values().sum::<usize>(), sweep.maps);
        seen.extend(sweep.cases.keys().copied());
    }
    assert_eq!(seen.len(), CaseTag::ALL.len());
}

#[test]
fn phi_audit_on_small_spiders() {
    for lambda in spiders(11) {
        let shape = SpiderShape::new(&lambda).unwrap();
        let audit = audit_phi(&shape, 2).unwrap();
        assert!(
            audit.violations.is_empty(),
            "{lambda:?}: {:?}",
            &audit.violations[..1]
        );
        assert!(audit.injective);
        for row in &audit.rows {
            assert_eq!(row.critical_coefficient, row.expected);
        }
    }
}

#[test]
fn elimination_factored_and_direct_agree() {
    for lambda in [
        vec![1, 1, 1],
        vec![3, 3, 3],
        vec![2, 1, 1, 1],
        vec![4, 3, 1],
    ] {
        let shape = SpiderShape::new(&lambda).unwrap();
        for (_, group) in c522_domain(&shape, 1) {
            for alpha in group.iter().step_by(5) {
                let e = verify_elimination(&shape, alpha).unwrap();
                assert!(e.holds(), "{alpha}: {:?}", e.violations());
                assert_eq!(e.direct_sum, e.factored_sum);
            }
        }
    }
}

#[test]
fn pineapples_and_spiders_pass() {
    let opts = SpiderOptions {
        audit: true,
        cap: 2,
    };
    for lambda in [vec![3, 2, 2, 1], vec![1, 1, 1], vec![2, 2]] {
        assert!(verify_spider(&lambda, opts).unwrap().passed());
    }
    for (n, lambda) in [(2, vec![1, 1, 1]), (3, vec![2, 1, 1]), (5, vec![1, 1])] {
        let r = verify_pineapple(n, &lambda, opts).unwrap();
        assert!(r.passed(), "{n} {lambda:?}: {:?}", r.violations());
    }
}

#[test]
fn claw_elimination_table() {
    let r = verify_spider(
        &[1, 1, 1],
        SpiderOptions {
            audit: true,
            cap: 2,
        },
    )
    .unwrap();
    let audit = r.audit.unwrap();
    assert_eq!(audit.rows.len(), 1);
    assert_eq!((audit.rows[0].a, audit.rows[0].b), (3, 0));
    assert_eq!(audit.rows[0].critical_coefficient, "1");
}

#[test]
fn reports_are_reproducible() {
    let opts = SpiderOptions {
        audit: true,
        cap: 1,
    };
    let a = verify_spider(&[3, 2, 1], opts)
        .unwrap()
        .to_report()
        .to_json();
    let b = verify_spider(&[3, 2, 1], opts)
        .unwrap()
        .to_report()
        .to_json();
    assert_eq!(a, b);
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed["verdict"], "pass");
}

fn arb_spider_alpha(
    max_vertices: usize,
    max_w: usize,
) -> impl Strategy<Value = (SpiderShape, WeightMap)> {
    proptest::collection::vec(1usize..=4, 1..=5)
        .prop_filter("fits", move |l| l.iter().sum::<usize>() < max_vertices)
        .prop_flat_map(move |mut lambda| {
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            let shape = SpiderShape::new(&lambda).unwrap();
            let n = shape.vertex_count();
            (
                Just(shape),
                proptest::collection::vec(0..=max_w, n).prop_map(WeightMap),
            )
        })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn classification_is_total_and_observation_holds((shape, alpha) in arb_spider_alpha(12, 3)) {
        let tag = classify_alpha(&shape, &alpha).unwrap();
        let g = shape.graph();
        let x = two_row_x_alpha_fast(&g, &alpha).unwrap();
        if tag.expects_zero() {
            prop_assert!(x.is_zero());
        }
        if tag.expects_positive() {
            prop_assert!(is_2s_positive(&x).positive);
        }
        if !is_2s_positive(&x).positive {
            prop_assert_eq!(tag, CaseTag::C522);
            let c0 = extract_c0(&shape, &alpha).unwrap();
            let x_c0 = two_row_x_alpha_fast(&g, &alpha.restrict(&c0.vertices)).unwrap();
            prop_assert!(!is_2s_positive(&x_c0).positive);
        }
        if tag == CaseTag::C522 {
            let image = phi(&shape, &alpha).unwrap();
            prop_assert_eq!(classify_alpha(&shape, &image).unwrap(), CaseTag::C6);
            prop_assert_eq!(image.total(), alpha.total());
            prop_assert_eq!(phi_inverse(&shape, &image).unwrap(), alpha.clone());
            let e = verify_elimination(&shape, &alpha).unwrap();
            prop_assert!(e.holds(), "{:?}", e.violations());
        }
    }

    #[test]
    fn deletion_identity_for_y((g, v, d) in arb_graph(6).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..n, 0usize..=6)
    })) {
        let r = verify_deletion_slice(&g, v, d).unwrap();
        prop_assert!(r.holds(), "{} vs {}", r.lhs, r.rhs());
    }

    #[test]
    fn leaf_identity_for_y((g, d, n) in arb_graph(5).prop_flat_map(|g| (Just(g), 0usize..=5, 2usize..=3))) {
        for v in 0..g.n() {
            if g.degree(v) == 1 {
                let r = verify_leaf_clique_slice(&g, v, n, d).unwrap();
                prop_assert!(r.holds(), "{} vs {}", r.lhs, r.rhs());
            }
        }
    }
}
