mod common;

use monodromy_core::braidrep::*;
use monodromy_core::cyclo::{CycElem, ExtElem};
use monodromy_core::orderlab::*;
use monodromy_core::par::Execution;
use proptest::prelude::*;

fn lvl(l: u32) -> Level {
    Level::new(l).unwrap()
}

fn sigma(l: u32) -> Mat2 {
    TkContext::get(lvl(l)).eval_sigma(&SigmaWord::parse("s1^-1 s2").unwrap())
}

fn loop_gens(l: u32) -> Vec<Mat2> {
    let ctx = TkContext::get(lvl(l));
    vec![ctx.sigma_generator(SigmaGen::S1), ctx.sigma_generator(SigmaGen::S2)]
}

const FINITE_LEVELS: [u32; 4] = [1, 2, 4, 8];

#[test]
fn projective_equality_basics() {
    let ctx = TkContext::get(lvl(3));
    let m = ctx.generator(BraidGen::G1).clone();
    let five = ctx.embed(CycElem::from_int(ctx.conductor(), 5));
    assert!(projective_equal(&m, &m.scale(&five)).unwrap());
    let one = ctx.embed(CycElem::one(ctx.conductor()));
    let d = Mat2::diag(one.clone(), -&one);
    assert!(!projective_equal(&ctx.identity(), &d).unwrap());
    let zero = Mat2::scalar(one.zero_like());
    assert_eq!(projective_equal(&zero, &m), Err(OrderError::Singular));
    // m1 = m2 projectively at level one
    let g = loop_gens(1);
    assert!(projective_equal(&g[0], &g[1]).unwrap());
}

#[test]
fn sigma_trace_identity_up_to_fifty() {
    for l in 1..=50 {
        let tr = trace_of_sigma(lvl(l)).unwrap();
        // oracle: the same value evaluated numerically from cosines
        let m = (l + 2) as f64;
        let th = 2.0 * std::f64::consts::PI / m;
        let expect = 2.0 - 2.0 * th.cos() + 2.0 * (2.0 * th).cos();
        assert!(tr.numeric_interval(64).contains_f64(expect, 0.0, 1e-9), "l={l}");
    }
    assert!(trace_of_sigma(lvl(2)).unwrap().is_zero());
    assert_eq!(
        trace_of_sigma(lvl(1)).unwrap(),
        TkContext::get(lvl(1)).embed(CycElem::from_int(lvl(1).conductor(), 2))
    );
}

#[test]
fn masbaum_examples() {
    match masbaum_scan(lvl(10)) {
        ScanVerdict::Violation { galois_k, value_interval } => {
            assert_eq!(galois_k, 5);
            let lo: f64 = value_interval.0.parse().unwrap();
            let hi: f64 = value_interval.1.parse().unwrap();
            let v = 3.0 + 3f64.sqrt();
            assert!(lo <= v && v <= hi);
        }
        other => panic!("{other:?}"),
    }
    match masbaum_scan(lvl(3)) {
        ScanVerdict::Violation { galois_k, value_interval } => {
            assert_eq!(galois_k, 2);
            assert!(value_interval.0.starts_with("4.236"));
        }
        other => panic!("{other:?}"),
    }
    for l in FINITE_LEVELS {
        assert_eq!(masbaum_scan(lvl(l)), ScanVerdict::AllConjugatesBounded, "l={l}");
    }
}

#[test]
fn scan_and_order_agree_up_to_twenty() {
    for l in 1..=20 {
        let scan = masbaum_scan(lvl(l));
        let verdict = projective_order(&sigma(l), DEFAULT_POWER_CAP).unwrap();
        let finite = FINITE_LEVELS.contains(&l);
        assert_eq!(scan == ScanVerdict::AllConjugatesBounded, finite, "scan l={l}");
        assert_eq!(verdict.finite_order().is_some(), finite, "order l={l}");
    }
}

#[test]
fn sigma_orders_at_finite_levels() {
    let expect = [(1, 1), (2, 2), (4, 2), (8, 3)];
    for (l, n) in expect {
        assert_eq!(projective_order(&sigma(l), 100).unwrap(), OrderVerdict::Finite { order: n }, "l={l}");
    }
}

#[test]
fn finite_verdicts_are_minimal() {
    for l in FINITE_LEVELS {
        let ctx = TkContext::get(lvl(l));
        for w in ["s1", "s2", "s1^-1 s2", "s1 s2", "s1 s2^-1 s1", "g1", "g2", "g1 g2"] {
            let m = if w.starts_with('g') {
                ctx.eval(&BraidWord::parse(w).unwrap())
            } else {
                ctx.eval_sigma(&SigmaWord::parse(w).unwrap())
            };
            let n = projective_order(&m, 1000).unwrap().finite_order().unwrap();
            for k in 1..n {
                assert!(!m.pow(k as i64).unwrap().is_scalar(), "l={l} w={w} k={k}");
            }
            assert!(m.pow(n as i64).unwrap().is_scalar());
            if let Some(g) = gl_order(&m, 100_000).unwrap().finite_order() {
                for k in 1..g {
                    assert!(!m.pow(k as i64).unwrap().is_identity());
                }
                assert!(m.pow(g as i64).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn generator_orders_match_table_proofs() {
    for (l, n) in [(4, 3), (8, 5)] {
        for m in loop_gens(l) {
            assert_eq!(projective_order(&m, 100).unwrap().finite_order(), Some(n));
        }
    }
    // the traceless element m1^-1 m2 m1^-1 at level 8
    let g = loop_gens(8);
    let x = g[0].try_inv().unwrap().mul(&g[1]).mul(&g[0].try_inv().unwrap());
    assert!(x.trace().is_zero());
    assert_eq!(projective_order(&x, 100).unwrap().finite_order(), Some(2));
}

#[test]
fn infinite_witnesses_are_certified() {
    for l in (3..=50).filter(|l| !FINITE_LEVELS.contains(l)) {
        match projective_order(&sigma(l), DEFAULT_POWER_CAP).unwrap() {
            OrderVerdict::Infinite { witness: Witness::Galois { galois_k, value_interval, imag_interval, .. } } => {
                assert!(imag_interval.is_none());
                let n = lvl(l).conductor();
                assert_eq!(num_integer::gcd(galois_k, n), 1);
                let lo: f64 = value_interval.0.parse().unwrap();
                let hi: f64 = value_interval.1.parse().unwrap();
                assert!(lo > 2.0 || hi < -2.0, "l={l}: [{lo}, {hi}]");
            }
            other => panic!("l={l}: {other:?}"),
        }
    }
}

#[test]
fn infinite_elements_never_reach_scalars() {
    for l in (3..=12).filter(|l| !FINITE_LEVELS.contains(l)) {
        let m = sigma(l);
        assert!(projective_order(&m, 100).unwrap().is_infinite());
        assert!(never_scalar_up_to(&m, 2000), "l={l}");
        // exact spot check of the modular certificate on early powers
        let mut p = m.clone();
        for _ in 0..30 {
            assert!(!p.is_scalar());
            p = p.mul(&m);
        }
    }
}

#[test]
fn gl_order_examples() {
    for l in 1..=16 {
        let m = tk_generator(lvl(l), BraidGen::G1);
        assert!(gl_order(&m, DEFAULT_POWER_CAP).unwrap().finite_order().is_some(), "l={l}");
    }
    assert!(gl_order(&sigma(3), 100).unwrap().is_infinite());
    let id = TkContext::get(lvl(3)).identity();
    assert_eq!(gl_order(&id, 10).unwrap(), OrderVerdict::Finite { order: 1 });
}

#[test]
fn parabolic_and_non_integral() {
    let ctx = TkContext::get(lvl(3));
    let n = ctx.conductor();
    let e = |k: i64| ctx.embed(CycElem::from_int(n, k));
    let unipotent = Mat2::new(e(1), e(1), e(0), e(1));
    assert_eq!(
        projective_order(&unipotent, 10).unwrap(),
        OrderVerdict::Infinite { witness: Witness::Parabolic(ParabolicTag::Parabolic) }
    );
    let m = Mat2::diag(e(2), e(1));
    assert!(matches!(
        projective_order(&m, 10).unwrap(),
        OrderVerdict::Infinite { witness: Witness::NonIntegral { .. } }
    ));
    let json = serde_json::to_value(projective_order(&unipotent, 10).unwrap()).unwrap();
    assert_eq!(json["witness"], "parabolic");
}

#[test]
fn table_of_finite_images() {
    let expect = [
        (1, GroupId::Cyclic { n: 3 }, 3),
        (2, GroupId::Klein4, 4),
        (4, GroupId::A4, 12),
        (8, GroupId::A5, 60),
    ];
    for (l, id, order) in expect {
        let c = classify_group(&loop_gens(l), DEFAULT_CLOSURE_CAP, DEFAULT_POWER_CAP, Execution::default()).unwrap();
        assert_eq!(c.group, id, "l={l}");
        assert_eq!(c.order, Some(order));
        assert_eq!(id.order(), Some(order));
        // oracle: floating-point closure of the same loop images
        let (g1, g2) = common::numeric_tk(l);
        let inv = |m: &common::CMat| common::cinv2(m);
        let m1 = common::cmul(&common::cmul(&g2, &common::cmul(&g1, &g1)), &inv(&g2));
        let m2 = common::cmul(&g2, &g2);
        let invs = [inv(&m1), inv(&m2)];
        assert_eq!(common::numeric_closure_size(&[m1, m2], &invs, true, 1000), Some(order as usize));
    }
    let a5 = classify_group(&loop_gens(8), 100, 100, Execution::Sequential).unwrap();
    let p = a5.presentation.unwrap();
    assert_eq!(p.orders, [2, 3, 5]);
}

#[test]
fn infinite_image_hits_cap() {
    let c = classify_group(&loop_gens(3), 500, 100, Execution::default()).unwrap();
    assert_eq!(c.group, GroupId::InfiniteOrCapExceeded { cap: 500 });
    assert!(matches!(
        group_closure(&loop_gens(3), 500, ClosureMode::Projective, Execution::default()),
        Err(ClosureError::CapExceeded { cap: 500, .. })
    ));
}

#[test]
fn closure_is_deterministic_across_modes() {
    for l in [2, 4, 8] {
        let a = group_closure(&loop_gens(l), 1000, ClosureMode::Projective, Execution::Sequential).unwrap();
        let b = group_closure(&loop_gens(l), 1000, ClosureMode::Projective, Execution::Parallel).unwrap();
        assert_eq!(a.elements, b.elements);
        assert_eq!(a.generation_sizes, b.generation_sizes);
    }
}

#[test]
fn gl_images_of_the_braid_group_are_finite() {
    for l in FINITE_LEVELS {
        let ctx = TkContext::get(lvl(l));
        let gens = vec![ctx.generator(BraidGen::G1).clone(), ctx.generator(BraidGen::G2).clone()];
        let c = group_closure(&gens, DEFAULT_CLOSURE_CAP, ClosureMode::Linear, Execution::default()).unwrap();
        let (g1, g2) = common::numeric_tk(l);
        let inv = [common::cinv2(&g1), common::cinv2(&g2)];
        let oracle = common::numeric_closure_size(&[g1, g2], &inv, false, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(c.order(), oracle, "l={l}");
        for g in &gens {
            assert!(gl_order(g, DEFAULT_POWER_CAP).unwrap().finite_order().is_some());
        }
    }
}

fn arb_mat() -> impl Strategy<Value = Mat2> {
    prop::collection::vec((-3i64..=3, 0i64..40), 8).prop_filter_map("invertible", |v| {
        let ctx = TkContext::get(lvl(3));
        let n = ctx.conductor();
        let e = |i: usize| -> ExtElem {
            let (c, k) = v[i];
            ctx.embed(CycElem::from_exponents(n, &[(k, c), (0, v[(i + 4) % 8].0)]))
        };
        let m = Mat2::new(e(0), e(1), e(2), e(3));
        m.is_invertible().then_some(m)
    })
}

fn arb_scalar() -> impl Strategy<Value = ExtElem> {
    (1i64..=4, 0i64..40).prop_map(|(c, k)| {
        let ctx = TkContext::get(lvl(3));
        ctx.embed(CycElem::from_exponents(ctx.conductor(), &[(k, c)]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(200) })]

    #[test]
    fn projective_equality_is_an_equivalence(m in arb_mat(), n in arb_mat(), a in arb_scalar(), b in arb_scalar()) {
        prop_assert!(projective_equal(&m, &m).unwrap());
        let ma = m.scale(&a);
        let mab = ma.scale(&b);
        prop_assert!(projective_equal(&m, &ma).unwrap());
        prop_assert!(projective_equal(&ma, &m).unwrap());
        prop_assert!(projective_equal(&ma, &mab).unwrap() && projective_equal(&m, &mab).unwrap());
        prop_assert_eq!(projective_equal(&m, &n).unwrap(), projective_equal(&n, &m).unwrap());
        prop_assert_eq!(projective_equal(&m, &n).unwrap(), projective_normal_form(&m) == projective_normal_form(&n));
    }
}
