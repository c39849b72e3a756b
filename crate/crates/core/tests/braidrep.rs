use monodromy_core::braidrep::*;
use monodromy_core::cyclo::{CycElem, ExtElem};
use proptest::prelude::*;

fn lvl(l: u32) -> Level {
    Level::new(l).unwrap()
}

fn zeta(ctx: &TkContext, k: i64) -> ExtElem {
    ctx.embed(CycElem::root_of_unity(ctx.conductor(), k))
}

#[test]
fn level_zero_rejected() {
    assert_eq!(Level::new(0), Err(BraidError::InvalidLevel(0)));
}

#[test]
fn generator_spectra() {
    for l in 1..=16 {
        let ctx = TkContext::get(lvl(l));
        let q14 = ctx.embed(ctx.q_quarter_pow(1));
        let qm34 = ctx.embed(ctx.q_quarter_pow(-3));
        let qm12 = ctx.embed(ctx.q_quarter_pow(-2));
        for g in [BraidGen::G1, BraidGen::G2] {
            let m = ctx.generator(g);
            assert_eq!(m.trace(), &q14 - &qm34, "trace at l={l}");
            assert_eq!(m.det(), -&qm12, "det at l={l}");
            // (X - q^(1/4))(X + q^(-3/4)) = X² + (q^(-3/4) - q^(1/4))X - q^(-1/2)
            let [c0, c1, c2] = m.char_poly();
            assert_eq!(c0, -&qm12);
            assert_eq!(c1, &qm34 - &q14);
            assert!(c2.is_one());
            // both eigenvalues annihilate the characteristic polynomial
            for lambda in [q14.clone(), -&qm34] {
                let val = &(&lambda * &lambda) + &(&(&c1 * &lambda) + &c0);
                assert!(val.is_zero());
            }
        }
    }
}

#[test]
fn level_two_numeric_generator() {
    let m = tk_generator(lvl(2), BraidGen::G1);
    let boxes = m.numeric(80);
    // e^{-3πi/8}·diag(i, -1), computed in f64
    let th = -3.0 * std::f64::consts::PI / 8.0;
    let (c, s) = (th.cos(), th.sin());
    let expect = [[(-s, c), (0.0, 0.0)], [(0.0, 0.0), (-c, -s)]];
    for i in 0..2 {
        for j in 0..2 {
            let (re, im) = expect[i][j];
            assert!(boxes[i][j].contains_f64(re, im, 1e-10), "entry {i}{j}");
        }
    }
}

#[test]
fn braid_relation_and_central_cube() {
    for l in 1..=16 {
        let ctx = TkContext::get(lvl(l));
        let a = ctx.eval(&BraidWord::parse("g1 g2 g1").unwrap());
        let b = ctx.eval(&BraidWord::parse("g2 g1 g2").unwrap());
        assert_eq!(a, b, "braid relation at l={l}");
        let cube = ctx.eval(&BraidWord::parse("g1 g2").unwrap().pow(3));
        assert!(cube.is_scalar(), "(g1 g2)^3 scalar at l={l}");
        // the scalar squared is det((g1 g2)^3) = (-q^(-1/2))^6 = q^-3
        let s = cube.entry(0, 0);
        assert_eq!(s * s, zeta(&ctx, -24));
    }
}

#[test]
fn empty_word_is_identity() {
    assert!(eval_braid(lvl(3), &BraidWord::empty()).is_identity());
}

#[test]
fn tk_matrices_at_level_one_coincide() {
    let ctx = TkContext::get(lvl(1));
    assert_eq!(ctx.generator(BraidGen::G1), ctx.generator(BraidGen::G2));
}

#[test]
fn lantern_relation() {
    for l in [1, 2, 3, 4, 8, 11] {
        let r = lantern_check(lvl(l));
        assert!(r.identity, "l={l}");
        assert!(r.braid_word.is_empty());
    }
    let neg = lantern_check_word(lvl(3), &SigmaWord::parse("s3 s2").unwrap());
    assert!(!neg.identity);
}

#[test]
fn loop_relation_order() {
    for l in 1..=10 {
        let ctx = TkContext::get(lvl(l));
        let p = ctx
            .sigma_generator(SigmaGen::S1)
            .mul(&ctx.sigma_generator(SigmaGen::S2))
            .mul(&ctx.sigma_generator(SigmaGen::S3));
        // the reversed product is a commutator, nontrivial once l >= 2
        assert_eq!(p.is_identity(), l == 1);
        let r = ctx
            .sigma_generator(SigmaGen::S3)
            .mul(&ctx.sigma_generator(SigmaGen::S2))
            .mul(&ctx.sigma_generator(SigmaGen::S1));
        assert!(r.is_identity(), "l={l}");
    }
}

fn arb_braid() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0usize..2, -3i64..=3), 0..7).prop_map(|v| {
        BraidWord::from_letters(v.into_iter().map(|(g, e)| (BraidGen::all()[g], e)))
    })
}

fn arb_xi() -> impl Strategy<Value = XiWord> {
    prop::collection::vec((0usize..3, -2i64..=2), 0..4)
        .prop_map(|v| XiWord::from_letters(v.into_iter().map(|(g, e)| (XiGen::all()[g], e))))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(500) })]

    #[test]
    fn five_point_pipeline_is_homomorphic(a in arb_xi(), b in arb_xi(), l in prop::sample::select(vec![3u32, 5, 6])) {
        let ctx = TkContext::get(lvl(l));
        let f = |w: &XiWord| ctx.eval(&psi_map(&phi_map(w)));
        prop_assert_eq!(f(&a.concat(&b)), f(&a).mul(&f(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn words_stay_reduced(w in arb_braid()) {
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0].0, pair[1].0);
        }
        prop_assert!(w.letters().iter().all(|&(_, e)| e != 0));
        prop_assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn determinant_tracks_exponent_sum(w in arb_braid(), l in 1u32..=8) {
        let ctx = TkContext::get(lvl(l));
        let det = ctx.eval(&w).det();
        let unit = -ctx.embed(ctx.q_quarter_pow(-2));
        prop_assert_eq!(det, unit.pow(w.exponent_sum()).unwrap());
    }

    #[test]
    fn evaluation_is_homomorphic(a in arb_braid(), b in arb_braid(), l in 1u32..=6) {
        let ctx = TkContext::get(lvl(l));
        prop_assert_eq!(ctx.eval(&a.concat(&b)), ctx.eval(&a).mul(&ctx.eval(&b)));
    }

    #[test]
    fn matrix_product_associates(a in arb_braid(), b in arb_braid(), c in arb_braid()) {
        let ctx = TkContext::get(lvl(5));
        let (x, y, z) = (ctx.eval(&a), ctx.eval(&b), ctx.eval(&c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn inverses_are_exact(w in arb_braid(), l in 1u32..=6) {
        let ctx = TkContext::get(lvl(l));
        let m = ctx.eval(&w);
        prop_assert!(m.mul(&m.try_inv().unwrap()).is_identity());
        prop_assert_eq!(ctx.eval(&w.inverse()), m.try_inv().unwrap());
    }
}
