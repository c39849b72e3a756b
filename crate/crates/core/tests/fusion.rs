use monodromy_core::braidrep::Level;
use monodromy_core::fusion::*;
use monodromy_core::par::Execution;
use num_bigint::BigUint;
use proptest::prelude::*;

fn lvl(l: u32) -> Level {
    Level::new(l).unwrap()
}

fn dim(g: u32, w: &[u32], l: u32) -> BigUint {
    block_dimension(&BlockSpec::new(g, w, lvl(l)).unwrap())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// All sequences of length `n` over `0..=l`.
fn sequences(n: usize, l: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| (0..=l).map(move |m| [s.clone(), vec![m]].concat()))
            .collect();
    }
    out
}

#[test]
fn fusion_examples() {
    let w = |m| Weight::new(m, lvl(6)).unwrap();
    let f = |a, b, l| {
        fusion_product(Weight::new(a, lvl(l)).unwrap(), Weight::new(b, lvl(l)).unwrap(), lvl(l))
            .unwrap()
            .into_iter()
            .map(|w| w.get())
            .collect::<Vec<_>>()
    };
    assert_eq!(f(1, 1, 1), vec![0]);
    for l in 2..=8 {
        assert_eq!(f(1, 1, l), vec![0, 2]);
        for b in 0..=l {
            assert_eq!(f(0, b, l), vec![b]);
        }
    }
    assert!(Weight::new(7, lvl(6)).is_err());
    assert_eq!(w(3).dual(), w(3));
}

#[test]
fn dimension_examples() {
    for l in 1..=12 {
        assert_eq!(dim(0, &[1, 1], l), big(1), "l={l}");
        assert_eq!(dim(1, &[0], l), big(l as u64 + 1));
        assert_eq!(dim(1, &[], l), big(l as u64 + 1));
        let spec = BlockSpec::new(1, &[0], lvl(l)).unwrap();
        assert_eq!(verlinde_dimension(&spec).unwrap(), big(l as u64 + 1));
        assert_eq!(verlinde_dimension(&BlockSpec::new(0, &[1, 1], lvl(l)).unwrap()).unwrap(), big(1));
    }
    for l in 2..=12 {
        assert_eq!(dim(0, &[1, 1, 1, 1], l), big(2));
    }
    assert_eq!(dim(0, &[1, 1, 1, 1], 1), big(1));
    assert_eq!(verlinde_dimension(&BlockSpec::new(0, &[1, 1, 1, 1], lvl(1)).unwrap()).unwrap(), big(1));
    // (0, 0, ϖ, …, ϖ) with 2g - 4 copies of ϖ
    for g in 3..=6u32 {
        let mut w = vec![0, 0];
        w.extend(std::iter::repeat(1).take((2 * g - 4) as usize));
        for l in 1..=6 {
            assert!(dim(0, &w, l) > big(0));
        }
    }
}

#[test]
fn weight_sum_parity_kills_blocks() {
    for l in 1..=6 {
        assert_eq!(dim(0, &[1], l), big(0));
        assert_eq!(dim(2, &[1, 0, 0], l), big(0));
    }
}

#[test]
fn decompositions_agree_and_vacua_propagate() {
    let specs: Vec<(u32, Vec<u32>, u32)> = (1..=6)
        .flat_map(|l| {
            (0..=2).flat_map(move |g| (0..=5).flat_map(move |n| sequences(n, l).into_iter().map(move |w| (g, w, l))))
        })
        .collect();
    let bad = Execution::default().flat_map(&specs, |(g, w, l)| {
        let spec = BlockSpec::new(*g, w, lvl(*l)).unwrap();
        let a = block_dimension(&spec);
        let mut with_vacuum = spec.clone();
        with_vacuum.weights.push(Weight::new(0, lvl(*l)).unwrap());
        let ok = a == block_dimension_balanced(&spec) && a == block_dimension(&with_vacuum);
        if ok { vec![] } else { vec![(*g, w.clone(), *l)] }
    });
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn handle_factorization() {
    for l in 1..=6 {
        for g in 1..=2 {
            for n in 0..=4 {
                for w in sequences(n, l) {
                    let lhs = dim(g, &w, l);
                    let rhs: BigUint = (0..=l)
                        .map(|mu| {
                            let mut v = w.clone();
                            v.extend([mu, mu]);
                            dim(g - 1, &v, l)
                        })
                        .sum();
                    assert_eq!(lhs, rhs, "g={g} w={w:?} l={l}");
                }
            }
        }
    }
}

#[test]
fn fusion_commutes_and_associates() {
    for l in 1..=6 {
        for a in 0..=l {
            for b in 0..=l {
                let wa = Weight::new(a, lvl(l)).unwrap();
                let wb = Weight::new(b, lvl(l)).unwrap();
                assert_eq!(fusion_product(wa, wb, lvl(l)).unwrap(), fusion_product(wb, wa, lvl(l)).unwrap());
                for c in 0..=l {
                    for d in 0..=l {
                        // multiplicity of d in (a⊗b)⊗c and a⊗(b⊗c)
                        let left: u32 = (0..=l)
                            .filter(|&x| fusion_coefficient(a, b, x, l) && fusion_coefficient(x, c, d, l))
                            .count() as u32;
                        let right: u32 = (0..=l)
                            .filter(|&x| fusion_coefficient(b, c, x, l) && fusion_coefficient(a, x, d, l))
                            .count() as u32;
                        assert_eq!(left, right, "l={l} {a} {b} {c} -> {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn report_flags_agreement() {
    let r = dimension_report(&BlockSpec::new(2, &[1, 1, 2], lvl(4)).unwrap()).unwrap();
    assert!(r.agreement);
    assert_eq!(r.dimension, r.verlinde);
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn dimensions_are_permutation_invariant(
        l in 1u32..=6,
        g in 0u32..=2,
        raw in prop::collection::vec(0u32..=6, 0..=6),
        seed in any::<u64>(),
    ) {
        let w: Vec<u32> = raw.iter().map(|m| m % (l + 1)).collect();
        let mut shuffled = w.clone();
        let k = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % k);
        shuffled.reverse();
        let a = BlockSpec::new(g, &w, lvl(l)).unwrap();
        let b = BlockSpec::new(g, &shuffled, lvl(l)).unwrap();
        prop_assert_eq!(block_dimension(&a), block_dimension(&b));
        prop_assert_eq!(verlinde_dimension(&a).unwrap(), verlinde_dimension(&b).unwrap());
        prop_assert_eq!(block_dimension(&a), verlinde_dimension(&a).unwrap());
    }

    #[test]
    fn verlinde_matches_path_count_beyond_exhaustive_range(
        l in 7u32..=14,
        g in 0u32..=3,
        raw in prop::collection::vec(0u32..=14, 0..=9),
    ) {
        let w: Vec<u32> = raw.iter().map(|m| m % (l + 1)).collect();
        let spec = BlockSpec::new(g, &w, lvl(l)).unwrap();
        prop_assert_eq!(block_dimension(&spec), verlinde_dimension(&spec).unwrap());
        prop_assert_eq!(block_dimension(&spec), block_dimension_balanced(&spec));
    }
}
