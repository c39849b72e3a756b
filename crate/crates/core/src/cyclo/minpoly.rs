//! Minimal polynomials over `Q` of elements of the quadratic algebra.
//!
//! The annihilating polynomial is the product, over the distinct Galois
//! orbits, of the quadratics `(X - u^σ)² - (v^σ)² a^σ`. Its coefficients are
//! obtained from power sums (absolute traces of powers of `x`) by Newton's
//! identities, which avoids multiplying polynomials over `Q(ζ_N)`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elem::CycElem;
use super::ext::ExtElem;
use super::field::{cyclotomic_polynomial, totient};
use super::poly::RationalPoly;

/// Monic polynomial with the given power sums `p_1..p_D` of its roots.
pub fn from_power_sums(power_sums: &[BigRational]) -> RationalPoly {
    let d = power_sums.len();
    let mut e = vec![BigRational::one()];
    for k in 1..=d {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    let coeffs = (0..=d)
        .map(|j| {
            // coefficient of X^j is (-1)^(d-j) e_(d-j)
            let k = d - j;
            if k % 2 == 0 {
                e[k].clone()
            } else {
                -e[k].clone()
            }
        })
        .collect();
    RationalPoly::new(coeffs)
}

/// Minimal polynomial of a cyclotomic element: `∏ (X - c)` over its distinct conjugates.
pub fn minimal_polynomial_cyc(x: &CycElem) -> RationalPoly {
    if let Some(r) = x.as_rational() {
        return RationalPoly::linear_root(r);
    }
    let d = x.distinct_conjugates().len();
    let phi = x.degree();
    let ratio = BigRational::new(BigInt::from(d), BigInt::from(phi));
    let mut sums = Vec::with_capacity(d);
    let mut power = x.clone();
    for i in 1..=d {
        sums.push(power.trace() * &ratio);
        if i < d {
            power = &power * x;
        }
    }
    from_power_sums(&sums)
}

/// Orbit size of `(2u, u² - v²a)` under `Gal(Q(ζ_N)/Q)`.
fn pair_orbit_size(x: &ExtElem) -> usize {
    let c1 = x.u().scale_int(2);
    let c0 = x.norm();
    let mut seen = HashSet::new();
    for &k in c1.field().units() {
        seen.insert((c1.apply_automorphism(k as i64), c0.apply_automorphism(k as i64)));
    }
    seen.len()
}

/// The Galois-product polynomial `∏_{distinct σ} ((X - u^σ)² - (v^σ)² a^σ)`.
pub fn galois_quadratic_product(x: &ExtElem) -> RationalPoly {
    let d = pair_orbit_size(x);
    let phi = x.u().degree();
    let ratio = BigRational::new(BigInt::from(2 * d), BigInt::from(phi));
    let mut sums = Vec::with_capacity(2 * d);
    let mut power = x.clone();
    for i in 1..=2 * d {
        sums.push(power.u().trace() * &ratio);
        if i < 2 * d {
            power = &power * x;
        }
    }
    from_power_sums(&sums)
}

/// Evaluates `p(x)` in the quadratic algebra.
pub fn eval_at(p: &RationalPoly, x: &ExtElem) -> ExtElem {
    let mut acc = x.zero_like();
    for c in p.coeffs().iter().rev() {
        acc = &acc * x + ExtElem::from_rational_in(x.algebra(), c);
    }
    acc
}

/// Monic generator of `{p ∈ Q[X] : p(x) = 0}` in the quadratic algebra.
///
/// When `v = 0` this is the usual minimal polynomial of `u`. Otherwise it is
/// the squarefree part of the Galois-product polynomial, except in a
/// non-reduced algebra (`a = 0`) where nilpotents may need a squared factor.
pub fn minimal_polynomial(x: &ExtElem) -> RationalPoly {
    if let Some(u) = x.as_base() {
        return minimal_polynomial_cyc(u);
    }
    let full = galois_quadratic_product(x);
    let sq = full.squarefree_part();
    if eval_at(&sq, x).is_zero() {
        return sq;
    }
    let candidate = sq.mul(&sq).gcd(&full);
    debug_assert!(eval_at(&candidate, x).is_zero());
    candidate
}

/// Orders `m` with `p = ∏ Φ_m`, if `p` is a product of distinct cyclotomic polynomials.
pub fn cyclotomic_factors(p: &RationalPoly) -> Option<Vec<u64>> {
    if !p.is_monic_integer() {
        return None;
    }
    let mut rest = p.clone();
    let mut orders = Vec::new();
    let deg = p.degree()? as u64;
    // φ(m) ≥ sqrt(m/2), so every candidate order is at most 2·deg²
    let bound = 2 * deg * deg + 2;
    for m in 1..=bound {
        let rd = rest.degree()? as u64;
        if rd == 0 {
            break;
        }
        if totient(m) > rd {
            continue;
        }
        let phi_m = RationalPoly::from_ints(&cyclotomic_polynomial(m));
        let (q, r) = rest.div_rem(&phi_m);
        if r.is_zero() {
            orders.push(m);
            rest = q;
        }
    }
    (rest.degree() == Some(0) && rest.is_monic()).then_some(orders)
}
