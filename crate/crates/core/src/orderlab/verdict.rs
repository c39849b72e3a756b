//! Order decisions for 2×2 matrices in PGL(2) and GL(2).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::OrderError;
use crate::braidrep::{Level, Mat2, SigmaWord, TkContext};
use crate::cyclo::{
    cyclotomic_factors, minimal_polynomial, minimal_polynomial_cyc, sign_decide, CycElem,
    DecimalInterval, ExtElem, QuadAlgebra, RationalPoly,
};

/// Decimal digits used when printing witness intervals.
const WITNESS_DIGITS: usize = 6;
/// Working precision for witness intervals.
const WITNESS_BITS: u32 = 64;

/// Certificate attached to an infinite-order verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// A Galois conjugate of the projective trace invariant lies off `[-2, 2]`.
    Galois {
        galois_k: u32,
        /// Sign of `t` in the conjugate when the invariant involves `t`.
        #[serde(skip_serializing_if = "Option::is_none", default)]
        t_sign: Option<i8>,
        value_interval: DecimalInterval,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        imag_interval: Option<DecimalInterval>,
    },
    /// Repeated eigenvalue on a non-scalar matrix.
    Parabolic(ParabolicTag),
    /// The trace invariant is not an algebraic integer.
    NonIntegral { min_poly: String },
    /// GL only: the determinant is not a root of unity.
    Determinant { det_min_poly: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParabolicTag {
    Parabolic,
}

/// Outcome of an order computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderVerdict {
    Finite { order: u64 },
    Infinite { witness: Witness },
    UndecidedCap { cap: u64 },
}

impl OrderVerdict {
    pub fn finite_order(&self) -> Option<u64> {
        match self {
            OrderVerdict::Finite { order } => Some(*order),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, OrderVerdict::Infinite { .. })
    }
}

/// Precursor verdict from scanning conjugates of the loop trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanVerdict {
    AllConjugatesBounded,
    Violation { galois_k: u32, value_interval: DecimalInterval },
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `true` iff `m = c·n` for a nonzero scalar `c`, by cross-multiplication.
pub fn projective_equal(m: &Mat2, n: &Mat2) -> Result<bool, OrderError> {
    if !m.is_invertible() || !n.is_invertible() {
        return Err(OrderError::Singular);
    }
    let a: Vec<&ExtElem> = m.entries().iter().flatten().collect();
    let b: Vec<&ExtElem> = n.entries().iter().flatten().collect();
    for i in 0..4 {
        for j in i + 1..4 {
            if a[i] * b[j] != a[j] * b[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `2 - q - q⁻¹ + q² + q⁻²` at the session conductor.
pub fn sigma_trace_closed_form(level: Level) -> CycElem {
    let n = level.conductor();
    CycElem::from_exponents(n, &[(0, 2), (8, -1), (-8, -1), (16, 1), (-16, 1)])
}

/// Trace of the image of `s1^-1 s2`, checked against its closed form and `det = 1`.
pub fn trace_of_sigma(level: Level) -> Result<ExtElem, OrderError> {
    let ctx = TkContext::get(level);
    let m = ctx.eval_sigma(&SigmaWord::parse("s1^-1 s2").expect("valid word"));
    if !m.det().is_one() {
        return Err(OrderError::Consistency(format!("det of the loop image is {} at l={}", m.det(), level.get())));
    }
    let tr = m.trace();
    if tr != ctx.embed(sigma_trace_closed_form(level)) {
        return Err(OrderError::Consistency(format!("trace mismatch at l={}", level.get())));
    }
    Ok(tr)
}

/// Scans the conjugates `2 - 2cos(2πk/m) + 2cos(4πk/m)` for `k` prime to `m = l+2`.
pub fn masbaum_scan(level: Level) -> ScanVerdict {
    let m = level.m();
    let alg = QuadAlgebra::new(CycElem::zero(m));
    for k in 1..m as i64 {
        if num_integer::gcd(k, m as i64) != 1 {
            continue;
        }
        let v = CycElem::from_exponents(m, &[(0, 2), (k, -1), (-k, -1), (2 * k, 1), (-2 * k, 1)]);
        let x = alg.embed(v);
        if outside_segment(&x).expect("conjugate trace is real") {
            return ScanVerdict::Violation {
                galois_k: k as u32,
                value_interval: x.numeric_interval(WITNESS_BITS).real_decimal(WITNESS_DIGITS),
            };
        }
    }
    ScanVerdict::AllConjugatesBounded
}

/// Whether a real element lies strictly outside `[-2, 2]`.
fn outside_segment(x: &ExtElem) -> Result<bool, OrderError> {
    Ok(sign_decide(x, &int(2))? == Ordering::Greater || sign_decide(x, &int(-2))? == Ordering::Less)
}

/// Projective invariant `tr²/det - 2`, equal to `λ/μ + μ/λ` for eigenvalues `λ, μ`.
pub fn projective_invariant(m: &Mat2) -> Result<ExtElem, OrderError> {
    let tr = m.trace();
    let det_inv = m.det().try_inv().map_err(|_| OrderError::Singular)?;
    Ok(&(&tr * &tr) * &det_inv - ExtElem::from_int_in(tr.algebra(), 2))
}

/// Searches the conjugates of `beta` for one off the segment `[-2, 2]`,
/// preferring real conjugates, which are certified by exact sign decisions.
fn galois_witness(beta: &ExtElem) -> Option<Witness> {
    let units = beta.u().field().units().to_vec();
    let mut candidates: Vec<(u32, Option<i8>, ExtElem)> = Vec::new();
    for &k in &units {
        let u = beta.u().apply_automorphism(k as i64);
        if beta.v().is_zero() {
            candidates.push((k, None, beta.algebra().embed(u)));
        } else {
            let v = beta.v().apply_automorphism(k as i64);
            let alg = QuadAlgebra::new(beta.radicand().apply_automorphism(k as i64));
            for s in [1i8, -1] {
                let vs = if s > 0 { v.clone() } else { -&v };
                candidates.push((k, Some(s), ExtElem::new(u.clone(), vs, alg.clone())));
            }
        }
    }
    for (k, s, c) in &candidates {
        if let Ok(true) = outside_segment(c) {
            return Some(Witness::Galois {
                galois_k: *k,
                t_sign: *s,
                value_interval: c.numeric_interval(WITNESS_BITS).real_decimal(WITNESS_DIGITS),
                imag_interval: None,
            });
        }
    }
    for (k, s, c) in &candidates {
        let mut bits = WITNESS_BITS;
        // a conjugate that is not exactly real has nonzero imaginary part
        let real = c.complex_conj().map(|cc| cc == *c).unwrap_or(false);
        if real {
            continue;
        }
        while bits <= 4096 {
            let b = c.eval_ball(bits);
            if !b.im.contains_zero() {
                let iv = c.numeric_interval(bits);
                return Some(Witness::Galois {
                    galois_k: *k,
                    t_sign: *s,
                    value_interval: iv.real_decimal(WITNESS_DIGITS),
                    imag_interval: Some(DecimalInterval::outward(&iv.im[0], &iv.im[1], WITNESS_DIGITS)),
                });
            }
            bits *= 2;
        }
    }
    None
}

/// Order `d` of the eigenvalue ratio when the invariant is `2cos(2π/d)·`-conjugate.
fn predicted_order(min_poly: &RationalPoly) -> Option<u64> {
    let deg = min_poly.degree()? as u64;
    if deg == 1 {
        let root = -min_poly.coeffs()[0].clone();
        return [(int(2), 1), (int(1), 6), (int(0), 4), (int(-1), 3), (int(-2), 2)]
            .into_iter()
            .find(|(v, _)| *v == root)
            .map(|(_, d)| d);
    }
    let bound = 8 * deg * deg + 2;
    (3..=bound).find(|&d| {
        crate::cyclo::totient(d) == 2 * deg && {
            let n = d as u32;
            let c = CycElem::root_of_unity(n, 1) + CycElem::root_of_unity(n, -1);
            minimal_polynomial_cyc(&c) == *min_poly
        }
    })
}

/// Order of `m` in PGL(2).
pub fn projective_order(m: &Mat2, cap: u64) -> Result<OrderVerdict, OrderError> {
    if !m.is_invertible() {
        return Err(OrderError::Singular);
    }
    if m.is_scalar() {
        return Ok(OrderVerdict::Finite { order: 1 });
    }
    let tr = m.trace();
    let det = m.det();
    if &tr * &tr == det.scale(&int(4)) {
        return Ok(OrderVerdict::Infinite {
            witness: Witness::Parabolic(ParabolicTag::Parabolic),
        });
    }
    let beta = projective_invariant(m)?;
    let mp = minimal_polynomial(&beta);
    if !mp.is_monic_integer() {
        return Ok(OrderVerdict::Infinite {
            witness: Witness::NonIntegral { min_poly: mp.to_string() },
        });
    }
    let deg = mp.degree().unwrap_or(0);
    if mp.count_roots_in(&int(-2), &int(2)) < deg {
        let witness = galois_witness(&beta).ok_or_else(|| {
            OrderError::Consistency(format!("no conjugate of {beta} found off [-2,2] although {mp} has roots there"))
        })?;
        return Ok(OrderVerdict::Infinite { witness });
    }
    let expected = predicted_order(&mp)
        .ok_or_else(|| OrderError::Consistency(format!("{mp} is not a cosine minimal polynomial")))?;
    let mut p = m.clone();
    for n in 1..=cap {
        if p.is_scalar() {
            if n != expected {
                return Err(OrderError::Consistency(format!(
                    "projective order {n} differs from the predicted {expected}"
                )));
            }
            return Ok(OrderVerdict::Finite { order: n });
        }
        p = p.mul(m);
    }
    Ok(OrderVerdict::UndecidedCap { cap })
}

/// Order of `m` in GL(2).
pub fn gl_order(m: &Mat2, cap: u64) -> Result<OrderVerdict, OrderError> {
    let n = match projective_order(m, cap)? {
        OrderVerdict::Finite { order } => order,
        other => return Ok(other),
    };
    let det_poly = minimal_polynomial(&m.det());
    if cyclotomic_factors(&det_poly).is_none() {
        return Ok(OrderVerdict::Infinite {
            witness: Witness::Determinant { det_min_poly: det_poly.to_string() },
        });
    }
    let scalar = m.pow(n as i64)?;
    let c = scalar.entry(0, 0).clone();
    let mut acc = c.clone();
    let mut k = 1u64;
    while !acc.is_one() {
        k += 1;
        if n * k > cap {
            return Ok(OrderVerdict::UndecidedCap { cap });
        }
        acc = &acc * &c;
    }
    if n * k > cap {
        return Ok(OrderVerdict::UndecidedCap { cap });
    }
    Ok(OrderVerdict::Finite { order: n * k })
}
