//! The genus-one modular representation: exact S and T matrices, relation
//! checks and the finiteness certificate.

mod square;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::braidrep::Level;
use crate::cyclo::{eval_cyc, Ball, ComplexBall, CycElem};
use crate::orderlab::{group_closure, ClosureError, ClosureMode};
use crate::par::Execution;

pub use square::SquareMat;

/// S and T at level `l`, indices `1..=l+1`, conductor `8(l+2)`.
#[derive(Clone, Debug)]
pub struct ModularRep {
    pub level: Level,
    /// `sin(πjk/(l+2))` as exact field elements.
    pub s_unnormalized: SquareMat,
    /// Power of `√(2/(l+2))` multiplying `s_unnormalized` to give S.
    pub s_prefactor_exponent: u32,
    /// Exact `√(2/(l+2))`, obtained from a quadratic Gauss sum.
    pub sqrt_two_over_m: CycElem,
    pub s: SquareMat,
    pub t: SquareMat,
}

/// `Σ_{k<n} ζ_n^(k²)`.
pub fn quadratic_gauss_sum(n: u32) -> CycElem {
    let terms: Vec<(i64, i64)> = (0..n as i64).map(|k| ((k * k) % n as i64, 1)).collect();
    CycElem::from_exponents(n, &terms)
}

/// `√(2/m)` in `Q(ζ_{8m})`: `G(8m) = (1+i)·√(8m)`, hence `√(2/m) = G/(2m(1+i))`.
pub fn sqrt_two_over(m: u32) -> CycElem {
    let n = 8 * m;
    let g = quadratic_gauss_sum(n);
    let one_plus_i = CycElem::one(n) + CycElem::root_of_unity(n, 2 * m as i64);
    let denom = one_plus_i.scale_int(2 * m as i64);
    let c = &g * &denom.try_inv().expect("nonzero");
    debug_assert_eq!(&c * &c, CycElem::from_rational(n, &BigRational::new(2.into(), m.into())));
    c
}

/// Builds S and T at a level.
pub fn build_modular(level: Level) -> ModularRep {
    let m = level.m() as i64;
    let n = level.conductor();
    let dim = (level.get() + 1) as usize;
    // sin(πx/m) = (ζ_{2m}^x - ζ_{2m}^-x)/(2i) and ζ_{2m} = ζ_N^4
    let minus_half_i = CycElem::root_of_unity(n, 2 * m).scale(&BigRational::new((-1).into(), 2.into()));
    let sine = |x: i64| &(CycElem::root_of_unity(n, 4 * x) - CycElem::root_of_unity(n, -4 * x)) * &minus_half_i;
    let s_unnormalized = SquareMat::from_fn(dim, |j, k| sine(((j + 1) * (k + 1)) as i64));
    // exp(iπ(j²/(2m) - 1/4)) = ζ_N^(2j² - m)
    let t = SquareMat::from_fn(dim, |j, k| {
        if j == k {
            let j = (j + 1) as i64;
            CycElem::root_of_unity(n, 2 * j * j - m)
        } else {
            CycElem::zero(n)
        }
    });
    let c = sqrt_two_over(m as u32);
    let s = s_unnormalized.scale(&c);
    ModularRep {
        level,
        s_unnormalized,
        s_prefactor_exponent: 1,
        sqrt_two_over_m: c,
        s,
        t,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub s_squared_vs_st_cubed: bool,
    pub s_fourth_scalar: bool,
    pub s_symmetric: bool,
    pub t_diagonal_unitary: bool,
    pub all_hold: bool,
}

/// Projective relations `S² ~ (ST)³`, `S⁴ ~ 1`, plus exact symmetry checks.
pub fn modular_relations_check(rep: &ModularRep) -> RelationsReport {
    relations_for(&rep.s, &rep.t)
}

fn relations_for(s: &SquareMat, t: &SquareMat) -> RelationsReport {
    let s2 = s.mul(s);
    let st = s.mul(t);
    let st3 = st.mul(&st).mul(&st);
    let s_squared_vs_st_cubed = s2.projective_equal(&st3);
    let s_fourth_scalar = s2.mul(&s2).is_scalar();
    let s_symmetric = *s == s.transpose();
    let t_diagonal_unitary =
        t.is_diagonal() && (0..t.dim()).all(|j| (t.get(j, j) * &t.get(j, j).conj()).is_one());
    RelationsReport {
        s_squared_vs_st_cubed,
        s_fourth_scalar,
        s_symmetric,
        t_diagonal_unitary,
        all_hold: s_squared_vs_st_cubed && s_fourth_scalar && s_symmetric && t_diagonal_unitary,
    }
}

/// Relations for a copy of the representation with one T phase perturbed.
pub fn perturbed_relations_check(rep: &ModularRep, index: usize) -> RelationsReport {
    let t = SquareMat::from_fn(rep.t.dim(), |j, k| {
        let x = rep.t.get(j, k).clone();
        if j == index && k == index {
            x.mul_root(1)
        } else {
            x
        }
    });
    relations_for(&rep.s, &t)
}

/// Whether every entry lies in `(1/(2m))·Z[ζ_N]`.
pub fn entries_in_discrete_set(m: &SquareMat, level: Level) -> bool {
    let bound = BigInt::from(2 * level.m());
    m.entries().iter().all(|x| (&bound % x.denominator()).is_zero())
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularImage {
    pub order: usize,
    pub certificate_ok: bool,
    /// Projective order of `ST`.
    pub st_order: Option<u64>,
    pub generation_sizes: Vec<usize>,
}

/// Projective order of a square matrix by powering, up to `cap`.
pub fn square_projective_order(m: &SquareMat, cap: u64) -> Option<u64> {
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_scalar() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// Closure of `⟨S, T⟩` in PGL with the denominator certificate on every element.
pub fn modular_image_finite(rep: &ModularRep, cap: usize, exec: Execution) -> Result<ModularImage, ClosureError> {
    let closure = group_closure(&[rep.s.clone(), rep.t.clone()], cap, ClosureMode::Projective, exec)?;
    let checks = exec.map(&closure.elements, |g| entries_in_discrete_set(g, rep.level));
    Ok(ModularImage {
        order: closure.order(),
        certificate_ok: checks.into_iter().all(|b| b),
        st_order: square_projective_order(&rep.s.mul(&rep.t), 1000),
        generation_sizes: closure.generation_sizes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitarityReport {
    pub bits: u32,
    /// Upper bound on `max |(S S*)_{jk} - δ_{jk}|`, as a power of two exponent.
    pub max_error_log2: f64,
    pub within: bool,
}

/// Checks `S·S* = 1` numerically, applying `√(2/m)` as an interval.
pub fn numeric_unitarity(rep: &ModularRep, bits: u32, tolerance_log2: i32) -> UnitarityReport {
    let dim = rep.s_unnormalized.dim();
    let m = rep.level.m();
    let work = bits + 16;
    let c = Ball::from_rational(&BigRational::new(2.into(), m.into()), work).sqrt();
    let entries: Vec<ComplexBall> = rep
        .s_unnormalized
        .entries()
        .iter()
        .map(|x| {
            let b = eval_cyc(x, work).rescale(work);
            let c = c.rescale(b.prec());
            ComplexBall { re: b.re.mul(&c), im: b.im.mul(&c) }
        })
        .collect();
    let tol = if tolerance_log2 >= 0 {
        BigRational::from_integer(BigInt::one() << tolerance_log2 as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-tolerance_log2) as usize)
    };
    let mut worst = BigRational::zero();
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = ComplexBall::zero(entries[0].prec());
            for k in 0..dim {
                let a = &entries[i * dim + k];
                let b = &entries[j * dim + k];
                let b_conj = ComplexBall { re: b.re.clone(), im: b.im.neg() };
                acc = acc.add(&a.mul(&b_conj).rescale(acc.prec()));
            }
            let target = if i == j { BigRational::one() } else { BigRational::zero() };
            let err_re = (acc.re.upper() - &target).abs().max((acc.re.lower() - &target).abs());
            let err_im = acc.im.upper().abs().max(acc.im.lower().abs());
            worst = worst.max(err_re).max(err_im);
        }
    }
    let max_error_log2 = if worst.is_zero() {
        f64::NEG_INFINITY
    } else {
        let f = num_traits::ToPrimitive::to_f64(&worst).unwrap_or(0.0);
        f.log2()
    };
    UnitarityReport {
        bits,
        max_error_log2,
        within: worst <= tol,
    }
}
