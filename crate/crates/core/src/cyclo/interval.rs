//! Rigorous fixed-point ball arithmetic for embedding cyclotomic elements into `C`.
//!
//! A [`Ball`] at precision `p` encloses the interval
//! `[(mid - rad) / 2^p, (mid + rad) / 2^p]`. Every operation rounds outward,
//! so the exact value always stays inside.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use super::elem::{CycElem, Coeffs};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigInt,
    prec: u32,
}

fn ceil_shift(x: &BigInt, s: u32) -> BigInt {
    // x >= 0
    let q: BigInt = x >> s;
    if (&q << s) == *x {
        q
    } else {
        q + 1
    }
}

impl Ball {
    pub fn exact_int(k: &BigInt, prec: u32) -> Ball {
        Ball {
            mid: k << prec,
            rad: BigInt::zero(),
            prec,
        }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Ball {
        let scaled = r.numer() << prec;
        let (q, rem) = scaled.div_mod_floor(r.denom());
        Ball {
            mid: q,
            rad: if rem.is_zero() { BigInt::zero() } else { BigInt::one() },
            prec,
        }
    }

    /// Ball covering integer bounds `[lo, hi]` at scale `2^-prec`.
    fn from_bounds(lo: BigInt, hi: BigInt, prec: u32) -> Ball {
        let sum = &lo + &hi;
        let mid = sum.div_floor(&BigInt::from(2));
        let rad = (&hi - &mid).max(&mid - &lo);
        Ball { mid, rad, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(&self.mid - &self.rad, BigInt::one() << self.prec)
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(&self.mid + &self.rad, BigInt::one() << self.prec)
    }

    pub fn lower_scaled(&self) -> BigInt {
        &self.mid - &self.rad
    }

    pub fn upper_scaled(&self) -> BigInt {
        &self.mid + &self.rad
    }

    pub fn radius_scaled(&self) -> &BigInt {
        &self.rad
    }

    pub fn is_positive(&self) -> bool {
        self.mid > self.rad
    }

    pub fn is_negative(&self) -> bool {
        -&self.mid > self.rad
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.prec.saturating_sub(60);
        let m = (&self.mid >> shift).to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi((self.prec - shift) as i32)
    }

    pub fn add(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball {
            mid: &self.mid - &o.mid,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Ball {
        Ball {
            mid: -&self.mid,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        let p = self.prec;
        let prod = &self.mid * &o.mid;
        let err = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        let exact = err.is_zero() && (&prod >> p << p) == prod;
        Ball {
            mid: prod >> p,
            rad: ceil_shift(&err, p) + if exact { 0 } else { 1 },
            prec: p,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Ball {
        Ball {
            mid: &self.mid * k,
            rad: &self.rad * k.abs(),
            prec: self.prec,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Ball {
        assert!(!k.is_zero());
        let (q, r) = self.mid.div_mod_floor(k);
        let rr = self.rad.div_ceil(&k.abs());
        Ball {
            mid: q,
            rad: rr + if r.is_zero() { 0 } else { 1 },
            prec: self.prec,
        }
    }

    /// Enclosure of `sqrt(x)` on the nonnegative part of the ball.
    pub fn sqrt(&self) -> Ball {
        let p = self.prec;
        let lo = self.lower_scaled().max(BigInt::zero());
        let hi = self.upper_scaled().max(BigInt::zero());
        // sqrt(v / 2^p) * 2^p = sqrt(v * 2^p)
        let lo_s = (lo << p).sqrt();
        let hi_v: BigInt = hi << p;
        let mut hi_s = hi_v.sqrt();
        if &hi_s * &hi_s != hi_v {
            hi_s += 1;
        }
        Ball::from_bounds(lo_s, hi_s, p)
    }

    /// Drops to a lower precision, rounding outward.
    pub fn rescale(&self, prec: u32) -> Ball {
        if prec >= self.prec {
            let s = prec - self.prec;
            return Ball {
                mid: &self.mid << s,
                rad: &self.rad << s,
                prec,
            };
        }
        let s = self.prec - prec;
        Ball {
            mid: &self.mid >> s,
            rad: ceil_shift(&self.rad, s) + 1,
            prec,
        }
    }

    fn abs_upper_scaled(&self) -> BigInt {
        self.mid.abs() + &self.rad
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexBall {
    pub fn zero(prec: u32) -> Self {
        let z = Ball::exact_int(&BigInt::zero(), prec);
        ComplexBall { re: z.clone(), im: z }
    }

    pub fn real(re: Ball) -> Self {
        let im = Ball::exact_int(&BigInt::zero(), re.prec);
        ComplexBall { re, im }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBall {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        ComplexBall {
            re: self.re.mul_int(k),
            im: self.im.mul_int(k),
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        ComplexBall {
            re: self.re.div_int(k),
            im: self.im.div_int(k),
        }
    }

    pub fn rescale(&self, prec: u32) -> Self {
        ComplexBall {
            re: self.re.rescale(prec),
            im: self.im.rescale(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec
    }

    /// Principal square root, argument in `(-π/2, π/2]`. The caller decides
    /// the branch side when the input straddles the negative real axis:
    /// `imag_sign` is the exact sign of the imaginary part (0 if exactly real).
    pub(crate) fn sqrt_principal(&self, imag_sign: i8) -> Option<Self> {
        let modulus = self.re.mul(&self.re).add(&self.im.mul(&self.im)).sqrt();
        let half = BigInt::from(2);
        let re = modulus.add(&self.re).div_int(&half).sqrt();
        let im_abs = modulus.sub(&self.re).div_int(&half).sqrt();
        let im = match imag_sign {
            1 => im_abs,
            -1 => im_abs.neg(),
            _ => {
                // exactly real: positive -> im = 0, negative -> re = 0
                if self.re.is_positive() {
                    return Some(ComplexBall::real(self.re.sqrt()));
                } else if self.re.is_negative() {
                    return Some(ComplexBall {
                        re: Ball::exact_int(&BigInt::zero(), self.prec()),
                        im: self.re.neg().sqrt(),
                    });
                } else {
                    return None;
                }
            }
        };
        Some(ComplexBall { re, im })
    }

    pub fn to_interval(&self, bits: u32) -> ComplexInterval {
        ComplexInterval {
            re: [self.re.lower(), self.re.upper()],
            im: [self.im.lower(), self.im.upper()],
            bits,
        }
    }
}

/// Machin's formula, `π = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_ball(prec: u32) -> Ball {
    static CACHE: Lazy<Mutex<HashMap<u32, Ball>>> = Lazy::new(Default::default);
    if let Some(b) = CACHE.lock().unwrap().get(&prec) {
        return b.clone();
    }
    let work = prec + 32;
    let (a5, e5) = atan_inv(5, work);
    let (a239, e239) = atan_inv(239, work);
    let mid = a5 * 16 - a239 * 4;
    let rad = BigInt::from(16 * e5 + 4 * e239);
    let b = Ball {
        mid,
        rad,
        prec: work,
    }
    .rescale(prec);
    CACHE.lock().unwrap().insert(prec, b.clone());
    b
}

/// `atan(1/x) * 2^p` truncated termwise, with the accumulated error bound in ulps.
fn atan_inv(x: u64, p: u32) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = BigInt::one() << p;
    power /= &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // each division truncates by < 1 ulp twice; the tail is below 1 ulp
    (sum, 2 * k + 2)
}

/// Taylor enclosures of `(cos θ, sin θ)` for a ball `θ` with `|θ| ≤ 8`.
fn cos_sin(theta: &Ball) -> (Ball, Ball) {
    let p = theta.prec;
    let one = Ball::exact_int(&BigInt::one(), p);
    let t2 = theta.mul(theta);
    let mut cos = one.clone();
    let mut sin = theta.clone();
    let mut cterm = one;
    let mut sterm = theta.clone();
    let mut k: u64 = 0;
    loop {
        // cterm_k = θ^(2k)/(2k)!, sterm_k = θ^(2k+1)/(2k+1)!
        cterm = cterm
            .mul(&t2)
            .div_int(&BigInt::from((2 * k + 1) * (2 * k + 2)));
        sterm = sterm
            .mul(&t2)
            .div_int(&BigInt::from((2 * k + 2) * (2 * k + 3)));
        if k % 2 == 0 {
            cos = cos.sub(&cterm);
            sin = sin.sub(&sterm);
        } else {
            cos = cos.add(&cterm);
            sin = sin.add(&sterm);
        }
        k += 1;
        let small = cterm.abs_upper_scaled() <= BigInt::from(4)
            && sterm.abs_upper_scaled() <= BigInt::from(4);
        // θ^2 ≤ 64 < (2k+1)(2k+2)/2 once k ≥ 6, so the tail is at most twice the next term
        if k >= 6 && small {
            break;
        }
    }
    let tail = BigInt::from(8);
    cos.rad += &tail;
    sin.rad += &tail;
    (cos, sin)
}

/// Enclosures of `ζ_n^j` for `j < n` at precision `prec`.
pub fn root_table(n: u32, prec: u32) -> Arc<Vec<ComplexBall>> {
    static CACHE: Lazy<Mutex<HashMap<(u32, u32), Arc<Vec<ComplexBall>>>>> =
        Lazy::new(Default::default);
    if let Some(t) = CACHE.lock().unwrap().get(&(n, prec)) {
        return t.clone();
    }
    let guard = 24 + 2 * (32 - n.leading_zeros());
    let work = prec + guard;
    let theta = pi_ball(work)
        .mul_int(&BigInt::from(2))
        .div_int(&BigInt::from(n));
    let (c, s) = cos_sin(&theta);
    let zeta = ComplexBall { re: c, im: s };
    let mut table = Vec::with_capacity(n as usize);
    let mut cur = ComplexBall::real(Ball::exact_int(&BigInt::one(), work));
    for _ in 0..n {
        table.push(cur.rescale(prec));
        cur = cur.mul(&zeta);
    }
    let table = Arc::new(table);
    CACHE.lock().unwrap().insert((n, prec), table.clone());
    table
}

/// Enclosure of the complex value of `x` under `ζ_N ↦ exp(2πi/N)`.
/// The ball's own precision is at least `prec`, raised to absorb large numerators.
pub fn eval_cyc(x: &CycElem, prec: u32) -> ComplexBall {
    let d = x.degree() as u64;
    let extra = x.max_abs_bits() as u32 + (64 - d.leading_zeros()) + 8;
    let work = prec + extra;
    let table = root_table(x.conductor(), work);
    let mut acc = ComplexBall::zero(work);
    match x.raw_numerators() {
        Coeffs::Small(v) => {
            for (j, &c) in v.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&table[j].mul_int(&BigInt::from(c)));
                }
            }
        }
        Coeffs::Big(v) => {
            for (j, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&table[j].mul_int(c));
                }
            }
        }
    }
    if !x.denominator().is_one() {
        acc = acc.div_int(x.denominator());
    }
    acc
}

/// Certified axis-aligned box in `C` with rational corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: [BigRational; 2],
    pub im: [BigRational; 2],
    /// Working precision requested when the box was produced.
    pub bits: u32,
}

impl ComplexInterval {
    pub fn width(&self) -> BigRational {
        let w_re = &self.re[1] - &self.re[0];
        let w_im = &self.im[1] - &self.im[0];
        w_re.max(w_im)
    }

    pub fn contains(&self, re: &BigRational, im: &BigRational) -> bool {
        &self.re[0] <= re && re <= &self.re[1] && &self.im[0] <= im && im <= &self.im[1]
    }

    /// Whether the box, widened by `slack` on every side, contains the point.
    pub fn contains_f64(&self, re: f64, im: f64, slack: f64) -> bool {
        let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
        f(&self.re[0]) - slack <= re
            && re <= f(&self.re[1]) + slack
            && f(&self.im[0]) - slack <= im
            && im <= f(&self.im[1]) + slack
    }

    pub fn is_degenerate(&self) -> bool {
        self.re[0] == self.re[1] && self.im[0] == self.im[1]
    }

    pub fn real_decimal(&self, digits: usize) -> DecimalInterval {
        DecimalInterval::outward(&self.re[0], &self.re[1], digits)
    }
}

/// Decimal rendering of a real interval, rounded outward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecimalInterval(pub String, pub String);

impl DecimalInterval {
    pub fn outward(lo: &BigRational, hi: &BigRational, digits: usize) -> Self {
        let scale = BigInt::from(10).pow(digits as u32);
        let lo_s = (lo * BigRational::from_integer(scale.clone())).floor().to_integer();
        let hi_s = (hi * BigRational::from_integer(scale.clone())).ceil().to_integer();
        DecimalInterval(fmt_fixed(&lo_s, digits), fmt_fixed(&hi_s, digits))
    }
}

fn fmt_fixed(v: &BigInt, digits: usize) -> String {
    let neg = v.is_negative();
    let s = v.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
