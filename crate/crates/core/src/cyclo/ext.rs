use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::elem::CycElem;
use super::interval::{eval_cyc, ComplexBall, ComplexInterval};
use super::CycloError;

/// The algebra `Q(ζ_N)[t]/(t² - a)`; a split or degenerate radicand is allowed.
#[derive(Debug)]
pub struct QuadAlgebra {
    radicand: CycElem,
}

impl QuadAlgebra {
    pub fn new(radicand: CycElem) -> Arc<Self> {
        Arc::new(QuadAlgebra { radicand })
    }

    pub fn radicand(&self) -> &CycElem {
        &self.radicand
    }

    pub fn conductor(&self) -> u32 {
        self.radicand.conductor()
    }

    /// The generator `t`.
    pub fn t(self: &Arc<Self>) -> ExtElem {
        let n = self.conductor();
        ExtElem {
            u: CycElem::zero(n),
            v: CycElem::one(n),
            alg: self.clone(),
        }
    }

    pub fn embed(self: &Arc<Self>, u: CycElem) -> ExtElem {
        let n = self.conductor();
        let u = if u.conductor() == n { u } else { u.lift(lcm(n, u.conductor())) };
        ExtElem::new(u, CycElem::zero(n), self.clone())
    }

    fn lifted(&self, m: u32) -> Arc<QuadAlgebra> {
        QuadAlgebra::new(self.radicand.lift(m))
    }

    /// Enclosure of the principal square root of the radicand.
    pub(crate) fn t_ball(&self, prec: u32) -> ComplexBall {
        let a = &self.radicand;
        if a.is_zero() {
            return ComplexBall::zero(prec);
        }
        let imag_sign = imaginary_sign(a);
        let mut p = prec;
        loop {
            let ball = eval_cyc(a, p);
            if let Some(s) = ball.sqrt_principal(imag_sign) {
                return s;
            }
            p *= 2;
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    num_integer::lcm(a as u64, b as u64) as u32
}

/// Exact sign of `Im(a)`: 0 when `a` is real, otherwise decided by refinement.
fn imaginary_sign(a: &CycElem) -> i8 {
    let diff = a - &a.conj();
    if diff.is_zero() {
        return 0;
    }
    let mut p = 64;
    loop {
        let b = eval_cyc(a, p);
        if b.im.is_positive() {
            return 1;
        }
        if b.im.is_negative() {
            return -1;
        }
        p *= 2;
    }
}

/// Element `u + v·t` of a [`QuadAlgebra`].
#[derive(Clone)]
pub struct ExtElem {
    u: CycElem,
    v: CycElem,
    alg: Arc<QuadAlgebra>,
}

impl ExtElem {
    pub fn new(u: CycElem, v: CycElem, alg: Arc<QuadAlgebra>) -> Self {
        let n = lcm(lcm(u.conductor(), v.conductor()), alg.conductor());
        let alg = if alg.conductor() == n { alg } else { alg.lifted(n) };
        ExtElem {
            u: u.lift(n),
            v: v.lift(n),
            alg,
        }
    }

    pub fn u(&self) -> &CycElem {
        &self.u
    }

    pub fn v(&self) -> &CycElem {
        &self.v
    }

    pub fn algebra(&self) -> &Arc<QuadAlgebra> {
        &self.alg
    }

    pub fn radicand(&self) -> &CycElem {
        &self.alg.radicand
    }

    pub fn conductor(&self) -> u32 {
        self.u.conductor()
    }

    pub fn zero_in(alg: &Arc<QuadAlgebra>) -> Self {
        alg.embed(CycElem::zero(alg.conductor()))
    }

    pub fn one_in(alg: &Arc<QuadAlgebra>) -> Self {
        alg.embed(CycElem::one(alg.conductor()))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// The base-field value when the `t` part vanishes.
    pub fn as_base(&self) -> Option<&CycElem> {
        self.v.is_zero().then_some(&self.u)
    }

    fn same_radicand(&self, other: &ExtElem) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.radicand == other.alg.radicand
    }

    /// Brings two operands into one algebra; elements with no `t` part adopt
    /// the other operand's algebra.
    fn align(&self, other: &ExtElem) -> (ExtElem, ExtElem) {
        if self.conductor() == other.conductor() && self.same_radicand(other) {
            return (self.clone(), other.clone());
        }
        let n = lcm(self.conductor(), other.conductor());
        let alg = if self.v.is_zero() && !other.v.is_zero() {
            other.alg.clone()
        } else {
            self.alg.clone()
        };
        let alg = if alg.conductor() == n { alg } else { alg.lifted(n) };
        let a = ExtElem::new(self.u.clone(), self.v.clone(), alg.clone());
        let b = ExtElem::new(other.u.clone(), other.v.clone(), alg);
        assert!(
            (a.v.is_zero() || b.v.is_zero()) || self.radicand().lift(n) == other.radicand().lift(n),
            "operands live in different quadratic algebras"
        );
        (a, b)
    }

    fn add_impl(&self, other: &ExtElem, negate: bool) -> ExtElem {
        let (a, b) = self.align(other);
        let (u, v) = if negate {
            (&a.u - &b.u, &a.v - &b.v)
        } else {
            (&a.u + &b.u, &a.v + &b.v)
        };
        ExtElem { u, v, alg: a.alg }
    }

    fn mul_impl(&self, other: &ExtElem) -> ExtElem {
        let (a, b) = self.align(other);
        if a.v.is_zero() && b.v.is_zero() {
            let n = a.conductor();
            return ExtElem {
                u: &a.u * &b.u,
                v: CycElem::zero(n),
                alg: a.alg,
            };
        }
        if a.v.is_zero() {
            return ExtElem {
                u: &a.u * &b.u,
                v: &a.u * &b.v,
                alg: a.alg,
            };
        }
        if b.v.is_zero() {
            return ExtElem {
                u: &a.u * &b.u,
                v: &a.v * &b.u,
                alg: a.alg,
            };
        }
        let u = &a.u * &b.u + &(&a.v * &b.v) * &a.alg.radicand;
        let v = &a.u * &b.v + &a.v * &b.u;
        ExtElem { u, v, alg: a.alg }
    }

    pub fn scale(&self, r: &BigRational) -> ExtElem {
        ExtElem {
            u: self.u.scale(r),
            v: self.v.scale(r),
            alg: self.alg.clone(),
        }
    }

    pub fn mul_base(&self, c: &CycElem) -> ExtElem {
        self * &self.alg.embed(c.clone())
    }

    /// Algebra conjugate `u - v·t`.
    pub fn bar(&self) -> ExtElem {
        ExtElem {
            u: self.u.clone(),
            v: -&self.v,
            alg: self.alg.clone(),
        }
    }

    /// `u² - a·v²`, the norm down to `Q(ζ_N)`.
    pub fn norm(&self) -> CycElem {
        if self.v.is_zero() {
            return &self.u * &self.u;
        }
        &self.u * &self.u - &(&self.v * &self.v) * &self.alg.radicand
    }

    pub fn is_invertible(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn try_inv(&self) -> Result<ExtElem, CycloError> {
        if self.v.is_zero() {
            let u = self.u.try_inv().map_err(|_| CycloError::NotInvertible)?;
            return Ok(ExtElem {
                v: CycElem::zero(u.conductor()),
                u,
                alg: self.alg.clone(),
            });
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(CycloError::NotInvertible);
        }
        let ninv = n.try_inv()?;
        Ok(ExtElem {
            u: &self.u * &ninv,
            v: -(&self.v * &ninv),
            alg: self.alg.clone(),
        })
    }

    pub fn pow(&self, e: i64) -> Result<ExtElem, CycloError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = ExtElem::one_in(&self.alg);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Enclosure of the complex value, with `t` the principal root of the radicand.
    pub fn eval_ball(&self, prec: u32) -> ComplexBall {
        let u = eval_cyc(&self.u, prec);
        if self.v.is_zero() {
            return u;
        }
        let v = eval_cyc(&self.v, prec);
        let t = self.alg.t_ball(prec);
        let p = u.prec().max(v.prec()).max(t.prec());
        u.rescale(p).add(&v.rescale(p).mul(&t.rescale(p)))
    }

    /// Certified box around the complex value at the requested precision.
    pub fn numeric_interval(&self, bits: u32) -> ComplexInterval {
        self.eval_ball(bits + 8).to_interval(bits)
    }

    /// Complex conjugate when it lies in the same algebra: requires
    /// `conj(a) = c²·a` for a root of unity `c`, so that `conj(t) = ±c·t`.
    pub fn complex_conj(&self) -> Result<ExtElem, CycloError> {
        if self.v.is_zero() || self.alg.radicand.is_zero() {
            return Ok(ExtElem {
                u: self.u.conj(),
                v: CycElem::zero(self.conductor()),
                alg: self.alg.clone(),
            });
        }
        let factor = self.alg.conj_t_factor().ok_or_else(|| {
            CycloError::Unsupported("complex conjugate of t leaves the algebra".into())
        })?;
        Ok(ExtElem {
            u: self.u.conj(),
            v: &self.v.conj() * &factor,
            alg: self.alg.clone(),
        })
    }
}

impl QuadAlgebra {
    /// `c` with `conj(t) = c·t` for the numeric branch of `t`, if `c` is a root of unity.
    pub fn conj_t_factor(&self) -> Option<CycElem> {
        let a = &self.radicand;
        let n = self.conductor() as i64;
        let ca = a.conj();
        let k = (0..n).find(|&k| a.mul_root(2 * k) == ca)?;
        let c = CycElem::root_of_unity(n as u32, k);
        // pick the sign by comparing conj(t) with c·t numerically
        let mut p = 64;
        loop {
            let t = self.t_ball(p);
            let cb = eval_cyc(&c, p);
            let q = t.prec().max(cb.prec());
            let ct = cb.rescale(q).mul(&t.rescale(q));
            let conj_t = ComplexBall {
                re: t.re.clone(),
                im: t.im.neg(),
            }
            .rescale(q);
            let diff = conj_t.sub(&ct);
            let sum = conj_t.add(&ct);
            let nonzero = |b: &ComplexBall| !b.re.contains_zero() || !b.im.contains_zero();
            if nonzero(&diff) {
                return Some(-c);
            }
            if nonzero(&sum) {
                return Some(c);
            }
            p *= 2;
        }
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        if self.v.is_zero() && other.v.is_zero() {
            return self.u == other.u;
        }
        self.u == other.u && self.v == other.v && self.same_radicand(other)
    }
}
impl Eq for ExtElem {}

impl Hash for ExtElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.u.hash(state);
        self.v.hash(state);
    }
}

impl PartialOrd for ExtElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.u.cmp(&other.u).then_with(|| self.v.cmp(&other.v))
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem({self})")
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "{} + ({})*t", self.u, self.v)
        }
    }
}

macro_rules! forward_ext_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&ExtElem> for &ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: &ExtElem) -> ExtElem {
                $body(self, rhs)
            }
        }
        impl $trait<ExtElem> for ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: ExtElem) -> ExtElem {
                $body(&self, &rhs)
            }
        }
        impl $trait<&ExtElem> for ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: &ExtElem) -> ExtElem {
                $body(&self, rhs)
            }
        }
        impl $trait<ExtElem> for &ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: ExtElem) -> ExtElem {
                $body(self, &rhs)
            }
        }
    };
}

forward_ext_binop!(Add, add, |a: &ExtElem, b: &ExtElem| a.add_impl(b, false));
forward_ext_binop!(Sub, sub, |a: &ExtElem, b: &ExtElem| a.add_impl(b, true));
forward_ext_binop!(Mul, mul, |a: &ExtElem, b: &ExtElem| a.mul_impl(b));

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem {
            u: -&self.u,
            v: -&self.v,
            alg: self.alg.clone(),
        }
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        -&self
    }
}

impl ExtElem {
    pub fn from_int_in(alg: &Arc<QuadAlgebra>, k: i64) -> Self {
        alg.embed(CycElem::from_int(alg.conductor(), k))
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.v.is_zero() {
            self.u.as_rational()
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> Self {
        ExtElem::zero_in(&self.alg)
    }

    pub fn one_like(&self) -> Self {
        ExtElem::one_in(&self.alg)
    }

    pub fn has_zero_t(&self) -> bool {
        self.v.is_zero()
    }

    pub fn from_rational_in(alg: &Arc<QuadAlgebra>, r: &BigRational) -> Self {
        alg.embed(CycElem::from_rational(alg.conductor(), r))
    }
}
