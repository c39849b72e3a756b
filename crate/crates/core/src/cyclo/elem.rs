use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::CyclotomicField;
use super::CycloError;

/// Numerator vector; `Small` whenever every entry fits in an `i64`.
#[derive(Clone, Debug)]
pub(crate) enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl Coeffs {
    fn zeros(len: usize) -> Self {
        Coeffs::Small(vec![0; len])
    }

    fn from_big(v: Vec<BigInt>) -> Self {
        let small: Option<Vec<i64>> = v.iter().map(|x| x.to_i64()).collect();
        match small {
            Some(s) => Coeffs::Small(s),
            None => Coeffs::Big(v),
        }
    }

    fn from_wide(v: Vec<i128>) -> Self {
        let small: Option<Vec<i64>> = v.iter().map(|&x| i64::try_from(x).ok()).collect();
        match small {
            Some(s) => Coeffs::Small(s),
            None => Coeffs::Big(v.into_iter().map(BigInt::from).collect()),
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub(crate) fn get(&self, i: usize) -> BigInt {
        match self {
            Coeffs::Small(v) => BigInt::from(v[i]),
            Coeffs::Big(v) => v[i].clone(),
        }
    }

    fn is_zero_at(&self, i: usize) -> bool {
        match self {
            Coeffs::Small(v) => v[i] == 0,
            Coeffs::Big(v) => v[i].is_zero(),
        }
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            Coeffs::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Coeffs::Big(v) => v.clone(),
        }
    }

    fn is_all_zero(&self) -> bool {
        match self {
            Coeffs::Small(v) => v.iter().all(|&x| x == 0),
            Coeffs::Big(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    fn scale(&self, k: &BigInt) -> Coeffs {
        if let (Coeffs::Small(v), Some(k)) = (self, k.to_i64()) {
            let k = k as i128;
            return Coeffs::from_wide(v.iter().map(|&x| x as i128 * k).collect());
        }
        Coeffs::from_big(self.to_big().into_iter().map(|x| x * k).collect())
    }

    fn add(&self, other: &Coeffs, negate: bool) -> Coeffs {
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (self, other) {
            return Coeffs::from_wide(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| {
                        if negate {
                            x as i128 - y as i128
                        } else {
                            x as i128 + y as i128
                        }
                    })
                    .collect(),
            );
        }
        let a = self.to_big();
        let b = other.to_big();
        Coeffs::from_big(
            a.into_iter()
                .zip(b)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect(),
        )
    }

    fn content_gcd(&self, den: &BigInt) -> BigInt {
        match (self, den.to_i64()) {
            (Coeffs::Small(v), Some(d)) => {
                let mut g = d.unsigned_abs();
                for &x in v {
                    if g == 1 {
                        break;
                    }
                    g = g.gcd(&x.unsigned_abs());
                }
                BigInt::from(g)
            }
            _ => {
                let mut g = den.clone();
                for x in self.to_big() {
                    if g.is_one() {
                        break;
                    }
                    g = g.gcd(&x);
                }
                g
            }
        }
    }

    fn div_exact(&self, g: &BigInt) -> Coeffs {
        if let (Coeffs::Small(v), Some(g)) = (self, g.to_i64()) {
            return Coeffs::Small(v.iter().map(|&x| x / g).collect());
        }
        Coeffs::from_big(self.to_big().into_iter().map(|x| x / g).collect())
    }
}

impl PartialEq for Coeffs {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeffs::Small(a), Coeffs::Small(b)) => a == b,
            (Coeffs::Big(a), Coeffs::Big(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Coeffs {}

impl Hash for Coeffs {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Coeffs::Small(v) => v.hash(state),
            Coeffs::Big(v) => v.hash(state),
        }
    }
}

fn conv_reduce_small(a: &[i64], b: &[i64], f: &CyclotomicField) -> Option<Vec<i128>> {
    let d = f.degree();
    let mut r = vec![0i128; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                r[i + j] = r[i + j].checked_add(x * y as i128)?;
            }
        }
    }
    for k in (d..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        let shift = k - d;
        for &(i, m) in f.modulus_terms() {
            r[shift + i] = r[shift + i].checked_sub(c.checked_mul(m as i128)?)?;
        }
    }
    r.truncate(d);
    Some(r)
}

fn conv_reduce_big(a: &[BigInt], b: &[BigInt], f: &CyclotomicField) -> Vec<BigInt> {
    let d = f.degree();
    let mut r = vec![BigInt::zero(); 2 * d - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[i + j] += x * y;
            }
        }
    }
    for k in (d..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut r[k]);
        let shift = k - d;
        for &(i, m) in f.modulus_terms() {
            r[shift + i] -= &c * m;
        }
    }
    r.truncate(d);
    r
}

/// Applies `ζ^j ↦ ζ^(j·k + shift)` to a numerator vector.
fn remap(c: &Coeffs, f: &CyclotomicField, k: i64, shift: i64) -> Coeffs {
    let d = f.degree();
    if let Coeffs::Small(v) = c {
        let mut out = vec![0i128; d];
        let mut ok = true;
        'outer: for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(idx, m) in f.power(j as i64 * k + shift) {
                match (x as i128)
                    .checked_mul(m as i128)
                    .and_then(|p| out[idx].checked_add(p))
                {
                    Some(s) => out[idx] = s,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            return Coeffs::from_wide(out);
        }
    }
    let mut out = vec![BigInt::zero(); d];
    for (j, x) in c.to_big().into_iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &(idx, m) in f.power(j as i64 * k + shift) {
            out[idx] += &x * m;
        }
    }
    Coeffs::from_big(out)
}

/// Exact element of `Q(ζ_N)`: integer numerators on the power basis
/// `1, ζ, …, ζ^(φ(N)-1)` over a positive common denominator, kept in lowest terms.
#[derive(Clone)]
pub struct CycElem {
    field: Arc<CyclotomicField>,
    num: Coeffs,
    den: BigInt,
}

impl CycElem {
    fn from_parts(field: Arc<CyclotomicField>, num: Coeffs, den: BigInt) -> Self {
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = num.scale(&BigInt::from(-1));
            den = -den;
        }
        if num.is_all_zero() {
            return CycElem {
                num: Coeffs::zeros(field.degree()),
                field,
                den: BigInt::one(),
            };
        }
        if !den.is_one() {
            let g = num.content_gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den /= g;
            }
        }
        CycElem { field, num, den }
    }

    pub fn zero(n: u32) -> Self {
        let field = CyclotomicField::get(n);
        CycElem {
            num: Coeffs::zeros(field.degree()),
            field,
            den: BigInt::one(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, &BigRational::one())
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        Self::from_rational(n, &BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(n: u32, r: &BigRational) -> Self {
        let field = CyclotomicField::get(n);
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = r.numer().clone();
        Self::from_parts(field, Coeffs::from_big(num), r.denom().clone())
    }

    /// `ζ_N^k` in canonical reduced form.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let field = CyclotomicField::get(n);
        let mut num = vec![0i64; field.degree()];
        for &(i, c) in field.power(k) {
            num[i] = c;
        }
        CycElem {
            field,
            num: Coeffs::Small(num),
            den: BigInt::one(),
        }
    }

    /// Element from rational coefficients on the power basis; indices at or
    /// beyond `φ(N)` are reduced, so any polynomial in `ζ_N` is accepted.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Self {
        let field = CyclotomicField::get(n);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); field.degree()];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            for &(idx, m) in field.power(j as i64) {
                num[idx] += &scaled * m;
            }
        }
        Self::from_parts(field, Coeffs::from_big(num), den)
    }

    /// Element `Σ c_j ζ_N^{e_j}` from integer coefficients at arbitrary exponents.
    pub fn from_exponents(n: u32, terms: &[(i64, i64)]) -> Self {
        let field = CyclotomicField::get(n);
        let mut num = vec![BigInt::zero(); field.degree()];
        for &(e, c) in terms {
            for &(idx, m) in field.power(e) {
                num[idx] += BigInt::from(c) * m;
            }
        }
        Self::from_parts(field, Coeffs::from_big(num), BigInt::one())
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Integer numerators on the power basis.
    pub fn numerators(&self) -> Vec<BigInt> {
        self.num.to_big()
    }

    /// Rational coefficients on the power basis (length `φ(N)`).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .to_big()
            .into_iter()
            .map(|x| BigRational::new(x, self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_all_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && !self.num.is_zero_at(0)
            && self.num.get(0).is_one()
            && (1..self.num.len()).all(|i| self.num.is_zero_at(i))
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if (1..self.num.len()).all(|i| self.num.is_zero_at(i)) {
            Some(BigRational::new(self.num.get(0), self.den.clone()))
        } else {
            None
        }
    }

    /// Single nonzero coefficient `(index, value)`, if the element is a monomial.
    fn as_monomial(&self) -> Option<(usize, BigRational)> {
        let mut found = None;
        for i in 0..self.num.len() {
            if !self.num.is_zero_at(i) {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found.map(|i| (i, BigRational::new(self.num.get(i), self.den.clone())))
    }

    /// Re-expresses the element in `Q(ζ_m)` for a multiple `m` of the conductor.
    pub fn lift(&self, m: u32) -> CycElem {
        let n = self.conductor();
        if m == n {
            return self.clone();
        }
        assert!(m % n == 0, "cannot lift conductor {n} to {m}");
        let target = CyclotomicField::get(m);
        let num = remap(&self.num, &target, (m / n) as i64, 0);
        Self::from_parts(target, num, self.den.clone())
    }

    pub(crate) fn common(a: &CycElem, b: &CycElem) -> (CycElem, CycElem) {
        if a.conductor() == b.conductor() {
            return (a.clone(), b.clone());
        }
        let m = (a.conductor() as u64).lcm(&(b.conductor() as u64)) as u32;
        (a.lift(m), b.lift(m))
    }

    fn add_impl(&self, other: &CycElem, negate: bool) -> CycElem {
        if self.conductor() != other.conductor() {
            let (a, b) = Self::common(self, other);
            return a.add_impl(&b, negate);
        }
        if self.den == other.den {
            let num = self.num.add(&other.num, negate);
            return Self::from_parts(self.field.clone(), num, self.den.clone());
        }
        let a = self.num.scale(&other.den);
        let b = other.num.scale(&self.den);
        Self::from_parts(
            self.field.clone(),
            a.add(&b, negate),
            &self.den * &other.den,
        )
    }

    fn mul_impl(&self, other: &CycElem) -> CycElem {
        if self.conductor() != other.conductor() {
            let (a, b) = Self::common(self, other);
            return a.mul_impl(&b);
        }
        if self.is_zero() || other.is_zero() {
            return CycElem::zero(self.conductor());
        }
        let f = &self.field;
        let num = match (&self.num, &other.num) {
            (Coeffs::Small(a), Coeffs::Small(b)) => match conv_reduce_small(a, b, f) {
                Some(r) => Coeffs::from_wide(r),
                None => Coeffs::from_big(conv_reduce_big(&self.num.to_big(), &other.num.to_big(), f)),
            },
            _ => Coeffs::from_big(conv_reduce_big(&self.num.to_big(), &other.num.to_big(), f)),
        };
        Self::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    pub fn scale(&self, r: &BigRational) -> CycElem {
        Self::from_parts(
            self.field.clone(),
            self.num.scale(r.numer()),
            &self.den * r.denom(),
        )
    }

    pub fn scale_int(&self, k: i64) -> CycElem {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Multiplication by `ζ_N^e`.
    pub fn mul_root(&self, e: i64) -> CycElem {
        let num = remap(&self.num, &self.field, 1, e);
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Image under the automorphism `ζ_N ↦ ζ_N^k` (`k` coprime to `N`).
    pub fn apply_automorphism(&self, k: i64) -> CycElem {
        let num = remap(&self.num, &self.field, k, 0);
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Complex conjugate, i.e. the automorphism `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> CycElem {
        self.apply_automorphism(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// All images `(k, σ_k(x))` for `k` coprime to `N`, ascending in `k`.
    pub fn galois_conjugates(&self) -> Vec<(u32, CycElem)> {
        self.field
            .units()
            .iter()
            .map(|&k| (k, self.apply_automorphism(k as i64)))
            .collect()
    }

    /// The Galois orbit without repetitions, in order of first appearance.
    pub fn distinct_conjugates(&self) -> Vec<CycElem> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &k in self.field.units() {
            let c = self.apply_automorphism(k as i64);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out
    }

    /// Absolute trace `Tr_{Q(ζ_N)/Q}`.
    pub fn trace(&self) -> BigRational {
        let tr = self.field.traces();
        let mut acc = BigInt::zero();
        for (j, &t) in tr.iter().enumerate() {
            if t != 0 && !self.num.is_zero_at(j) {
                acc += self.num.get(j) * t;
            }
        }
        BigRational::new(acc, self.den.clone())
    }

    /// Multiplicative inverse.
    pub fn try_inv(&self) -> Result<CycElem, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let n = self.conductor();
        if let Some((j, c)) = self.as_monomial() {
            return Ok(CycElem::root_of_unity(n, -(j as i64)).scale(&c.recip()));
        }
        // x^-1 = (product of the other distinct conjugates) / N(x)
        let orbit = self.distinct_conjugates();
        let mut cofactor = CycElem::one(n);
        for c in orbit.iter().filter(|c| *c != self) {
            cofactor = &cofactor * c;
        }
        let norm = (self * &cofactor)
            .as_rational()
            .expect("norm of a cyclotomic element is rational");
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<CycElem, CycloError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycElem::one(self.conductor());
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

    pub(crate) fn max_abs_bits(&self) -> u64 {
        match &self.num {
            Coeffs::Small(v) => v
                .iter()
                .map(|x| 64 - x.unsigned_abs().leading_zeros() as u64)
                .max()
                .unwrap_or(0),
            Coeffs::Big(v) => v.iter().map(|x| x.bits()).max().unwrap_or(0),
        }
    }

    pub(crate) fn raw_numerators(&self) -> &Coeffs {
        &self.num
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() != other.conductor() {
            let (a, b) = Self::common(self, other);
            return a.num == b.num && a.den == b.den;
        }
        self.num == other.num && self.den == other.den
    }
}
impl Eq for CycElem {}

impl Hash for CycElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for CycElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (conductor, denominator, numerators); a total order used
/// only for deterministic sorting.
impl Ord for CycElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor()
            .cmp(&other.conductor())
            .then_with(|| self.den.cmp(&other.den))
            .then_with(|| match (&self.num, &other.num) {
                (Coeffs::Small(a), Coeffs::Small(b)) => a.cmp(b),
                _ => self.num.to_big().cmp(&other.num.to_big()),
            })
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem({self})")
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut terms = Vec::new();
        for i in 0..self.num.len() {
            if self.num.is_zero_at(i) {
                continue;
            }
            let c = self.num.get(i);
            let t = match i {
                0 => c.to_string(),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{i}"),
                _ => format!("{c}*z^{i}"),
            };
            terms.push(t);
        }
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        if self.den.is_one() {
            write!(f, "{body} [z=zeta_{n}]")
        } else {
            write!(f, "({body})/{} [z=zeta_{n}]", self.den)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycElem> for &CycElem {
            type Output = CycElem;
            fn $method(self, rhs: &CycElem) -> CycElem {
                $body(self, rhs)
            }
        }
        impl $trait<CycElem> for CycElem {
            type Output = CycElem;
            fn $method(self, rhs: CycElem) -> CycElem {
                $body(&self, &rhs)
            }
        }
        impl $trait<&CycElem> for CycElem {
            type Output = CycElem;
            fn $method(self, rhs: &CycElem) -> CycElem {
                $body(&self, rhs)
            }
        }
        impl $trait<CycElem> for &CycElem {
            type Output = CycElem;
            fn $method(self, rhs: CycElem) -> CycElem {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycElem, b: &CycElem| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CycElem, b: &CycElem| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CycElem, b: &CycElem| a.mul_impl(b));

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        self.scale_int(-1)
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        self.scale_int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycElem {
        CycElem::root_of_unity(n, k)
    }

    #[test]
    fn roots_of_unity_wrap() {
        assert!(z(3, 3).is_one());
        assert!(z(7, 0).is_one());
        assert_eq!(z(4, 2), CycElem::from_int(4, -1));
        assert_eq!(z(5, 1).pow(5).unwrap(), CycElem::one(5));
    }

    #[test]
    fn sums_of_roots() {
        // q + q^-1 = 0 at q = i
        assert!((z(4, 1) + z(4, -1)).is_zero());
        assert_eq!(z(3, 1) + z(3, 2), CycElem::from_int(3, -1));
    }

    #[test]
    fn inverse_of_primitive_root() {
        assert_eq!(z(5, 1).try_inv().unwrap(), z(5, 4));
        assert_eq!(CycElem::zero(5).try_inv(), Err(CycloError::DivisionByZero));
        let x = CycElem::one(12) + z(12, 1) + z(12, 5).scale_int(3);
        assert!((&x * &x.try_inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_across_paths() {
        // ζ6 = -ζ3^2 once both live in conductor 6
        let a = z(6, 1);
        let b = -z(3, 2).lift(6);
        assert_eq!(a, b);
        assert_eq!(a.numerators(), b.numerators());
        assert_eq!(z(3, 1), z(6, 2));
    }

    #[test]
    fn mixed_conductors_lift_to_lcm() {
        let s = z(4, 1) + z(3, 1);
        assert_eq!(s.conductor(), 12);
        assert_eq!(s, z(12, 3) + z(12, 4));
    }

    #[test]
    fn denominators_reduce() {
        let half = CycElem::from_rational(8, &BigRational::new(2.into(), 4.into()));
        assert_eq!(half.denominator(), &BigInt::from(2));
        let two = half.scale_int(4);
        assert_eq!(two, CycElem::from_int(8, 2));
        assert!(two.denominator().is_one());
    }

    #[test]
    fn automorphisms_compose() {
        let x = z(15, 1) + z(15, 4).scale_int(2);
        let a = x.apply_automorphism(2).apply_automorphism(7);
        assert_eq!(a, x.apply_automorphism(14));
    }

    #[test]
    fn traces() {
        assert_eq!(z(5, 1).trace(), BigRational::from_integer((-1).into()));
        assert_eq!(CycElem::from_int(12, 3).trace(), BigRational::from_integer(12.into()));
    }

    #[test]
    fn big_coefficients_fall_back() {
        let x = CycElem::from_int(7, i64::MAX) + z(7, 1).scale_int(i64::MAX);
        let y = &x * &x;
        let r = &y * &x.try_inv().unwrap();
        assert_eq!(r, x);
    }

    #[test]
    fn real_elements() {
        assert!((z(12, 1) + z(12, -1)).is_real());
        assert!(!z(12, 1).is_real());
    }
}
