//! Reduction of the quadratic algebra modulo a prime `p ≡ 1 (mod N)`.
//!
//! Sending `ζ_N` to a primitive `N`-th root of unity in `F_p` and `t` to a
//! square root of the image of the radicand is a ring homomorphism on the
//! elements whose denominators are prime to `p`. It is used to certify that
//! a matrix power is *not* scalar: non-scalar modulo `p` implies non-scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::elem::CycElem;
use super::ext::{ExtElem, QuadAlgebra};

/// Reduction map `Z[1/d][ζ_N, t] → F_p`.
#[derive(Clone, Debug)]
pub struct ModpHom {
    p: u64,
    conductor: u32,
    /// `ω^j` for `j < N`, with `ω` a primitive `N`-th root of unity.
    roots: Vec<u64>,
    t_image: u64,
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Square root modulo an odd prime (Tonelli-Shanks), if one exists.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn reduce_big(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

impl ModpHom {
    /// First usable prime `p ≥ start` with `p ≡ 1 (mod N)` for the algebra.
    pub fn new(alg: &QuadAlgebra, start: u64) -> ModpHom {
        let n = alg.conductor() as u64;
        let mut p = (start.max(3) / n + 1) * n + 1;
        loop {
            if is_prime(p) {
                if let Some(h) = Self::try_prime(alg, p) {
                    return h;
                }
            }
            p += n;
        }
    }

    fn try_prime(alg: &QuadAlgebra, p: u64) -> Option<ModpHom> {
        let n = alg.conductor() as u64;
        let factors = prime_factors(p - 1);
        let g = (2..p).find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))?;
        let omega = pow_mod(g, (p - 1) / n, p);
        let mut roots = Vec::with_capacity(n as usize);
        let mut w = 1;
        for _ in 0..n {
            roots.push(w);
            w = mul_mod(w, omega, p);
        }
        let mut hom = ModpHom {
            p,
            conductor: n as u32,
            roots,
            t_image: 0,
        };
        let a = hom.cyc(alg.radicand())?;
        hom.t_image = sqrt_mod(a, p)?;
        Some(hom)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Image of a cyclotomic element whose conductor divides `N`; `None` if
    /// `p` divides its denominator.
    pub fn cyc(&self, x: &CycElem) -> Option<u64> {
        let m = x.conductor();
        assert!(self.conductor % m == 0, "conductor {m} does not divide {}", self.conductor);
        let step = (self.conductor / m) as usize;
        let den = reduce_big(x.denominator(), self.p);
        if den == 0 {
            return None;
        }
        let mut acc = 0u64;
        for (j, c) in x.numerators().iter().enumerate() {
            let c = reduce_big(c, self.p);
            if c != 0 {
                acc = (acc + mul_mod(c, self.roots[j * step], self.p)) % self.p;
            }
        }
        Some(mul_mod(acc, pow_mod(den, self.p - 2, self.p), self.p))
    }

    /// Image of an algebra element.
    pub fn ext(&self, x: &ExtElem) -> Option<u64> {
        let u = self.cyc(x.u())?;
        let v = self.cyc(x.v())?;
        Some((u + mul_mod(v, self.t_image, self.p)) % self.p)
    }
}

/// 2×2 matrix over `F_p`.
pub type ModMat2 = [[u64; 2]; 2];

pub fn mat_mul_mod(a: &ModMat2, b: &ModMat2, p: u64) -> ModMat2 {
    let mut out = [[0u64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (mul_mod(a[i][0], b[0][j], p) + mul_mod(a[i][1], b[1][j], p)) % p;
        }
    }
    out
}

pub fn is_scalar_mod(a: &ModMat2) -> bool {
    a[0][1] == 0 && a[1][0] == 0 && a[0][0] == a[1][1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn tonelli_shanks() {
        let p = 1_000_000_009;
        for a in [2u64, 5, 7, 11, 1234567] {
            if let Some(r) = sqrt_mod(a, p) {
                assert_eq!(mul_mod(r, r, p), a);
            }
        }
    }

    #[test]
    fn reduction_is_multiplicative() {
        let alg = QuadAlgebra::new(CycElem::from_exponents(24, &[(8, 1), (16, 1), (24, 1)]));
        let h = ModpHom::new(&alg, 1 << 40);
        let x = alg.embed(CycElem::root_of_unity(24, 5)) + alg.t();
        let y = alg.embed(CycElem::from_exponents(24, &[(1, 3), (7, -2)])) + (alg.t() + alg.t());
        let p = h.prime();
        assert_eq!(h.ext(&(&x * &y)).unwrap(), mul_mod(h.ext(&x).unwrap(), h.ext(&y).unwrap(), p));
        assert_eq!(mul_mod(h.ext(&alg.t()).unwrap(), h.ext(&alg.t()).unwrap(), p), h.cyc(alg.radicand()).unwrap());
    }
}
