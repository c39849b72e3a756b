//! Per-conductor tables for `Q(ζ_N)` in the power basis.
//!
//! A [`CyclotomicField`] is immutable once built and shared through a global
//! cache, so every element of conductor `N` points at the same tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use once_cell::sync::Lazy;

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer coefficients (low to high) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = Lazy::new(Default::default);
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // x^n - 1 divided by every Φ_d with d a proper divisor of n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &div);
    }
    let result = Arc::new(num);
    CACHE.lock().unwrap().insert(n, result.clone());
    result
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Precomputed data for the cyclotomic field of conductor `n`.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    degree: usize,
    /// Nonzero non-leading terms of Φ_n as `(index, coefficient)`.
    modulus_terms: Vec<(usize, i64)>,
    /// Reduced form of ζ^e for every `e` in `0..n`, sparse.
    powers: Vec<Vec<(usize, i64)>>,
    /// `Tr(ζ^j)` for `j < degree` (Ramanujan sums).
    traces: Vec<i64>,
    units: Vec<u32>,
}

impl CyclotomicField {
    /// Shared field of conductor `n`.
    pub fn get(n: u32) -> Arc<CyclotomicField> {
        static CACHE: Lazy<Mutex<HashMap<u32, Arc<CyclotomicField>>>> =
            Lazy::new(Default::default);
        assert!(n >= 1, "conductor must be positive");
        if let Some(f) = CACHE.lock().unwrap().get(&n) {
            return f.clone();
        }
        let field = Arc::new(Self::build(n));
        CACHE.lock().unwrap().entry(n).or_insert(field).clone()
    }

    fn build(n: u32) -> Self {
        let phi = cyclotomic_polynomial(n as u64);
        let degree = phi.len() - 1;
        let modulus_terms: Vec<(usize, i64)> = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();

        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect::<Vec<_>>(),
            );
            // multiply by ζ and reduce the overflow coefficient
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for &(i, c) in &modulus_terms {
                    cur[i] -= top * c;
                }
            }
        }

        let n64 = n as u64;
        let phi_n = totient(n64) as i64;
        let traces = (0..degree)
            .map(|j| {
                let g = (j as u64).gcd(&n64);
                let g = if j == 0 { n64 } else { g };
                let m = n64 / g;
                mobius(m) * phi_n / totient(m) as i64
            })
            .collect();
        let units = (1..=n)
            .filter(|k| (*k as u64).gcd(&n64) == 1)
            .map(|k| k % n)
            .collect::<Vec<_>>();
        let mut units = units;
        units.sort_unstable();
        CyclotomicField {
            n,
            degree,
            modulus_terms,
            powers,
            traces,
            units,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn modulus_terms(&self) -> &[(usize, i64)] {
        &self.modulus_terms
    }

    /// Sparse reduced representation of `ζ^e`.
    pub(crate) fn power(&self, e: i64) -> &[(usize, i64)] {
        let n = self.n as i64;
        &self.powers[e.rem_euclid(n) as usize]
    }

    pub(crate) fn traces(&self) -> &[i64] {
        &self.traces
    }

    /// Residues `k` in `0..N` coprime to `N`, ascending (`[0]` for `N = 1`).
    pub fn units(&self) -> &[u32] {
        &self.units
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(416), 192);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn traces_sum_roots() {
        // Tr(1) = φ(N), Tr(ζ) = μ(N)
        let f = CyclotomicField::get(12);
        assert_eq!(f.traces()[0], 4);
        assert_eq!(f.traces()[1], 0);
        let f = CyclotomicField::get(5);
        assert_eq!(f.traces(), &[4, -1, -1, -1]);
    }

    #[test]
    fn power_table_wraps() {
        let f = CyclotomicField::get(3);
        // ζ_3^2 = -1 - ζ_3
        assert_eq!(f.power(2), &[(0, -1), (1, -1)]);
        assert_eq!(f.power(3), &[(0, 1)]);
        assert_eq!(f.units(), &[1, 2]);
    }
}
