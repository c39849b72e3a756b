//! Floating-point oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    pub fn expi(theta: f64) -> Self {
        C64::new(theta.cos(), theta.sin())
    }
    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    pub fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
    pub fn conj(self) -> C64 {
        C64::new(self.re, -self.im)
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        self.mul(o.conj()).scale(1.0 / d)
    }
    pub fn scale(self, s: f64) -> C64 {
        C64::new(self.re * s, self.im * s)
    }
    pub fn sqrt(self) -> C64 {
        let r = self.abs();
        let re = ((r + self.re) / 2.0).max(0.0).sqrt();
        let im = ((r - self.re) / 2.0).max(0.0).sqrt();
        C64::new(re, if self.im < 0.0 { -im } else { im })
    }
}

pub type CMat = Vec<Vec<C64>>;

pub fn cmul(a: &CMat, b: &CMat) -> CMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(C64::new(0.0, 0.0), |acc, k| acc.add(a[i][k].mul(b[k][j]))))
                .collect()
        })
        .collect()
}

/// 2×2 inverse.
pub fn cinv2(a: &CMat) -> CMat {
    let det = a[0][0].mul(a[1][1]).add(a[0][1].mul(a[1][0]).scale(-1.0));
    let f = |x: C64| x.div(det);
    vec![
        vec![f(a[1][1]), f(a[0][1].scale(-1.0))],
        vec![f(a[1][0].scale(-1.0)), f(a[0][0])],
    ]
}

/// Conjugate transpose (inverse of a unitary matrix).
pub fn cadjoint(a: &CMat) -> CMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

fn key(m: &CMat, projective: bool) -> Vec<(i64, i64)> {
    let flat: Vec<C64> = m.iter().flatten().copied().collect();
    let pivot = if projective {
        *flat.iter().find(|x| x.abs() > 1e-6).unwrap()
    } else {
        C64::new(1.0, 0.0)
    };
    flat.iter()
        .map(|x| {
            let y = x.div(pivot);
            ((y.re * 1e6).round() as i64, (y.im * 1e6).round() as i64)
        })
        .collect()
}

/// Size of the group generated by `gens` (and the given inverses), up to `cap`.
pub fn numeric_closure_size(gens: &[CMat], invs: &[CMat], projective: bool, cap: usize) -> Option<usize> {
    let n = gens[0].len();
    let id: CMat = (0..n)
        .map(|i| (0..n).map(|j| C64::new((i == j) as u8 as f64, 0.0)).collect())
        .collect();
    let steps: Vec<&CMat> = gens.iter().chain(invs.iter()).collect();
    let mut seen = HashSet::new();
    seen.insert(key(&id, projective));
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &steps {
            let y = cmul(&x, s);
            if seen.insert(key(&y, projective)) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// Numeric braid generators at level `l` with the principal branch of `t`.
pub fn numeric_tk(l: u32) -> (CMat, CMat) {
    let m = (l + 2) as f64;
    let tau = 2.0 * std::f64::consts::PI;
    let q = C64::expi(tau / m);
    let qm34 = C64::expi(-0.75 * tau / m);
    let one = C64::new(1.0, 0.0);
    let a = q.mul(one.add(q).add(q.mul(q)));
    let t = if a.abs() < 1e-12 { C64::new(0.0, 0.0) } else { a.sqrt() };
    let z = C64::new(0.0, 0.0);
    let g1 = vec![vec![qm34.mul(q), z], vec![z, qm34.scale(-1.0)]];
    let c = qm34.div(q.add(one));
    let g2 = vec![vec![c.scale(-1.0), c.mul(t)], vec![c.mul(t), c.mul(q).mul(q)]];
    (g1, g2)
}

/// Numeric S and T at level `l`, indices `1..=l+1`.
pub fn numeric_st(l: u32) -> (CMat, CMat) {
    let m = (l + 2) as f64;
    let n = (l + 1) as usize;
    let pi = std::f64::consts::PI;
    let c = (2.0 / m).sqrt();
    let s = (1..=n)
        .map(|j| (1..=n).map(|k| C64::new(c * (pi * (j * k) as f64 / m).sin(), 0.0)).collect())
        .collect();
    let t = (1..=n)
        .map(|j| {
            (1..=n)
                .map(|k| {
                    if j == k {
                        C64::expi(pi * ((j * j) as f64 / (2.0 * m) - 0.25))
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
                .collect()
        })
        .collect();
    (s, t)
}
