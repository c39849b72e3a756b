//! 2×2 matrices over the quadratic algebra.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::cyclo::{ComplexInterval, CycloError, ExtElem, QuadAlgebra};

/// Row-major 2×2 matrix with entries in one quadratic algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    e: [[ExtElem; 2]; 2],
}

impl Mat2 {
    pub fn new(a: ExtElem, b: ExtElem, c: ExtElem, d: ExtElem) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn identity(alg: &Arc<QuadAlgebra>) -> Self {
        Self::scalar(ExtElem::one_in(alg))
    }

    pub fn scalar(x: ExtElem) -> Self {
        let z = x.zero_like();
        Self::new(x.clone(), z.clone(), z, x)
    }

    pub fn diag(a: ExtElem, d: ExtElem) -> Self {
        let z = a.zero_like();
        Self::new(a, z.clone(), z, d)
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExtElem {
        &self.e[i][j]
    }

    pub fn entries(&self) -> &[[ExtElem; 2]; 2] {
        &self.e
    }

    pub fn algebra(&self) -> &Arc<QuadAlgebra> {
        self.e[0][0].algebra()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = &self.e;
        let f = &o.e;
        let cell = |i: usize, j: usize| &(&e[i][0] * &f[0][j]) + &(&e[i][1] * &f[1][j]);
        Mat2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }

    pub fn scale(&self, c: &ExtElem) -> Mat2 {
        let s = |x: &ExtElem| x * c;
        Mat2::new(s(&self.e[0][0]), s(&self.e[0][1]), s(&self.e[1][0]), s(&self.e[1][1]))
    }

    pub fn det(&self) -> ExtElem {
        &self.e[0][0] * &self.e[1][1] - &self.e[0][1] * &self.e[1][0]
    }

    pub fn trace(&self) -> ExtElem {
        &self.e[0][0] + &self.e[1][1]
    }

    /// Coefficients `[c0, c1, c2]` of `X² - tr·X + det`.
    pub fn char_poly(&self) -> [ExtElem; 3] {
        [self.det(), -self.trace(), self.e[0][0].one_like()]
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(
            self.e[1][1].clone(),
            -&self.e[0][1],
            -&self.e[1][0],
            self.e[0][0].clone(),
        )
    }

    pub fn try_inv(&self) -> Result<Mat2, CycloError> {
        let d = self.det().try_inv()?;
        Ok(self.adjugate().scale(&d))
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_invertible()
    }

    /// `self^n`; negative exponents need an invertible matrix.
    pub fn pow(&self, n: i64) -> Result<Mat2, CycloError> {
        let base = if n < 0 { self.try_inv()? } else { self.clone() };
        Ok(base.pow_u(n.unsigned_abs()))
    }

    fn pow_u(&self, mut n: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.algebra());
        let mut b = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn is_scalar(&self) -> bool {
        self.e[0][1].is_zero() && self.e[1][0].is_zero() && self.e[0][0] == self.e[1][1]
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.e[0][0].is_one()
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let d = |i: usize, j: usize| &self.e[i][j] - &o.e[i][j];
        Mat2::new(d(0, 0), d(0, 1), d(1, 0), d(1, 1))
    }

    /// Certified numeric boxes for every entry.
    pub fn numeric(&self, bits: u32) -> [[ComplexInterval; 2]; 2] {
        let n = |i: usize, j: usize| self.e[i][j].numeric_interval(bits);
        [[n(0, 0), n(0, 1)], [n(1, 0), n(1, 1)]]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.e.serialize(s)
    }
}
