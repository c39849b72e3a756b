//! Square matrices over a cyclotomic field.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclo::CycElem;
use crate::orderlab::{ClosureElem, ClosureMode};

/// Dense row-major `n × n` matrix with entries in one `Q(ζ_N)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMat {
    dim: usize,
    e: Vec<CycElem>,
}

impl SquareMat {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> CycElem) -> Self {
        let mut e = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                e.push(f(i, j));
            }
        }
        SquareMat { dim, e }
    }

    pub fn identity(dim: usize, conductor: u32) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                CycElem::one(conductor)
            } else {
                CycElem::zero(conductor)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.e[0].conductor()
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.e[i * self.dim + j]
    }

    pub fn entries(&self) -> &[CycElem] {
        &self.e
    }

    pub fn rows(&self) -> Vec<Vec<CycElem>> {
        self.e.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &SquareMat) -> SquareMat {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let zero = CycElem::zero(self.conductor());
        Self::from_fn(n, |i, j| {
            let mut acc = zero.clone();
            for k in 0..n {
                let a = self.get(i, k);
                let b = o.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        })
    }

    pub fn scale(&self, c: &CycElem) -> SquareMat {
        SquareMat {
            dim: self.dim,
            e: self.e.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> SquareMat {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> SquareMat {
        SquareMat {
            dim: self.dim,
            e: self.e.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn adjoint(&self) -> SquareMat {
        self.conj().transpose()
    }

    pub fn pow(&self, k: u64) -> SquareMat {
        let mut acc = Self::identity(self.dim, self.conductor());
        let mut b = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_scalar(&self) -> bool {
        self.is_diagonal() && (1..self.dim).all(|i| self.get(i, i) == self.get(0, 0))
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.get(0, 0).is_one()
    }

    /// `self = c·other` for some nonzero scalar `c`, by cross-multiplication
    /// against the first nonzero entry.
    pub fn projective_equal(&self, other: &SquareMat) -> bool {
        let Some(p) = self.e.iter().position(|x| !x.is_zero()) else {
            return other.e.iter().all(|x| x.is_zero());
        };
        if other.e[p].is_zero() {
            return false;
        }
        self.e
            .iter()
            .zip(&other.e)
            .all(|(a, b)| a * &other.e[p] == b * &self.e[p])
    }

    /// Divides by the first nonzero entry.
    pub fn projective_normal_form(&self) -> SquareMat {
        match self.e.iter().find(|x| !x.is_zero()) {
            Some(p) => self.scale(&p.try_inv().expect("nonzero entry")),
            None => self.clone(),
        }
    }
}

impl ClosureElem for SquareMat {
    type Key = SquareMat;

    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    /// Inverse via the adjoint; valid for the unitary matrices used here.
    fn inverse(&self) -> Option<Self> {
        let adj = self.adjoint();
        self.mul(&adj).is_identity().then_some(adj)
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.dim, self.conductor())
    }

    fn key(&self, mode: ClosureMode) -> SquareMat {
        match mode {
            ClosureMode::Linear => self.clone(),
            ClosureMode::Projective => self.projective_normal_form(),
        }
    }
}

impl fmt::Debug for SquareMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.e.chunks(self.dim)).finish()
    }
}

impl Serialize for SquareMat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}
