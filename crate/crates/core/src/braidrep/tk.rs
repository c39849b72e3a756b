//! The level-`l` two-dimensional braid representation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use super::mat2::Mat2;
use super::words::{psi_map, BraidGen, BraidWord, SigmaGen, SigmaWord};
use super::BraidError;
use crate::cyclo::{CycElem, ExtElem, QuadAlgebra};

/// Level `l ≥ 1`; fixes `q = exp(2πi/(l+2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Level(u32);

impl Level {
    pub fn new(l: u32) -> Result<Level, BraidError> {
        if l == 0 {
            return Err(BraidError::InvalidLevel(l));
        }
        Ok(Level(l))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `l + 2`, the order of `q`.
    pub fn m(self) -> u32 {
        self.0 + 2
    }

    /// Session conductor `8(l+2)`: holds `q`, `q^(1/4)` and `exp(iπ/(4(l+2)))`.
    pub fn conductor(self) -> u32 {
        8 * self.m()
    }
}

impl TryFrom<u32> for Level {
    type Error = BraidError;
    fn try_from(l: u32) -> Result<Self, BraidError> {
        Level::new(l)
    }
}

impl From<Level> for u32 {
    fn from(l: Level) -> u32 {
        l.0
    }
}

/// Shared per-level data: the field, `t`, and the generator matrices.
#[derive(Debug)]
pub struct TkContext {
    level: Level,
    alg: Arc<QuadAlgebra>,
    q: CycElem,
    gens: [Mat2; 2],
    gens_inv: [Mat2; 2],
}

static CONTEXTS: Lazy<Mutex<HashMap<u32, Arc<TkContext>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl TkContext {
    pub fn get(level: Level) -> Arc<TkContext> {
        if let Some(c) = CONTEXTS.lock().unwrap().get(&level.get()) {
            return c.clone();
        }
        let ctx = Arc::new(Self::build(level));
        CONTEXTS.lock().unwrap().entry(level.get()).or_insert(ctx).clone()
    }

    fn build(level: Level) -> TkContext {
        let n = level.conductor();
        let q = CycElem::root_of_unity(n, 8);
        let radicand = &q * &(CycElem::one(n) + &q + &q * &q);
        let alg = QuadAlgebra::new(radicand);
        let e = |x: CycElem| alg.embed(x);
        let q_m34 = e(CycElem::root_of_unity(n, -6));
        // at l = 1 the radicand vanishes and t = 0
        let t = if alg.radicand().is_zero() { alg.t().zero_like() } else { alg.t() };
        let g1 = Mat2::diag(e(q.clone()), e(CycElem::from_int(n, -1))).scale(&q_m34);
        let c = (CycElem::one(n) + &q).try_inv().expect("q + 1 is nonzero");
        let g2 = Mat2::new(e(CycElem::from_int(n, -1)), t.clone(), t, e(&q * &q))
            .scale(&(&q_m34 * &e(c)));
        let g1_inv = g1.try_inv().expect("generator is invertible");
        let g2_inv = g2.try_inv().expect("generator is invertible");
        TkContext {
            level,
            alg,
            q,
            gens: [g1, g2],
            gens_inv: [g1_inv, g2_inv],
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn algebra(&self) -> &Arc<QuadAlgebra> {
        &self.alg
    }

    pub fn conductor(&self) -> u32 {
        self.level.conductor()
    }

    pub fn q(&self) -> &CycElem {
        &self.q
    }

    /// `q^(k/4)` as a field element.
    pub fn q_quarter_pow(&self, k: i64) -> CycElem {
        CycElem::root_of_unity(self.conductor(), 2 * k)
    }

    pub fn embed(&self, x: CycElem) -> ExtElem {
        self.alg.embed(x)
    }

    pub fn generator(&self, g: BraidGen) -> &Mat2 {
        &self.gens[g as usize]
    }

    pub fn generator_inv(&self, g: BraidGen) -> &Mat2 {
        &self.gens_inv[g as usize]
    }

    pub fn identity(&self) -> Mat2 {
        Mat2::identity(&self.alg)
    }

    /// Image of a braid word.
    pub fn eval(&self, w: &BraidWord) -> Mat2 {
        let mut acc: Option<Mat2> = None;
        for &(g, e) in w.letters() {
            let base = if e > 0 { self.generator(g) } else { self.generator_inv(g) };
            let p = if e.unsigned_abs() == 1 {
                base.clone()
            } else {
                base.pow(e.unsigned_abs() as i64).expect("nonnegative power")
            };
            acc = Some(match acc {
                None => p,
                Some(a) => a.mul(&p),
            });
        }
        acc.unwrap_or_else(|| self.identity())
    }

    /// Image of a four-punctured-sphere loop word via the braid embedding.
    pub fn eval_sigma(&self, w: &SigmaWord) -> Mat2 {
        self.eval(&psi_map(w))
    }

    /// `ρ(Ψ(s_i))` for one loop generator.
    pub fn sigma_generator(&self, s: SigmaGen) -> Mat2 {
        self.eval_sigma(&SigmaWord::letter(s, 1))
    }
}

/// Generator matrix of the representation at a level.
pub fn tk_generator(level: Level, which: BraidGen) -> Mat2 {
    TkContext::get(level).generator(which).clone()
}

/// Image of a braid word at a level.
pub fn eval_braid(level: Level, w: &BraidWord) -> Mat2 {
    TkContext::get(level).eval(w)
}
