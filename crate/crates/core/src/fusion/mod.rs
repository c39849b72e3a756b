//! sl(2) fusion rules at level `l`, conformal-block dimensions by path
//! counting, and the Verlinde formula.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braidrep::Level;
use crate::cyclo::CycElem;
use crate::modular::build_modular;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("weight {weight} is outside 0..={level}")]
    WeightOutOfRange { weight: u32, level: u32 },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

/// Weight `m·ϖ` with `0 ≤ m ≤ l`; self-dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(u32);

impl Weight {
    pub fn new(m: u32, level: Level) -> Result<Weight, FusionError> {
        if m > level.get() {
            return Err(FusionError::WeightOutOfRange {
                weight: m,
                level: level.get(),
            });
        }
        Ok(Weight(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn dual(self) -> Weight {
        self
    }
}

/// Genus, marked weights and level of a space of conformal blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSpec {
    pub genus: u32,
    pub weights: Vec<Weight>,
    pub level: Level,
}

impl BlockSpec {
    pub fn new(genus: u32, weights: &[u32], level: Level) -> Result<BlockSpec, FusionError> {
        let weights = weights
            .iter()
            .map(|&m| Weight::new(m, level))
            .collect::<Result<_, _>>()?;
        Ok(BlockSpec { genus, weights, level })
    }
}

/// `{c : |a-b| ≤ c ≤ min(a+b, 2l-a-b), c ≡ a+b mod 2}`.
pub fn fusion_product(a: Weight, b: Weight, level: Level) -> Result<BTreeSet<Weight>, FusionError> {
    let a = Weight::new(a.0, level)?.0;
    let b = Weight::new(b.0, level)?.0;
    let l = level.get();
    let lo = a.abs_diff(b);
    let hi = (a + b).min(2 * l - a - b);
    Ok((lo..=hi).step_by(2).map(Weight).collect())
}

/// Fusion coefficient `N_{ab}^c ∈ {0, 1}`.
pub fn fusion_coefficient(a: u32, b: u32, c: u32, l: u32) -> bool {
    let lo = a.abs_diff(b);
    let hi = (a + b).min(2 * l - a - b);
    lo <= c && c <= hi && (a + b + c) % 2 == 0 && c <= l
}

/// Formal sum of weights with multiplicities, indexed by `m`.
type Vector = Vec<BigUint>;

fn unit(l: u32, m: u32) -> Vector {
    let mut v = vec![BigUint::zero(); (l + 1) as usize];
    v[m as usize] = BigUint::one();
    v
}

/// Fusion product of two formal sums.
fn fuse(x: &Vector, y: &Vector, l: u32) -> Vector {
    let mut out = vec![BigUint::zero(); (l + 1) as usize];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let prod = xa * yb;
            for c in 0..=l {
                if fusion_coefficient(a as u32, b as u32, c, l) {
                    out[c as usize] += &prod;
                }
            }
        }
    }
    out
}

/// `Σ_μ μ ⊗ μ†`, the formal sum inserted by one genus handle.
fn handle(l: u32) -> Vector {
    let mut out = vec![BigUint::zero(); (l + 1) as usize];
    for mu in 0..=l {
        let sq = fuse(&unit(l, mu), &unit(l, mu), l);
        for (o, s) in out.iter_mut().zip(sq) {
            *o += s;
        }
    }
    out
}

/// Dimension by path counting along a caterpillar: fuse the marked weights
/// one at a time, then sew `g` handles at the last node, and read off the
/// vacuum coefficient.
pub fn block_dimension(spec: &BlockSpec) -> BigUint {
    let l = spec.level.get();
    let mut v = unit(l, 0);
    for w in &spec.weights {
        v = fuse(&v, &unit(l, w.0), l);
    }
    let h = handle(l);
    for _ in 0..spec.genus {
        v = fuse(&v, &h, l);
    }
    v.swap_remove(0)
}

fn balanced(parts: &[Vector], l: u32) -> Vector {
    match parts.len() {
        0 => unit(l, 0),
        1 => parts[0].clone(),
        n => fuse(&balanced(&parts[..n / 2], l), &balanced(&parts[n / 2..], l), l),
    }
}

/// Dimension through a balanced pants decomposition: two subtrees glued
/// along one neck, summing over the neck label.
pub fn block_dimension_balanced(spec: &BlockSpec) -> BigUint {
    let l = spec.level.get();
    let h = handle(l);
    let mut parts: Vec<Vector> = spec.weights.iter().map(|w| unit(l, w.0)).collect();
    parts.extend((0..spec.genus).map(|_| h.clone()));
    let half = parts.len() / 2;
    let left = balanced(&parts[..half], l);
    let right = balanced(&parts[half..], l);
    // the neck label c pairs with its dual c† = c
    left.iter().zip(&right).map(|(a, b)| a * b).sum()
}

/// Per-level table for the Verlinde sum, built from the unnormalized S matrix.
struct VerlindeTable {
    /// `r[λ][j] = s_{λ+1,j} / s_{1,j}`.
    ratios: Vec<Vec<CycElem>>,
    /// `s_{1,j}²`.
    s0_squared: Vec<CycElem>,
    /// `s_{1,j}⁻²`.
    s0_squared_inv: Vec<CycElem>,
}

static TABLES: Lazy<Mutex<HashMap<u32, Arc<VerlindeTable>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn table(level: Level) -> Arc<VerlindeTable> {
    if let Some(t) = TABLES.lock().unwrap().get(&level.get()) {
        return t.clone();
    }
    let rep = build_modular(level);
    let s = &rep.s_unnormalized;
    let dim = s.dim();
    let inv0: Vec<CycElem> = (0..dim).map(|j| s.get(0, j).try_inv().expect("sin is nonzero")).collect();
    let ratios = (0..dim)
        .map(|lam| (0..dim).map(|j| s.get(lam, j) * &inv0[j]).collect())
        .collect();
    let s0_squared: Vec<CycElem> = (0..dim).map(|j| s.get(0, j) * s.get(0, j)).collect();
    let s0_squared_inv = inv0.iter().map(|x| x * x).collect();
    let t = Arc::new(VerlindeTable {
        ratios,
        s0_squared,
        s0_squared_inv,
    });
    TABLES.lock().unwrap().entry(level.get()).or_insert(t).clone()
}

/// Verlinde formula
/// `dim = (2/m)^(1-g) Σ_j s_{1j}^(2-2g) Π_i s_{λ_i+1,j}/s_{1j}`
/// with `s` the unnormalized sine matrix; certified to be a nonnegative integer.
pub fn verlinde_dimension(spec: &BlockSpec) -> Result<BigUint, FusionError> {
    let t = table(spec.level);
    let n = spec.level.conductor();
    let m = spec.level.m();
    let g = spec.genus as i64;
    let mut sum = CycElem::zero(n);
    for j in 0..t.ratios.len() {
        let mut term = if g == 0 {
            t.s0_squared[j].clone()
        } else {
            t.s0_squared_inv[j].pow(g - 1).expect("nonnegative power")
        };
        for w in &spec.weights {
            if w.0 != 0 {
                term = &term * &t.ratios[w.0 as usize][j];
            }
        }
        sum = sum + term;
    }
    let total = sum
        .as_rational()
        .ok_or_else(|| FusionError::Consistency("Verlinde sum is irrational".into()))?;
    // (2/m)^(1-g)
    let e = 1 - g;
    let base = BigRational::new(BigInt::from(2), BigInt::from(m));
    let factor = if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    };
    let value = total * factor;
    if !value.is_integer() || value.is_negative() {
        return Err(FusionError::Consistency(format!("Verlinde value {value} is not a nonnegative integer")));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Both methods, with the agreement flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dimension: String,
    pub path_count: String,
    pub balanced: String,
    pub verlinde: String,
    pub agreement: bool,
}

pub fn dimension_report(spec: &BlockSpec) -> Result<DimensionReport, FusionError> {
    let a = block_dimension(spec);
    let b = block_dimension_balanced(spec);
    let v = verlinde_dimension(spec)?;
    Ok(DimensionReport {
        dimension: a.to_string(),
        agreement: a == b && a == v,
        path_count: a.to_string(),
        balanced: b.to_string(),
        verlinde: v.to_string(),
    })
}

/// Convenience: a `u64` view when the dimension fits.
pub fn as_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
