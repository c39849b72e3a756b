//! Modular certificates that powers of a matrix are never scalar.

use std::collections::BTreeSet;

use crate::braidrep::Mat2;
use crate::cyclo::modp::{is_scalar_mod, mat_mul_mod, ModMat2, ModpHom};

/// Number of primes tried before exact powers are consulted.
const PRIMES: usize = 4;

fn reduce(m: &Mat2, h: &ModpHom) -> Option<ModMat2> {
    let e = m.entries();
    Some([
        [h.ext(&e[0][0])?, h.ext(&e[0][1])?],
        [h.ext(&e[1][0])?, h.ext(&e[1][1])?],
    ])
}

/// Exponents `1..=bound` at which `m^n` is scalar modulo `p`.
fn scalar_hits(m: &Mat2, h: &ModpHom, bound: u64) -> Option<BTreeSet<u64>> {
    let r = reduce(m, h)?;
    let mut p = r;
    let mut hits = BTreeSet::new();
    for n in 1..=bound {
        if is_scalar_mod(&p) {
            hits.insert(n);
        }
        p = mat_mul_mod(&p, &r, h.prime());
    }
    Some(hits)
}

/// Certifies that no power `m^n`, `1 ≤ n ≤ bound`, is a scalar matrix.
///
/// Reduction modulo primes `p ≡ 1 (mod N)` is a homomorphism, so a power that
/// is non-scalar modulo some `p` is non-scalar. Exponents that look scalar
/// modulo every tried prime are checked exactly.
pub fn never_scalar_up_to(m: &Mat2, bound: u64) -> bool {
    let alg = m.algebra();
    let mut suspects: Option<BTreeSet<u64>> = None;
    let mut start = 1u64 << 40;
    let mut used = 0;
    while used < PRIMES {
        let h = ModpHom::new(alg, start);
        start = h.prime() + 1;
        let Some(hits) = scalar_hits(m, &h, bound) else {
            continue;
        };
        used += 1;
        suspects = Some(match suspects {
            None => hits,
            Some(s) => s.intersection(&hits).copied().collect(),
        });
        if suspects.as_ref().is_some_and(|s| s.is_empty()) {
            return true;
        }
    }
    suspects
        .unwrap_or_default()
        .into_iter()
        .all(|n| !m.pow(n as i64).expect("nonnegative power").is_scalar())
}
