//! Exact sign decisions for real elements.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::ext::ExtElem;
use super::CycloError;

/// Precision at which refinement starts.
const START_BITS: u32 = 64;

/// Compares a real element with a rational threshold.
///
/// Realness is checked exactly (the element must equal its complex
/// conjugate). Equality is settled by an exact zero test, after which
/// interval refinement is guaranteed to separate the value from the
/// threshold.
pub fn sign_decide(x: &ExtElem, threshold: &BigRational) -> Result<Ordering, CycloError> {
    let diff = x - &ExtElem::from_rational_in(x.algebra(), threshold);
    if diff.complex_conj()? != diff {
        return Err(CycloError::NotReal);
    }
    // in the non-reduced algebra t embeds as 0, so only u carries a value
    let diff = if x.radicand().is_zero() {
        x.algebra().embed(diff.u().clone())
    } else {
        diff
    };
    if diff.is_zero() {
        return Ok(Ordering::Equal);
    }
    let mut bits = START_BITS;
    loop {
        let ball = diff.eval_ball(bits);
        if ball.re.is_positive() {
            return Ok(Ordering::Greater);
        }
        if ball.re.is_negative() {
            return Ok(Ordering::Less);
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::elem::CycElem;
    use crate::cyclo::ext::QuadAlgebra;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn plain(x: CycElem) -> ExtElem {
        QuadAlgebra::new(CycElem::zero(x.conductor())).embed(x)
    }

    #[test]
    fn sqrt3_below_two() {
        let x = CycElem::root_of_unity(12, 1) + CycElem::root_of_unity(12, -1);
        assert_eq!(sign_decide(&plain(x), &r(2)).unwrap(), Ordering::Less);
    }

    #[test]
    fn exact_equality() {
        let x = CycElem::root_of_unity(6, 1) + CycElem::root_of_unity(6, -1);
        assert_eq!(sign_decide(&plain(x), &r(1)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn rational_comparison() {
        assert_eq!(sign_decide(&plain(CycElem::from_int(3, 2)), &r(1)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn rejects_non_real() {
        assert_eq!(
            sign_decide(&plain(CycElem::root_of_unity(4, 1)), &r(0)),
            Err(CycloError::NotReal)
        );
    }

    #[test]
    fn real_element_with_t() {
        // t = √2 in Q(ζ5)[t]/(t² - 2)
        let alg = QuadAlgebra::new(CycElem::from_int(5, 2));
        let t = alg.t();
        let lo = BigRational::new(BigInt::from(141), BigInt::from(100));
        let hi = BigRational::new(BigInt::from(142), BigInt::from(100));
        assert_eq!(sign_decide(&t, &lo).unwrap(), Ordering::Greater);
        assert_eq!(sign_decide(&t, &hi).unwrap(), Ordering::Less);
    }

    #[test]
    fn tiny_gap_needs_refinement() {
        // 2cos(2π/97) is within 5e-3 of 2
        let x = CycElem::root_of_unity(97, 1) + CycElem::root_of_unity(97, -1);
        let thr = BigRational::new(BigInt::from(19_958), BigInt::from(10_000));
        assert_eq!(sign_decide(&plain(x), &thr).unwrap(), Ordering::Greater);
    }
}
