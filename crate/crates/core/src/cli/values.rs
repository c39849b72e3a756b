//! Tagged values: every algebraic number in a report is either exact or a
//! certified interval.

use serde::{Deserialize, Serialize};

use crate::braidrep::Mat2;
use crate::cyclo::{ComplexInterval, DecimalInterval, ExtElem};

/// Decimal digits printed for interval endpoints.
pub const INTERVAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalBox {
    pub re: DecimalInterval,
    pub im: DecimalInterval,
    pub bits: u32,
}

impl IntervalBox {
    pub fn from_interval(b: &ComplexInterval) -> Self {
        IntervalBox {
            re: DecimalInterval::outward(&b.re[0], &b.re[1], INTERVAL_DIGITS),
            im: DecimalInterval::outward(&b.im[0], &b.im[1], INTERVAL_DIGITS),
            bits: b.bits,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactValue {
    pub exact: ExtElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalValue {
    pub interval: IntervalBox,
}

/// An algebraic value with both its exact form and a certified enclosure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tagged {
    pub exact: ExtElem,
    pub interval: IntervalBox,
}

pub fn tagged(x: &ExtElem, bits: u32) -> Tagged {
    Tagged {
        exact: x.clone(),
        interval: IntervalBox::from_interval(&x.numeric_interval(bits)),
    }
}

pub fn exact_matrix(m: &Mat2) -> Vec<Vec<ExactValue>> {
    m.entries()
        .iter()
        .map(|row| row.iter().map(|x| ExactValue { exact: x.clone() }).collect())
        .collect()
}

pub fn interval_matrix(m: &Mat2, bits: u32) -> Vec<Vec<IntervalValue>> {
    m.numeric(bits)
        .iter()
        .map(|row| {
            row.iter()
                .map(|b| IntervalValue {
                    interval: IntervalBox::from_interval(b),
                })
                .collect()
        })
        .collect()
}
