//! JSON form: `{"conductor": N, "coeffs": ["p/q", …]}` for field elements and
//! `{"conductor": N, "coeffs": […], "t_coeffs": […], "radicand": {…}}` for
//! algebra elements. Rationals are decimal strings of unbounded size.

use std::str::FromStr;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::elem::CycElem;
use super::ext::{ExtElem, QuadAlgebra};

#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ExtRepr {
    conductor: u32,
    coeffs: Vec<String>,
    t_coeffs: Vec<String>,
    radicand: CycRepr,
}

fn strings(x: &CycElem) -> Vec<String> {
    x.coeffs().iter().map(|c| c.to_string()).collect()
}

fn repr(x: &CycElem) -> CycRepr {
    CycRepr {
        conductor: x.conductor(),
        coeffs: strings(x),
    }
}

fn parse(r: &CycRepr) -> Result<CycElem, String> {
    if r.conductor == 0 {
        return Err("conductor must be positive".into());
    }
    let coeffs = r
        .coeffs
        .iter()
        .map(|s| BigRational::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = super::field::totient(r.conductor as u64) as usize;
    if coeffs.len() != expected {
        return Err(format!(
            "conductor {} needs {expected} coefficients, got {}",
            r.conductor,
            coeffs.len()
        ));
    }
    Ok(CycElem::from_coeffs(r.conductor, &coeffs))
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        repr(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        parse(&CycRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for ExtElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExtRepr {
            conductor: self.conductor(),
            coeffs: strings(self.u()),
            t_coeffs: strings(self.v()),
            radicand: repr(self.radicand()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ExtRepr::deserialize(d)?;
        let radicand = parse(&r.radicand).map_err(D::Error::custom)?;
        let u = parse(&CycRepr {
            conductor: r.conductor,
            coeffs: r.coeffs,
        })
        .map_err(D::Error::custom)?;
        let v = parse(&CycRepr {
            conductor: r.conductor,
            coeffs: r.t_coeffs,
        })
        .map_err(D::Error::custom)?;
        Ok(ExtElem::new(u, v, QuadAlgebra::new(radicand)))
    }
}
