//! Identification of finite projective image groups.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::closure::{group_closure, ClosureError, ClosureMode};
use super::verdict::projective_order;
use super::OrderError;
use crate::braidrep::Mat2;
use crate::par::Execution;

/// Isomorphism type of a finite subgroup of PGL(2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum GroupId {
    Cyclic { n: u64 },
    Klein4,
    Dihedral { n: u64 },
    A4,
    S4,
    A5,
    /// Finite but not one of the types above (cannot occur for PGL(2, C)).
    Unclassified { order: u64 },
    InfiniteOrCapExceeded { cap: usize },
}

impl GroupId {
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupId::Cyclic { n } => Some(*n),
            GroupId::Klein4 => Some(4),
            GroupId::Dihedral { n } => Some(2 * n),
            GroupId::A4 => Some(12),
            GroupId::S4 => Some(24),
            GroupId::A5 => Some(60),
            GroupId::Unclassified { order } => Some(*order),
            GroupId::InfiniteOrCapExceeded { .. } => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupId::Cyclic { n } => format!("C{n}"),
            GroupId::Klein4 => "V4".into(),
            GroupId::Dihedral { n } => format!("D{n}"),
            GroupId::A4 => "A4".into(),
            GroupId::S4 => "S4".into(),
            GroupId::A5 => "A5".into(),
            GroupId::Unclassified { order } => format!("unclassified({order})"),
            GroupId::InfiniteOrCapExceeded { .. } => "infinite_or_cap_exceeded".into(),
        }
    }
}

/// Orders of `a`, `b` and `ab` for a two-generator presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationCheck {
    pub relations: String,
    pub a: String,
    pub b: String,
    pub orders: [u64; 3],
    pub expected: [u64; 3],
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub group: GroupId,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u64>,
    /// Number of elements of each projective order.
    pub element_orders: BTreeMap<u64, usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub presentation: Option<PresentationCheck>,
}

fn order_of(m: &Mat2, cap: u64) -> Result<u64, OrderError> {
    projective_order(m, cap)?
        .finite_order()
        .ok_or_else(|| OrderError::Consistency("element of a finite closure has no finite order".into()))
}

fn presentation(gens: &[Mat2], group: &GroupId, cap: u64) -> Result<Option<PresentationCheck>, OrderError> {
    if gens.len() != 2 {
        return Ok(None);
    }
    let (m1, m2) = (&gens[0], &gens[1]);
    let m1_inv = m1.try_inv()?;
    let b = m1_inv.mul(m2);
    let (a, a_name, relations, expected) = match group {
        GroupId::A4 => (m1.clone(), "m1", "a^3 = b^2 = (ab)^3 = 1", [3, 2, 3]),
        GroupId::A5 => (
            m1.mul(&m2.try_inv()?).mul(m1),
            "m1 m2^-1 m1",
            "a^2 = b^3 = (ab)^5 = 1",
            [2, 3, 5],
        ),
        _ => return Ok(None),
    };
    let ab = a.mul(&b);
    let orders = [order_of(&a, cap)?, order_of(&b, cap)?, order_of(&ab, cap)?];
    Ok(Some(PresentationCheck {
        relations: relations.into(),
        a: a_name.into(),
        b: "m1^-1 m2".into(),
        orders,
        expected,
        holds: orders == expected,
    }))
}

/// Classifies the projective image generated by `gens`.
pub fn classify_group(
    gens: &[Mat2],
    closure_cap: usize,
    power_cap: u64,
    exec: Execution,
) -> Result<Classification, OrderError> {
    let closure = match group_closure(gens, closure_cap, ClosureMode::Projective, exec) {
        Ok(c) => c,
        Err(ClosureError::CapExceeded { cap, .. }) => {
            return Ok(Classification {
                group: GroupId::InfiniteOrCapExceeded { cap },
                order: None,
                element_orders: BTreeMap::new(),
                presentation: None,
            })
        }
        Err(ClosureError::Singular) => return Err(OrderError::Singular),
        Err(ClosureError::NoGenerators) => return Err(OrderError::Consistency("no generators".into())),
    };
    let n = closure.order() as u64;
    let orders = exec.map(&closure.elements, |m| order_of(m, power_cap));
    let mut element_orders = BTreeMap::new();
    for o in orders {
        *element_orders.entry(o?).or_insert(0usize) += 1;
    }
    let max_order = *element_orders.keys().max().unwrap_or(&1);
    let count = |o: u64| element_orders.get(&o).copied().unwrap_or(0) as u64;
    let only = |allowed: &[u64]| element_orders.keys().all(|o| allowed.contains(o));
    let group = if max_order == n {
        GroupId::Cyclic { n }
    } else if n == 4 && only(&[1, 2]) {
        GroupId::Klein4
    } else if n == 12 && only(&[1, 2, 3]) {
        GroupId::A4
    } else if n == 24 && only(&[1, 2, 3, 4]) && count(3) == 8 {
        GroupId::S4
    } else if n == 60 && only(&[1, 2, 3, 5]) {
        GroupId::A5
    } else if n % 2 == 0 && max_order == n / 2 && count(2) >= n / 2 {
        GroupId::Dihedral { n: n / 2 }
    } else {
        GroupId::Unclassified { order: n }
    };
    let presentation = presentation(gens, &group, power_cap)?;
    if let Some(p) = &presentation {
        if !p.holds {
            return Err(OrderError::Consistency(format!(
                "{} presentation fails: orders {:?}, expected {:?}",
                group.name(),
                p.orders,
                p.expected
            )));
        }
    }
    Ok(Classification {
        order: Some(n),
        group,
        element_orders,
        presentation,
    })
}
