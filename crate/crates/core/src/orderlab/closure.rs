//! Breadth-first closure of finitely generated matrix groups.

use std::collections::{BTreeMap, HashSet};
use std::hash::Hash;

use crate::braidrep::Mat2;
use crate::par::Execution;

/// Whether elements are identified up to scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    Projective,
    Linear,
}

/// Group elements the closure can work with.
pub trait ClosureElem: Clone + Send + Sync {
    /// Canonical representative of the element's class under the mode.
    type Key: Hash + Eq + Ord + Clone + Send + Sync;

    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn identity_like(&self) -> Self;
    fn key(&self, mode: ClosureMode) -> Self::Key;
}

/// Closure elements, listed by BFS generation and then by canonical key.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    pub elements: Vec<T>,
    /// `generation_sizes[i]` elements were first reached at word length `i`.
    pub generation_sizes: Vec<usize>,
}

impl<T> Closure<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClosureError {
    #[error("closure exceeded cap {cap} (reached {reached} elements)")]
    CapExceeded { cap: usize, reached: usize },
    #[error("generator is not invertible")]
    Singular,
    #[error("no generators")]
    NoGenerators,
}

/// Closure of `generators` under multiplication by generators and their inverses.
///
/// The BFS frontier is expanded with `exec`; the result does not depend on it.
pub fn group_closure<T: ClosureElem>(
    generators: &[T],
    cap: usize,
    mode: ClosureMode,
    exec: Execution,
) -> Result<Closure<T>, ClosureError> {
    let first = generators.first().ok_or(ClosureError::NoGenerators)?;
    let mut steps = Vec::with_capacity(2 * generators.len());
    for g in generators {
        steps.push(g.clone());
        steps.push(g.inverse().ok_or(ClosureError::Singular)?);
    }
    let id = first.identity_like();
    let mut seen: HashSet<T::Key> = HashSet::new();
    seen.insert(id.key(mode));
    let mut elements = vec![id];
    let mut generation_sizes = vec![1];
    let mut frontier_start = 0;
    while frontier_start < elements.len() {
        let frontier = &elements[frontier_start..];
        let candidates = exec.flat_map(frontier, |x| {
            steps
                .iter()
                .map(|s| {
                    let y = x.compose(s);
                    (y.key(mode), y)
                })
                .collect::<Vec<_>>()
        });
        let mut fresh: BTreeMap<T::Key, T> = BTreeMap::new();
        for (k, y) in candidates {
            if !seen.contains(&k) {
                fresh.entry(k).or_insert(y);
            }
        }
        frontier_start = elements.len();
        if fresh.is_empty() {
            break;
        }
        for (k, y) in fresh {
            seen.insert(k);
            elements.push(y);
        }
        generation_sizes.push(elements.len() - frontier_start);
        if elements.len() > cap {
            return Err(ClosureError::CapExceeded {
                cap,
                reached: elements.len(),
            });
        }
    }
    Ok(Closure {
        elements,
        generation_sizes,
    })
}

impl ClosureElem for Mat2 {
    type Key = Mat2;

    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn identity_like(&self) -> Self {
        Mat2::identity(self.algebra())
    }

    fn key(&self, mode: ClosureMode) -> Mat2 {
        match mode {
            ClosureMode::Linear => self.clone(),
            ClosureMode::Projective => projective_normal_form(self),
        }
    }
}

/// Divides by the first invertible entry in row-major order; scalar multiples
/// of a matrix share this form.
pub fn projective_normal_form(m: &Mat2) -> Mat2 {
    for x in m.entries().iter().flatten() {
        if let Ok(inv) = x.try_inv() {
            return m.scale(&inv);
        }
    }
    m.clone()
}
