//! Finite versus infinite order in PGL(2) and GL(2), group closure and
//! classification of the finite images.

mod certify;
mod classify;
mod closure;
mod verdict;

use thiserror::Error;

use crate::cyclo::CycloError;

pub use certify::never_scalar_up_to;
pub use classify::{classify_group, Classification, GroupId, PresentationCheck};
pub use closure::{group_closure, projective_normal_form, Closure, ClosureElem, ClosureError, ClosureMode};
pub use verdict::{
    gl_order, masbaum_scan, projective_equal, projective_invariant, projective_order,
    sigma_trace_closed_form, trace_of_sigma, OrderVerdict, ParabolicTag, ScanVerdict, Witness,
};

/// Default closure size cap.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;
/// Default powering cap.
pub const DEFAULT_POWER_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("matrix is singular")]
    Singular,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}
