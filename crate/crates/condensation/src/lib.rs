//! Graphical condensation for matchings with a free boundary: the
//! separation predicate, the path-shift bijection behind the identities,
//! exact residuals of every identity, random test instances, and the
//! flashlight recurrence.

mod error;
mod identities;
mod random;
mod recurrence;
mod separation;
mod superposition;

pub use error::{Error, Result};
pub use identities::{
    check_hypotheses, evaluate, residual, residual_ebh, residual_eight, residual_eight_bd, residual_four_even,
    residual_four_odd, residual_kuo_classical, Evaluation, Identity,
};
pub use random::{random_separated_quad, QuadRequest, WeightMode};
pub use recurrence::{flashlight_count, verify_flashlight_recurrence, RecurrenceCheck};
pub use separation::{is_separated, separation_witness, Anchor, Witness};
pub use superposition::{
    classify, is_term_pair, shift_along_path, term_superpositions, PathClass, Route, Superposition, Term,
};
