//! Exact product formulas for lozenge tiling counts and correlations, and
//! the high-precision reals needed for their asymptotics.

mod bulk;
mod error;
mod factored;
mod products;
mod real;

pub use bulk::{
    bulk_asymptote, bulk_correlation, bulk_correlation_factored, ln_bulk_asymptote, ln_bulk_correlation, tolerance,
    PiScaledRational,
};
pub use error::{Error, Result};
pub use factored::Factored;
pub use products::{
    butterfly_sym_factored, butterfly_sym_formula, corner_correlation, corner_correlation_factored,
    flashlight_factored, flashlight_formula, macmahon_box, macmahon_box_factored, pochhammer, spp, spp_factored,
};
pub use real::{bits_for_digits, glaisher, ln_gamma, ln_glaisher, Real};
