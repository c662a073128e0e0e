//! Exact counting of matchings in which a designated set of free vertices
//! may stay unmatched, by three independent engines, plus counting of
//! lozenge tilings invariant under a symmetry group.

mod enumerate;
mod error;
mod listing;
mod profile;
mod symmetric;
mod value;

pub use enumerate::{
    mf_enumerate, mf_subset_oracle, mf_subset_oracle_capped, mf_without, perfect_count, perfect_without,
    DEFAULT_SUBSET_CAP,
};
pub use error::{Error, Result};
pub use listing::{admissible_matchings, first_tiling, tilings, Matching};
pub use profile::mf_profile_dp;
pub use symmetric::symmetric_count;
pub use value::CountValue;
