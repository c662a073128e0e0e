use thiserror::Error;

use crate::separation::Anchor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the free set is not {anchor}-separated: {witness}")]
    NotSeparated { anchor: Anchor, witness: String },
    #[error("this identity needs an empty free set, found {0} free vertices")]
    FreeSetNotEmpty(usize),
    #[error("vertex {0} is not the end of a path in the superposition")]
    NotPathEnd(usize),
    #[error("invalid superposition: {0}")]
    InvalidSuperposition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no admissible quad after {attempts} attempts with a budget of {budget} vertices")]
    GaveUp { attempts: usize, budget: usize },
    #[error(transparent)]
    Count(#[from] lozenge_count::Error),
    #[error(transparent)]
    Lattice(#[from] lozenge_lattice::Error),
    #[error(transparent)]
    Regions(#[from] lozenge_regions::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
