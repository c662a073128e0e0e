use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("free set has {size} vertices, above the cap of {cap}")]
    FreeSetTooLarge { size: usize, cap: usize },
    #[error("symmetric counting needs a region without free edges")]
    FreeBoundary,
    #[error(transparent)]
    Lattice(#[from] lozenge_lattice::Error),
}

impl Error {
    pub fn not_invariant(&self) -> bool {
        matches!(self, Error::Lattice(lozenge_lattice::Error::NotInvariant(_)))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
