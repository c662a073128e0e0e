//! Triangular-lattice geometry: oriented unit cells, regions with free
//! boundary edges, lattice symmetries, and the planar dual graphs on which
//! matchings are counted.

mod cell;
mod error;
mod graph;
mod region;
mod symmetry;

pub use cell::{Dir, Edge, Orient, Side, TriCell};
pub use error::{Error, Result};
pub use graph::{in_cyclic_order, Embedding, FaceQuad, FreeMatchGraph, WeightedEdge};
pub use region::{Region, Tiling};
pub use symmetry::{Symmetry, SymmetryClass, Transform};
