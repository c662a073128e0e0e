use std::collections::BTreeSet;
use std::fmt;

use crate::cell::{Edge, TriCell};
use crate::error::{Error, Result};

/// A symmetry of the plane that maps the triangular lattice to itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    /// Reflection across a horizontal line (swaps up and down cells).
    Horizontal,
    /// Reflection across a vertical line.
    Vertical,
    /// Rotation by 180 degrees.
    Rotation,
}

impl Symmetry {
    fn flips(self) -> (bool, bool) {
        match self {
            Symmetry::Horizontal => (false, true),
            Symmetry::Vertical => (true, false),
            Symmetry::Rotation => (true, true),
        }
    }
}

/// The group generated by a set of symmetries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SymmetryClass {
    generators: BTreeSet<Symmetry>,
}

impl SymmetryClass {
    pub fn new(generators: impl IntoIterator<Item = Symmetry>) -> Self {
        SymmetryClass { generators: generators.into_iter().collect() }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn horizontal_vertical() -> Self {
        Self::new([Symmetry::Horizontal, Symmetry::Vertical])
    }

    pub fn generators(&self) -> &BTreeSet<Symmetry> {
        &self.generators
    }

    /// The group as (flip columns, flip rows) pairs. Its order is 1, 2 or 4.
    pub fn elements(&self) -> Vec<(bool, bool)> {
        let mut group = vec![(false, false)];
        loop {
            let mut grew = false;
            for g in &self.generators {
                let (gc, gr) = g.flips();
                for i in 0..group.len() {
                    let (c, r) = group[i];
                    let prod = (c ^ gc, r ^ gr);
                    if !group.contains(&prod) {
                        group.push(prod);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        group.sort();
        group
    }

    /// The group elements acting about the centre of the box
    /// `((cmin, cmax), (rmin, rmax))` of cell coordinates.
    pub fn transforms(&self, bounds: Option<((i32, i32), (i32, i32))>) -> Result<Vec<Transform>> {
        let Some(((cmin, cmax), (rmin, rmax))) = bounds else {
            return Ok(vec![Transform::IDENTITY]);
        };
        let col_sum = cmin + cmax;
        let row_sum = rmin + rmax;
        self.elements()
            .into_iter()
            .map(|(fc, fr)| {
                // Mirrors in a vertical line keep orientation, so the axis
                // must pass through cell apexes (even column sum). Mirrors in
                // a horizontal line and half-turns swap up and down cells.
                let ok = match (fc, fr) {
                    (false, false) => true,
                    (true, false) => col_sum % 2 == 0,
                    (false, true) => row_sum % 2 != 0,
                    (true, true) => (col_sum + row_sum) % 2 != 0,
                };
                if !ok {
                    return Err(Error::NotInvariant(format!(
                        "{self}: the centre of the region is not a symmetry centre of the lattice"
                    )));
                }
                Ok(Transform { col_sum: fc.then_some(col_sum), row_sum: fr.then_some(row_sum) })
            })
            .collect()
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "{{identity}}");
        }
        let names: Vec<&str> = self
            .generators
            .iter()
            .map(|g| match g {
                Symmetry::Horizontal => "horizontal",
                Symmetry::Vertical => "vertical",
                Symmetry::Rotation => "rotation",
            })
            .collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// A concrete lattice symmetry: optional column mirror `c -> col_sum - c` and
/// optional row mirror `r -> row_sum - r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transform {
    pub col_sum: Option<i32>,
    pub row_sum: Option<i32>,
}

impl Transform {
    pub const IDENTITY: Transform = Transform { col_sum: None, row_sum: None };

    pub fn cell(&self, c: TriCell) -> TriCell {
        TriCell::new(self.col_sum.map_or(c.col, |s| s - c.col), self.row_sum.map_or(c.row, |s| s - c.row))
    }

    pub fn edge(&self, e: Edge) -> Edge {
        let [a, b] = e.cells();
        self.cell(a).shared_edge(self.cell(b)).expect("symmetries preserve adjacency")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(SymmetryClass::identity().elements().len(), 1);
        assert_eq!(SymmetryClass::new([Symmetry::Rotation]).elements().len(), 2);
        assert_eq!(SymmetryClass::horizontal_vertical().elements().len(), 4);
        let hr = SymmetryClass::new([Symmetry::Horizontal, Symmetry::Rotation]);
        assert_eq!(hr.elements(), SymmetryClass::horizontal_vertical().elements());
    }

    #[test]
    fn transforms_preserve_orientation() {
        let t = Transform { col_sum: Some(4), row_sum: Some(3) };
        for col in -3..5 {
            for row in -2..4 {
                let c = TriCell::new(col, row);
                let m = t.cell(c);
                assert_ne!(m.orient(), c.orient());
                for n in c.neighbors() {
                    assert!(m.neighbors().contains(&t.cell(n)));
                }
            }
        }
    }
}
