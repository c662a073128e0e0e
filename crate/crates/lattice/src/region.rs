use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::cell::{Dir, Edge, Orient, TriCell};
use crate::error::{Error, Result};
use crate::symmetry::{SymmetryClass, Transform};

/// A finite set of cells together with its free boundary edges.
///
/// Cut edges are interior edges across which no lozenge may be placed; they
/// model removed shapes of zero area (a slit between two rows).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<TriCell>,
    free_edges: BTreeSet<Edge>,
    cut_edges: BTreeSet<Edge>,
}

impl Region {
    pub fn new(cells: impl IntoIterator<Item = TriCell>, free_edges: impl IntoIterator<Item = Edge>) -> Result<Region> {
        Region::with_cuts(cells, free_edges, [])
    }

    pub fn with_cuts(
        cells: impl IntoIterator<Item = TriCell>,
        free_edges: impl IntoIterator<Item = Edge>,
        cut_edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Region> {
        let mut set = BTreeSet::new();
        for c in cells {
            if !set.insert(c) {
                return Err(Error::DuplicateCell(c));
            }
        }
        let free_edges: BTreeSet<Edge> = free_edges.into_iter().collect();
        for &e in &free_edges {
            let inside = e.cells().iter().filter(|c| set.contains(c)).count();
            if inside != 1 {
                return Err(Error::FreeEdgeNotOnBoundary(e));
            }
        }
        let cut_edges: BTreeSet<Edge> = cut_edges.into_iter().collect();
        for &e in &cut_edges {
            if !e.cells().iter().all(|c| set.contains(c)) {
                return Err(Error::CutEdgeNotInterior(e));
            }
        }
        Ok(Region { cells: set, free_edges, cut_edges })
    }

    pub fn empty() -> Region {
        Region::default()
    }

    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    pub fn free_edges(&self) -> &BTreeSet<Edge> {
        &self.free_edges
    }

    pub fn cut_edges(&self) -> &BTreeSet<Edge> {
        &self.cut_edges
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: TriCell) -> bool {
        self.cells.contains(&cell)
    }

    /// Whether `cell` touches a free edge.
    pub fn is_free(&self, cell: TriCell) -> bool {
        self.contains(cell) && cell.edges().iter().any(|e| self.free_edges.contains(e))
    }

    pub fn free_cells(&self) -> Vec<TriCell> {
        self.cells.iter().copied().filter(|&c| self.is_free(c)).collect()
    }

    /// Whether a lozenge may cover `a` and `b`.
    pub fn adjacent(&self, a: TriCell, b: TriCell) -> bool {
        self.contains(a) && self.contains(b) && a.shared_edge(b).is_some_and(|e| !self.cut_edges.contains(&e))
    }

    /// Neighbours of `cell` inside the region, excluding those across cuts.
    pub fn neighbors(&self, cell: TriCell) -> impl Iterator<Item = TriCell> + '_ {
        cell.neighbors().into_iter().filter(move |&n| self.adjacent(cell, n))
    }

    /// Index of each cell in row-major order; this is the vertex numbering
    /// of [`Region::dual_graph`].
    pub fn index(&self) -> BTreeMap<TriCell, usize> {
        self.cells.iter().enumerate().map(|(i, &c)| (c, i)).collect()
    }

    /// Smallest and largest column and row occupied, or `None` when empty.
    pub fn bounds(&self) -> Option<((i32, i32), (i32, i32))> {
        let first = self.cells.iter().next()?;
        let mut cols = (first.col, first.col);
        let mut rows = (first.row, first.row);
        for c in &self.cells {
            cols = (cols.0.min(c.col), cols.1.max(c.col));
            rows = (rows.0.min(c.row), rows.1.max(c.row));
        }
        Some((cols, rows))
    }

    /// Shift by `dc` half-units and `dr` rows. `dc + dr` must be even so
    /// that orientations are preserved.
    pub fn translate(&self, dc: i32, dr: i32) -> Region {
        assert!((dc + dr) % 2 == 0, "translation by ({dc}, {dr}) flips orientation");
        Region {
            cells: self.cells.iter().map(|c| c.translate(dc, dr)).collect(),
            free_edges: self.free_edges.iter().map(|e| e.translate(dc, dr)).collect(),
            cut_edges: self.cut_edges.iter().map(|e| e.translate(dc, dr)).collect(),
        }
    }

    /// Translate so that the lowest row is 0 and the leftmost column is 0 or
    /// 1 (whichever keeps orientations).
    pub fn normalized(&self) -> Region {
        match self.bounds() {
            None => self.clone(),
            Some(((cmin, _), (rmin, _))) => {
                let dr = -rmin;
                let mut dc = -cmin;
                if (dc + dr) % 2 != 0 {
                    dc += 1;
                }
                self.translate(dc, dr)
            }
        }
    }

    /// The region with `removed` cells taken out. Free and cut edges that no
    /// longer qualify are dropped.
    pub fn without_cells(&self, removed: &[TriCell]) -> Region {
        let cells: BTreeSet<TriCell> = self.cells.iter().copied().filter(|c| !removed.contains(c)).collect();
        let free_edges =
            self.free_edges.iter().copied().filter(|e| e.cells().iter().any(|c| cells.contains(c))).collect();
        let cut_edges =
            self.cut_edges.iter().copied().filter(|e| e.cells().iter().all(|c| cells.contains(c))).collect();
        Region { cells, free_edges, cut_edges }
    }

    /// Apply a lattice symmetry to every cell and edge.
    pub fn transformed(&self, t: &Transform) -> Region {
        Region {
            cells: self.cells.iter().map(|&c| t.cell(c)).collect(),
            free_edges: self.free_edges.iter().map(|&e| t.edge(e)).collect(),
            cut_edges: self.cut_edges.iter().map(|&e| t.edge(e)).collect(),
        }
    }

    /// The group elements of `class`, realised about this region's centre.
    /// Fails unless the region (cells, free edges and cuts) is mapped to
    /// itself by every element.
    pub fn symmetry_group(&self, class: &SymmetryClass) -> Result<Vec<Transform>> {
        let group = class.transforms(self.bounds())?;
        for t in &group {
            if self.transformed(t) != *self {
                return Err(Error::NotInvariant(class.to_string()));
            }
        }
        Ok(group)
    }

    /// Parse the text format: one `col row U|D` line per cell, then
    /// `FREE col row L|R|H` and `CUT col row L|R|H` lines naming an edge of a
    /// cell by direction. `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Region> {
        let mut cells = Vec::new();
        let mut free = Vec::new();
        let mut cuts = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (kind, rest) = match fields[0] {
                "FREE" | "CUT" => (Some(fields[0]), &fields[1..]),
                _ => (None, &fields[..]),
            };
            if rest.len() != 3 {
                return Err(err(format!("expected 3 fields after the keyword, got {}", rest.len())));
            }
            let col: i32 = rest[0].parse().map_err(|_| err(format!("bad column {:?}", rest[0])))?;
            let row: i32 = rest[1].parse().map_err(|_| err(format!("bad row {:?}", rest[1])))?;
            let cell = TriCell::new(col, row);
            match kind {
                None => {
                    let found = match rest[2] {
                        "U" => Orient::Up,
                        "D" => Orient::Down,
                        other => return Err(err(format!("orientation must be U or D, got {other:?}"))),
                    };
                    if found != cell.orient() {
                        return Err(err(format!(
                            "cell ({col}, {row}) is {} by parity but marked {}",
                            cell.orient().name(),
                            found.name()
                        )));
                    }
                    cells.push(cell);
                }
                Some(keyword) => {
                    let dir = Dir::from_letter(rest[2])
                        .ok_or_else(|| err(format!("direction must be L, R or H, got {:?}", rest[2])))?;
                    if keyword == "FREE" {
                        free.push(cell.edge(dir));
                    } else {
                        cuts.push(cell.edge(dir));
                    }
                }
            }
        }
        Region::with_cuts(cells, free, cuts)
    }

    /// Inverse of [`Region::from_text`]. Edges are written relative to the
    /// region cell that contains them (the lower one for cuts).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let _ = writeln!(out, "{} {} {}", c.col, c.row, c.orient().letter());
        }
        for (keyword, edges) in [("FREE", &self.free_edges), ("CUT", &self.cut_edges)] {
            for &e in edges {
                let cell = *e.cells().iter().filter(|c| self.contains(**c)).min().expect("edge touches region");
                let dir = e.dir_from(cell).expect("edge of its own cell");
                let _ = writeln!(out, "{keyword} {} {} {}", cell.col, cell.row, dir.letter());
            }
        }
        out
    }
}

/// A tiling of a region with free boundary: lozenges plus the free cells
/// left uncovered, each recorded with the free edge it protrudes across.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tiling {
    pub lozenges: Vec<(TriCell, TriCell)>,
    pub protrusions: Vec<(TriCell, Edge)>,
}

impl Tiling {
    /// Whether this is a valid tiling of `region`: every cell is covered
    /// exactly once, by a lozenge or (for free cells) a protrusion.
    pub fn is_valid_for(&self, region: &Region) -> bool {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.lozenges {
            if !region.adjacent(a, b) || !seen.insert(a) || !seen.insert(b) {
                return false;
            }
        }
        for &(c, e) in &self.protrusions {
            if !region.free_edges().contains(&e) || !e.contains(c) || !seen.insert(c) {
                return false;
            }
        }
        seen.len() == region.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up() -> TriCell {
        TriCell::new(0, 0)
    }

    #[test]
    fn single_and_empty_regions() {
        assert_eq!(Region::new([up()], []).unwrap().len(), 1);
        assert!(Region::new([], []).unwrap().is_empty());
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(Region::new([up(), up()], []), Err(Error::DuplicateCell(up())));
    }

    #[test]
    fn rejects_interior_free_edge() {
        let down = TriCell::new(1, 0);
        let shared = up().shared_edge(down).unwrap();
        assert!(Region::new([up()], [shared]).is_ok());
        assert_eq!(Region::new([up(), down], [shared]), Err(Error::FreeEdgeNotOnBoundary(shared)));
        let far = TriCell::new(10, 0).edge(Dir::Horizontal);
        assert!(Region::new([up()], [far]).is_err());
    }

    #[test]
    fn free_cells_touch_free_edges() {
        let r = Region::new([up(), TriCell::new(1, 0)], [up().edge(Dir::Horizontal)]).unwrap();
        assert_eq!(r.free_cells(), vec![up()]);
    }

    #[test]
    fn text_round_trip() {
        let down = TriCell::new(1, 0);
        let r = Region::with_cuts(
            [up(), down, TriCell::new(2, 0), TriCell::new(1, -1)],
            [up().edge(Dir::Horizontal), down.edge(Dir::Horizontal)],
            [TriCell::new(2, 0).edge(Dir::Left)],
        )
        .unwrap();
        let text = r.to_text();
        assert_eq!(Region::from_text(&text).unwrap(), r);
    }

    #[test]
    fn text_rejects_wrong_orientation() {
        let e = Region::from_text("0 0 D\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        assert!(Region::from_text("0 0 U\nFREE 0 0 X\n").is_err());
        assert!(Region::from_text("# comment\n\n0 0 U\n").is_ok());
    }

    #[test]
    fn normalized_keeps_orientation() {
        let r = Region::new([TriCell::new(5, 2), TriCell::new(6, 2)], []).unwrap();
        let n = r.normalized();
        let orient: Vec<_> = n.cells().iter().map(|c| c.orient()).collect();
        let before: Vec<_> = r.cells().iter().map(|c| c.orient()).collect();
        assert_eq!(orient, before);
        assert_eq!(n.bounds().unwrap().1 .0, 0);
    }
}
