use std::cmp::Ordering;
use std::fmt;

/// Orientation of a unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn letter(self) -> char {
        match self {
            Orient::Up => 'U',
            Orient::Down => 'D',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orient::Up => "up",
            Orient::Down => "down",
        }
    }
}

/// A unit triangle of the lattice.
///
/// Columns are measured in half-units: the cell `(col, row)` spans
/// `[col, col + 2]` horizontally and `[row, row + 1]` vertically. It points
/// up exactly when `col + row` is even, so neighbouring cells in a row
/// alternate orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriCell {
    pub col: i32,
    pub row: i32,
}

impl TriCell {
    pub const fn new(col: i32, row: i32) -> Self {
        TriCell { col, row }
    }

    pub fn orient(self) -> Orient {
        if (self.col + self.row).rem_euclid(2) == 0 {
            Orient::Up
        } else {
            Orient::Down
        }
    }

    pub fn is_up(self) -> bool {
        self.orient() == Orient::Up
    }

    /// The three edge-adjacent cells. An up cell touches its left and right
    /// neighbours and the down cell below it; a down cell touches the up cell
    /// above it.
    pub fn neighbors(self) -> [TriCell; 3] {
        let TriCell { col, row } = self;
        let vertical = if self.is_up() { row - 1 } else { row + 1 };
        [TriCell::new(col - 1, row), TriCell::new(col + 1, row), TriCell::new(col, vertical)]
    }

    /// The three edges of this cell, in the order left, right, horizontal.
    pub fn edges(self) -> [Edge; 3] {
        [self.edge(Dir::Left), self.edge(Dir::Right), self.edge(Dir::Horizontal)]
    }

    /// The edge of this cell in direction `dir`, in canonical form.
    pub fn edge(self, dir: Dir) -> Edge {
        let TriCell { col, row } = self;
        if self.is_up() {
            let side = match dir {
                Dir::Left => Side::Left,
                Dir::Right => Side::Right,
                Dir::Horizontal => Side::Base,
            };
            Edge { up: self, side }
        } else {
            match dir {
                Dir::Left => Edge { up: TriCell::new(col - 1, row), side: Side::Right },
                Dir::Right => Edge { up: TriCell::new(col + 1, row), side: Side::Left },
                Dir::Horizontal => Edge { up: TriCell::new(col, row + 1), side: Side::Base },
            }
        }
    }

    /// The edge shared with `other`, if the two cells are adjacent.
    pub fn shared_edge(self, other: TriCell) -> Option<Edge> {
        self.edges().into_iter().find(|e| e.contains(other))
    }

    pub fn translate(self, dc: i32, dr: i32) -> TriCell {
        TriCell::new(self.col + dc, self.row + dr)
    }

    /// Corners in lattice coordinates (half-unit x, row y).
    pub fn corners(self) -> [(i32, i32); 3] {
        let TriCell { col, row } = self;
        if self.is_up() {
            [(col, row), (col + 2, row), (col + 1, row + 1)]
        } else {
            [(col, row + 1), (col + 2, row + 1), (col + 1, row)]
        }
    }

    /// Centroid in lattice coordinates (half-unit x, row y).
    pub fn centroid(self) -> (f64, f64) {
        let y = if self.is_up() { 1.0 / 3.0 } else { 2.0 / 3.0 };
        (f64::from(self.col) + 1.0, f64::from(self.row) + y)
    }
}

// Row-major: this is the scan order used by every engine.
impl Ord for TriCell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for TriCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TriCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.col, self.row, self.orient().letter())
    }
}

/// Edge direction relative to a cell, as written in region files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
    Horizontal,
}

impl Dir {
    pub fn letter(self) -> char {
        match self {
            Dir::Left => 'L',
            Dir::Right => 'R',
            Dir::Horizontal => 'H',
        }
    }

    pub fn from_letter(s: &str) -> Option<Dir> {
        match s {
            "L" => Some(Dir::Left),
            "R" => Some(Dir::Right),
            "H" => Some(Dir::Horizontal),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Base,
}

/// A lattice edge, stored canonically as a side of the unique up cell
/// containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub up: TriCell,
    pub side: Side,
}

impl Edge {
    /// The down cell on the other side.
    pub fn down(self) -> TriCell {
        let TriCell { col, row } = self.up;
        match self.side {
            Side::Left => TriCell::new(col - 1, row),
            Side::Right => TriCell::new(col + 1, row),
            Side::Base => TriCell::new(col, row - 1),
        }
    }

    pub fn cells(self) -> [TriCell; 2] {
        [self.up, self.down()]
    }

    pub fn contains(self, cell: TriCell) -> bool {
        self.up == cell || self.down() == cell
    }

    /// The edge as seen from `cell` (which must contain it).
    pub fn dir_from(self, cell: TriCell) -> Option<Dir> {
        if !self.contains(cell) {
            return None;
        }
        Some(match self.side {
            Side::Base => Dir::Horizontal,
            Side::Left if cell == self.up => Dir::Left,
            Side::Left => Dir::Right,
            Side::Right if cell == self.up => Dir::Right,
            Side::Right => Dir::Left,
        })
    }

    /// Endpoints in lattice coordinates.
    pub fn endpoints(self) -> [(i32, i32); 2] {
        let TriCell { col, row } = self.up;
        match self.side {
            Side::Left => [(col, row), (col + 1, row + 1)],
            Side::Right => [(col + 2, row), (col + 1, row + 1)],
            Side::Base => [(col, row), (col + 2, row)],
        }
    }

    pub fn translate(self, dc: i32, dr: i32) -> Edge {
        Edge { up: self.up.translate(dc, dr), side: self.side }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
            Side::Base => "base",
        };
        write!(f, "{} side of {}", side, self.up)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_decides_orientation() {
        assert!(TriCell::new(0, 0).is_up());
        assert!(!TriCell::new(1, 0).is_up());
        assert!(!TriCell::new(0, 1).is_up());
        assert!(TriCell::new(-1, 1).is_up());
    }

    #[test]
    fn adjacency_is_symmetric_and_alternates() {
        for col in -3..3 {
            for row in -3..3 {
                let c = TriCell::new(col, row);
                for n in c.neighbors() {
                    assert_ne!(n.orient(), c.orient());
                    assert!(n.neighbors().contains(&c));
                    let e = c.shared_edge(n).unwrap();
                    assert_eq!(Some(e), n.shared_edge(c));
                    assert!(e.contains(c) && e.contains(n));
                }
            }
        }
    }

    #[test]
    fn edge_geometry_matches_corners() {
        for col in -2..2 {
            for row in -2..2 {
                let c = TriCell::new(col, row);
                for e in c.edges() {
                    for p in e.endpoints() {
                        assert!(c.corners().contains(&p), "{e} not on {c}");
                    }
                    let d = e.dir_from(c).unwrap();
                    assert_eq!(c.edge(d), e);
                }
            }
        }
    }
}
