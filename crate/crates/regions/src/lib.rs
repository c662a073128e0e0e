//! Region families: hexagons, hexagons with a thickened bowtie removed
//! from the centre ("butterfly" hexagons), their symmetric quarters with a
//! free base ("flashlight" regions), and trapezoids with a free base.
//!
//! Coordinates follow `lozenge_lattice`: columns in half-units, up cells at
//! even `col + row`.

use lozenge_lattice::{Dir, Edge, FaceQuad, Region, SymmetryClass, TriCell};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// The forced lozenges to be removed do not exist; the region has no
    /// tiling.
    #[error("degenerate region: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Lattice(#[from] lozenge_lattice::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

/// Collect cells row by row: up cells of row `t` with base inside
/// `up_range(t)`, down cells with top inside `down_range(t)` (closed
/// half-unit intervals).
fn band(
    rows: std::ops::Range<i32>,
    up_range: impl Fn(i32) -> (i32, i32),
    down_range: impl Fn(i32) -> (i32, i32),
) -> Vec<TriCell> {
    let mut cells = Vec::new();
    for t in rows {
        let (ul, ur) = up_range(t);
        let (dl, dr) = down_range(t);
        for c in ul.min(dl)..=ur.max(dr) {
            let cell = TriCell::new(c, t);
            let (lo, hi) = if cell.is_up() { (ul, ur) } else { (dl, dr) };
            if lo <= c && c + 2 <= hi {
                cells.push(cell);
            }
        }
    }
    cells
}

/// Hexagon with sides `a, b, c, a, b, c`, the side of length `a` on the
/// bottom. Has `2(ab + bc + ca)` cells.
pub fn hexagon(a: u32, b: u32, c: u32) -> Region {
    let (a, b, c) = (a as i32, b as i32, c as i32);
    let left = move |r: i32| -r.min(c) + (r - c).max(0);
    let right = move |r: i32| 2 * a + r.min(b) - (r - b).max(0);
    let cells = band(0..b + c, |t| (left(t), right(t)), |t| (left(t + 1), right(t + 1)));
    Region::new(cells, []).expect("hexagon cells are distinct")
}

/// Hexagon with sides `x, y, y, x, y, y` (clockwise from the top) minus a
/// vertical bowtie at its centre: two triangles of side `k` meeting at their
/// tips, the upper one pointing down, thickened horizontally by `p` on each
/// side.
///
/// When `k = 0` and `p > 0` the removed shape has no area; it is a
/// horizontal slit of length `2p` through the centre, modelled by cut edges.
/// The bowtie must fit inside the hexagon (touching its boundary is
/// allowed), and when anything is removed the centre must be a lattice
/// vertex, i.e. `x` and `y` have equal parity.
pub fn butterfly_hexagon(x: u32, y: u32, k: u32, p: u32) -> Result<Region> {
    if k > y {
        return Err(invalid(format!("bowtie of side {k} is taller than half the hexagon (y = {y})")));
    }
    if x + y < 2 * k + 2 * p {
        return Err(invalid(format!(
            "bowtie with k = {k}, p = {p} does not fit: need x + y >= 2k + 2p, got {}",
            x + y
        )));
    }
    if k + p > 0 && !(x + y).is_multiple_of(2) {
        return Err(invalid(format!(
            "x = {x} and y = {y} have different parity, so the centre is not a lattice vertex"
        )));
    }
    let hex = hexagon(x, y, y);
    let (cx, cy) = (f64::from(x), f64::from(y));
    let (k_, p_) = (f64::from(k), f64::from(p));
    let in_hole = |cell: TriCell| {
        let (px, py) = cell.centroid();
        let dx = (px - cx).abs();
        (cy < py && py < cy + k_ && dx < 2.0 * p_ + (py - cy)) || (cy - k_ < py && py < cy && dx < 2.0 * p_ + (cy - py))
    };
    let cells: Vec<TriCell> = hex.cells().iter().copied().filter(|&c| !in_hole(c)).collect();
    let mut cuts = Vec::new();
    if k == 0 && p > 0 {
        let (cx, cy, p) = (x as i32, y as i32, p as i32);
        for c in cx - 2 * p..=cx + 2 * p - 2 {
            let cell = TriCell::new(c, cy);
            if cell.is_up() && hex.contains(cell) && hex.contains(TriCell::new(c, cy - 1)) {
                cuts.push(cell.edge(Dir::Horizontal));
            }
        }
    }
    Ok(Region::with_cuts(cells, [], cuts)?)
}

/// The region whose free-boundary tilings are the tilings of
/// `butterfly_hexagon(2x, 2(z + k), 2k, p)` symmetric in both axes: the part
/// right of the vertical axis and above the horizontal one, with the base
/// free. Rows `t = 0 .. 2(z + k)`; rows below `2k` are notched on the left.
pub fn flashlight(x: u32, z: u32, k: u32, p: u32) -> Result<Region> {
    if x + z < k + p {
        return Err(invalid(format!("flashlight needs x + z >= k + p, got x + z = {}, k + p = {}", x + z, k + p)));
    }
    let (x, z, k, p) = (x as i32, z as i32, k as i32, p as i32);
    let right = move |t: i32| 2 * x + 2 * z + 2 * k - t;
    let notch = move |t: i32, shift: i32| if t < 2 * k { 2 * p + t + shift } else { 0 };
    let cells = band(0..2 * (z + k), |t| (notch(t, 0), right(t)), |t| (notch(t, 1), right(t + 1)));
    let free: Vec<Edge> =
        cells.iter().filter(|c| c.row == 0 && c.is_up() && c.col >= 2 * p).map(|c| c.edge(Dir::Horizontal)).collect();
    Ok(Region::new(cells, free)?)
}

/// The flashlight region with its forced lozenges removed: the `x` along
/// the top row and the `k + p` just above the horizontal part of the notch.
/// Requires `z > 0`. Fails with [`Error::Degenerate`] when those lozenges do
/// not fit (then the flashlight has no tilings).
pub fn reduced_flashlight(x: u32, z: u32, k: u32, p: u32) -> Result<Region> {
    if z == 0 {
        return Err(invalid("reduced flashlight needs z > 0".into()));
    }
    let full = flashlight(x, z, k, p)?;
    let (x, z, k, p) = (x as i32, z as i32, k as i32, p as i32);
    let top = 2 * (z + k) - 1;
    let mut removed: Vec<TriCell> = (0..2 * x).map(|c| TriCell::new(c, top)).collect();
    removed.extend((0..2 * (k + p)).map(|c| TriCell::new(c, 2 * k)));
    if let Some(missing) = removed.iter().find(|c| !full.contains(**c)) {
        return Err(Error::Degenerate(format!("forced lozenge cell {missing} is outside the region")));
    }
    Ok(full.without_cells(&removed))
}

/// Trapezoid with legs `a`, top `b` and base `a + b`, the base free.
pub fn free_trapezoid(a: u32, b: u32) -> Region {
    let (a, b) = (a as i32, b as i32);
    let width = 2 * (a + b);
    let cells = band(0..a, |t| (t, width - t), |t| (t + 1, width - t - 1));
    let free: Vec<Edge> = cells.iter().filter(|c| c.row == 0 && c.is_up()).map(|c| c.edge(Dir::Horizontal)).collect();
    Region::new(cells, free).expect("trapezoid free edges lie on its base")
}

/// The quarter of a region symmetric in both axes that lies right of the
/// vertical axis and above the horizontal one, translated to start at the
/// origin. Cells straddling the vertical axis (which any symmetric tiling
/// covers by vertical lozenges) are dropped; base edges on the horizontal
/// axis become free unless they lie on a cut.
///
/// Applied to `butterfly_hexagon(2x, 2y, 2k, p)` this gives
/// `flashlight(x, y - k, k, p)`.
pub fn symmetric_reduction(region: &Region) -> Result<Region> {
    if !region.free_edges().is_empty() {
        return Err(invalid("symmetric reduction expects a region without free edges".into()));
    }
    let group = region.symmetry_group(&SymmetryClass::horizontal_vertical())?;
    let Some(((cmin, cmax), (rmin, rmax))) = region.bounds() else {
        return Ok(Region::empty());
    };
    debug_assert_eq!(group.len(), 4);
    // Vertical axis at half-column (cmin + cmax + 2) / 2, horizontal axis on
    // lattice line (rmin + rmax + 1) / 2.
    let axis_col = (cmin + cmax + 2) / 2;
    let axis_row = (rmin + rmax + 1) / 2;
    let cells: Vec<TriCell> =
        region.cells().iter().copied().filter(|c| c.col >= axis_col && c.row >= axis_row).collect();
    let free: Vec<Edge> = cells
        .iter()
        .filter(|c| c.row == axis_row && c.is_up())
        .map(|c| c.edge(Dir::Horizontal))
        .filter(|e| region.contains(e.down()) && !region.cut_edges().contains(e))
        .collect();
    let cuts: Vec<Edge> =
        region.cut_edges().iter().copied().filter(|e| e.cells().iter().all(|c| cells.contains(c))).collect();
    let quarter = Region::with_cuts(cells, free, cuts)?;
    // If the axes cross off the lattice, shift one more half-unit so that
    // orientations survive the translation.
    let dc = -axis_col - (axis_col + axis_row).rem_euclid(2);
    Ok(quarter.translate(dc, -axis_row))
}

/// The four marked cells `a, b, c, d` on the reduced flashlight, in
/// cyclic order around its boundary:
///
/// - `a`: the down cell just right of the notch on the bottom row,
/// - `b`: the left-most cell just above the notch,
/// - `c`: the left-most cell of the second row from the top,
/// - `d`: the right-most down cell of the bottom row.
///
/// Deleting subsets of them and stripping the lozenges this forces yields
/// smaller flashlight regions, which turns the condensation identity into a
/// recurrence for flashlight counts.
pub fn quad_mark_cells(x: u32, z: u32, k: u32, p: u32) -> Result<[TriCell; 4]> {
    if x < 1 || z < 2 {
        return Err(invalid(format!("marks need x >= 1 and z >= 2, got x = {x}, z = {z}")));
    }
    if x < k + p {
        return Err(invalid(format!("marks need x >= k + p, got x = {x}, k + p = {}", k + p)));
    }
    let (x, z, k, p) = (x as i32, z as i32, k as i32, p as i32);
    Ok([
        TriCell::new(2 * p + 1, 0),
        TriCell::new(0, 2 * k + 1),
        TriCell::new(0, 2 * (z + k) - 2),
        TriCell::new(2 * x + 2 * z + 2 * k - 3, 0),
    ])
}

/// The dual graph of `reduced_flashlight(x, z, k, p)` with the cells of
/// [`quad_mark_cells`] marked.
pub fn quad_marks(x: u32, z: u32, k: u32, p: u32) -> Result<FaceQuad> {
    let marks = quad_mark_cells(x, z, k, p)?;
    let region = reduced_flashlight(x, z, k, p)?;
    let index = region.index();
    let mut vertices = [0usize; 4];
    for (slot, cell) in vertices.iter_mut().zip(marks) {
        *slot =
            *index.get(&cell).ok_or_else(|| Error::Degenerate(format!("marked cell {cell} is outside the region")))?;
    }
    Ok(FaceQuad::new(region.dual_graph(), vertices)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_cell_counts() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(hexagon(a, b, c).len() as u32, 2 * (a * b + b * c + c * a));
                }
            }
        }
    }

    #[test]
    fn butterfly_removes_expected_area() {
        let full = hexagon(8, 10, 10).len();
        let b = butterfly_hexagon(8, 10, 4, 1).unwrap();
        assert_eq!(full - b.len(), 2 * (4 * 4 + 4 * 4));
        assert_eq!(butterfly_hexagon(3, 5, 0, 0).unwrap(), hexagon(3, 5, 5));
    }

    #[test]
    fn butterfly_fit_errors() {
        assert!(butterfly_hexagon(2, 2, 3, 0).is_err());
        assert!(butterfly_hexagon(2, 2, 1, 2).is_err());
        assert!(butterfly_hexagon(3, 2, 1, 0).is_err());
        assert!(butterfly_hexagon(2, 2, 1, 1).is_ok());
    }

    #[test]
    fn slit_is_cut() {
        let b = butterfly_hexagon(4, 4, 0, 1).unwrap();
        assert_eq!(b.len(), hexagon(4, 4, 4).len());
        assert_eq!(b.cut_edges().len(), 2);
    }

    #[test]
    fn flashlight_rejects_bad_parameters() {
        assert!(flashlight(0, 1, 1, 1).is_err());
        assert!(flashlight(1, 1, 1, 1).is_ok());
    }

    #[test]
    fn reduced_cell_count() {
        for (x, z, k, p) in [(4, 3, 2, 1), (1, 2, 0, 0), (3, 2, 1, 1)] {
            let f = flashlight(x, z, k, p).unwrap().len();
            let r = reduced_flashlight(x, z, k, p).unwrap().len();
            assert_eq!(f - r, 2 * (x + k + p) as usize);
        }
        assert!(reduced_flashlight(3, 0, 1, 0).is_err());
    }

    #[test]
    fn butterfly_reduces_to_flashlight() {
        for x in 0..4 {
            for y in 0..4 {
                for k in 0..=y.min(2) {
                    for p in 0..3 {
                        let Ok(b) = butterfly_hexagon(2 * x, 2 * y, 2 * k, p) else { continue };
                        let q = symmetric_reduction(&b).unwrap();
                        let f = flashlight(x, y - k, k, p).unwrap();
                        assert_eq!(q, f, "({x}, {y}, {k}, {p})");
                    }
                }
            }
        }
    }

    #[test]
    fn quad_marks_lie_on_boundary() {
        let q = quad_marks(3, 2, 0, 0).unwrap();
        let [a, b, c, d] = q.marks();
        assert_eq!([a, b, c, d].len(), 4);
        assert!(quad_marks(1, 1, 0, 0).is_err());
        assert!(quad_marks(1, 2, 1, 1).is_err());
    }
}
