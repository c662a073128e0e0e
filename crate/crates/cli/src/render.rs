//! Static SVG drawings of regions and tilings.

use std::fmt::Write;

use lozenge_count::first_tiling;
use lozenge_lattice::{Edge, Region, Side, TriCell};

use crate::error::CliError;

/// What to draw.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub region: Region,
    pub title: String,
    pub overlay: bool,
    /// Pixels per lattice unit; must be positive.
    pub scale: f64,
}

const MARGIN: f64 = 10.0;

struct Frame {
    cmin: i32,
    rmax: i32,
    scale: f64,
}

impl Frame {
    fn point(&self, (col, row): (i32, i32)) -> (f64, f64) {
        let x = MARGIN + f64::from(col - self.cmin) * self.scale / 2.0;
        let y = MARGIN + f64::from(self.rmax - row) * self.scale * 3f64.sqrt() / 2.0;
        (x, y)
    }

    fn path(&self, pts: &[(i32, i32)]) -> String {
        let mut d = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.point(p);
            let _ = write!(d, "{}{:.2} {:.2} ", if i == 0 { "M" } else { "L" }, x, y);
        }
        d.push('Z');
        d
    }

    fn line(&self, e: Edge, class: &str) -> String {
        let [p, q] = e.endpoints();
        let (x1, y1) = self.point(p);
        let (x2, y2) = self.point(q);
        format!("<line class=\"{class}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>\n")
    }
}

fn side_fill(side: Side) -> &'static str {
    match side {
        Side::Base => "#e6a157",
        Side::Left => "#6fb3a0",
        Side::Right => "#8f86c4",
    }
}

/// Corners of the rhombus formed by two adjacent cells, in cyclic order.
fn rhombus(a: TriCell, b: TriCell) -> Vec<(i32, i32)> {
    let ca = a.corners();
    let cb = b.corners();
    let shared: Vec<_> = ca.iter().filter(|p| cb.contains(p)).copied().collect();
    let a_only = ca.iter().find(|p| !cb.contains(p)).copied().expect("adjacent cells");
    let b_only = cb.iter().find(|p| !ca.contains(p)).copied().expect("adjacent cells");
    vec![a_only, shared[0], b_only, shared[1]]
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Deterministic SVG 1.1 document for `spec`. Up cells and down cells are
/// drawn as separate paths, free edges dashed, cut edges heavy; cells
/// missing from the region (holes) are simply not drawn.
pub fn render(spec: &RenderSpec) -> Result<String, CliError> {
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(CliError::Usage(format!("scale must be positive, got {}", spec.scale)));
    }
    let region = &spec.region;
    let tiling = if spec.overlay {
        Some(first_tiling(region).ok_or_else(|| {
            CliError::Precondition("tiling overlay requested but the region has no tiling".to_string())
        })?)
    } else {
        None
    };

    let mut pts = region.cells().iter().flat_map(|c| c.corners());
    let first = pts.next().unwrap_or((0, 0));
    let (mut cmin, mut cmax, mut rmin, mut rmax) = (first.0, first.0, first.1, first.1);
    for (c, r) in pts {
        cmin = cmin.min(c);
        cmax = cmax.max(c);
        rmin = rmin.min(r);
        rmax = rmax.max(r);
    }
    let frame = Frame { cmin, rmax, scale: spec.scale };
    let width = 2.0 * MARGIN + f64::from(cmax - cmin) * spec.scale / 2.0;
    let height = 2.0 * MARGIN + f64::from(rmax - rmin) * spec.scale * 3f64.sqrt() / 2.0;

    let mut svg = String::new();
    let _ = writeln!(svg, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(&spec.title));
    svg.push_str(
        "<style>\n\
         .up { fill: #f6f3ea; stroke: #b9b4a8; stroke-width: 0.5; }\n\
         .down { fill: #e9eef3; stroke: #b9b4a8; stroke-width: 0.5; }\n\
         .lozenge { stroke: #333333; stroke-width: 1; }\n\
         .protrusion { fill-opacity: 0.35; stroke: #333333; stroke-width: 1; stroke-dasharray: 3 2; }\n\
         .boundary { stroke: #000000; stroke-width: 2; stroke-linecap: round; }\n\
         .free { stroke: #c0392b; stroke-width: 2.5; stroke-dasharray: 5 4; }\n\
         .cut { stroke: #000000; stroke-width: 3; }\n\
         </style>\n",
    );

    svg.push_str("<g id=\"cells\">\n");
    for &cell in region.cells() {
        let class = if cell.is_up() { "up" } else { "down" };
        let _ = writeln!(svg, "<path class=\"{class}\" d=\"{}\"/>", frame.path(&cell.corners()));
    }
    svg.push_str("</g>\n");

    if let Some(t) = &tiling {
        svg.push_str("<g id=\"tiling\">\n");
        for &(a, b) in &t.lozenges {
            let side = a.shared_edge(b).expect("lozenge cells are adjacent").side;
            let _ = writeln!(
                svg,
                "<path class=\"lozenge\" fill=\"{}\" d=\"{}\"/>",
                side_fill(side),
                frame.path(&rhombus(a, b))
            );
        }
        for &(cell, edge) in &t.protrusions {
            let [u, d] = edge.cells();
            let other = if u == cell { d } else { u };
            let _ = writeln!(
                svg,
                "<path class=\"protrusion\" fill=\"{}\" d=\"{}\"/>",
                side_fill(edge.side),
                frame.path(&rhombus(cell, other))
            );
        }
        svg.push_str("</g>\n");
    }

    // every edge with a cell on exactly one side, each drawn once
    let mut boundary = Vec::new();
    for &cell in region.cells() {
        for e in cell.edges() {
            let [u, d] = e.cells();
            let other = if u == cell { d } else { u };
            if !region.contains(other) && !region.free_edges().contains(&e) {
                boundary.push(e);
            }
        }
    }
    boundary.sort();
    svg.push_str("<g id=\"boundary\">\n");
    for e in boundary {
        svg.push_str(&frame.line(e, "boundary"));
    }
    for &e in region.cut_edges() {
        svg.push_str(&frame.line(e, "cut"));
    }
    for &e in region.free_edges() {
        svg.push_str(&frame.line(e, "free"));
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_regions::{flashlight, hexagon};

    fn spec(region: Region, overlay: bool) -> RenderSpec {
        RenderSpec { region, title: "test".into(), overlay, scale: 20.0 }
    }

    #[test]
    fn unit_hexagon_overlay_has_three_lozenges() {
        let svg = render(&spec(hexagon(1, 1, 1), true)).unwrap();
        assert_eq!(svg.matches("class=\"lozenge\"").count(), 3);
        assert_eq!(svg.matches("class=\"up\"").count(), 3);
        assert_eq!(svg.matches("class=\"boundary\"").count(), 6);
    }

    #[test]
    fn deterministic_and_dashed_free_edges() {
        let f = flashlight(10, 8, 2, 1).unwrap();
        let a = render(&spec(f.clone(), false)).unwrap();
        let b = render(&spec(f.clone(), false)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("class=\"free\"").count(), f.free_edges().len());
        assert!(a.contains("stroke-dasharray"));
    }

    #[test]
    fn untilable_overlay_and_bad_scale_are_rejected() {
        let lone = Region::new([TriCell::new(0, 0)], []).unwrap();
        assert!(matches!(render(&spec(lone.clone(), true)), Err(CliError::Precondition(_))));
        let mut s = spec(lone, false);
        s.scale = 0.0;
        assert!(matches!(render(&s), Err(CliError::Usage(_))));
    }
}
