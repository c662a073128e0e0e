use std::collections::BTreeSet;

use lozenge_lattice::{in_cyclic_order, Dir, Edge, Error, Region, Symmetry, SymmetryClass, TriCell};
use proptest::prelude::*;

fn window_region(keep: &[bool], free_mask: &[bool]) -> Region {
    let cells: BTreeSet<TriCell> =
        (0..keep.len()).filter(|&i| keep[i]).map(|i| TriCell::new((i % 8) as i32, (i / 8) as i32)).collect();
    let boundary: BTreeSet<Edge> = cells
        .iter()
        .flat_map(|&c| c.edges().into_iter().map(move |e| (c, e)))
        .filter(|&(c, e)| {
            let [u, d] = e.cells();
            !cells.contains(&if u == c { d } else { u })
        })
        .map(|(_, e)| e)
        .collect();
    let free: Vec<Edge> =
        boundary.into_iter().enumerate().filter(|(i, _)| free_mask[i % free_mask.len()]).map(|(_, e)| e).collect();
    Region::new(cells, free).unwrap()
}

fn region() -> impl Strategy<Value = Region> {
    (proptest::collection::vec(any::<bool>(), 32), proptest::collection::vec(any::<bool>(), 16))
        .prop_map(|(k, f)| window_region(&k, &f))
}

#[test]
fn parse_errors_name_the_line() {
    let bad = "0 0 U\n1 0 U\n";
    match Region::from_text(bad) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(Region::from_text("0 0 U\nFREE 0 0 Q\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(Region::from_text("0 0 U\n1 0 D\nFREE 0 0 R\n"), Err(Error::FreeEdgeNotOnBoundary(_))));
    assert!(matches!(Region::from_text("0 0 U\n0 0 U\n"), Err(Error::DuplicateCell(_))));
    let ok = Region::from_text("# a lozenge\n0 0 U\n1 0 D   # its partner\nFREE 0 0 H\n").unwrap();
    assert_eq!(ok.len(), 2);
    assert_eq!(ok.free_edges().len(), 1);
}

#[test]
fn hexagon_symmetries() {
    // the unit hexagon: six cells around the origin vertex (2, 1)
    let cells = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)].map(|(c, r)| TriCell::new(c, r));
    let hex = Region::new(cells, []).unwrap();
    for s in [Symmetry::Horizontal, Symmetry::Vertical, Symmetry::Rotation] {
        assert_eq!(hex.symmetry_group(&SymmetryClass::new([s])).unwrap().len(), 2);
    }
    assert_eq!(hex.symmetry_group(&SymmetryClass::horizontal_vertical()).unwrap().len(), 4);
    let wedge = hex.without_cells(&[TriCell::new(0, 0)]);
    assert!(matches!(wedge.symmetry_group(&SymmetryClass::horizontal_vertical()), Err(Error::NotInvariant(_))));
}

#[test]
fn edge_directions_are_consistent() {
    let up = TriCell::new(0, 0);
    for dir in [Dir::Horizontal, Dir::Left, Dir::Right] {
        let e = up.edge(dir);
        assert_eq!(e.dir_from(up), Some(dir));
        let [a, b] = e.cells();
        assert!(a.is_up() != b.is_up());
        let shared: BTreeSet<_> = a.corners().into_iter().filter(|p| b.corners().contains(p)).collect();
        assert_eq!(shared, e.endpoints().into_iter().collect());
    }
}

#[test]
fn cyclic_order_on_walks() {
    let walk = [0, 1, 2, 3, 4, 5];
    assert!(in_cyclic_order(&walk, &[1, 2, 4, 5]));
    assert!(in_cyclic_order(&walk, &[4, 5, 1, 2]));
    assert!(!in_cyclic_order(&walk, &[1, 4, 2, 5]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_format_round_trips(r in region()) {
        prop_assert_eq!(Region::from_text(&r.to_text()).unwrap(), r);
    }

    /// The dual has one vertex per cell, one edge per interior cell edge,
    /// and exactly the cells on free edges as free vertices.
    #[test]
    fn dual_graph_counts(r in region()) {
        let g = r.dual_graph();
        prop_assert_eq!(g.vertex_count(), r.len());
        let interior = r.cells().iter().flat_map(|c| r.neighbors(*c)).count();
        prop_assert_eq!(2 * g.edges().len(), interior);
        prop_assert_eq!(g.free_vertices().len(), r.free_cells().len());
    }

    #[test]
    fn transforms_are_involutions(r in region()) {
        let class = SymmetryClass::new([Symmetry::Horizontal, Symmetry::Vertical, Symmetry::Rotation]);
        if let Ok(group) = class.transforms(r.bounds()) {
            for t in group {
                prop_assert_eq!(r.transformed(&t).transformed(&t), r.clone());
            }
        }
    }

    #[test]
    fn normalization_is_idempotent(r in region(), dc in -6i32..6, dr in -6i32..6) {
        let shift = if (dc + dr) % 2 == 0 { dc } else { dc + 1 };
        let moved = r.translate(shift, dr);
        prop_assert_eq!(moved.normalized(), r.normalized());
        prop_assert_eq!(r.normalized().normalized(), r.normalized());
    }
}
