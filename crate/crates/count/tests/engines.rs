use std::collections::BTreeSet;

use lozenge_count::{
    admissible_matchings, mf_enumerate, mf_profile_dp, mf_subset_oracle, mf_without, tilings, CountValue,
};
use lozenge_lattice::{Edge, FreeMatchGraph, Region, TriCell};
use lozenge_regions::{flashlight, free_trapezoid, hexagon};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn all_engines(region: &Region) -> (CountValue, CountValue, CountValue) {
    let g = region.dual_graph();
    (mf_enumerate(&g), mf_profile_dp(region), mf_subset_oracle(&g).unwrap())
}

#[test]
fn engines_agree_on_small_families() {
    let mut regions = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                regions.push(hexagon(a, b, c));
            }
        }
    }
    for a in 0..4 {
        for b in 0..4 {
            regions.push(free_trapezoid(a, b));
        }
    }
    for (x, z, k, p) in [(2, 2, 1, 0), (3, 1, 1, 1), (4, 2, 0, 2), (1, 3, 2, 1)] {
        regions.push(flashlight(x, z, k, p).unwrap());
    }
    for r in &regions {
        let (e, d, o) = all_engines(r);
        assert_eq!(e, d);
        assert_eq!(e, o);
    }
}

#[test]
fn tilings_biject_with_matchings() {
    for r in [hexagon(1, 1, 3), hexagon(1, 2, 1), free_trapezoid(2, 1), flashlight(2, 1, 0, 1).unwrap()] {
        assert!(r.len() <= 14, "{} cells", r.len());
        let ts = tilings(&r, usize::MAX);
        let count = mf_profile_dp(&r);
        assert_eq!(CountValue::from(ts.len() as u64), count);
        assert!(ts.iter().all(|t| t.is_valid_for(&r)));
        let distinct: BTreeSet<_> = ts.iter().map(|t| format!("{t:?}")).collect();
        assert_eq!(distinct.len(), ts.len());
        let ms = admissible_matchings(&r.dual_graph(), &[]);
        assert_eq!(ms.len(), ts.len());
    }
}

/// A random region inside a small window, with a random subset of its
/// boundary edges made free.
fn small_region() -> impl Strategy<Value = Region> {
    (proptest::collection::vec(any::<bool>(), 24), proptest::collection::vec(any::<bool>(), 40)).prop_map(
        |(keep, free_mask)| {
            let cells: BTreeSet<TriCell> =
                (0..24).filter(|&i| keep[i]).map(|i| TriCell::new((i % 8) as i32, (i / 8) as i32)).collect();
            let boundary: BTreeSet<Edge> = cells
                .iter()
                .flat_map(|&c| c.edges().into_iter().map(move |e| (c, e)))
                .filter(|&(c, e)| {
                    let [u, d] = e.cells();
                    !cells.contains(&if u == c { d } else { u })
                })
                .map(|(_, e)| e)
                .collect();
            let free = boundary.into_iter().enumerate().filter(|(i, _)| free_mask[i % 40]).map(|(_, e)| e);
            Region::new(cells.clone(), free.collect::<Vec<_>>()).unwrap()
        },
    )
}

fn weighted_graph(n: usize) -> impl Strategy<Value = FreeMatchGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = pairs.len();
    (
        proptest::collection::vec(proptest::option::weighted(0.45, (1i64..7, 1i64..4, any::<bool>())), m),
        proptest::collection::vec(proptest::bool::weighted(0.25), n),
    )
        .prop_map(move |(ws, free)| {
            let edges = pairs.iter().zip(ws).filter_map(|(&(a, b), w)| {
                w.map(|(n, d, neg)| (a, b, BigRational::new(BigInt::from(if neg { -n } else { n }), BigInt::from(d))))
            });
            let free = (0..n).filter(|&v| free[v]);
            FreeMatchGraph::new(n, edges.collect::<Vec<_>>(), free.collect::<Vec<_>>()).unwrap()
        })
}

fn disjoint_union(g: &FreeMatchGraph, h: &FreeMatchGraph) -> FreeMatchGraph {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.weight.clone()))
        .chain(h.edges().iter().map(|e| (e.u + n, e.v + n, e.weight.clone())));
    let free = g.free_vertices().into_iter().chain(h.free_vertices().into_iter().map(|v| v + n));
    FreeMatchGraph::new(n + h.vertex_count(), edges.collect::<Vec<_>>(), free.collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_and_tilings_agree_on_random_regions(r in small_region()) {
        let (e, d, o) = all_engines(&r);
        prop_assert_eq!(&e, &d);
        prop_assert_eq!(&e, &o);
        prop_assert_eq!(CountValue::from(tilings(&r, usize::MAX).len() as u64), e);
    }

    #[test]
    fn counts_multiply_over_components(g in weighted_graph(6), h in weighted_graph(5)) {
        let u = disjoint_union(&g, &h);
        let product = mf_enumerate(&g).as_rational() * mf_enumerate(&h).as_rational();
        prop_assert_eq!(mf_enumerate(&u).into_rational(), product.clone());
        prop_assert_eq!(mf_subset_oracle(&u).unwrap().into_rational(), product);
    }

    /// Scaling the weights at a non-free vertex scales the count: every
    /// admissible matching uses exactly one of its edges.
    #[test]
    fn count_is_linear_in_weights_at_a_vertex(g in weighted_graph(7), v in 0usize..7, s in 2i64..9) {
        prop_assume!(!g.is_free(v));
        let lambda = BigRational::from_integer(BigInt::from(s));
        let edges = g.edges().iter().map(|e| {
            let w = if e.u == v || e.v == v { &e.weight * &lambda } else { e.weight.clone() };
            (e.u, e.v, w)
        });
        let scaled = FreeMatchGraph::new(7, edges.collect::<Vec<_>>(), g.free_vertices()).unwrap();
        prop_assert_eq!(mf_enumerate(&scaled).into_rational(), mf_enumerate(&g).as_rational() * &lambda);
    }

    #[test]
    fn deleting_vertices_is_consistent(g in weighted_graph(7), a in 0usize..7, b in 0usize..7) {
        let removed: Vec<usize> = if a == b { vec![a] } else { vec![a, b] };
        let (h, _) = g.delete(&removed).unwrap();
        prop_assert_eq!(mf_without(&g, &removed), mf_enumerate(&h));
        let total: BigRational = admissible_matchings(&g, &removed).iter().map(|m| m.weight(&g)).sum();
        prop_assert_eq!(total, mf_enumerate(&h).into_rational());
        if g.free_vertices().is_empty() && g.vertex_count() % 2 == 1 {
            prop_assert!(mf_enumerate(&g).as_rational().is_zero());
        }
    }
}
