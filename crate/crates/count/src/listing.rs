use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use lozenge_lattice::{FreeMatchGraph, Region, Tiling, TriCell};
use num_rational::BigRational;
use num_traits::One;

/// A set of pairwise disjoint edges, by edge index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub edges: BTreeSet<usize>,
}

impl Matching {
    pub fn weight(&self, g: &FreeMatchGraph) -> BigRational {
        self.edges.iter().fold(BigRational::one(), |acc, &e| acc * &g.edges()[e].weight)
    }

    pub fn covers(&self, g: &FreeMatchGraph, v: usize) -> bool {
        self.partner(g, v).is_some()
    }

    pub fn partner(&self, g: &FreeMatchGraph, v: usize) -> Option<usize> {
        g.neighbors(v).iter().find(|(_, e)| self.edges.contains(e)).map(|&(w, _)| w)
    }

    /// Whether the edges are disjoint and avoid `removed`.
    pub fn is_matching_of(&self, g: &FreeMatchGraph, removed: &[usize]) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&e| {
            let ed = &g.edges()[e];
            !removed.contains(&ed.u) && !removed.contains(&ed.v) && seen.insert(ed.u) && seen.insert(ed.v)
        })
    }
}

/// Every matching of `g - removed` that covers all non-free vertices, in
/// lexicographic search order. Intended for small graphs.
pub fn admissible_matchings(g: &FreeMatchGraph, removed: &[usize]) -> Vec<Matching> {
    let mut used = FixedBitSet::with_capacity(g.vertex_count());
    for &v in removed {
        used.insert(v);
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    list(g, &mut used, &mut current, &mut out);
    out
}

fn list(g: &FreeMatchGraph, used: &mut FixedBitSet, current: &mut Vec<usize>, out: &mut Vec<Matching>) {
    let Some(v) = used.zeroes().next() else {
        out.push(Matching { edges: current.iter().copied().collect() });
        return;
    };
    used.insert(v);
    if g.is_free(v) {
        list(g, used, current, out);
    }
    for &(w, e) in g.neighbors(v) {
        if used[w] {
            continue;
        }
        used.insert(w);
        current.push(e);
        list(g, used, current, out);
        current.pop();
        used.set(w, false);
    }
    used.set(v, false);
}

/// Up to `limit` tilings of `region`, in search order: the lowest uncovered
/// cell is paired with each later neighbour in turn, and left protruding
/// (free cells only) last.
pub fn tilings(region: &Region, limit: usize) -> Vec<Tiling> {
    let mut search = TilingSearch::new(region);
    let mut out = Vec::new();
    let mut current = Tiling::default();
    let start = FixedBitSet::with_capacity(search.cells.len());
    search.walk(start, &mut current, &mut out, limit);
    out
}

/// The first tiling in the order of [`tilings`], if any.
pub fn first_tiling(region: &Region) -> Option<Tiling> {
    tilings(region, 1).pop()
}

struct TilingSearch<'r> {
    region: &'r Region,
    cells: Vec<TriCell>,
    index: std::collections::BTreeMap<TriCell, usize>,
    dead: HashSet<FixedBitSet>,
}

impl<'r> TilingSearch<'r> {
    fn new(region: &'r Region) -> Self {
        TilingSearch {
            region,
            cells: region.cells().iter().copied().collect(),
            index: region.index(),
            dead: HashSet::new(),
        }
    }

    /// Returns whether any tiling was completed below this state; states
    /// with none are remembered so dead ends are explored once.
    fn walk(&mut self, used: FixedBitSet, current: &mut Tiling, out: &mut Vec<Tiling>, limit: usize) -> bool {
        if out.len() >= limit {
            return true;
        }
        let Some(i) = used.zeroes().next() else {
            out.push(current.clone());
            return true;
        };
        if self.dead.contains(&used) {
            return false;
        }
        let a = self.cells[i];
        let mut any = false;
        let partners: Vec<TriCell> = self.region.neighbors(a).filter(|&b| b > a).collect();
        for b in partners {
            let j = self.index[&b];
            if used[j] {
                continue;
            }
            let mut next = used.clone();
            next.insert(i);
            next.insert(j);
            current.lozenges.push((a, b));
            any |= self.walk(next, current, out, limit);
            current.lozenges.pop();
            if out.len() >= limit {
                return true;
            }
        }
        if let Some(&e) = a.edges().iter().find(|e| self.region.free_edges().contains(e)) {
            let mut next = used.clone();
            next.insert(i);
            current.protrusions.push((a, e));
            any |= self.walk(next, current, out, limit);
            current.protrusions.pop();
        }
        if !any {
            self.dead.insert(used);
        }
        any
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_lattice::Dir;

    #[test]
    fn unit_hexagon_has_two_tilings() {
        let cells = [(0, 0), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1)].map(|(c, r)| TriCell::new(c, r));
        let r = Region::new(cells, []).unwrap();
        let all = tilings(&r, 10);
        assert_eq!(all.len(), 2);
        for t in &all {
            assert!(t.is_valid_for(&r));
            assert_eq!(t.lozenges.len(), 3);
        }
    }

    #[test]
    fn free_cell_may_protrude() {
        let c = TriCell::new(0, 0);
        let r = Region::new([c], [c.edge(Dir::Horizontal)]).unwrap();
        let t = first_tiling(&r).unwrap();
        assert_eq!(t.protrusions.len(), 1);
        assert!(t.is_valid_for(&r));
    }

    #[test]
    fn untilable_region_has_none() {
        let r = Region::new([TriCell::new(0, 0)], []).unwrap();
        assert!(first_tiling(&r).is_none());
    }

    #[test]
    fn matchings_of_free_path() {
        let g = FreeMatchGraph::unit(3, [(0, 1), (1, 2)], [0, 2]).unwrap();
        let all = admissible_matchings(&g, &[]);
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|m| m.covers(&g, 1) && m.is_matching_of(&g, &[])));
        assert_eq!(admissible_matchings(&g, &[1]).len(), 1);
    }
}
