use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use lozenge_lattice::{Region, SymmetryClass, Transform, TriCell};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::value::CountValue;

/// Number of tilings of `region` fixed by every element of `class`.
///
/// Placing a lozenge places its whole orbit; a placement whose orbit
/// overlaps itself or other lozenges is rejected. The search branches on the
/// lowest uncovered cell and is memoised on the covered set.
pub fn symmetric_count(region: &Region, class: &SymmetryClass) -> Result<CountValue> {
    if !region.free_edges().is_empty() {
        return Err(Error::FreeBoundary);
    }
    let group = region.symmetry_group(class)?;
    let cells: Vec<TriCell> = region.cells().iter().copied().collect();
    let index = region.index();
    let mut search = OrbitSearch { region, group, cells, index, memo: HashMap::new() };
    let start = FixedBitSet::with_capacity(search.cells.len());
    Ok(CountValue::from(search.count(start)))
}

struct OrbitSearch<'r> {
    region: &'r Region,
    group: Vec<Transform>,
    cells: Vec<TriCell>,
    index: std::collections::BTreeMap<TriCell, usize>,
    memo: HashMap<FixedBitSet, BigUint>,
}

impl OrbitSearch<'_> {
    fn count(&mut self, used: FixedBitSet) -> BigUint {
        let Some(i) = used.zeroes().next() else {
            return BigUint::one();
        };
        if let Some(hit) = self.memo.get(&used) {
            return hit.clone();
        }
        let a = self.cells[i];
        let mut total = BigUint::zero();
        for b in self.region.neighbors(a).collect::<Vec<_>>() {
            if used[self.index[&b]] {
                continue;
            }
            if let Some(next) = self.place_orbit(&used, a, b) {
                total += self.count(next);
            }
        }
        self.memo.insert(used, total.clone());
        total
    }

    fn place_orbit(&self, used: &FixedBitSet, a: TriCell, b: TriCell) -> Option<FixedBitSet> {
        let mut next = used.clone();
        let mut placed: Vec<(usize, usize)> = Vec::new();
        for t in &self.group {
            let (ia, ib) = (self.index[&t.cell(a)], self.index[&t.cell(b)]);
            let pair = (ia.min(ib), ia.max(ib));
            if placed.contains(&pair) {
                continue;
            }
            if next[ia] || next[ib] {
                return None;
            }
            next.insert(ia);
            next.insert(ib);
            placed.push(pair);
        }
        Some(next)
    }
}
