use std::collections::HashMap;

use lozenge_lattice::{Region, TriCell};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::value::CountValue;

/// Free-boundary tiling count by a transfer scan over the cells in
/// row-major order.
///
/// The state is the sorted list of not-yet-scanned cells that are already
/// covered by a lozenge. At each cell that is not covered we either leave it
/// uncovered (free cells only) or cover it together with a later neighbour:
/// the next cell in its row, or the up cell above a down cell. Only cells
/// within about one row of the scan position can be in a state, so the cost
/// is exponential in the width of the region only.
pub fn mf_profile_dp(region: &Region) -> CountValue {
    let cells: Vec<TriCell> = region.cells().iter().copied().collect();
    let index = region.index();
    let forward: Vec<Vec<u32>> = cells
        .iter()
        .enumerate()
        .map(|(i, &c)| region.neighbors(c).map(|n| index[&n] as u32).filter(|&j| j as usize > i).collect())
        .collect();
    let free: Vec<bool> = cells.iter().map(|&c| region.is_free(c)).collect();

    let mut layer: HashMap<Vec<u32>, BigUint> = HashMap::new();
    layer.insert(Vec::new(), BigUint::one());
    for i in 0..cells.len() {
        let i32_ = i as u32;
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(layer.len());
        for (state, count) in layer {
            if state.first() == Some(&i32_) {
                add(&mut next, state[1..].to_vec(), count);
                continue;
            }
            if free[i] {
                add(&mut next, state.clone(), count.clone());
            }
            for &j in &forward[i] {
                if let Err(pos) = state.binary_search(&j) {
                    let mut s = state.clone();
                    s.insert(pos, j);
                    add(&mut next, s, count.clone());
                }
            }
        }
        layer = next;
    }
    let total = layer.remove(&Vec::new()).unwrap_or_else(BigUint::zero);
    CountValue::from(total)
}

fn add(layer: &mut HashMap<Vec<u32>, BigUint>, key: Vec<u32>, value: BigUint) {
    *layer.entry(key).or_insert_with(BigUint::zero) += value;
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_lattice::Dir;

    #[test]
    fn trivial_regions() {
        assert_eq!(mf_profile_dp(&Region::empty()), CountValue::one());
        let up = TriCell::new(0, 0);
        let lone = Region::new([up], []).unwrap();
        assert_eq!(mf_profile_dp(&lone), CountValue::zero());
        let free = Region::new([up], [up.edge(Dir::Horizontal)]).unwrap();
        assert_eq!(mf_profile_dp(&free), CountValue::one());
    }

    #[test]
    fn cut_blocks_lozenge() {
        let (a, b) = (TriCell::new(0, 0), TriCell::new(1, 0));
        let r = Region::new([a, b], []).unwrap();
        assert_eq!(mf_profile_dp(&r), CountValue::one());
        let r = Region::with_cuts([a, b], [], [a.shared_edge(b).unwrap()]).unwrap();
        assert_eq!(mf_profile_dp(&r), CountValue::zero());
    }
}
