use std::collections::HashMap;
use std::ops::{AddAssign, Mul};

use fixedbitset::FixedBitSet;
use lozenge_lattice::FreeMatchGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::value::CountValue;

/// Default cap on the free set size for [`mf_subset_oracle`].
pub const DEFAULT_SUBSET_CAP: usize = 20;

trait Ring: Clone + Zero + One + for<'a> AddAssign<&'a Self> + for<'a> Mul<&'a Self, Output = Self> {}
impl<T> Ring for T where T: Clone + Zero + One + for<'a> AddAssign<&'a T> + for<'a> Mul<&'a T, Output = T> {}

/// Memoised search over the set of used vertices. The lowest unused vertex
/// is either left alone (if free) or matched to an unused neighbour; before
/// each lookup, non-free vertices with a single available neighbour are
/// matched to it.
struct Enumerator<'g, W> {
    g: &'g FreeMatchGraph,
    free: Vec<bool>,
    weights: Vec<W>,
    memo: HashMap<FixedBitSet, W>,
}

impl<'g, W: Ring> Enumerator<'g, W> {
    fn new(g: &'g FreeMatchGraph, free: Vec<bool>, weights: Vec<W>) -> Self {
        Enumerator { g, free, weights, memo: HashMap::new() }
    }

    /// Match forced vertices, starting the scan from `seeds`. Returns the
    /// weight factor of the forced edges, or `None` if some non-free vertex
    /// can no longer be matched.
    fn propagate(&self, used: &mut FixedBitSet, seeds: Vec<usize>) -> Option<W> {
        let mut factor = W::one();
        let mut work = seeds;
        while let Some(v) = work.pop() {
            if used[v] || self.free[v] {
                continue;
            }
            let mut avail = self.g.neighbors(v).iter().filter(|&&(w, _)| !used[w]);
            match (avail.next(), avail.next()) {
                (None, _) => return None,
                (Some(&(w, e)), None) => {
                    factor = factor * &self.weights[e];
                    used.insert(v);
                    used.insert(w);
                    for &(x, _) in self.g.neighbors(w) {
                        if !used[x] {
                            work.push(x);
                        }
                    }
                }
                _ => {}
            }
        }
        Some(factor)
    }

    /// Total weight of admissible matchings on the unused vertices, after
    /// propagating from `seeds`.
    fn count_from(&mut self, mut used: FixedBitSet, seeds: Vec<usize>) -> W {
        let Some(factor) = self.propagate(&mut used, seeds) else {
            return W::zero();
        };
        if factor.is_zero() {
            return factor;
        }
        factor * &self.count_state(used)
    }

    fn count_state(&mut self, used: FixedBitSet) -> W {
        let Some(v) = used.zeroes().next() else {
            return W::one();
        };
        if let Some(hit) = self.memo.get(&used) {
            return hit.clone();
        }
        let mut total = W::zero();
        if self.free[v] {
            let mut next = used.clone();
            next.insert(v);
            let seeds = self.g.neighbors(v).iter().map(|&(w, _)| w).collect();
            total += &self.count_from(next, seeds);
        }
        for &(w, e) in self.g.neighbors(v) {
            if used[w] {
                continue;
            }
            let mut next = used.clone();
            next.insert(v);
            next.insert(w);
            let seeds = self.g.neighbors(v).iter().chain(self.g.neighbors(w)).map(|&(x, _)| x).collect();
            let sub = self.count_from(next, seeds);
            if !sub.is_zero() {
                total += &(self.weights[e].clone() * &sub);
            }
        }
        self.memo.insert(used, total.clone());
        total
    }

    fn count_without(&mut self, removed: &FixedBitSet) -> W {
        let seeds = (0..self.g.vertex_count()).collect();
        self.count_from(removed.clone(), seeds)
    }
}

fn mask(g: &FreeMatchGraph, removed: &[usize]) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(g.vertex_count());
    for &v in removed {
        m.insert(v);
    }
    m
}

fn run(g: &FreeMatchGraph, free: Vec<bool>, removed: &FixedBitSet) -> CountValue {
    if g.has_integer_weights() {
        let w: Vec<BigInt> = g.edges().iter().map(|e| e.weight.to_integer()).collect();
        Enumerator::new(g, free, w).count_without(removed).into()
    } else {
        let w: Vec<BigRational> = g.edges().iter().map(|e| e.weight.clone()).collect();
        Enumerator::new(g, free, w).count_without(removed).into()
    }
}

/// Weighted count of matchings covering every non-free vertex.
pub fn mf_enumerate(g: &FreeMatchGraph) -> CountValue {
    mf_without(g, &[])
}

/// [`mf_enumerate`] of the graph with `removed` vertices deleted.
pub fn mf_without(g: &FreeMatchGraph, removed: &[usize]) -> CountValue {
    let free = (0..g.vertex_count()).map(|v| g.is_free(v)).collect();
    run(g, free, &mask(g, removed))
}

/// Weighted count of perfect matchings (the free set is ignored).
pub fn perfect_count(g: &FreeMatchGraph) -> CountValue {
    perfect_without(g, &[])
}

/// [`perfect_count`] of the graph with `removed` vertices deleted.
pub fn perfect_without(g: &FreeMatchGraph, removed: &[usize]) -> CountValue {
    let removed = mask(g, removed);
    if !balanced(g, &removed) {
        return CountValue::zero();
    }
    run(g, vec![false; g.vertex_count()], &removed)
}

/// Two-colouring of each component, or `None` if the graph has an odd cycle.
fn two_colouring(g: &FreeMatchGraph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = colour[v]?;
            for &(w, _) in g.neighbors(v) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => return None,
                    _ => {}
                }
            }
        }
    }
    colour.into_iter().collect()
}

/// Cheap necessary condition for a perfect matching of the unremoved part:
/// an even number of vertices, and equal colour classes in each bipartite
/// component.
fn balanced(g: &FreeMatchGraph, removed: &FixedBitSet) -> bool {
    let alive = g.vertex_count() - removed.count_ones(..);
    if !alive.is_multiple_of(2) {
        return false;
    }
    match two_colouring(g) {
        None => true,
        Some(colour) => {
            (0..g.vertex_count()).filter(|&v| !removed[v]).map(|v| if colour[v] { 1i64 } else { -1 }).sum::<i64>() == 0
        }
    }
}

/// Computes the free-boundary count as a sum of perfect matching counts,
/// `M_f(G) = sum over T subset of S of M(G - T)`. All terms share one memo
/// table, since deleting `T` is the same as marking it used.
pub fn mf_subset_oracle(g: &FreeMatchGraph) -> Result<CountValue> {
    mf_subset_oracle_capped(g, DEFAULT_SUBSET_CAP)
}

pub fn mf_subset_oracle_capped(g: &FreeMatchGraph, cap: usize) -> Result<CountValue> {
    let free = g.free_vertices();
    if free.len() > cap {
        return Err(Error::FreeSetTooLarge { size: free.len(), cap });
    }
    if g.has_integer_weights() {
        let w: Vec<BigInt> = g.edges().iter().map(|e| e.weight.to_integer()).collect();
        Ok(subset_sum(g, &free, w).into())
    } else {
        let w: Vec<BigRational> = g.edges().iter().map(|e| e.weight.clone()).collect();
        Ok(subset_sum(g, &free, w).into())
    }
}

fn subset_sum<W: Ring>(g: &FreeMatchGraph, free: &[usize], weights: Vec<W>) -> W {
    let mut e = Enumerator::new(g, vec![false; g.vertex_count()], weights);
    let mut total = W::zero();
    for bits in 0u64..(1u64 << free.len()) {
        let removed: Vec<usize> = (0..free.len()).filter(|i| bits >> i & 1 == 1).map(|i| free[i]).collect();
        let removed = mask(g, &removed);
        if balanced(g, &removed) {
            total += &e.count_without(&removed);
        }
    }
    total
}
