use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use lozenge_lattice::{FaceQuad, FreeMatchGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::separation::{is_separated, Anchor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightMode {
    Unit,
    /// Nonzero rationals `±n/d` with `1 <= n <= 9`, `1 <= d <= 6`.
    Rational,
}

impl FromStr for WeightMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "unit" => Ok(WeightMode::Unit),
            "rational" => Ok(WeightMode::Rational),
            _ => Err(format!("unknown weight mode `{s}` (expected unit or rational)")),
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMode::Unit => "unit",
            WeightMode::Rational => "rational",
        })
    }
}

/// What [`random_separated_quad`] should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRequest {
    /// Maximum number of vertices.
    pub budget: usize,
    pub weights: WeightMode,
    /// Separations every emitted quad must satisfy.
    pub anchors: Vec<Anchor>,
    /// Whether to draw a free set (otherwise it is empty).
    pub free: bool,
    /// Rejections tolerated before giving up.
    pub max_attempts: usize,
}

impl QuadRequest {
    pub fn new(budget: usize) -> Self {
        QuadRequest {
            budget,
            weights: WeightMode::Rational,
            anchors: vec![Anchor::AToC],
            free: true,
            max_attempts: 10_000,
        }
    }

    pub fn weights(mut self, weights: WeightMode) -> Self {
        self.weights = weights;
        self
    }

    pub fn anchors(mut self, anchors: &[Anchor]) -> Self {
        self.anchors = anchors.to_vec();
        self
    }

    pub fn free(mut self, free: bool) -> Self {
        self.free = free;
        self
    }
}

/// A random quad on a subgraph of a small square grid (some squares get a
/// diagonal, so odd cycles occur), with the outer face read off the grid
/// embedding. Free vertices and the marks are drawn on the outer face, and
/// candidates are rejected until the outer face is a simple cycle and the
/// requested separations hold. Deterministic in `seed`.
pub fn random_separated_quad(seed: u64, req: &QuadRequest) -> Result<FaceQuad> {
    if req.budget < 4 {
        return Err(Error::InvalidParameters(format!("a budget of {} vertices cannot hold four marks", req.budget)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..req.max_attempts {
        if let Some(q) = attempt(&mut rng, req)? {
            return Ok(q);
        }
    }
    Err(Error::GaveUp { attempts: req.max_attempts, budget: req.budget })
}

fn attempt(rng: &mut ChaCha8Rng, req: &QuadRequest) -> Result<Option<FaceQuad>> {
    // grids using most of the budget, so instances are not mostly tiny
    let floor = (2 * req.budget / 3).max(4);
    let shapes: Vec<(usize, usize)> = (2..=req.budget / 2)
        .flat_map(|w| (2..=req.budget / w).map(move |h| (w, h)))
        .filter(|&(w, h)| w * h >= floor.min(req.budget / 2 * 2))
        .collect();
    let &(w, h) = shapes.choose(rng).expect("budget >= 4 admits a 2x2 grid");
    let present: Vec<bool> = (0..w * h).map(|_| !rng.gen_bool(0.2)).collect();
    let mut index = vec![None; w * h];
    let mut positions = Vec::new();
    for (v, slot) in index.iter_mut().enumerate() {
        if present[v] {
            *slot = Some(positions.len());
            positions.push(((v % w) as f64, (v / w) as f64));
        }
    }
    let n = positions.len();
    if n < 4 {
        return Ok(None);
    }
    let at = |x: usize, y: usize| index[y * w + x];
    let mut pairs = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                if let (Some(a), Some(b)) = (at(x, y), at(x + 1, y)) {
                    pairs.push((a, b));
                }
            }
            if y + 1 < h {
                if let (Some(a), Some(b)) = (at(x, y), at(x, y + 1)) {
                    pairs.push((a, b));
                }
            }
            if x + 1 < w && y + 1 < h && rng.gen_bool(0.35) {
                let diagonal =
                    if rng.gen_bool(0.5) { (at(x, y), at(x + 1, y + 1)) } else { (at(x + 1, y), at(x, y + 1)) };
                if let (Some(a), Some(b)) = diagonal {
                    pairs.push((a, b));
                }
            }
        }
    }
    let edges: Vec<(usize, usize, BigRational)> =
        pairs.into_iter().map(|(a, b)| (a, b, weight(rng, req.weights))).collect();
    let g = FreeMatchGraph::new(n, edges, [])?;
    if g.components().len() != 1 {
        return Ok(None);
    }
    let g = g.with_positions(positions)?;
    let walk = g.outer_face_order()?.to_vec();
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    if distinct.len() != walk.len() || walk.len() < 4 {
        return Ok(None);
    }
    let free: Vec<usize> =
        if req.free { walk.iter().copied().filter(|_| rng.gen_bool(0.3)).collect() } else { Vec::new() };
    let candidates: Vec<usize> = (0..walk.len()).filter(|&i| !free.contains(&walk[i])).collect();
    if candidates.len() < 4 {
        return Ok(None);
    }
    let mut chosen: Vec<usize> = candidates.choose_multiple(rng, 4).copied().collect();
    chosen.sort_unstable();
    if rng.gen_bool(0.5) {
        chosen.reverse();
    }
    chosen.rotate_left(rng.gen_range(0..4));
    let marks = [walk[chosen[0]], walk[chosen[1]], walk[chosen[2]], walk[chosen[3]]];
    let quad = FaceQuad::new(g.with_free(free)?, marks)?;
    if req.anchors.iter().all(|&a| is_separated(&quad, a)) {
        Ok(Some(quad))
    } else {
        Ok(None)
    }
}

fn weight(rng: &mut ChaCha8Rng, mode: WeightMode) -> BigRational {
    match mode {
        WeightMode::Unit => BigRational::one(),
        WeightMode::Rational => {
            let n: i64 = rng.gen_range(1..=9);
            let d: i64 = rng.gen_range(1..=6);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            BigRational::new(BigInt::from(sign * n), BigInt::from(d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        let req = QuadRequest::new(12);
        let a = random_separated_quad(1, &req).unwrap();
        let b = random_separated_quad(1, &req).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tiny_budget_is_rejected() {
        assert!(matches!(random_separated_quad(0, &QuadRequest::new(3)), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn empty_free_set_on_request() {
        let req = QuadRequest::new(10).free(false);
        for seed in 0..10 {
            let q = random_separated_quad(seed, &req).unwrap();
            assert!(q.graph().free_vertices().is_empty());
            assert!(q.graph().vertex_count() <= 10);
        }
    }
}
