use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use lozenge_count::{mf_without, perfect_without, CountValue};
use lozenge_lattice::FaceQuad;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::separation::{separation_witness, Anchor};

/// The condensation identities that can be checked on a quad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// Eight products, free set `(a,c)`-separated.
    Eight,
    /// The same with the roles of the two diagonals exchanged, free set
    /// `(b,d)`-separated.
    EightBd,
    /// Even-deletion four-term identity; both separations.
    FourEven,
    /// Odd-deletion four-term identity; both separations.
    FourOdd,
    /// Classical perfect-matching condensation; empty free set.
    Kuo,
    /// Odd-deletion perfect-matching identity; empty free set.
    Ebh,
}

impl Identity {
    pub const ALL: [Identity; 6] =
        [Identity::Eight, Identity::EightBd, Identity::FourEven, Identity::FourOdd, Identity::Kuo, Identity::Ebh];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Eight => "eight",
            Identity::EightBd => "eight-bd",
            Identity::FourEven => "four-even",
            Identity::FourOdd => "four-odd",
            Identity::Kuo => "kuo",
            Identity::Ebh => "ebh",
        }
    }

    /// Separations the identity needs.
    pub fn anchors(self) -> &'static [Anchor] {
        match self {
            Identity::Eight => &[Anchor::AToC],
            Identity::EightBd => &[Anchor::BToD],
            Identity::FourEven | Identity::FourOdd => &[Anchor::AToC, Anchor::BToD],
            Identity::Kuo | Identity::Ebh => &[],
        }
    }

    pub fn needs_empty_free_set(self) -> bool {
        matches!(self, Identity::Kuo | Identity::Ebh)
    }

    /// Products on each side, as pairs of removed mark sets (indices into
    /// `[a, b, c, d]`).
    fn sides(self) -> (Products, Products) {
        const A: usize = 0;
        const B: usize = 1;
        const C: usize = 2;
        const D: usize = 3;
        match self {
            Identity::Eight => (
                vec![
                    (vec![], vec![A, B, C, D]),
                    (vec![B, D], vec![A, C]),
                    (vec![B], vec![A, C, D]),
                    (vec![D], vec![A, B, C]),
                ],
                vec![
                    (vec![A, D], vec![B, C]),
                    (vec![A, B], vec![C, D]),
                    (vec![A], vec![B, C, D]),
                    (vec![A, B, D], vec![C]),
                ],
            ),
            Identity::EightBd => (
                vec![
                    (vec![], vec![A, B, C, D]),
                    (vec![A, C], vec![B, D]),
                    (vec![A], vec![B, C, D]),
                    (vec![C], vec![A, B, D]),
                ],
                vec![
                    (vec![A, B], vec![C, D]),
                    (vec![B, C], vec![A, D]),
                    (vec![B], vec![A, C, D]),
                    (vec![A, B, C], vec![D]),
                ],
            ),
            Identity::FourEven | Identity::Kuo => (
                vec![(vec![], vec![A, B, C, D]), (vec![B, D], vec![A, C])],
                vec![(vec![A, D], vec![B, C]), (vec![A, B], vec![C, D])],
            ),
            Identity::FourOdd | Identity::Ebh => (
                vec![(vec![B], vec![A, C, D]), (vec![D], vec![A, B, C])],
                vec![(vec![A], vec![B, C, D]), (vec![A, B, D], vec![C])],
            ),
        }
    }
}

type Products = Vec<(Vec<usize>, Vec<usize>)>;

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| {
            format!("unknown identity `{s}` (expected eight, eight-bd, four-even, four-odd, kuo or ebh)")
        })
    }
}

/// Both sides of an identity on one quad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub identity: Identity,
    pub lhs: CountValue,
    pub rhs: CountValue,
}

impl Evaluation {
    pub fn residual(&self) -> CountValue {
        CountValue::from(self.lhs.as_rational() - self.rhs.as_rational())
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Check the hypotheses of `identity` on `quad`, reporting the first one
/// that fails.
pub fn check_hypotheses(quad: &FaceQuad, identity: Identity) -> Result<()> {
    let free = quad.graph().free_vertices().len();
    if identity.needs_empty_free_set() && free > 0 {
        return Err(Error::FreeSetNotEmpty(free));
    }
    for &anchor in identity.anchors() {
        if let Some(w) = separation_witness(quad, anchor) {
            return Err(Error::NotSeparated { anchor, witness: w.to_string() });
        }
    }
    Ok(())
}

/// Evaluate both sides of `identity`, refusing if its hypotheses fail.
/// Identities stated for an empty free set use perfect matching counts;
/// the others use free-boundary counts.
pub fn evaluate(quad: &FaceQuad, identity: Identity) -> Result<Evaluation> {
    check_hypotheses(quad, identity)?;
    let g = quad.graph();
    let marks = quad.marks();
    let mut cache: HashMap<Vec<usize>, BigRational> = HashMap::new();
    let mut count = |idx: &[usize]| -> BigRational {
        let mut removed: Vec<usize> = idx.iter().map(|&i| marks[i]).collect();
        removed.sort_unstable();
        cache
            .entry(removed)
            .or_insert_with_key(|r| {
                if identity.needs_empty_free_set() {
                    perfect_without(g, r).into_rational()
                } else {
                    mf_without(g, r).into_rational()
                }
            })
            .clone()
    };
    let (left, right) = identity.sides();
    let mut side =
        |products: &Products| products.iter().fold(BigRational::zero(), |acc, (x, y)| acc + count(x) * count(y));
    let lhs = side(&left);
    let rhs = side(&right);
    Ok(Evaluation { identity, lhs: lhs.into(), rhs: rhs.into() })
}

pub fn residual(quad: &FaceQuad, identity: Identity) -> Result<CountValue> {
    evaluate(quad, identity).map(|e| e.residual())
}

pub fn residual_eight(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::Eight)
}

pub fn residual_eight_bd(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::EightBd)
}

pub fn residual_four_even(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::FourEven)
}

pub fn residual_four_odd(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::FourOdd)
}

pub fn residual_kuo_classical(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::Kuo)
}

pub fn residual_ebh(quad: &FaceQuad) -> Result<CountValue> {
    residual(quad, Identity::Ebh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_lattice::FreeMatchGraph;

    fn four_cycle() -> FaceQuad {
        let g = FreeMatchGraph::unit(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [])
            .unwrap()
            .with_outer_face(vec![0, 1, 2, 3])
            .unwrap();
        FaceQuad::new(g, [0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn four_cycle_sides() {
        let q = four_cycle();
        let e = evaluate(&q, Identity::FourEven).unwrap();
        assert_eq!(e.lhs, CountValue::from(2));
        assert_eq!(e.rhs, CountValue::from(2));
        for id in Identity::ALL {
            assert!(residual(&q, id).unwrap().is_zero(), "{id}");
        }
    }

    #[test]
    fn refuses_without_separation() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 2), (1, 4), (3, 5)]);
        let g = FreeMatchGraph::unit(6, edges, [4, 5]).unwrap().with_outer_face((0..6).collect()).unwrap();
        let q = FaceQuad::new(g, [0, 1, 2, 3]).unwrap();
        assert!(matches!(residual_eight(&q), Err(Error::NotSeparated { anchor: Anchor::AToC, .. })));
        assert!(matches!(residual_kuo_classical(&q), Err(Error::FreeSetNotEmpty(2))));
    }

    #[test]
    fn six_cycle_with_free_pair() {
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = FreeMatchGraph::unit(6, edges, [4, 5]).unwrap().with_outer_face((0..6).collect()).unwrap();
        let q = FaceQuad::new(g, [0, 1, 2, 3]).unwrap();
        assert!(residual_four_even(&q).unwrap().is_zero());
        assert!(residual_four_odd(&q).unwrap().is_zero());
        assert!(residual_eight(&q).unwrap().is_zero());
    }
}
