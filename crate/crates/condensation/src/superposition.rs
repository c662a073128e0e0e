use std::collections::BTreeSet;
use std::fmt;

use lozenge_count::Matching;
use lozenge_lattice::{FaceQuad, FreeMatchGraph};
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Two matchings of the same graph drawn together: `mu` solid, `nu`
/// dotted. Every vertex meets at most one edge of each.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Superposition {
    pub mu: Matching,
    pub nu: Matching,
}

impl Superposition {
    pub fn new(mu: Matching, nu: Matching) -> Self {
        Superposition { mu, nu }
    }

    /// Product of the weights of all edges of both matchings.
    pub fn weight(&self, g: &FreeMatchGraph) -> BigRational {
        self.mu.weight(g) * self.nu.weight(g)
    }

    /// Number of edges of the superposition at `v` (a shared edge counts
    /// twice).
    pub fn degree(&self, g: &FreeMatchGraph, v: usize) -> usize {
        usize::from(self.mu.covers(g, v)) + usize::from(self.nu.covers(g, v))
    }

    /// The path through `v`, as vertices and the edges between them; `v`
    /// must be a path end.
    pub fn path_from(&self, g: &FreeMatchGraph, v: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.degree(g, v) != 1 {
            return Err(Error::NotPathEnd(v));
        }
        let mut vertices = vec![v];
        let mut edges = Vec::new();
        let mut at = v;
        let mut solid = self.mu.covers(g, v);
        loop {
            let side = if solid { &self.mu } else { &self.nu };
            let Some(e) = g.neighbors(at).iter().find(|(_, e)| side.edges.contains(e)).map(|&(_, e)| e) else {
                break;
            };
            edges.push(e);
            at = g.edges()[e].other(at);
            vertices.push(at);
            solid = !solid;
        }
        Ok((vertices, edges))
    }
}

/// Swap solid and dotted along the path ending at `v`.
pub fn shift_along_path(g: &FreeMatchGraph, sup: &Superposition, v: usize) -> Result<Superposition> {
    let (_, edges) = sup.path_from(g, v)?;
    let mut mu = sup.mu.edges.clone();
    let mut nu = sup.nu.edges.clone();
    for e in edges {
        if mu.remove(&e) {
            nu.insert(e);
        } else {
            nu.remove(&e);
            mu.insert(e);
        }
    }
    Ok(Superposition { mu: Matching { edges: mu }, nu: Matching { edges: nu } })
}

/// The eight products of the condensation identity, named by which
/// marks the solid matching covers: `A = abcd, B = ac, C = acd, D = abc`
/// on the left, `A' = bc, B' = cd, C' = bcd, D' = c` on the right. The
/// dotted matching covers the other marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    A,
    B,
    C,
    D,
    APrime,
    BPrime,
    CPrime,
    DPrime,
}

impl Term {
    pub const ALL: [Term; 8] =
        [Term::A, Term::B, Term::C, Term::D, Term::APrime, Term::BPrime, Term::CPrime, Term::DPrime];

    /// Indices into `[a, b, c, d]` covered by the solid matching.
    pub fn solid_marks(self) -> &'static [usize] {
        match self {
            Term::A => &[0, 1, 2, 3],
            Term::B => &[0, 2],
            Term::C => &[0, 2, 3],
            Term::D => &[0, 1, 2],
            Term::APrime => &[1, 2],
            Term::BPrime => &[2, 3],
            Term::CPrime => &[1, 2, 3],
            Term::DPrime => &[2],
        }
    }

    pub fn is_left(self) -> bool {
        matches!(self, Term::A | Term::B | Term::C | Term::D)
    }

    fn from_solid(set: &BTreeSet<usize>) -> Option<Term> {
        Term::ALL.into_iter().find(|t| t.solid_marks().iter().copied().collect::<BTreeSet<_>>() == *set)
    }

    /// The marked vertices removed for the solid and dotted factors.
    pub fn removed(self, marks: [usize; 4]) -> (Vec<usize>, Vec<usize>) {
        let solid = self.solid_marks();
        let for_mu = (0..4).filter(|i| !solid.contains(i)).map(|i| marks[i]).collect();
        let for_nu = solid.iter().map(|&i| marks[i]).collect();
        (for_mu, for_nu)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Term::A => "A",
            Term::B => "B",
            Term::C => "C",
            Term::D => "D",
            Term::APrime => "A'",
            Term::BPrime => "B'",
            Term::CPrime => "C'",
            Term::DPrime => "D'",
        })
    }
}

/// Where the path starting at `a` ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// at `b`
    ToB = 1,
    /// at `d`
    ToD = 2,
    /// at a free vertex
    ToFree = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathClass {
    pub term: Term,
    pub route: Route,
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.term, self.route as u8)
    }
}

impl PathClass {
    /// The class the path shift at `a` sends this one to.
    pub fn partner(self) -> PathClass {
        use Route::*;
        use Term::*;
        let term = match (self.term, self.route) {
            (A, ToB) => BPrime,
            (A, ToD) => APrime,
            (A, ToFree) => CPrime,
            (B, ToB) => APrime,
            (B, ToD) => BPrime,
            (B, ToFree) => DPrime,
            (C, ToB) => CPrime,
            (C, ToD) => DPrime,
            (C, ToFree) => BPrime,
            (D, ToB) => DPrime,
            (D, ToD) => CPrime,
            (D, ToFree) => APrime,
            (right, route) => {
                return *PathClass::left_classes()
                    .iter()
                    .find(|c| c.route == route && c.partner().term == right)
                    .expect("every right-hand class has a partner")
            }
        };
        PathClass { term, route: self.route }
    }

    pub fn left_classes() -> Vec<PathClass> {
        let mut out = Vec::new();
        for term in [Term::A, Term::B, Term::C, Term::D] {
            for route in [Route::ToB, Route::ToD, Route::ToFree] {
                out.push(PathClass { term, route });
            }
        }
        out
    }
}

/// The term and route of a superposition, read off from which marks each
/// matching covers and where the path from `a` ends.
pub fn classify(quad: &FaceQuad, sup: &Superposition) -> Result<PathClass> {
    let g = quad.graph();
    let marks = quad.marks();
    let mut solid = BTreeSet::new();
    for (i, &m) in marks.iter().enumerate() {
        match (sup.mu.covers(g, m), sup.nu.covers(g, m)) {
            (true, false) => {
                solid.insert(i);
            }
            (false, true) => {}
            _ => return Err(Error::InvalidSuperposition(format!("mark {m} is not covered exactly once"))),
        }
    }
    let term = Term::from_solid(&solid)
        .ok_or_else(|| Error::InvalidSuperposition(format!("marks {solid:?} covered by the solid matching")))?;
    let (path, _) = sup.path_from(g, marks[0])?;
    let end = *path.last().expect("non-empty");
    let route = if end == marks[1] {
        Route::ToB
    } else if end == marks[3] {
        Route::ToD
    } else if g.is_free(end) {
        Route::ToFree
    } else {
        return Err(Error::InvalidSuperposition(format!("path from a ends at {end}")));
    };
    Ok(PathClass { term, route })
}

/// Whether `sup` is a pair counted by `term`: the solid matching covers
/// every non-free vertex of `G` minus the marks outside the term, and the
/// dotted one every non-free vertex of `G` minus the term's marks.
pub fn is_term_pair(quad: &FaceQuad, term: Term, sup: &Superposition) -> bool {
    let g = quad.graph();
    let (for_mu, for_nu) = term.removed(quad.marks());
    let covers_rest = |m: &Matching, removed: &[usize]| {
        m.is_matching_of(g, removed)
            && (0..g.vertex_count()).all(|v| removed.contains(&v) || g.is_free(v) || m.covers(g, v))
    };
    covers_rest(&sup.mu, &for_mu) && covers_rest(&sup.nu, &for_nu)
}

/// Every superposition counted by `term`.
pub fn term_superpositions(quad: &FaceQuad, term: Term) -> Vec<Superposition> {
    let g = quad.graph();
    let (for_mu, for_nu) = term.removed(quad.marks());
    let mus = lozenge_count::admissible_matchings(g, &for_mu);
    let nus = lozenge_count::admissible_matchings(g, &for_nu);
    let mut out = Vec::with_capacity(mus.len() * nus.len());
    for mu in &mus {
        for nu in &nus {
            out.push(Superposition::new(mu.clone(), nu.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_shift() {
        let g = FreeMatchGraph::unit(2, [(0, 1)], []).unwrap();
        let sup = Superposition::new(Matching { edges: [0].into() }, Matching::default());
        let shifted = shift_along_path(&g, &sup, 0).unwrap();
        assert_eq!(shifted, Superposition::new(Matching::default(), Matching { edges: [0].into() }));
        assert_eq!(shift_along_path(&g, &shifted, 1).unwrap(), sup);
    }

    #[test]
    fn cycle_vertex_is_rejected() {
        let g = FreeMatchGraph::unit(2, [(0, 1)], []).unwrap();
        let m = Matching { edges: [0].into() };
        let sup = Superposition::new(m.clone(), m);
        assert_eq!(shift_along_path(&g, &sup, 0), Err(Error::NotPathEnd(0)));
        let empty = Superposition::new(Matching::default(), Matching::default());
        assert_eq!(shift_along_path(&g, &empty, 0), Err(Error::NotPathEnd(0)));
    }

    #[test]
    fn partner_table_is_an_involution() {
        for c in PathClass::left_classes() {
            let p = c.partner();
            assert!(!p.term.is_left());
            assert_eq!(p.partner(), c);
        }
        let rights: BTreeSet<_> = PathClass::left_classes().into_iter().map(PathClass::partner).collect();
        assert_eq!(rights.len(), 12);
    }
}
