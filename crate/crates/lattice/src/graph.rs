use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::region::Region;

/// An edge `u - v` (with `u < v`) and its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub weight: BigRational,
}

impl WeightedEdge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A combinatorial planar embedding: neighbours of each vertex in
/// counterclockwise order, the faces, and the designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    outer: Vec<usize>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Face boundary walks (vertex sequences, repeated vertices possible).
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.outer
    }
}

/// A weighted graph with a set `S` of free vertices, which may stay
/// unmatched, and optionally a planar embedding with a designated outer face
/// containing `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeMatchGraph {
    n: usize,
    edges: Vec<WeightedEdge>,
    adj: Vec<Vec<(usize, usize)>>,
    free: Vec<bool>,
    positions: Option<Vec<(f64, f64)>>,
    embedding: Option<Embedding>,
}

impl FreeMatchGraph {
    /// A graph without embedding. Edges must be simple, weights nonzero.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, BigRational)>,
        free: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b, weight) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if weight.is_zero() {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} has weight 0")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("parallel edge {u}-{v}")));
            }
            let idx = list.len();
            adj[u].push((v, idx));
            adj[v].push((u, idx));
            list.push(WeightedEdge { u, v, weight });
        }
        let mut flags = vec![false; n];
        for s in free {
            if s >= n {
                return Err(Error::InvalidGraph(format!("free vertex {s} out of range")));
            }
            flags[s] = true;
        }
        Ok(FreeMatchGraph { n, edges: list, adj, free: flags, positions: None, embedding: None })
    }

    /// Unit-weight convenience constructor.
    pub fn unit(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        free: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        Self::new(n, edges.into_iter().map(|(a, b)| (a, b, BigRational::one())), free)
    }

    /// Attach the straight-line embedding given by vertex positions. The
    /// rotation system is read off by angle, faces are traced, and each
    /// component must satisfy Euler's formula. The outer face of a component
    /// is its face of most negative signed area.
    pub fn with_positions(mut self, positions: Vec<(f64, f64)>) -> Result<Self> {
        if positions.len() != self.n {
            return Err(Error::InvalidGraph(format!("{} positions for {} vertices", positions.len(), self.n)));
        }
        let rotation: Vec<Vec<usize>> = (0..self.n)
            .map(|v| {
                let (x0, y0) = positions[v];
                let mut nb: Vec<usize> = self.adj[v].iter().map(|&(w, _)| w).collect();
                nb.sort_by(|&a, &b| {
                    let ta = (positions[a].1 - y0).atan2(positions[a].0 - x0);
                    let tb = (positions[b].1 - y0).atan2(positions[b].0 - x0);
                    ta.total_cmp(&tb)
                });
                nb
            })
            .collect();
        let embedding = self.trace_faces(rotation, &positions)?;
        self.positions = Some(positions);
        self.set_embedding(embedding)
    }

    /// Attach an explicitly given outer face walk; no planarity check is
    /// made. Consecutive walk vertices must be adjacent.
    pub fn with_outer_face(self, walk: Vec<usize>) -> Result<Self> {
        if walk.len() > 1 {
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                if walk.len() == 2 && i == 1 {
                    break;
                }
                if self.edge_between(a, b).is_none() {
                    return Err(Error::InvalidGraph(format!("outer walk steps {a}-{b} along a non-edge")));
                }
            }
        }
        let embedding = Embedding { rotation: Vec::new(), faces: vec![walk.clone()], outer: walk };
        self.set_embedding(embedding)
    }

    fn set_embedding(mut self, embedding: Embedding) -> Result<Self> {
        for v in self.free_vertices() {
            if !embedding.outer.contains(&v) {
                return Err(Error::InvalidGraph(format!("free vertex {v} is not on the outer face")));
            }
        }
        self.embedding = Some(embedding);
        Ok(self)
    }

    fn trace_faces(&self, rotation: Vec<Vec<usize>>, pos: &[(f64, f64)]) -> Result<Embedding> {
        // Dart (v, i) leaves v towards rotation[v][i]. The face to the left
        // of u -> v continues towards the neighbour of v preceding u in
        // counterclockwise order.
        let offset: Vec<usize> = rotation
            .iter()
            .scan(0, |acc, r| {
                let o = *acc;
                *acc += r.len();
                Some(o)
            })
            .collect();
        let total: usize = rotation.iter().map(Vec::len).sum();
        let mut visited = vec![false; total];
        let mut faces: Vec<Vec<usize>> = Vec::new();
        let mut areas: Vec<f64> = Vec::new();
        for v in 0..self.n {
            for i in 0..rotation[v].len() {
                if visited[offset[v] + i] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut area = 0.0;
                let (mut x, mut j) = (v, i);
                while !visited[offset[x] + j] {
                    visited[offset[x] + j] = true;
                    walk.push(x);
                    let y = rotation[x][j];
                    area += pos[x].0 * pos[y].1 - pos[y].0 * pos[x].1;
                    let k = rotation[y].iter().position(|&w| w == x).expect("symmetric adjacency");
                    let deg = rotation[y].len();
                    j = (k + deg - 1) % deg;
                    x = y;
                }
                faces.push(walk);
                areas.push(area / 2.0);
            }
        }
        let comp = self.components();
        let mut outer = Vec::new();
        for members in comp {
            let set: BTreeSet<usize> = members.iter().copied().collect();
            let edge_count = self.edges.iter().filter(|e| set.contains(&e.u)).count();
            if edge_count == 0 {
                outer.extend(members);
                continue;
            }
            let own: Vec<usize> = (0..faces.len()).filter(|&f| set.contains(&faces[f][0])).collect();
            let euler = members.len() as i64 - edge_count as i64 + own.len() as i64;
            if euler != 2 {
                return Err(Error::NonPlanar(format!(
                    "component containing vertex {} has V - E + F = {euler}",
                    members[0]
                )));
            }
            let best = own
                .iter()
                .copied()
                .min_by(|&a, &b| areas[a].total_cmp(&areas[b]))
                .expect("component with edges has faces");
            outer.extend(faces[best].iter().copied());
        }
        Ok(Embedding { rotation, faces, outer })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for &(w, _) in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    /// `(neighbour, edge index)` pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adj.get(a)?.iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.free[v]
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.free[v]).collect()
    }

    /// True when every weight is an integer (counts are then integers).
    pub fn has_integer_weights(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_integer())
    }

    pub fn positions(&self) -> Option<&[(f64, f64)]> {
        self.positions.as_deref()
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// The outer face boundary walk; components are concatenated.
    pub fn outer_face_order(&self) -> Result<&[usize]> {
        self.embedding.as_ref().map(|e| e.outer.as_slice()).ok_or(Error::NoEmbedding)
    }

    /// Same graph and embedding, new free set.
    pub fn with_free(&self, free: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut g = self.clone();
        g.free = vec![false; self.n];
        for s in free {
            if s >= self.n {
                return Err(Error::InvalidGraph(format!("free vertex {s} out of range")));
            }
            g.free[s] = true;
        }
        match g.embedding.take() {
            Some(e) => g.set_embedding(e),
            None => Ok(g),
        }
    }

    /// The graph with `removed` vertices deleted, renumbered in increasing
    /// order, and the map from old to new indices. A position-based
    /// embedding is recomputed; an explicit outer face is dropped.
    pub fn delete(&self, removed: &[usize]) -> Result<(FreeMatchGraph, Vec<Option<usize>>)> {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self.edges.iter().filter_map(|e| match (map[e.u], map[e.v]) {
            (Some(a), Some(b)) => Some((a, b, e.weight.clone())),
            _ => None,
        });
        let free = (0..self.n).filter(|&v| self.free[v]).filter_map(|v| map[v]);
        let g = FreeMatchGraph::new(next, edges, free)?;
        let g = match &self.positions {
            Some(p) => {
                let kept = (0..self.n).filter(|v| map[*v].is_some()).map(|v| p[v]).collect();
                g.with_positions(kept)?
            }
            None => g,
        };
        Ok((g, map))
    }
}

/// Whether `targets` occur in this cyclic order along `walk` (in either
/// direction of traversal).
pub fn in_cyclic_order(walk: &[usize], targets: &[usize]) -> bool {
    let forward = |w: &[usize]| -> bool {
        let n = w.len();
        (0..n).filter(|&i| w[i] == targets[0]).any(|start| {
            let mut t = 1;
            for step in 1..n {
                if t == targets.len() {
                    break;
                }
                if w[(start + step) % n] == targets[t] {
                    t += 1;
                }
            }
            t == targets.len()
        })
    };
    let rev: Vec<usize> = walk.iter().rev().copied().collect();
    !targets.is_empty() && (forward(walk) || forward(&rev))
}

/// A graph with four marked vertices `a, b, c, d` in cyclic order on its
/// outer face, none of them free.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceQuad {
    graph: FreeMatchGraph,
    marks: [usize; 4],
}

impl FaceQuad {
    pub fn new(graph: FreeMatchGraph, marks: [usize; 4]) -> Result<Self> {
        let walk = graph.outer_face_order()?;
        for (i, &m) in marks.iter().enumerate() {
            if m >= graph.vertex_count() {
                return Err(Error::InvalidQuad(format!("mark {m} out of range")));
            }
            if marks[..i].contains(&m) {
                return Err(Error::InvalidQuad(format!("vertex {m} marked twice")));
            }
            if graph.is_free(m) {
                return Err(Error::InvalidQuad(format!("marked vertex {m} is free")));
            }
            if !walk.contains(&m) {
                return Err(Error::InvalidQuad(format!("marked vertex {m} is not on the outer face")));
            }
        }
        if !in_cyclic_order(walk, &marks) {
            return Err(Error::InvalidQuad(format!("{marks:?} are not in cyclic order on the outer face")));
        }
        Ok(FaceQuad { graph, marks })
    }

    pub fn graph(&self) -> &FreeMatchGraph {
        &self.graph
    }

    /// `[a, b, c, d]`.
    pub fn marks(&self) -> [usize; 4] {
        self.marks
    }
}

impl Region {
    /// The planar dual: one vertex per cell (row-major order), one unit
    /// edge per shared cell edge that is not cut, free vertices the cells
    /// touching free edges, embedded at cell centroids.
    pub fn dual_graph(&self) -> FreeMatchGraph {
        let index = self.index();
        let mut edges = Vec::new();
        for (&c, &i) in &index {
            for n in self.neighbors(c) {
                let j = index[&n];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        let free = self.free_cells().into_iter().map(|c| index[&c]);
        let positions = index.keys().map(|c| {
            let (x, y) = c.centroid();
            (x, y * 3f64.sqrt())
        });
        FreeMatchGraph::unit(self.len(), edges, free)
            .and_then(|g| g.with_positions(positions.collect()))
            .expect("lattice duals are simple plane graphs")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::{Dir, TriCell};

    fn square() -> FreeMatchGraph {
        FreeMatchGraph::unit(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [])
            .unwrap()
            .with_positions(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
            .unwrap()
    }

    #[test]
    fn four_cycle_outer_face() {
        let g = square();
        let walk = g.outer_face_order().unwrap();
        assert_eq!(walk.len(), 4);
        assert!(in_cyclic_order(walk, &[0, 1, 2, 3]));
        assert!(!in_cyclic_order(walk, &[0, 2, 1, 3]));
        assert_eq!(g.embedding().unwrap().faces().len(), 2);
    }

    #[test]
    fn single_edge_outer_face() {
        let g = FreeMatchGraph::unit(2, [(0, 1)], []).unwrap().with_positions(vec![(0.0, 0.0), (1.0, 0.0)]).unwrap();
        let mut walk = g.outer_face_order().unwrap().to_vec();
        walk.sort();
        assert_eq!(walk, vec![0, 1]);
    }

    #[test]
    fn missing_embedding_is_an_error() {
        let g = FreeMatchGraph::unit(2, [(0, 1)], []).unwrap();
        assert_eq!(g.outer_face_order(), Err(Error::NoEmbedding));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(FreeMatchGraph::unit(2, [(0, 0)], []).is_err());
        assert!(FreeMatchGraph::unit(2, [(0, 1), (1, 0)], []).is_err());
        assert!(FreeMatchGraph::new(2, [(0, 1, BigRational::zero())], []).is_err());
    }

    #[test]
    fn crossing_drawing_of_k5_is_rejected() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        let pos = (0..5)
            .map(|i| {
                let t = i as f64 * std::f64::consts::TAU / 5.0;
                (t.cos(), t.sin())
            })
            .collect();
        let g = FreeMatchGraph::unit(5, edges, []).unwrap();
        assert!(matches!(g.with_positions(pos), Err(Error::NonPlanar(_))));
    }

    #[test]
    fn free_vertex_must_be_on_outer_face() {
        // wheel: centre 4 is interior
        let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)];
        let pos = vec![(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0), (1.0, 1.0)];
        let g = FreeMatchGraph::unit(5, edges, [4]).unwrap();
        assert!(g.with_positions(pos.clone()).is_err());
        let g = FreeMatchGraph::unit(5, edges, [0]).unwrap();
        assert!(g.with_positions(pos).is_ok());
    }

    #[test]
    fn dual_of_two_cells() {
        let r = Region::new([TriCell::new(0, 0), TriCell::new(1, 0)], []).unwrap();
        let g = r.dual_graph();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().len(), 1);
        assert!(g.free_vertices().is_empty());
    }

    #[test]
    fn dual_of_free_single_cell() {
        let c = TriCell::new(0, 0);
        let r = Region::new([c], [c.edge(Dir::Horizontal)]).unwrap();
        let g = r.dual_graph();
        assert_eq!(g.free_vertices(), vec![0]);
        assert_eq!(g.outer_face_order().unwrap(), &[0]);
    }

    #[test]
    fn quad_validation() {
        let g = square();
        assert!(FaceQuad::new(g.clone(), [0, 1, 2, 3]).is_ok());
        assert!(FaceQuad::new(g.clone(), [0, 3, 2, 1]).is_ok());
        assert!(FaceQuad::new(g.clone(), [0, 2, 1, 3]).is_err());
        assert!(FaceQuad::new(g.clone(), [0, 0, 1, 2]).is_err());
        let g = g.with_free([1]).unwrap();
        assert!(FaceQuad::new(g, [0, 1, 2, 3]).is_err());
    }

    #[test]
    fn deletion_renumbers() {
        let g = square().with_free([2]).unwrap();
        let (h, map) = g.delete(&[1]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(map, vec![Some(0), None, Some(1), Some(2)]);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.free_vertices(), vec![1]);
    }
}
