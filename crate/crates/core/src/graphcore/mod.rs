//! Multigraph data model and elementary graph surgeries.
//!
//! All values are immutable once constructed; every operation is a pure
//! function returning a fresh graph. Vertex and edge ids are positional
//! and are compacted after deletions, so identity is not persistent
//! across operations.

mod canon;
mod io;

pub use canon::{
    are_isomorphic, automorphisms, canonical_form, canonical_labeling, canonical_representative,
    edge_orbits,
};
pub use canon::{CanonicalCert, EdgeOrbitPartition};
pub use io::{from_graph6, from_json, to_graph6, to_json, Graph6Error};

use std::fmt;

use thiserror::Error;

/// Index of a vertex within a graph. Stable only as long as no vertex
/// is deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge within a graph's edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("cannot contract loop edge {0}")]
    LoopContraction(EdgeId),
    #[error("vertex {0} does not have degree 3 (degree {1})")]
    NotDegreeThree(VertexId, usize),
    #[error("vertex {0} carries a loop")]
    LoopAtVertex(VertexId),
    #[error("vertices {0}, {1}, {2} do not span a triangle")]
    NotATriangle(VertexId, VertexId, VertexId),
    #[error("operation requires a simple graph")]
    NotSimple,
    #[error("marked vertices do not form a clique of size {0}")]
    NotAClique(usize),
}

/// An edge record: an unordered pair of endpoints. Equal endpoints make
/// a loop. The edge id is its position in the graph's edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeRec {
    pub ends: [VertexId; 2],
}

impl EdgeRec {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        EdgeRec { ends: [u, v] }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    /// The endpoint other than `v`; for loops returns `v` itself.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.ends[0] == v || self.ends[1] == v
    }
}

/// A finite multigraph. Loops and parallel edges are permitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<EdgeRec>,
}

impl MultiGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        MultiGraph {
            vertex_count: n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = MultiGraph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            g.edges.push(EdgeRec::new(VertexId(u), VertexId(v)));
        }
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = MultiGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.edges.push(EdgeRec::new(VertexId(u), VertexId(v)));
            }
        }
        g
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        let mut g = MultiGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    g.edges.push(EdgeRec::new(VertexId(u), VertexId(v)));
                }
            }
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &edges)
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        MultiGraph::from_edges(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
    /// spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        MultiGraph::from_edges(10, &edges)
    }

    /// The Heawood graph: 14-cycle plus chords i -- i+5 for even i.
    pub fn heawood() -> Self {
        let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        for i in (0..14).step_by(2) {
            edges.push((i, (i + 5) % 14));
        }
        MultiGraph::from_edges(14, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[EdgeRec] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<EdgeRec, GraphError> {
        self.edges.get(e.0).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v.0 < self.vertex_count
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Number of edges joining `u` and `v` (for `u == v`: loop count).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|e| {
                (e.ends[0] == u && e.ends[1] == v) || (e.ends[0] == v && e.ends[1] == u)
            })
            .count()
    }

    pub fn has_edge_between(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| {
                (e.ends[0] == v) as usize + (e.ends[1] == v) as usize
            })
            .sum()
    }

    /// Distinct neighbors of `v`, excluding `v` itself, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .filter(|e| e.touches(v) && !e.is_loop())
            .map(|e| e.other(v))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Edge ids incident with `v` (loops included once), ascending.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.touches(v))
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.is_loop() {
                return false;
            }
            let key = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Component index per vertex, indices are 0-based in discovery order.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.ends[0].0].push(e.ends[1].0);
            adj[e.ends[1].0].push(e.ends[0].0);
        }
        let mut next = 0;
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = next;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Delete an edge; vertices unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<MultiGraph, GraphError> {
        self.edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e.0);
        Ok(g)
    }

    /// Contract a non-loop edge: identify the endpoints (into the lower
    /// id), remove the edge and compact vertex ids. With `simplify`,
    /// loops created by parallel edges are dropped and parallel classes
    /// merged.
    pub fn contract_edge(&self, e: EdgeId, simplify: bool) -> Result<MultiGraph, GraphError> {
        let rec = self.edge(e)?;
        if rec.is_loop() {
            return Err(GraphError::LoopContraction(e));
        }
        let keep = rec.ends[0].min(rec.ends[1]);
        let gone = rec.ends[0].max(rec.ends[1]);
        let map = |v: VertexId| -> VertexId {
            if v == gone {
                keep
            } else if v > gone {
                VertexId(v.0 - 1)
            } else {
                v
            }
        };
        let mut g = MultiGraph::empty(self.vertex_count - 1);
        for (i, rec2) in self.edges.iter().enumerate() {
            if i == e.0 {
                continue;
            }
            g.edges.push(EdgeRec::new(map(rec2.ends[0]), map(rec2.ends[1])));
        }
        Ok(if simplify { g.simplify() } else { g })
    }

    /// Remove all loops and merge each parallel class to a single edge.
    /// The vertex set is unchanged.
    pub fn simplify(&self) -> MultiGraph {
        let mut g = MultiGraph::empty(self.vertex_count);
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.is_loop() {
                continue;
            }
            let key = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
            if seen.insert(key) {
                g.edges.push(*e);
            }
        }
        g
    }

    /// Add a new edge parallel to `e`. Returns the new graph and the
    /// fresh edge id.
    pub fn clone_edge(&self, e: EdgeId) -> Result<(MultiGraph, EdgeId), GraphError> {
        let rec = self.edge(e)?;
        let mut g = self.clone();
        g.edges.push(rec);
        let id = EdgeId(g.edges.len() - 1);
        Ok((g, id))
    }

    /// Replace `e` by a fresh degree-2 vertex and two edges.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<MultiGraph, GraphError> {
        let rec = self.edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e.0);
        let w = VertexId(g.vertex_count);
        g.vertex_count += 1;
        g.edges.push(EdgeRec::new(rec.ends[0], w));
        g.edges.push(EdgeRec::new(w, rec.ends[1]));
        Ok(g)
    }

    /// Delta-wye transformation: remove one edge per pair of the
    /// triangle (the lowest edge id for each pair) and join a new
    /// vertex to all three corners.
    pub fn delta_to_y(&self, t: [VertexId; 3]) -> Result<MultiGraph, GraphError> {
        for &v in &t {
            self.check_vertex(v)?;
        }
        let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        let mut removed = Vec::new();
        for &(u, v) in &pairs {
            let e = self
                .edges
                .iter()
                .position(|r| {
                    !r.is_loop() && ((r.ends[0] == u && r.ends[1] == v) || (r.ends[0] == v && r.ends[1] == u))
                })
                .ok_or(GraphError::NotATriangle(t[0], t[1], t[2]))?;
            removed.push(e);
        }
        let mut g = MultiGraph::empty(self.vertex_count + 1);
        for (i, rec) in self.edges.iter().enumerate() {
            if !removed.contains(&i) {
                g.edges.push(*rec);
            }
        }
        let w = VertexId(self.vertex_count);
        for &v in &t {
            g.edges.push(EdgeRec::new(w, v));
        }
        Ok(g)
    }

    /// Wye-delta transformation: remove a loopless degree-3 vertex and
    /// pairwise join its neighbors. With `simplify`, parallel classes
    /// created this way are merged.
    pub fn y_to_delta(&self, v: VertexId, simplify: bool) -> Result<MultiGraph, GraphError> {
        self.check_vertex(v)?;
        if self.edges.iter().any(|e| e.is_loop() && e.touches(v)) {
            return Err(GraphError::LoopAtVertex(v));
        }
        let deg = self.degree(v);
        if deg != 3 {
            return Err(GraphError::NotDegreeThree(v, deg));
        }
        let nbrs: Vec<VertexId> = self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.other(v))
            .collect();
        let map = |u: VertexId| -> VertexId {
            if u > v {
                VertexId(u.0 - 1)
            } else {
                u
            }
        };
        let mut g = MultiGraph::empty(self.vertex_count - 1);
        for rec in &self.edges {
            if rec.touches(v) {
                continue;
            }
            g.edges.push(EdgeRec::new(map(rec.ends[0]), map(rec.ends[1])));
        }
        g.edges.push(EdgeRec::new(map(nbrs[0]), map(nbrs[1])));
        g.edges.push(EdgeRec::new(map(nbrs[0]), map(nbrs[2])));
        g.edges.push(EdgeRec::new(map(nbrs[1]), map(nbrs[2])));
        Ok(if simplify { g.simplify() } else { g })
    }

    /// Graph join: disjoint union plus all edges between the two sides.
    /// Both inputs must be simple.
    pub fn graph_join(&self, other: &MultiGraph) -> Result<MultiGraph, GraphError> {
        if !self.is_simple() || !other.is_simple() {
            return Err(GraphError::NotSimple);
        }
        let off = self.vertex_count;
        let mut g = MultiGraph::empty(off + other.vertex_count);
        g.edges.extend_from_slice(&self.edges);
        for rec in &other.edges {
            g.edges.push(EdgeRec::new(
                VertexId(rec.ends[0].0 + off),
                VertexId(rec.ends[1].0 + off),
            ));
        }
        for u in 0..off {
            for v in 0..other.vertex_count {
                g.edges.push(EdgeRec::new(VertexId(u), VertexId(v + off)));
            }
        }
        Ok(g)
    }

    /// Suspension: join with a single new dominating vertex.
    pub fn suspension(&self) -> Result<MultiGraph, GraphError> {
        self.graph_join(&MultiGraph::empty(1))
    }

    /// Clique sum: glue `other` onto `self` by identifying the clique
    /// `m2` (in `other`) with the clique `m1` (in `self`), without
    /// duplicating the shared clique edges.
    pub fn clique_sum(
        &self,
        other: &MultiGraph,
        m1: &[VertexId],
        m2: &[VertexId],
    ) -> Result<MultiGraph, GraphError> {
        if m1.len() != m2.len() {
            return Err(GraphError::NotAClique(m1.len()));
        }
        let k = m1.len();
        for (g, m) in [(self, m1), (other, m2)] {
            for &v in m {
                g.check_vertex(v)?;
            }
            let mut sorted = m.to_vec();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != k {
                return Err(GraphError::NotAClique(k));
            }
            for i in 0..k {
                for j in (i + 1)..k {
                    if !g.has_edge_between(m[i], m[j]) {
                        return Err(GraphError::NotAClique(k));
                    }
                }
            }
        }
        // map other's vertices: clique members onto m1, the rest appended
        let mut map = vec![usize::MAX; other.vertex_count];
        for (a, b) in m1.iter().zip(m2.iter()) {
            map[b.0] = a.0;
        }
        let mut next = self.vertex_count;
        for v in 0..other.vertex_count {
            if map[v] == usize::MAX {
                map[v] = next;
                next += 1;
            }
        }
        let mut g = MultiGraph::empty(next);
        g.edges.extend_from_slice(&self.edges);
        for rec in &other.edges {
            let u = VertexId(map[rec.ends[0].0]);
            let v = VertexId(map[rec.ends[1].0]);
            // shared clique edges are already present
            if g.has_edge_between(u, v) && m2.contains(&rec.ends[0]) && m2.contains(&rec.ends[1]) {
                continue;
            }
            g.edges.push(EdgeRec::new(u, v));
        }
        Ok(g)
    }

    /// Subgraph induced on the neighbors of `x` (`x` excluded).
    pub fn neighborhood(&self, x: VertexId) -> Result<MultiGraph, GraphError> {
        self.check_vertex(x)?;
        Ok(self.induced_subgraph(&self.neighbors(x)))
    }

    /// Subgraph induced on `keep` (order defines the new vertex ids).
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> MultiGraph {
        let mut map = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            map[v.0] = i;
        }
        let mut g = MultiGraph::empty(keep.len());
        for rec in &self.edges {
            let u = map[rec.ends[0].0];
            let v = map[rec.ends[1].0];
            if u != usize::MAX && v != usize::MAX {
                g.edges.push(EdgeRec::new(VertexId(u), VertexId(v)));
            }
        }
        g
    }

    /// Delete the listed vertices (and incident edges), compacting ids.
    pub fn delete_vertices(&self, del: &[VertexId]) -> MultiGraph {
        let keep: Vec<VertexId> = self.vertices().filter(|v| !del.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// bijection on `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        debug_assert_eq!(perm.len(), self.vertex_count);
        let mut g = MultiGraph::empty(self.vertex_count);
        for rec in &self.edges {
            g.edges.push(EdgeRec::new(
                VertexId(perm[rec.ends[0].0]),
                VertexId(perm[rec.ends[1].0]),
            ));
        }
        g
    }

    /// All triangles (as ascending vertex triples) of the underlying
    /// simple graph.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if !self.has_edge_between(VertexId(u), VertexId(v)) {
                    continue;
                }
                for w in (v + 1)..self.vertex_count {
                    if self.has_edge_between(VertexId(u), VertexId(w))
                        && self.has_edge_between(VertexId(v), VertexId(w))
                    {
                        out.push([VertexId(u), VertexId(v), VertexId(w)]);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests;
