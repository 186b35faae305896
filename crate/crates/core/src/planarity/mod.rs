//! Planarity, outerplanarity, and the apex-pair certificate search.
//!
//! `is_planar` runs a left-right planarity test with witness
//! extraction; witnesses are rotation systems that re-validate against
//! Euler's formula independently of the search. `kuratowski_oracle` is
//! a deliberately independent exhaustive search for K5 / K33
//! subdivisions, used to cross-check the main test at small sizes.

mod lr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::{MultiGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("kuratowski oracle refused: {0} vertices exceeds the size guard of {1}")]
    OracleSizeGuard(usize, usize),
}

/// Combinatorial embedding witness: a simple graph together with a
/// cyclic neighbor order per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    /// Number of vertices of the embedded graph.
    pub vertices: usize,
    /// Edge list of the embedded (simple) graph.
    pub edges: Vec<[usize; 2]>,
    /// Clockwise cyclic order of neighbors per vertex.
    pub rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Count faces by tracing dart orbits: the successor of dart
    /// (u, v) is (v, w) where w follows u in the rotation at v.
    pub fn face_count(&self) -> usize {
        let mut darts: Vec<(usize, usize)> = Vec::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                darts.push((u, v));
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut faces = 0;
        for &start in &darts {
            if seen.contains(&start) {
                continue;
            }
            faces += 1;
            let mut d = start;
            loop {
                seen.insert(d);
                let (u, v) = d;
                let rot = &self.rotation[v];
                let pos = rot
                    .iter()
                    .position(|&x| x == u)
                    .expect("dart endpoint in rotation");
                let w = rot[(pos + 1) % rot.len()];
                d = (v, w);
                if d == start {
                    break;
                }
            }
        }
        faces
    }

    /// Check internal consistency and Euler's formula
    /// V - E + F = 2 on every connected component.
    pub fn validate(&self) -> bool {
        if self.rotation.len() != self.vertices {
            return false;
        }
        // rotations must list exactly the neighbor sets
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertices];
        for e in &self.edges {
            if e[0] >= self.vertices || e[1] >= self.vertices || e[0] == e[1] {
                return false;
            }
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        for v in 0..self.vertices {
            let mut a = adj[v].clone();
            let mut r = self.rotation[v].clone();
            a.sort_unstable();
            r.sort_unstable();
            if a != r {
                return false;
            }
            a.dedup();
            if a.len() != adj[v].len() {
                return false; // parallel edges not representable
            }
        }
        // Euler per component, counting faces of the whole embedding:
        // every face is incident to a single component, and each
        // edgeless component contributes one implicit face
        let g = MultiGraph::from_edges(
            self.vertices,
            &self.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>(),
        );
        let comp = g.components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut v_cnt = vec![0usize; ncomp];
        let mut e_cnt = vec![0usize; ncomp];
        for v in 0..self.vertices {
            v_cnt[comp[v]] += 1;
        }
        for e in &self.edges {
            e_cnt[comp[e[0]]] += 1;
        }
        let mut f_cnt = vec![0usize; ncomp];
        // trace faces per component
        let mut seen = std::collections::HashSet::new();
        for u in 0..self.vertices {
            for &v in &self.rotation[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                f_cnt[comp[u]] += 1;
                let mut d = (u, v);
                loop {
                    seen.insert(d);
                    let (a, b) = d;
                    let rot = &self.rotation[b];
                    let pos = match rot.iter().position(|&x| x == a) {
                        Some(p) => p,
                        None => return false,
                    };
                    d = (b, rot[(pos + 1) % rot.len()]);
                    if d == (u, v) {
                        break;
                    }
                }
            }
        }
        for c in 0..ncomp {
            let f = if e_cnt[c] == 0 { 1 } else { f_cnt[c] };
            if v_cnt[c] + f != e_cnt[c] + 2 {
                return false;
            }
        }
        true
    }
}

/// Two vertices whose removal leaves a planar graph, plus the
/// embedding witness of the remainder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexPairCertificate {
    pub v: usize,
    pub w: usize,
    pub witness: RotationSystem,
}

impl ApexPairCertificate {
    /// Re-validate against the original graph, independently of how
    /// the certificate was found.
    pub fn revalidate(&self, g: &MultiGraph) -> bool {
        if self.v >= g.vertex_count() || self.w >= g.vertex_count() || self.v == self.w {
            return false;
        }
        let rest = g
            .delete_vertices(&[VertexId(self.v), VertexId(self.w)])
            .simplify();
        let expect: Vec<[usize; 2]> = sorted_edge_list(&rest);
        let mut got = self.witness.edges.clone();
        for e in &mut got {
            e.sort_unstable();
        }
        got.sort_unstable();
        if rest.vertex_count() != self.witness.vertices || expect != got {
            return false;
        }
        self.witness.validate()
    }
}

fn sorted_edge_list(g: &MultiGraph) -> Vec<[usize; 2]> {
    let mut edges: Vec<[usize; 2]> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (e.ends[0].0, e.ends[1].0);
            [a.min(b), a.max(b)]
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Planarity test; on success returns a validating rotation system of
/// the simplified graph (loops and parallel edges do not affect
/// planarity).
pub fn check_planarity(g: &MultiGraph) -> Option<RotationSystem> {
    let s = g.simplify();
    let edges: Vec<(usize, usize)> = s.edges().iter().map(|e| (e.ends[0].0, e.ends[1].0)).collect();
    let emb = lr::Lr::new(s.vertex_count(), &edges).run()?;
    Some(RotationSystem {
        vertices: s.vertex_count(),
        edges: edges.iter().map(|&(a, b)| [a, b]).collect(),
        rotation: emb.rotation,
    })
}

pub fn is_planar(g: &MultiGraph) -> bool {
    check_planarity(g).is_some()
}

/// A graph is outerplanar iff its suspension is planar.
pub fn is_outerplanar(g: &MultiGraph) -> bool {
    let s = g.simplify();
    is_planar(&s.suspension().expect("simplified graph is simple"))
}

/// Lexicographically first vertex pair whose removal leaves a planar
/// graph, together with the embedding witness.
pub fn apex_pair_search(g: &MultiGraph) -> Option<ApexPairCertificate> {
    let n = g.vertex_count();
    for v in 0..n {
        for w in (v + 1)..n {
            let rest = g.delete_vertices(&[VertexId(v), VertexId(w)]);
            if let Some(witness) = check_planarity(&rest) {
                return Some(ApexPairCertificate { v, w, witness });
            }
        }
    }
    None
}

const ORACLE_GUARD: usize = 9;

/// Independent planarity oracle: exhaustive branch search for a K5 or
/// K33 subdivision. Refuses graphs above the size guard.
pub fn kuratowski_oracle(g: &MultiGraph) -> Result<bool, PlanarityError> {
    let s = g.simplify();
    let n = s.vertex_count();
    if n > ORACLE_GUARD {
        return Err(PlanarityError::OracleSizeGuard(n, ORACLE_GUARD));
    }
    let mut adj = vec![0u16; n];
    for e in s.edges() {
        adj[e.ends[0].0] |= 1 << e.ends[1].0;
        adj[e.ends[1].0] |= 1 << e.ends[0].0;
    }
    Ok(!has_k5_subdivision(&adj) && !has_k33_subdivision(&adj))
}

fn degree(adj: &[u16], v: usize) -> u32 {
    adj[v].count_ones()
}

/// Route internally-disjoint paths for each required pair, branch
/// vertices excluded as interior points.
fn route_pairs(adj: &[u16], pairs: &[(usize, usize)], free: u16) -> bool {
    let (a, b) = match pairs.first() {
        None => return true,
        Some(&p) => p,
    };
    // paths from a to b with interior in `free`, shortest first
    fn dfs(adj: &[u16], cur: usize, b: usize, free: u16, pairs: &[(usize, usize)]) -> bool {
        if adj[cur] & (1 << b) != 0 && route_pairs(adj, &pairs[1..], free) {
            return true;
        }
        let mut cand = adj[cur] & free;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if dfs(adj, w, b, free & !(1 << w), pairs) {
                return true;
            }
        }
        false
    }
    dfs(adj, a, b, free, pairs)
}

fn has_k5_subdivision(adj: &[u16]) -> bool {
    let n = adj.len();
    let branch: Vec<usize> = (0..n).filter(|&v| degree(adj, v) >= 4).collect();
    if branch.len() < 5 {
        return false;
    }
    let mut idx = [0usize; 5];
    subsets(branch.len(), 5, &mut idx, &mut |pick: &[usize]| {
        let vs: Vec<usize> = pick.iter().map(|&i| branch[i]).collect();
        let mut pairs = Vec::with_capacity(10);
        for i in 0..5 {
            for j in (i + 1)..5 {
                pairs.push((vs[i], vs[j]));
            }
        }
        let mut free = (1u16 << n) - 1;
        for &v in &vs {
            free &= !(1 << v);
        }
        route_pairs(adj, &pairs, free)
    })
}

fn has_k33_subdivision(adj: &[u16]) -> bool {
    let n = adj.len();
    let branch: Vec<usize> = (0..n).filter(|&v| degree(adj, v) >= 3).collect();
    if branch.len() < 6 {
        return false;
    }
    let k = branch.len();
    let mut idx = [0usize; 6];
    subsets(k, 6, &mut idx, &mut |pick: &[usize]| {
        let vs: Vec<usize> = pick.iter().map(|&i| branch[i]).collect();
        // split the six into two sides; fixing vs[0] on side A kills
        // the side-swap symmetry
        let mut others = [0usize; 5];
        others.copy_from_slice(&vs[1..]);
        let mut pair_idx = [0usize; 2];
        subsets(5, 2, &mut pair_idx, &mut |co: &[usize]| {
            let side_a = [vs[0], others[co[0]], others[co[1]]];
            let side_b: Vec<usize> = (0..5)
                .filter(|i| !co.contains(i))
                .map(|i| others[i])
                .collect();
            let mut pairs = Vec::with_capacity(9);
            for &x in &side_a {
                for &y in &side_b {
                    pairs.push((x, y));
                }
            }
            let mut free = (1u16 << n) - 1;
            for &v in &vs {
                free &= !(1 << v);
            }
            route_pairs(adj, &pairs, free)
        })
    })
}

/// Visit all k-subsets of 0..n; stops early when the visitor returns
/// true.
fn subsets(n: usize, k: usize, idx: &mut [usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        depth: usize,
        idx: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == k {
            return visit(idx);
        }
        for v in start..n {
            idx[depth] = v;
            if rec(n, k, v + 1, depth + 1, idx, visit) {
                return true;
            }
        }
        false
    }
    rec(n, k, 0, 0, idx, visit)
}

#[cfg(test)]
mod tests;
