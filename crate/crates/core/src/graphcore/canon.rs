//! Canonical forms, isomorphism and automorphism machinery.
//!
//! Canonicalization runs iterated degree-multiplicity refinement with
//! backtracking over color classes (individualization-refinement). The
//! certificate encodes the full adjacency-with-multiplicity matrix of
//! the canonical labeling, so multigraphs are handled uniformly. Graphs
//! in this toolkit stay at desk scale (at most a few dozen vertices).

use std::collections::HashMap;
use std::fmt;

use super::{EdgeId, MultiGraph, VertexId};

/// Isomorphism-invariant certificate: two graphs have equal certs iff
/// they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Partition of the edge ids under the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrbitPartition {
    pub blocks: Vec<Vec<EdgeId>>,
}

impl EdgeOrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.blocks.len()
    }
}

fn multiplicity_matrix(g: &MultiGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for e in g.edges() {
        let (u, v) = (e.ends[0].0, e.ends[1].0);
        if u == v {
            m[u][u] += 1;
        } else {
            m[u][v] += 1;
            m[v][u] += 1;
        }
    }
    m
}

/// Refine a coloring to a stable partition: the signature of a vertex
/// collects, per neighbor color, the multiset of edge multiplicities.
fn refine(mult: &[Vec<u32>], colors: &mut Vec<u32>) {
    let n = colors.len();
    loop {
        let mut sigs: Vec<(u32, u32, Vec<(u32, u32)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs: Vec<(u32, u32)> = (0..n)
                .filter(|&w| w != v && mult[v][w] > 0)
                .map(|w| (colors[w], mult[v][w]))
                .collect();
            nbrs.sort_unstable();
            sigs.push((colors[v], mult[v][v], nbrs));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                next += 1;
            }
            new_colors[order[i]] = next;
        }
        if new_colors == *colors {
            return;
        }
        *colors = new_colors;
    }
}

fn is_discrete(colors: &[u32]) -> bool {
    let n = colors.len();
    let mut seen = vec![false; n];
    for &c in colors {
        if seen[c as usize] {
            return false;
        }
        seen[c as usize] = true;
    }
    true
}

/// Encode the graph under a discrete coloring: `colors[v]` is the
/// canonical position of `v`. Upper triangle including the diagonal
/// (loop counts), row-major.
fn encode(mult: &[Vec<u32>], colors: &[u32]) -> Vec<u8> {
    let n = colors.len();
    let mut inv = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        inv[c as usize] = v;
    }
    let mut out = Vec::with_capacity(2 + n * (n + 1) / 2);
    out.push((n >> 8) as u8);
    out.push((n & 0xff) as u8);
    for i in 0..n {
        for j in i..n {
            let m = mult[inv[i]][inv[j]];
            debug_assert!(m <= u8::MAX as u32, "edge multiplicity too large");
            out.push(m.min(255) as u8);
        }
    }
    out
}

struct CanonSearch<'a> {
    mult: &'a [Vec<u32>],
    best: Option<Vec<u8>>,
    /// All discrete colorings achieving the best encoding.
    best_labelings: Vec<Vec<u32>>,
    collect_all: bool,
}

impl<'a> CanonSearch<'a> {
    fn run(mult: &'a [Vec<u32>], collect_all: bool) -> (Vec<u8>, Vec<Vec<u32>>) {
        let n = mult.len();
        let mut s = CanonSearch {
            mult,
            best: None,
            best_labelings: Vec::new(),
            collect_all,
        };
        let mut colors = vec![0u32; n];
        refine(mult, &mut colors);
        s.recurse(colors);
        (s.best.unwrap(), s.best_labelings)
    }

    fn recurse(&mut self, colors: Vec<u32>) {
        if is_discrete(&colors) {
            let enc = encode(self.mult, &colors);
            match &self.best {
                None => {
                    self.best = Some(enc);
                    self.best_labelings = vec![colors];
                }
                Some(b) => match enc.cmp(b) {
                    std::cmp::Ordering::Less => {
                        self.best = Some(enc);
                        self.best_labelings = vec![colors];
                    }
                    std::cmp::Ordering::Equal => {
                        if self.collect_all {
                            self.best_labelings.push(colors);
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                },
            }
            return;
        }
        // branch on the first non-singleton color class
        let n = colors.len();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = (0..n as u32).find(|&c| counts[c as usize] > 1).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        for &v in &members {
            let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            child[v] = 2 * target;
            refine(self.mult, &mut child);
            self.recurse(child);
        }
    }
}

/// Permutation-invariant certificate; equality holds iff the graphs
/// are isomorphic.
pub fn canonical_form(g: &MultiGraph) -> CanonicalCert {
    CanonicalCert(CanonSearch::run(&multiplicity_matrix(g), false).0)
}

/// Certificate plus one canonical labeling: `perm[v]` is the canonical
/// position of vertex `v`.
pub fn canonical_labeling(g: &MultiGraph) -> (CanonicalCert, Vec<usize>) {
    let (enc, labelings) = CanonSearch::run(&multiplicity_matrix(g), false);
    let perm = labelings[0].iter().map(|&c| c as usize).collect();
    (CanonicalCert(enc), perm)
}

/// Canonically relabeled copy of `g` with the edge list sorted, so
/// isomorphic graphs produce identical representatives.
pub fn canonical_representative(g: &MultiGraph) -> MultiGraph {
    let (_, perm) = canonical_labeling(g);
    let mut h = g.relabel(&perm);
    let mut edges: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (e.ends[0].0, e.ends[1].0);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    h = MultiGraph::from_edges(g.vertex_count(), &edges);
    h
}

/// The full automorphism group of `g`, as permutations (`perm[v]` is
/// the image of `v`). Exponential on highly symmetric graphs; intended
/// for desk-scale inputs.
pub fn automorphisms(g: &MultiGraph) -> Vec<Vec<usize>> {
    let mult = multiplicity_matrix(g);
    let n = g.vertex_count();
    let (_, labelings) = CanonSearch::run(&mult, true);
    let base = &labelings[0];
    let mut inv_base = vec![0usize; n];
    for (v, &c) in base.iter().enumerate() {
        inv_base[c as usize] = v;
    }
    let mut out = Vec::with_capacity(labelings.len());
    for lab in &labelings {
        // sigma = inv_base \circ lab maps v to the vertex in the base
        // labeling occupying the same canonical position
        let sigma: Vec<usize> = (0..n).map(|v| inv_base[lab[v] as usize]).collect();
        out.push(sigma);
    }
    out
}

/// True iff an edge-multiplicity-preserving bijection exists; on
/// success also returns a witness permutation mapping `g` onto `h`.
pub fn are_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, pg) = canonical_labeling(g);
    let (ch, ph) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let n = g.vertex_count();
    let mut inv_ph = vec![0usize; n];
    for (v, &c) in ph.iter().enumerate() {
        inv_ph[c] = v;
    }
    Some((0..n).map(|v| inv_ph[pg[v]]).collect())
}

/// Orbits of edge ids under the automorphism group. Parallel edges
/// always share an orbit.
pub fn edge_orbits(g: &MultiGraph) -> EdgeOrbitPartition {
    let m = g.edge_count();
    let mut uf = UnionFind::new(m);

    // parallel edges are interchangeable
    let mut class_rep: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        let key = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
        match class_rep.get(&key) {
            Some(&r) => uf.union(r, i),
            None => {
                class_rep.insert(key, i);
            }
        }
    }

    for sigma in automorphisms(g) {
        for (i, e) in g.edges().iter().enumerate() {
            let u = VertexId(sigma[e.ends[0].0]);
            let v = VertexId(sigma[e.ends[1].0]);
            let key = (u.min(v), u.max(v));
            let r = class_rep[&key];
            uf.union(i, r);
        }
    }

    let mut buckets: HashMap<usize, Vec<EdgeId>> = HashMap::new();
    for i in 0..m {
        buckets.entry(uf.find(i)).or_default().push(EdgeId(i));
    }
    let mut blocks: Vec<Vec<EdgeId>> = buckets.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    EdgeOrbitPartition { blocks }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
