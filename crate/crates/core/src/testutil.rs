//! Shared helpers for unit tests: brute-force oracles and enumerators
//! kept independent of the implementation paths they check.

use crate::graphcore::{MultiGraph, VertexId};

/// Brute-force isomorphism oracle: search all vertex permutations for
/// one preserving edge multiplicities.
pub(crate) fn iso_oracle(g: &MultiGraph, h: &MultiGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mapped = g.relabel(&perm);
        let ok = (0..n).all(|a| {
            (a..n).all(|b| {
                mapped.multiplicity(VertexId(a), VertexId(b))
                    == h.multiplicity(VertexId(a), VertexId(b))
            })
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All labeled simple graphs on `n` vertices.
pub(crate) fn all_graphs(n: usize) -> impl Iterator<Item = MultiGraph> {
    let m = n * (n.saturating_sub(1)) / 2;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u64..(1 << m)).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        MultiGraph::from_edges(n, &edges)
    })
}
