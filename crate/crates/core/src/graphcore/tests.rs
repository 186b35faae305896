use super::*;
use crate::testutil::{all_graphs, iso_oracle};

fn v(i: usize) -> VertexId {
    VertexId(i)
}

fn e(i: usize) -> EdgeId {
    EdgeId(i)
}

fn triangle() -> MultiGraph {
    MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
}

#[test]
fn delete_edge_examples() {
    let g = triangle().delete_edge(e(0)).unwrap();
    assert_eq!(g.vertex_count(), 3);
    assert_eq!(g.edge_count(), 2);

    let k7 = MultiGraph::complete(7);
    let g = k7.delete_edge(e(5)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (7, 20));

    let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]);
    assert_eq!(digon.delete_edge(e(1)).unwrap().edge_count(), 1);

    assert_eq!(
        triangle().delete_edge(e(9)),
        Err(GraphError::UnknownEdge(e(9)))
    );
}

#[test]
fn contract_edge_examples() {
    let g = triangle().contract_edge(e(0), true).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));

    let g = triangle().contract_edge(e(0), false).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
    assert_eq!(g.multiplicity(v(0), v(1)), 2);

    let k6 = MultiGraph::complete(6);
    let g = MultiGraph::complete(7).contract_edge(e(0), true).unwrap();
    assert!(are_isomorphic(&g, &k6).is_some());

    let loopy = MultiGraph::from_edges(1, &[(0, 0)]);
    assert_eq!(
        loopy.contract_edge(e(0), true),
        Err(GraphError::LoopContraction(e(0)))
    );
}

#[test]
fn simplify_examples() {
    let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 0)]).simplify();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));

    let k4 = MultiGraph::complete(4);
    assert_eq!(k4.simplify(), k4);

    let g = triangle().contract_edge(e(0), false).unwrap().simplify();
    assert_eq!(g.edge_count(), 1);
}

#[test]
fn clone_and_subdivide() {
    let single = MultiGraph::from_edges(2, &[(0, 1)]);
    let (g, id) = single.clone_edge(e(0)).unwrap();
    assert_eq!(g.edge_count(), 2);
    assert_eq!(g.edge(id).unwrap().ends, [v(0), v(1)]);

    let looped = MultiGraph::from_edges(1, &[(0, 0)]);
    let (g, _) = looped.clone_edge(e(0)).unwrap();
    assert_eq!(g.multiplicity(v(0), v(0)), 2);

    let g = single.subdivide_edge(e(0)).unwrap();
    assert!(are_isomorphic(&g, &MultiGraph::path(3)).is_some());

    let g = triangle().subdivide_edge(e(0)).unwrap();
    assert!(are_isomorphic(&g, &MultiGraph::cycle(4)).is_some());

    let g = looped.subdivide_edge(e(0)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
    assert!(g.is_simple() || g.multiplicity(v(0), v(1)) == 2);
}

#[test]
fn delta_to_y_examples() {
    let k4 = MultiGraph::complete(4);
    let g = k4.delta_to_y([v(0), v(1), v(2)]).unwrap();
    let k23 = MultiGraph::complete_multipartite(&[2, 3]);
    assert!(are_isomorphic(&g, &k23).is_some());

    let star = triangle().delta_to_y([v(0), v(1), v(2)]).unwrap();
    assert!(are_isomorphic(&star, &MultiGraph::complete_multipartite(&[1, 3])).is_some());

    let p = MultiGraph::path(3);
    assert!(p.delta_to_y([v(0), v(1), v(2)]).is_err());
}

#[test]
fn y_to_delta_examples() {
    let k13 = MultiGraph::complete_multipartite(&[1, 3]);
    // the center is the vertex of degree 3
    let center = k13.vertices().find(|&x| k13.degree(x) == 3).unwrap();
    let g = k13.y_to_delta(center, true).unwrap();
    assert!(are_isomorphic(&g, &triangle()).is_some());

    let k23 = MultiGraph::complete_multipartite(&[2, 3]);
    let deg3 = k23.vertices().find(|&x| k23.degree(x) == 3).unwrap();
    let g = k23.y_to_delta(deg3, true).unwrap();
    assert!(are_isomorphic(&g, &MultiGraph::complete(4)).is_some());

    let k4 = MultiGraph::complete(4);
    let g = k4.y_to_delta(v(0), true).unwrap();
    assert!(are_isomorphic(&g, &triangle()).is_some());

    let k5 = MultiGraph::complete(5);
    assert!(matches!(
        k5.y_to_delta(v(0), true),
        Err(GraphError::NotDegreeThree(_, 4))
    ));
}

#[test]
fn y_delta_roundtrip_property() {
    // y_to_delta(delta_to_y(G, t), w, simplify) is isomorphic to
    // simplify(G) for every triangle t
    for g in [
        MultiGraph::complete(5),
        MultiGraph::complete_multipartite(&[2, 2, 2]),
        MultiGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
    ] {
        for t in g.triangles() {
            let gy = g.delta_to_y(t).unwrap();
            let w = VertexId(gy.vertex_count() - 1);
            let back = gy.y_to_delta(w, true).unwrap();
            assert!(
                are_isomorphic(&back, &g.simplify()).is_some(),
                "roundtrip failed for triangle {t:?}"
            );
        }
    }
}

#[test]
fn graph_join_examples() {
    let k5 = MultiGraph::complete(5);
    let k2bar = MultiGraph::empty(2);
    let joined = k5.graph_join(&k2bar).unwrap();
    let k7_minus_e = MultiGraph::complete(7).delete_edge(e(0)).unwrap();
    assert!(are_isomorphic(&joined, &k7_minus_e).is_some());

    // join with an independent 3-set: K_{3,1,1} * complement(K3) = K_{3,3,1,1}
    let k311 = MultiGraph::complete_multipartite(&[3, 1, 1]);
    let joined = k311.graph_join(&MultiGraph::empty(3)).unwrap();
    let k3311 = MultiGraph::complete_multipartite(&[3, 3, 1, 1]);
    assert!(are_isomorphic(&joined, &k3311).is_some());

    // K_{3,1,1,1} * complement(K2) = K_{3,2,1,1,1}, which carries
    // K_{3,3,1,1} as a spanning subgraph
    let k31111 = MultiGraph::complete_multipartite(&[3, 1, 1, 1]);
    let joined = k31111.graph_join(&k2bar).unwrap();
    let k32111 = MultiGraph::complete_multipartite(&[3, 2, 1, 1, 1]);
    assert!(are_isomorphic(&joined, &k32111).is_some());
    let sub = joined
        .edges()
        .iter()
        .map(|e| (e.ends[0].0, e.ends[1].0))
        .collect::<Vec<_>>();
    let has_k3311_subgraph = (0..sub.len()).any(|i| {
        ((i + 1)..sub.len()).any(|j| {
            let kept: Vec<(usize, usize)> = sub
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, &e)| e)
                .collect();
            let candidate = MultiGraph::from_edges(joined.vertex_count(), &kept);
            are_isomorphic(&candidate, &k3311).is_some()
        })
    });
    assert!(has_k3311_subgraph);

    let g = triangle().graph_join(&MultiGraph::empty(0)).unwrap();
    assert!(are_isomorphic(&g, &triangle()).is_some());

    let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]);
    assert_eq!(digon.graph_join(&k2bar), Err(GraphError::NotSimple));
}

#[test]
fn clique_sum_examples() {
    let k6 = MultiGraph::complete(6);
    let s = k6
        .clique_sum(&k6, &[v(0), v(1), v(2)], &[v(3), v(4), v(5)])
        .unwrap();
    assert_eq!((s.vertex_count(), s.edge_count()), (9, 27));
    assert!(s.is_simple());

    // absorbing case: G  *_k  K_k = G
    let k3 = MultiGraph::complete(3);
    let s = k6
        .clique_sum(&k3, &[v(0), v(1), v(2)], &[v(0), v(1), v(2)])
        .unwrap();
    assert!(are_isomorphic(&s, &k6).is_some());

    // three K6's glued pairwise on K5's contain K5 * complement(K3)
    let k5m: Vec<VertexId> = (0..5).map(v).collect();
    let two = k6.clique_sum(&k6, &k5m, &k5m).unwrap();
    let three = two.clique_sum(&k6, &k5m, &k5m).unwrap();
    let k5_join_k3bar = MultiGraph::complete(5).graph_join(&MultiGraph::empty(3)).unwrap();
    assert!(are_isomorphic(&three, &k5_join_k3bar).is_some());

    let p3 = MultiGraph::path(3);
    assert_eq!(
        k6.clique_sum(&p3, &[v(0), v(1), v(2)], &[v(0), v(1), v(2)]),
        Err(GraphError::NotAClique(3))
    );
}

#[test]
fn neighborhood_examples() {
    let k7 = MultiGraph::complete(7);
    let nb = k7.neighborhood(v(0)).unwrap();
    assert!(are_isomorphic(&nb, &MultiGraph::complete(6)).is_some());

    let k3311 = MultiGraph::complete_multipartite(&[3, 3, 1, 1]);
    let dom = k3311
        .vertices()
        .find(|&x| k3311.degree(x) == 7)
        .expect("dominating vertex");
    let nb = k3311.neighborhood(dom).unwrap();
    let k331 = MultiGraph::complete_multipartite(&[3, 3, 1]);
    assert!(are_isomorphic(&nb, &k331).is_some());

    let isolated = MultiGraph::empty(2);
    let nb = isolated.neighborhood(v(0)).unwrap();
    assert_eq!(nb.vertex_count(), 0);
}

#[test]
fn canonical_form_invariance() {
    let g = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
    let cert = canonical_form(&g);
    let mut perm: Vec<usize> = vec![3, 1, 4, 0, 5, 2];
    assert_eq!(canonical_form(&g.relabel(&perm)), cert);
    perm.reverse();
    assert_eq!(canonical_form(&g.relabel(&perm)), cert);

    let k33 = MultiGraph::complete_multipartite(&[3, 3]);
    let plus = MultiGraph::from_edges(
        6,
        &k33.edges()
            .iter()
            .map(|e| (e.ends[0].0, e.ends[1].0))
            .chain(std::iter::once((0, 1)))
            .collect::<Vec<_>>(),
    );
    assert_ne!(canonical_form(&k33), canonical_form(&plus));
}

#[test]
fn canonical_form_matches_oracle_on_multigraphs() {
    // random-ish small multigraphs with loops and parallels
    let samples = [
        MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]),
        MultiGraph::from_edges(3, &[(1, 2), (1, 2), (0, 2)]),
        MultiGraph::from_edges(3, &[(0, 0), (0, 1), (1, 2)]),
        MultiGraph::from_edges(3, &[(2, 2), (1, 2), (0, 1)]),
        MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
        MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]),
    ];
    for a in &samples {
        for b in &samples {
            assert_eq!(
                canonical_form(a) == canonical_form(b),
                iso_oracle(a, b),
                "cert/oracle mismatch"
            );
        }
    }
}

#[test]
fn five_vertex_isomorphism_classes() {
    // cert-equality classes over all labeled 5-vertex simple graphs
    // must equal the 34 isomorphism classes
    let mut certs = std::collections::HashSet::new();
    for g in all_graphs(5) {
        certs.insert(canonical_form(&g));
    }
    assert_eq!(certs.len(), 34);
}

#[test]
fn are_isomorphic_examples() {
    let c6 = MultiGraph::cycle(6);
    let two_triangles =
        MultiGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
    assert!(are_isomorphic(&c6, &two_triangles).is_none());

    // Petersen drawn two ways
    let p1 = MultiGraph::petersen();
    // Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges join
    // disjoint pairs
    let subsets: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in subsets.iter().enumerate() {
        for (j, &(c, d)) in subsets.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    let p2 = MultiGraph::from_edges(10, &edges);
    let witness = are_isomorphic(&p1, &p2).expect("Petersen isomorphism");
    let mapped = p1.relabel(&witness);
    for a in 0..10 {
        for b in a..10 {
            assert_eq!(mapped.multiplicity(v(a), v(b)), p2.multiplicity(v(a), v(b)));
        }
    }

    let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    let w = are_isomorphic(&g, &g).unwrap();
    let id: Vec<usize> = (0..4).collect();
    assert_eq!(w, id);
}

#[test]
fn automorphism_group_sizes() {
    assert_eq!(automorphisms(&MultiGraph::complete(4)).len(), 24);
    assert_eq!(automorphisms(&MultiGraph::cycle(6)).len(), 12);
    assert_eq!(automorphisms(&MultiGraph::petersen()).len(), 120);
    assert_eq!(automorphisms(&MultiGraph::path(3)).len(), 2);
}

#[test]
fn edge_orbit_examples() {
    for n in [4, 5, 6, 7] {
        assert_eq!(edge_orbits(&MultiGraph::complete(n)).orbit_count(), 1);
    }
    let p4 = MultiGraph::path(4);
    assert_eq!(edge_orbits(&p4).orbit_count(), 2);

    let orbits = edge_orbits(&MultiGraph::petersen());
    assert_eq!(orbits.orbit_count(), 1);

    // blocks partition the edge set
    let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]);
    let orbits = edge_orbits(&g);
    let total: usize = orbits.blocks.iter().map(|b| b.len()).sum();
    assert_eq!(total, g.edge_count());
}

#[test]
fn ops_commute_with_relabeling() {
    let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
    let perm = vec![4, 2, 0, 3, 1];
    let h = g.relabel(&perm);
    // compare iso classes of op(G) and op(relabel(G)) over all edges
    for i in 0..g.edge_count() {
        let a = g.delete_edge(e(i)).unwrap();
        let rec = g.edge(e(i)).unwrap();
        let hi = h
            .edges()
            .iter()
            .position(|r| {
                let (x, y) = (perm[rec.ends[0].0], perm[rec.ends[1].0]);
                (r.ends[0].0 == x && r.ends[1].0 == y) || (r.ends[0].0 == y && r.ends[1].0 == x)
            })
            .unwrap();
        let b = h.delete_edge(e(hi)).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));

        let a = g.contract_edge(e(i), true).unwrap();
        let b = h.contract_edge(e(hi), true).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }
}

#[test]
fn graph6_roundtrip_and_known_values() {
    // K4 in graph6 is "C~"
    assert_eq!(to_graph6(&MultiGraph::complete(4)).unwrap(), "C~");
    for g in [
        MultiGraph::complete(5),
        MultiGraph::cycle(5),
        MultiGraph::petersen(),
        MultiGraph::heawood(),
        MultiGraph::empty(1),
        MultiGraph::empty(0),
    ] {
        let s = to_graph6(&g).unwrap();
        let back = from_graph6(&s).unwrap();
        // same graph (edge order may differ) and byte-stable re-encode
        assert_eq!(back.vertex_count(), g.vertex_count());
        for u in back.vertices() {
            for w in back.vertices() {
                assert_eq!(back.multiplicity(u, w), g.multiplicity(u, w));
            }
        }
        assert_eq!(to_graph6(&back).unwrap(), s);
    }
    let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]);
    assert_eq!(to_graph6(&digon), Err(Graph6Error::NotSimple));

    assert!(from_graph6(">>graph6<<C~").is_ok());
}

#[test]
fn json_roundtrip() {
    let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (2, 2)]);
    let s = to_json(&g);
    let back = from_json(&s).unwrap();
    assert_eq!(back, g);
    assert!(from_json("{\"vertices\": 2, \"edges\": [[0, 5]]}").is_err());
}

#[test]
fn heawood_graph_shape() {
    let h = MultiGraph::heawood();
    assert_eq!((h.vertex_count(), h.edge_count()), (14, 21));
    assert!(h.vertices().all(|x| h.degree(x) == 3));
    // bipartite: odd/even split
    for rec in h.edges() {
        assert_ne!(rec.ends[0].0 % 2, rec.ends[1].0 % 2);
    }
}
