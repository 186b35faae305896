use super::*;
use crate::testutil::all_graphs;
use crate::graphcore::MultiGraph;

#[test]
fn planar_basics() {
    assert!(is_planar(&MultiGraph::complete(4)));
    assert!(!is_planar(&MultiGraph::complete(5)));
    assert!(!is_planar(&MultiGraph::complete_multipartite(&[3, 3])));
    assert!(!is_planar(&MultiGraph::petersen()));
    assert!(is_planar(&MultiGraph::cycle(6)));
    assert!(is_planar(&MultiGraph::path(7)));
    assert!(is_planar(&MultiGraph::empty(5)));
    assert!(is_planar(&MultiGraph::empty(0)));
}

#[test]
fn planar_handles_multigraphs() {
    let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 2), (0, 2)]);
    assert!(is_planar(&g));
    let w = check_planarity(&g).unwrap();
    assert!(w.validate());
    assert_eq!(w.edges.len(), 3);
}

#[test]
fn witnesses_validate() {
    for g in [
        MultiGraph::complete(4),
        MultiGraph::cycle(6),
        MultiGraph::path(5),
        MultiGraph::complete_multipartite(&[2, 3]),
        MultiGraph::complete(5).delete_edge(crate::EdgeId(0)).unwrap(),
        // two components
        MultiGraph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3)]),
    ] {
        let w = check_planarity(&g).expect("planar");
        assert!(w.validate(), "witness failed Euler validation");
    }
}

#[test]
fn face_counts() {
    let w = check_planarity(&MultiGraph::complete(4)).unwrap();
    assert_eq!(w.face_count(), 4);
    let w = check_planarity(&MultiGraph::cycle(6)).unwrap();
    assert_eq!(w.face_count(), 2);
    let w = check_planarity(&MultiGraph::path(4)).unwrap();
    assert_eq!(w.face_count(), 1);
}

#[test]
fn outerplanarity() {
    assert!(is_outerplanar(&MultiGraph::cycle(6)));
    assert!(!is_outerplanar(&MultiGraph::complete(4)));
    assert!(!is_outerplanar(&MultiGraph::complete_multipartite(&[2, 3])));
    assert!(is_outerplanar(&MultiGraph::path(5)));
}

#[test]
fn apex_pairs() {
    assert!(apex_pair_search(&MultiGraph::complete(7)).is_none());

    // K7 - e: the lex-first planar pair must avoid both endpoints of
    // the missing edge (the remainder K5 - e is planar)
    let k7e = MultiGraph::complete(7).delete_edge(crate::EdgeId(0)).unwrap();
    let cert = apex_pair_search(&k7e).expect("apex pair");
    assert!(cert.revalidate(&k7e));
    let rest = k7e.delete_vertices(&[crate::VertexId(cert.v), crate::VertexId(cert.w)]);
    assert!(is_planar(&rest));

    assert!(apex_pair_search(&MultiGraph::complete(6)).is_some());
}

#[test]
fn apex_answer_invariant_under_relabeling() {
    let g = MultiGraph::complete(7).delete_edge(crate::EdgeId(3)).unwrap();
    let perm = vec![6, 0, 5, 1, 4, 2, 3];
    let h = g.relabel(&perm);
    assert_eq!(apex_pair_search(&g).is_some(), apex_pair_search(&h).is_some());
}

#[test]
fn oracle_basics() {
    assert_eq!(kuratowski_oracle(&MultiGraph::complete(5)), Ok(false));
    assert_eq!(
        kuratowski_oracle(&MultiGraph::complete_multipartite(&[3, 3])),
        Ok(false)
    );
    assert_eq!(kuratowski_oracle(&MultiGraph::path(8)), Ok(true));
    assert_eq!(kuratowski_oracle(&MultiGraph::complete(4)), Ok(true));
    assert!(matches!(
        kuratowski_oracle(&MultiGraph::complete(10)),
        Err(PlanarityError::OracleSizeGuard(10, _))
    ));
}

#[test]
fn oracle_agrees_with_lr_on_small_graphs() {
    // exhaustive comparison on all labeled graphs with up to 6 vertices
    for n in 0..=6 {
        for g in all_graphs(n) {
            assert_eq!(
                is_planar(&g),
                kuratowski_oracle(&g).unwrap(),
                "disagreement on {:?}",
                g
            );
        }
    }
}

#[test]
fn planarity_minor_monotone_spotcheck() {
    // deleting or contracting an edge of a planar graph stays planar
    let g = MultiGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0)],
    );
    assert!(is_planar(&g));
    for e in g.edge_ids() {
        assert!(is_planar(&g.delete_edge(e).unwrap()));
        assert!(is_planar(&g.contract_edge(e, true).unwrap()));
    }
}
