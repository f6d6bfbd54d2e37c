use super::*;

fn g(n: usize, pairs: &[(usize, usize)]) -> Graph {
    graph_from_edges(n, pairs.iter().copied()).unwrap()
}

fn fig1() -> Graph {
    g(10, &[(1, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (3, 8), (5, 9), (5, 10)])
}

fn edges(list: &[(usize, usize)]) -> Vec<Edge> {
    list.iter().map(|&(a, b)| Edge::new(a, b).unwrap()).collect()
}

#[test]
fn construction_and_errors() {
    let c41 = g(8, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 6), (3, 7), (4, 8)]);
    assert_eq!(c41.edge_count(), 8);
    assert_eq!(c41, make_cnk(4, 1).unwrap());
    assert_eq!(g(3, &[]).edge_count(), 0);
    assert!(graph_from_edges(3, [(1, 1)]).is_err());
    assert!(graph_from_edges(3, [(1, 4)]).is_err());
    assert_eq!(g(3, &[(1, 2), (2, 1)]).edge_count(), 1);
}

#[test]
fn analysis_reports() {
    let p4 = graph_analyze(&path(4));
    assert!(p4.is_tree && !p4.is_unicyclic);
    assert_eq!(p4.pendant_vertices, vec![1, 4]);
    assert_eq!(p4.bridges.len(), 3);
    let c4 = graph_analyze(&cycle(4).unwrap());
    assert!(c4.is_unicyclic && c4.pendant_vertices.is_empty() && c4.bridges.is_empty());
    let c41 = graph_analyze(&make_cnk(4, 1).unwrap());
    assert!(c41.is_unicyclic);
    assert_eq!(c41.pendant_vertices, vec![5, 6, 7, 8]);
    assert_eq!(c41.bridges, edges(&[(1, 5), (2, 6), (3, 7), (4, 8)]));
}

#[test]
fn tree_orderings() {
    let rt = tree_edge_ordering(&fig1(), Some(1)).unwrap();
    assert_eq!(
        rt.ordered_edges(),
        edges(&[(1, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (3, 8), (5, 9), (5, 10)])
    );
    assert_eq!(tree_edge_ordering(&path(3), None).unwrap().ordered_edges(), edges(&[(1, 2), (2, 3)]));
    let k13 = g(4, &[(1, 2), (2, 3), (2, 4)]);
    assert_eq!(tree_edge_ordering(&k13, Some(1)).unwrap().ordered_edges(), edges(&[(1, 2), (2, 3), (2, 4)]));
    assert!(tree_edge_ordering(&k13, Some(2)).is_err());
    assert!(tree_edge_ordering(&cycle(3).unwrap(), None).is_err());
}

#[test]
fn tree_prefixes_meet_next_edge_once() {
    for t in trees_up_to(8) {
        let rt = tree_edge_ordering(&t, None).unwrap();
        let es = rt.ordered_edges();
        for i in 1..es.len() {
            let touched: usize = [es[i].0, es[i].1]
                .iter()
                .filter(|&&v| es[..i].iter().any(|e| e.contains(v)))
                .count();
            assert!(touched <= 1);
        }
    }
}

#[test]
fn unicyclic_orderings() {
    assert_eq!(
        unicyclic_edge_ordering(&cycle(4).unwrap()).unwrap().edges,
        edges(&[(1, 2), (2, 3), (3, 4), (1, 4)])
    );
    let tail = [(3, 6), (3, 7), (3, 8), (5, 9), (5, 10)];
    let h = fig1().with_edge(Edge(8, 10)).unwrap();
    let want: Vec<_> = [(1, 2), (2, 4), (2, 3), (2, 5)].into_iter().chain(tail).chain([(8, 10)]).collect();
    assert_eq!(unicyclic_edge_ordering(&h).unwrap().edges, edges(&want));
    let h = fig1().with_edge(Edge(4, 10)).unwrap();
    let want: Vec<_> = [(1, 2), (2, 3), (2, 4), (2, 5)].into_iter().chain(tail).chain([(4, 10)]).collect();
    assert_eq!(unicyclic_edge_ordering(&h).unwrap().edges, edges(&want));
    // The endpoint branch goes right of its sibling 5.
    let tri = g(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)]);
    assert_eq!(
        unicyclic_edge_ordering(&tri).unwrap().edges,
        edges(&[(1, 4), (1, 5), (1, 2), (1, 3), (2, 3)])
    );
    let stuck = g(7, &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (3, 7), (5, 6)]);
    assert!(matches!(unicyclic_edge_ordering(&stuck), Err(Error::NotInClass(_))));
    assert!(matches!(
        unicyclic_edge_ordering(&make_cnk(4, 1).unwrap()),
        Err(Error::NotInClass(_))
    ));
}

#[test]
fn completion_examples() {
    let s = g(4, &[(1, 2), (1, 3)]);
    assert_eq!(neighbor_completion(&s, Edge(1, 4)).unwrap(), s.with_edge(Edge(2, 3)).unwrap());
    let p3 = g(4, &[(1, 2), (2, 3)]);
    assert_eq!(neighbor_completion(&p3, Edge(2, 4)).unwrap(), p3.with_edge(Edge(1, 3)).unwrap());
    assert_eq!(neighbor_completion(&p3, Edge(3, 4)).unwrap(), p3);
    assert!(neighbor_completion(&p3, Edge(1, 2)).is_err());
}

#[test]
fn cnk_counts() {
    let c = make_cnk(6, 1).unwrap();
    assert_eq!((c.n(), c.edge_count()), (12, 12));
    assert_eq!(make_cnk(3, 0).unwrap(), cycle(3).unwrap());
    assert!(make_cnk(2, 1).is_err());
    for (n, k) in [(3, 2), (5, 3)] {
        let c = make_cnk(n, k).unwrap();
        assert_eq!((c.n(), c.edge_count()), (n * (k + 1), n * (k + 1)));
    }
}

#[test]
fn tree_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| nonisomorphic_trees(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    assert!(trees_up_to(8).iter().all(Graph::is_tree));
}

#[test]
fn induced_search() {
    let c41 = make_cnk(4, 1).unwrap();
    let m = contains_induced(&c41, &cycle(4).unwrap()).unwrap().unwrap();
    let mut s = m.clone();
    s.sort_unstable();
    assert_eq!(s, vec![1, 2, 3, 4]);
    assert!(contains_induced(&path(4), &cycle(3).unwrap()).unwrap().is_none());
    let bigger = c41.with_vertex_count(9).unwrap().with_edge(Edge(5, 9)).unwrap();
    assert!(contains_induced(&bigger, &c41).unwrap().is_some());
}

#[test]
fn text_formats_round_trip() {
    let h = fig1();
    assert_eq!(parse_graph(&h.to_json()).unwrap(), h);
    let t = "# fig\n10\n1 2\n2 3 # inline\n";
    let p = parse_graph(t).unwrap();
    assert_eq!((p.n(), p.edge_count()), (10, 2));
    assert_eq!(parse_graph("1 2\n2 3").unwrap().n(), 3);
    assert!(parse_graph("1 2 3").is_err());
    assert!(parse_graph("{\"n\": 2, \"edges\": [[1, 3]]}").is_err());
}

#[test]
fn paths_between_vertices() {
    let c = cycle(4).unwrap().without_edge(Edge(1, 4));
    assert_eq!(c.simple_paths(1, 4, None), vec![vec![1, 2, 3, 4]]);
    let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    assert_eq!(k4.simple_paths(1, 2, None).len(), 5);
}
