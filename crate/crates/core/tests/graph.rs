mod common;

use common::{connected, graph, w};
use proptest::prelude::*;
use routelab::format::{emit_dot, parse_graph, write_graph};
use routelab::oracle::enumerate_simple_paths;
use routelab::routing::mst_route;
use routelab::{EdgeId, Graph, NodeId, Weight};

#[test]
fn bridge_and_removal_examples() {
    let tri_pendant = graph(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 3), (0, 3, 2)]);
    assert!(tri_pendant.is_bridge(EdgeId::new(0, 3)));
    assert!(!tri_pendant.is_bridge(EdgeId::new(0, 1)));

    let square = graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)]);
    for e in square.edge_ids() {
        let line = square.remove_edge(e).unwrap();
        assert_eq!(line.edge_count(), 3);
        assert!(line.edge_ids().all(|f| line.is_bridge(f)));
    }
}

#[test]
fn dot_marks_mst_edges() {
    let g = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]);
    let t = mst_route(&g, NodeId(2));
    let dot = emit_dot(&g, Some(&t)).unwrap();
    let bold: Vec<&str> = dot.lines().filter(|l| l.contains("bold")).collect();
    assert_eq!(bold.len(), 2);
    assert!(bold.iter().any(|l| l.contains("0 -- 1")) && bold.iter().any(|l| l.contains("1 -- 2")));
}

/// The tree viewed as a graph of its own.
fn tree_graph(g: &Graph, edges: impl Iterator<Item = EdgeId>) -> Graph {
    let list: Vec<_> = edges
        .map(|e| {
            let (a, b) = e.endpoints();
            (a.0, b.0, g.weight(e).unwrap().clone())
        })
        .collect();
    Graph::new(g.node_count(), list).unwrap()
}

fn ratio() -> impl Strategy<Value = Weight> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Weight::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tree_path_is_the_unique_tree_path((g, d) in connected(2..=8, 1, 9)) {
        let t = mst_route(&g, d);
        let as_graph = tree_graph(&g, t.edges().iter().copied());
        for v in g.nodes().filter(|&v| v != d) {
            let all = enumerate_simple_paths(&as_graph, v, d).unwrap();
            prop_assert_eq!(all.len(), 1);
            let own = t.path(v);
            prop_assert_eq!(all[0].nodes(), own.nodes());
        }
        prop_assert!(t.path(d).is_empty());
    }

    #[test]
    fn transforms_compose((g, _) in connected(2..=6, -9, 9), s1 in ratio(), s2 in ratio(), c1 in ratio(), c2 in ratio()) {
        let one = w(1);
        let zero = w(0);
        let a = g.transform_weights(&one, &s1).unwrap().transform_weights(&one, &s2).unwrap();
        prop_assert_eq!(a, g.transform_weights(&one, &(s1.clone() + s2.clone())).unwrap());
        prop_assume!(c1 > zero && c2 > zero);
        let b = g.transform_weights(&c1, &zero).unwrap().transform_weights(&c2, &zero).unwrap();
        prop_assert_eq!(b, g.transform_weights(&(c1 * c2), &zero).unwrap());
        prop_assert_eq!(&g.transform_weights(&one, &zero).unwrap(), &g);
    }

    #[test]
    fn file_format_round_trips((g, d) in connected(2..=8, -50, 50), den in 1i64..=7) {
        let g = g.map_weights(|_, x| x.clone() / Weight::from_integer(den.into()));
        let text = write_graph(&g, d);
        let (h, d2) = parse_graph::<Weight>(&text).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(d2, d);
        prop_assert_eq!(write_graph(&h, d2), text);
    }
}
