mod common;

use std::collections::BTreeSet;

use common::{connected, g_tri, g_wl, graph, w};
use proptest::prelude::*;
use routelab::oracle::{certify_tree, enumerate_simple_paths, enumerate_spanning_trees, Criterion};
use routelab::routing::{
    longest_path_route, max_spanning_tree_route, mst_route, shortest_path_route, strongest_link_route,
    weakest_link_route,
};
use routelab::{AlgorithmId, EdgeId, Graph, NodeId, RoutingTree, Weight};

fn edges(t: &RoutingTree<'_, Weight>) -> Vec<EdgeId> {
    t.edges().iter().copied().collect()
}

fn set(pairs: &[(usize, usize)]) -> Vec<EdgeId> {
    let s: BTreeSet<EdgeId> = pairs.iter().map(|&(a, b)| EdgeId::new(a, b)).collect();
    s.into_iter().collect()
}

fn tree_total(g: &Graph, t: &BTreeSet<EdgeId>) -> Weight {
    t.iter().map(|e| g.weight(*e).unwrap().clone()).sum()
}

#[test]
fn mst_examples_match_enumeration() {
    let tri = g_tri();
    let t = mst_route(&tri, NodeId(2));
    assert_eq!(edges(&t), set(&[(0, 1), (1, 2)]));
    let mut totals: Vec<Weight> = enumerate_spanning_trees(&tri).unwrap().iter().map(|s| tree_total(&tri, s)).collect();
    totals.sort();
    assert_eq!(totals, vec![w(2), w(4), w(4)]);
    assert_eq!(t.total_weight(), w(2));

    let wl = g_wl();
    let t = mst_route(&wl, NodeId(2));
    assert_eq!(edges(&t), set(&[(1, 2), (0, 2)]));
    assert_eq!(t.total_weight(), w(3));

    let two = graph(2, &[(0, 1, 7)]);
    assert_eq!(edges(&mst_route(&two, NodeId(0))), set(&[(0, 1)]));
}

#[test]
fn shortest_path_examples() {
    let tri = g_tri();
    let t = shortest_path_route(&tri, NodeId(2)).unwrap();
    assert_eq!(t.path(NodeId(0)).nodes(), &[NodeId(0), NodeId(1), NodeId(2)]);
    let costs: Vec<Weight> =
        enumerate_simple_paths(&tri, NodeId(0), NodeId(2)).unwrap().iter().map(|p| p.total_weight(&tri)).collect();
    assert!(costs.contains(&w(2)) && costs.contains(&w(3)));

    // shifted by +2 the direct edge wins
    let shifted = graph(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 5)]);
    let t = shortest_path_route(&shifted, NodeId(2)).unwrap();
    assert_eq!(t.path(NodeId(0)).nodes(), &[NodeId(0), NodeId(2)]);

    let star = graph(4, &[(0, 1, 4), (0, 2, 9), (0, 3, 1)]);
    assert_eq!(edges(&shortest_path_route(&star, NodeId(0)).unwrap()), set(&[(0, 1), (0, 2), (0, 3)]));
}

#[test]
fn weakest_link_examples() {
    let wl = g_wl();
    let t = weakest_link_route(&wl, NodeId(2));
    assert_eq!(edges(&t), set(&[(0, 1), (0, 2)]));
    assert_eq!(t.path(NodeId(1)).bottleneck(&wl), Some(w(2)));

    let tri = g_tri();
    let t = weakest_link_route(&tri, NodeId(2));
    assert_eq!(t.first_hop(NodeId(0)), Some(EdgeId::new(0, 2)));
}

#[test]
fn max_spanning_tree_examples() {
    let tri = g_tri();
    assert_eq!(edges(&max_spanning_tree_route(&tri, NodeId(2))), set(&[(0, 2), (0, 1)]));
    let flat = graph(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 3), (0, 3, 3), (0, 2, 3)]);
    assert_eq!(edges(&max_spanning_tree_route(&flat, NodeId(1))), edges(&mst_route(&flat, NodeId(1))));
}

#[test]
fn longest_and_strongest_examples() {
    let tri = g_tri();
    assert_eq!(edges(&longest_path_route(&tri, NodeId(2)).unwrap()), set(&[(0, 2), (0, 1)]));
    let star = graph(4, &[(0, 1, 4), (0, 2, 9), (0, 3, 1)]);
    assert_eq!(edges(&longest_path_route(&star, NodeId(0)).unwrap()), set(&[(0, 1), (0, 2), (0, 3)]));

    let wl = g_wl();
    let t = strongest_link_route(&wl, NodeId(2)).unwrap();
    assert_eq!(t.path(NodeId(1)).nodes(), &[NodeId(1), NodeId(0), NodeId(2)]);

    let flat = graph(4, &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 3, 2)]);
    let t = strongest_link_route(&flat, NodeId(0)).unwrap();
    // every path has the same value, so lower neighbour ids win
    assert_eq!(t.path(NodeId(2)).nodes(), &[NodeId(2), NodeId(1), NodeId(0)]);
}

#[test]
fn set_weight_pulls_edge_into_mst() {
    let g = g_tri().set_edge_weight(EdgeId::new(0, 2), "1/2".parse().unwrap()).unwrap();
    assert!(mst_route(&g, NodeId(2)).contains(EdgeId::new(0, 2)));
}

fn permuted(g: &Graph, order: &[usize]) -> Graph {
    let list: Vec<(usize, usize, Weight)> = g
        .edges()
        .map(|(e, x)| {
            let (a, b) = e.endpoints();
            (b.0, a.0, x.clone())
        })
        .collect();
    let shuffled: Vec<_> = order.iter().map(|&i| list[i % list.len()].clone()).collect::<Vec<_>>();
    let mut seen = BTreeSet::new();
    let mut out: Vec<_> = shuffled.into_iter().filter(|(a, b, _)| seen.insert((*a, *b))).collect();
    for item in list {
        if seen.insert((item.0, item.1)) {
            out.push(item);
        }
    }
    Graph::new(g.node_count(), out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn characterized_functions_are_optimal((g, d) in connected(2..=7, 1, 20)) {
        prop_assert!(certify_tree(&mst_route(&g, d), Criterion::MinTotal).unwrap());
        prop_assert!(certify_tree(&shortest_path_route(&g, d).unwrap(), Criterion::ShortestAll).unwrap());
        prop_assert!(certify_tree(&weakest_link_route(&g, d), Criterion::MaximinAll).unwrap());
    }

    #[test]
    fn every_output_is_a_valid_tree((g, d) in connected(2..=7, -5, 20)) {
        for algo in AlgorithmId::all() {
            let Ok(t) = algo.route(&g, d) else {
                prop_assert!(algo.requires_positive_weights());
                continue;
            };
            prop_assert_eq!(t.edges().len(), g.node_count() - 1);
            prop_assert!(t.edges().iter().all(|e| g.contains_edge(*e)));
            // the rebuilt tree passes the constructor's own checks
            prop_assert!(RoutingTree::new(&g, d, t.edges().iter().copied()).is_ok());
            for v in g.nodes() {
                let p = t.path(v);
                prop_assert_eq!(p.source(), v);
                prop_assert_eq!(p.destination(), d);
            }
        }
    }

    #[test]
    fn output_ignores_edge_input_order((g, d) in connected(2..=6, 1, 4), order in proptest::collection::vec(0usize..100, 0..15)) {
        let h = permuted(&g, &order);
        prop_assert_eq!(&g, &h);
        for algo in AlgorithmId::all() {
            prop_assert_eq!(edges(&algo.route(&g, d).unwrap()), edges(&algo.route(&h, d).unwrap()));
        }
    }

    #[test]
    fn mst_ignores_destination_with_distinct_weights((g, _) in connected(2..=7, 1, 1000)) {
        let mut ws: Vec<&Weight> = g.edges().map(|(_, x)| x).collect();
        ws.sort();
        ws.dedup();
        prop_assume!(ws.len() == g.edge_count());
        let first = edges(&mst_route(&g, NodeId(0)));
        for d in g.nodes() {
            prop_assert_eq!(&edges(&mst_route(&g, d)), &first);
        }
    }
}
