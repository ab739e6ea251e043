use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{EdgeId, NodeId, RoutingTree, WeightedGraph};
use crate::routing::RouteError;
use crate::scalar::Scalar;

/// Shortest-path tree toward `d` (Dijkstra from the destination).
///
/// Each node's next hop is the neighbour minimizing (distance through it,
/// node id). Non-positive weights are rejected.
pub fn shortest_path_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'_, W>, RouteError> {
    if let Some((e, _)) = g.edges().find(|(_, w)| !w.is_positive()) {
        return Err(RouteError::NonPositiveWeight(e));
    }
    let dist = distances(g, d);
    let mut edges = Vec::with_capacity(g.node_count() - 1);
    for v in g.nodes().filter(|&v| v != d) {
        let best = g
            .neighbors(v)
            .iter()
            .map(|&u| {
                let e = EdgeId::between(u, v);
                (dist[u.0].clone() + g.weight(e).expect("edge").clone(), u)
            })
            .min()
            .expect("connected graph");
        debug_assert_eq!(best.0, dist[v.0]);
        edges.push(EdgeId::between(v, best.1));
    }
    Ok(RoutingTree::new(g, d, edges).expect("parent pointers form a tree"))
}

fn distances<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Vec<W> {
    let mut dist: Vec<Option<W>> = vec![None; g.node_count()];
    let mut done = vec![false; g.node_count()];
    let mut heap = BinaryHeap::new();
    dist[d.0] = Some(W::zero());
    heap.push(Reverse((W::zero(), d)));
    while let Some(Reverse((du, u))) = heap.pop() {
        if done[u.0] {
            continue;
        }
        done[u.0] = true;
        for &v in g.neighbors(u) {
            let cand = du.clone() + g.weight(EdgeId::between(u, v)).expect("edge").clone();
            if dist[v.0].as_ref().is_none_or(|cur| cand < *cur) {
                dist[v.0] = Some(cand.clone());
                heap.push(Reverse((cand, v)));
            }
        }
    }
    dist.into_iter().map(|x| x.expect("connected graph")).collect()
}
