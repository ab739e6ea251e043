use std::cmp::Reverse;

use crate::graph::{EdgeId, NodeId, RoutingTree, WeightedGraph};
use crate::scalar::Scalar;

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

fn kruskal<W: Scalar>(g: &WeightedGraph<W>, order: Vec<EdgeId>) -> Vec<EdgeId> {
    let mut sets = UnionFind::new(g.node_count());
    let mut chosen = Vec::with_capacity(g.node_count().saturating_sub(1));
    for e in order {
        let (a, b) = e.endpoints();
        if sets.union(a.0, b.0) {
            chosen.push(e);
            if chosen.len() + 1 == g.node_count() {
                break;
            }
        }
    }
    chosen
}

/// Minimum spanning tree. Kruskal over (weight ascending, edge id ascending).
pub fn mst_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> RoutingTree<'_, W> {
    let mut order: Vec<(&W, EdgeId)> = g.edges().map(|(e, w)| (w, e)).collect();
    order.sort();
    let edges = kruskal(g, order.into_iter().map(|(_, e)| e).collect());
    RoutingTree::new(g, d, edges).expect("kruskal yields a spanning tree")
}

/// Maximum spanning tree. Kruskal over (weight descending, edge id ascending).
pub fn max_spanning_tree_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> RoutingTree<'_, W> {
    let mut order: Vec<(Reverse<&W>, EdgeId)> = g.edges().map(|(e, w)| (Reverse(w), e)).collect();
    order.sort();
    let edges = kruskal(g, order.into_iter().map(|(_, e)| e).collect());
    RoutingTree::new(g, d, edges).expect("kruskal yields a spanning tree")
}

/// Weakest-link (widest path) routing.
///
/// A maximum spanning tree holds a maximin path between every pair of nodes,
/// so one tree serves every source at once.
pub fn weakest_link_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> RoutingTree<'_, W> {
    max_spanning_tree_route(g, d)
}
