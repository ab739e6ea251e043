//! Brute-force optimality oracles for small graphs.
//!
//! These enumerate every spanning tree or every simple path and compare the
//! routing output against all of them, so they are independent of how the
//! routing functions are implemented.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{EdgeId, NodeId, Path, RoutingTree, WeightedGraph};
use crate::routing::{AlgorithmId, UnionFind};
use crate::scalar::Scalar;

/// Largest graph the enumerating oracles accept.
pub const ORACLE_MAX_NODES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} nodes exceeds the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no optimality criterion is defined for {0}")]
    NoCriterion(AlgorithmId),
}

/// The defining inequality of each characterized routing function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Tree total weight is minimal among all spanning trees.
    MinTotal,
    /// Every node's tree path has minimal total weight among its simple paths.
    ShortestAll,
    /// Every node's tree path has maximal minimum edge among its simple paths.
    MaximinAll,
}

impl Criterion {
    pub fn for_algorithm(algo: AlgorithmId) -> Result<Criterion, OracleError> {
        match algo {
            AlgorithmId::Mst => Ok(Criterion::MinTotal),
            AlgorithmId::ShortestPath => Ok(Criterion::ShortestAll),
            AlgorithmId::WeakestLink => Ok(Criterion::MaximinAll),
            other => Err(OracleError::NoCriterion(other)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::MinTotal => "MIN_TOTAL",
            Criterion::ShortestAll => "SHORTEST_ALL",
            Criterion::MaximinAll => "MAXIMIN_ALL",
        }
    }
}

fn check_size<W: Scalar>(g: &WeightedGraph<W>) -> Result<(), OracleError> {
    if g.node_count() > ORACLE_MAX_NODES {
        return Err(OracleError::TooLarge { n: g.node_count(), limit: ORACLE_MAX_NODES });
    }
    Ok(())
}

fn spans(n: usize, edges: impl IntoIterator<Item = EdgeId>) -> bool {
    let mut sets = UnionFind::new(n);
    let mut components = n;
    for e in edges {
        let (a, b) = e.endpoints();
        if sets.union(a.0, b.0) {
            components -= 1;
        }
    }
    components == 1
}

/// Every spanning tree of `g`, each exactly once, by include/exclude over
/// the lexicographic edge order. A branch is cut as soon as the chosen edges
/// contain a cycle or the edges still available cannot connect the graph.
pub fn enumerate_spanning_trees<W: Scalar>(g: &WeightedGraph<W>) -> Result<Vec<BTreeSet<EdgeId>>, OracleError> {
    check_size(g)?;
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    let n = g.node_count();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    recurse(n, &edges, 0, &mut chosen, &mut out);
    Ok(out)
}

fn recurse(n: usize, edges: &[EdgeId], i: usize, chosen: &mut Vec<EdgeId>, out: &mut Vec<BTreeSet<EdgeId>>) {
    if chosen.len() + 1 == n {
        out.push(chosen.iter().copied().collect());
        return;
    }
    if i == edges.len() {
        return;
    }
    let acyclic = {
        let mut sets = UnionFind::new(n);
        chosen.iter().all(|e| sets.union(e.endpoints().0 .0, e.endpoints().1 .0))
            && sets.union(edges[i].endpoints().0 .0, edges[i].endpoints().1 .0)
    };
    if acyclic {
        chosen.push(edges[i]);
        recurse(n, edges, i + 1, chosen, out);
        chosen.pop();
    }
    if spans(n, chosen.iter().chain(&edges[i + 1..]).copied()) {
        recurse(n, edges, i + 1, chosen, out);
    }
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with one row and column removed, computed exactly with
/// fraction-free Gaussian elimination.
pub fn matrix_tree_count<W: Scalar>(g: &WeightedGraph<W>) -> BigInt {
    let n = g.node_count();
    if n == 1 {
        return BigInt::one();
    }
    let k = n - 1;
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for e in g.edge_ids() {
        let (a, b) = e.endpoints();
        for v in [a.0, b.0] {
            if v > 0 {
                m[v - 1][v - 1] += 1;
            }
        }
        if a.0 > 0 && b.0 > 0 {
            m[a.0 - 1][b.0 - 1] -= 1;
            m[b.0 - 1][a.0 - 1] -= 1;
        }
    }
    bareiss_determinant(m)
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..k {
        if m[p][p].is_zero() {
            match (p + 1..k).find(|&r| !m[r][p].is_zero()) {
                Some(r) => {
                    m.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                m[i][j] = (&m[i][j] * &m[p][p] - &m[i][p] * &m[p][j]) / &prev;
            }
        }
        prev = m[p][p].clone();
    }
    sign * &m[k - 1][k - 1]
}

/// Every simple path from `v` to `d`, depth-first with neighbours in
/// ascending order.
pub fn enumerate_simple_paths<W: Scalar>(g: &WeightedGraph<W>, v: NodeId, d: NodeId) -> Result<Vec<Path>, OracleError> {
    check_size(g)?;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    let mut stack = vec![v];
    on_path[v.0] = true;
    walk(g, d, &mut stack, &mut on_path, &mut out);
    Ok(out)
}

fn walk<W: Scalar>(
    g: &WeightedGraph<W>,
    d: NodeId,
    stack: &mut Vec<NodeId>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
) {
    let u = *stack.last().expect("non-empty");
    if u == d {
        out.push(Path::from_nodes(stack.clone()));
        return;
    }
    for &next in g.neighbors(u) {
        if on_path[next.0] {
            continue;
        }
        on_path[next.0] = true;
        stack.push(next);
        walk(g, d, stack, on_path, out);
        stack.pop();
        on_path[next.0] = false;
    }
}

/// Checks `tree` against every alternative the criterion quantifies over.
pub fn certify_tree<W: Scalar>(tree: &RoutingTree<'_, W>, criterion: Criterion) -> Result<bool, OracleError> {
    let g = tree.graph();
    let d = tree.destination();
    match criterion {
        Criterion::MinTotal => {
            let total = tree.total_weight();
            Ok(enumerate_spanning_trees(g)?.iter().all(|t| {
                let other = t.iter().fold(W::zero(), |acc, e| acc + g.weight(*e).expect("edge").clone());
                total <= other
            }))
        }
        Criterion::ShortestAll => {
            for v in g.nodes() {
                let own = tree.path(v).total_weight(g);
                if enumerate_simple_paths(g, v, d)?.iter().any(|p| p.total_weight(g) < own) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Criterion::MaximinAll => {
            for v in g.nodes().filter(|&v| v != d) {
                let own = tree.path(v).bottleneck(g);
                if enumerate_simple_paths(g, v, d)?.iter().any(|p| p.bottleneck(g) > own) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::routing::{mst_route, weakest_link_route};
    use crate::Weight;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> WeightedGraph<Weight> {
        WeightedGraph::new(n, edges.iter().map(|&(a, b, x)| (a, b, Weight::from_int(x)))).unwrap()
    }

    fn complete(n: usize) -> WeightedGraph<Weight> {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b, 1))).collect();
        graph(n, &edges)
    }

    #[test]
    fn spanning_tree_counts() {
        let tri = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]);
        assert_eq!(enumerate_spanning_trees(&tri).unwrap().len(), 3);
        let line = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(enumerate_spanning_trees(&line).unwrap().len(), 1);
        // Cayley: n^(n-2)
        assert_eq!(enumerate_spanning_trees(&complete(4)).unwrap().len(), 16);
        assert_eq!(enumerate_spanning_trees(&complete(5)).unwrap().len(), 125);
        assert_eq!(matrix_tree_count(&complete(5)), BigInt::from(125));
        assert_eq!(matrix_tree_count(&graph(1, &[])), BigInt::one());
    }

    #[test]
    fn simple_path_counts() {
        let tri = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]);
        assert_eq!(enumerate_simple_paths(&tri, NodeId(0), NodeId(2)).unwrap().len(), 2);
        let line = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(enumerate_simple_paths(&line, NodeId(0), NodeId(3)).unwrap().len(), 1);
        assert_eq!(enumerate_simple_paths(&complete(4), NodeId(1), NodeId(3)).unwrap().len(), 5);
    }

    #[test]
    fn certification_examples() {
        let tri = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]);
        assert!(certify_tree(&mst_route(&tri, NodeId(2)), Criterion::MinTotal).unwrap());
        let wl = graph(3, &[(0, 1, 5), (1, 2, 1), (0, 2, 2)]);
        assert!(certify_tree(&weakest_link_route(&wl, NodeId(2)), Criterion::MaximinAll).unwrap());
        assert!(!certify_tree(&mst_route(&wl, NodeId(2)), Criterion::MaximinAll).unwrap());
    }

    #[test]
    fn too_large() {
        let edges: Vec<_> = (0..11).map(|i| (i, i + 1, 1)).collect();
        let g = graph(12, &edges);
        assert!(matches!(enumerate_spanning_trees(&g), Err(OracleError::TooLarge { .. })));
        assert!(matches!(enumerate_simple_paths(&g, NodeId(0), NodeId(1)), Err(OracleError::TooLarge { .. })));
    }
}
