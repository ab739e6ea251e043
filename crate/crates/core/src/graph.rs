//! Exact-weight undirected graphs, destination-rooted spanning trees and
//! tree paths.
//!
//! All values are immutable once built. Operations that "modify" a graph
//! return a new one; edge identity (the endpoint pair) survives every weight
//! transformation so checkers can talk about "the same edge, new weight".

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered endpoint pair, stored with the smaller endpoint first so the
/// derived ordering is the lexicographic edge order used for tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct EdgeId {
    lo: NodeId,
    hi: NodeId,
}

impl EdgeId {
    pub fn new(a: usize, b: usize) -> Self {
        Self::between(NodeId(a), NodeId(b))
    }

    pub fn between(a: NodeId, b: NodeId) -> Self {
        if a <= b {
            EdgeId { lo: a, hi: b }
        } else {
            EdgeId { lo: b, hi: a }
        }
    }

    pub fn endpoints(self) -> (NodeId, NodeId) {
        (self.lo, self.hi)
    }

    pub fn touches(self, v: NodeId) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: NodeId) -> Option<NodeId> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl From<EdgeId> for [usize; 2] {
    fn from(e: EdgeId) -> Self {
        [e.lo.0, e.hi.0]
    }
}

impl From<[usize; 2]> for EdgeId {
    fn from(pair: [usize; 2]) -> Self {
        EdgeId::new(pair[0], pair[1])
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at node {0}")]
    Loop(NodeId),
    #[error("parallel edge {0}")]
    ParallelEdge(EdgeId),
    #[error("edge {edge} references a node outside 0..{n}")]
    NodeOutOfRange { edge: EdgeId, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no nodes")]
    Empty,
    #[error("removing bridge {0} would disconnect the graph")]
    BridgeRemoval(EdgeId),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("destination {0} is not a node of the graph")]
    DestinationOutOfRange(NodeId),
    #[error("not a spanning tree: {0}")]
    InvalidTree(String),
}

/// A simple, connected, undirected graph with exact edge weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph<W> {
    n: usize,
    weights: BTreeMap<EdgeId, W>,
    adjacency: Vec<Vec<NodeId>>,
}

impl<W: Scalar> WeightedGraph<W> {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, W)>,
    {
        Self::from_weights(n, edges.into_iter().map(|(a, b, w)| (EdgeId::new(a, b), w)), true)
    }

    fn from_weights<I>(n: usize, edges: I, reject_parallel: bool) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (EdgeId, W)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut weights = BTreeMap::new();
        let mut adjacency = vec![Vec::new(); n];
        for (edge, w) in edges {
            let (a, b) = edge.endpoints();
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if b.0 >= n {
                return Err(GraphError::NodeOutOfRange { edge, n });
            }
            if weights.insert(edge, w).is_some() {
                if reject_parallel {
                    return Err(GraphError::ParallelEdge(edge));
                }
                continue;
            }
            adjacency[a.0].push(b);
            adjacency[b.0].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = WeightedGraph { n, weights, adjacency };
        if !graph.is_connected_without(None) {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.n).map(NodeId)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &W)> + '_ {
        self.weights.iter().map(|(e, w)| (*e, w))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.weights.keys().copied()
    }

    pub fn weight(&self, e: EdgeId) -> Option<&W> {
        self.weights.get(&e)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.weights.contains_key(&e)
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        v.0 < self.n
    }

    /// Neighbours in ascending order.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v.0]
    }

    pub fn max_abs_weight(&self) -> W {
        self.weights.values().map(|w| w.abs()).max().unwrap_or_else(W::zero)
    }

    /// Number of independent cycles, `m - n + 1` for a connected graph.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + 1 - self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.edge_count() == self.n
    }

    fn is_connected_without(&self, skip: Option<EdgeId>) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([NodeId(0)]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if seen[v.0] || skip == Some(EdgeId::between(u, v)) {
                    continue;
                }
                seen[v.0] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
        reached == self.n
    }

    /// True iff removing `e` disconnects the graph. Edges not in the graph are
    /// not bridges.
    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.contains_edge(e) && !self.is_connected_without(Some(e))
    }

    pub fn remove_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        if self.is_bridge(e) {
            return Err(GraphError::BridgeRemoval(e));
        }
        let mut out = self.clone();
        out.weights.remove(&e);
        let (a, b) = e.endpoints();
        out.adjacency[a.0].retain(|&x| x != b);
        out.adjacency[b.0].retain(|&x| x != a);
        Ok(out)
    }

    /// Maps every weight `w` to `scale * w + shift`.
    pub fn transform_weights(&self, scale: &W, shift: &W) -> Result<Self, GraphError> {
        if !scale.is_positive() {
            return Err(GraphError::NonPositiveScale);
        }
        Ok(self.map_weights(|_, w| scale.clone() * w.clone() + shift.clone()))
    }

    pub fn set_edge_weight(&self, e: EdgeId, w: W) -> Result<Self, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        let mut out = self.clone();
        out.weights.insert(e, w);
        Ok(out)
    }

    /// Same topology, weights produced by `f(edge, old_weight)`.
    pub fn map_weights<F>(&self, mut f: F) -> Self
    where
        F: FnMut(EdgeId, &W) -> W,
    {
        WeightedGraph {
            n: self.n,
            weights: self.weights.iter().map(|(e, w)| (*e, f(*e, w))).collect(),
            adjacency: self.adjacency.clone(),
        }
    }

    /// Adds a new edge; fails on loops, out-of-range endpoints or an existing edge.
    pub fn add_edge(&self, e: EdgeId, w: W) -> Result<Self, GraphError> {
        let edges = self.edges().map(|(e, w)| (e, w.clone())).chain(std::iter::once((e, w)));
        Self::from_weights(self.n, edges, true)
    }

    /// All unordered node pairs that are not edges, lexicographic.
    pub fn non_edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let e = EdgeId::new(a, b);
                if !self.contains_edge(e) {
                    out.push(e);
                }
            }
        }
        out
    }
}

/// A simple path, stored as the node sequence from `source` to `destination`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    nodes: Vec<NodeId>,
}

impl Path {
    /// Builds a path from its node sequence. Panics on an empty sequence.
    pub fn from_nodes(nodes: Vec<NodeId>) -> Self {
        assert!(!nodes.is_empty(), "a path has at least one node");
        Path { nodes }
    }

    pub fn trivial(v: NodeId) -> Self {
        Path { nodes: vec![v] }
    }

    pub fn source(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn destination(&self) -> NodeId {
        *self.nodes.last().expect("non-empty")
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.nodes.windows(2).map(|w| EdgeId::between(w[0], w[1])).collect()
    }

    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.nodes.windows(2).any(|w| EdgeId::between(w[0], w[1]) == e)
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        self.nodes.contains(&v)
    }

    pub fn first_edge(&self) -> Option<EdgeId> {
        (self.nodes.len() > 1).then(|| EdgeId::between(self.nodes[0], self.nodes[1]))
    }

    /// True when every step is a graph edge and no node repeats.
    pub fn is_simple_in<W: Scalar>(&self, g: &WeightedGraph<W>) -> bool {
        let distinct: BTreeSet<_> = self.nodes.iter().collect();
        distinct.len() == self.nodes.len() && self.edges().iter().all(|e| g.contains_edge(*e))
    }

    /// Weights along the path; panics if an edge is missing from `g`.
    pub fn weights<'g, W: Scalar>(&self, g: &'g WeightedGraph<W>) -> Vec<&'g W> {
        self.edges().into_iter().map(|e| g.weight(e).expect("path edge belongs to graph")).collect()
    }

    pub fn total_weight<W: Scalar>(&self, g: &WeightedGraph<W>) -> W {
        self.weights(g).into_iter().fold(W::zero(), |acc, w| acc + w.clone())
    }

    /// Smallest edge weight; `None` for the empty path.
    pub fn bottleneck<W: Scalar>(&self, g: &WeightedGraph<W>) -> Option<W> {
        self.weights(g).into_iter().min().cloned()
    }

    pub fn peak<W: Scalar>(&self, g: &WeightedGraph<W>) -> Option<W> {
        self.weights(g).into_iter().max().cloned()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("->"))
    }
}

/// A spanning tree of `graph` oriented toward `destination`.
#[derive(Clone, Debug)]
pub struct RoutingTree<'g, W> {
    graph: &'g WeightedGraph<W>,
    destination: NodeId,
    edges: BTreeSet<EdgeId>,
    parent: Vec<Option<NodeId>>,
    depth: Vec<usize>,
}

impl<'g, W: Scalar> RoutingTree<'g, W> {
    pub fn new<I>(graph: &'g WeightedGraph<W>, destination: NodeId, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        if !graph.contains_node(destination) {
            return Err(GraphError::DestinationOutOfRange(destination));
        }
        let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
        let n = graph.node_count();
        if edges.len() + 1 != n {
            return Err(GraphError::InvalidTree(format!("{} edges for {} nodes", edges.len(), n)));
        }
        if let Some(e) = edges.iter().find(|e| !graph.contains_edge(**e)) {
            return Err(GraphError::InvalidTree(format!("edge {e} is not in the graph")));
        }

        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            let (a, b) = e.endpoints();
            adjacency[a.0].push(b);
            adjacency[b.0].push(a);
        }
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[destination.0] = 0;
        let mut queue = VecDeque::from([destination]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u.0] {
                if depth[v.0] == usize::MAX {
                    depth[v.0] = depth[u.0] + 1;
                    parent[v.0] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(GraphError::InvalidTree("edges do not connect every node".into()));
        }
        Ok(RoutingTree { graph, destination, edges, parent, depth })
    }

    pub fn graph(&self) -> &'g WeightedGraph<W> {
        self.graph
    }

    pub fn destination(&self) -> NodeId {
        self.destination
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Next hop of `v` toward the destination; `None` at the destination.
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v.0]
    }

    pub fn first_hop(&self, v: NodeId) -> Option<EdgeId> {
        self.parent(v).map(|p| EdgeId::between(v, p))
    }

    /// The unique path from `v` to the destination inside the tree.
    pub fn path(&self, v: NodeId) -> Path {
        let mut nodes = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur.0] {
            nodes.push(p);
            cur = p;
        }
        Path::from_nodes(nodes)
    }

    /// True when `u` lies on the tree path from `v` to the destination.
    pub fn path_passes(&self, v: NodeId, u: NodeId) -> bool {
        let mut cur = Some(v);
        while let Some(x) = cur {
            if x == u {
                return true;
            }
            if self.depth[x.0] < self.depth[u.0] {
                return false;
            }
            cur = self.parent[x.0];
        }
        false
    }

    pub fn total_weight(&self) -> W {
        self.edges.iter().fold(W::zero(), |acc, e| acc + self.graph.weight(*e).expect("tree edge").clone())
    }

    pub fn same_edges(&self, other: &RoutingTree<'_, W>) -> bool {
        self.edges == other.edges
    }
}
