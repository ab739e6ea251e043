//! Path-scoring constructions used by the longest-path and strongest-link
//! functions. Per-node optimal paths under these scores need not form a tree,
//! so the tree is assembled either greedily or over hop layers.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::graph::{EdgeId, NodeId, Path, RoutingTree, WeightedGraph};
use crate::routing::{PathConstruction, RouteError, StrongestReading, BRUTE_FORCE_MAX_NODES};
use crate::scalar::Scalar;

/// How a path is scored. `Greater` from [`Score::better`] means preferred.
#[derive(Clone, Copy, Debug)]
enum Score {
    MaxSum,
    MaxOfMax,
    MinOfMin,
}

impl Score {
    fn fold<W: Scalar>(self, acc: Option<W>, w: &W) -> W {
        match (self, acc) {
            (_, None) => w.clone(),
            (Score::MaxSum, Some(a)) => a + w.clone(),
            (Score::MaxOfMax, Some(a)) => a.max(w.clone()),
            (Score::MinOfMin, Some(a)) => a.min(w.clone()),
        }
    }

    /// Compares two aggregate values; `Greater` when `a` is preferred.
    fn prefer<W: Scalar>(self, a: &W, b: &W) -> Ordering {
        match self {
            Score::MaxSum | Score::MaxOfMax => a.cmp(b),
            Score::MinOfMin => b.cmp(a),
        }
    }

    /// Compares paths by value alone (primary score, then bottleneck for
    /// [`Score::MaxOfMax`]); `Greater` when `a` is preferred.
    fn rank<W: Scalar>(self, g: &WeightedGraph<W>, a: &Path, b: &Path) -> Ordering {
        let value = |p: &Path| p.weights(g).into_iter().fold(None, |acc, w| Some(self.fold(acc, w)));
        let primary = match (value(a), value(b)) {
            (Some(x), Some(y)) => self.prefer(&x, &y),
            (x, y) => x.is_some().cmp(&y.is_some()),
        };
        primary.then_with(|| match self {
            // larger bottleneck breaks ties between equal peaks
            Score::MaxOfMax => a.bottleneck(g).cmp(&b.bottleneck(g)),
            _ => Ordering::Equal,
        })
    }

    /// Full comparison of two paths from the same node: [`Score::rank`], then
    /// the lexicographically smaller edge sequence.
    fn better<W: Scalar>(self, g: &WeightedGraph<W>, a: &Path, b: &Path) -> Ordering {
        self.rank(g, a, b).then_with(|| b.edges().cmp(&a.edges()))
    }
}

fn check_size<W: Scalar>(g: &WeightedGraph<W>) -> Result<(), RouteError> {
    if g.node_count() > BRUTE_FORCE_MAX_NODES {
        return Err(RouteError::TooLarge { n: g.node_count(), limit: BRUTE_FORCE_MAX_NODES });
    }
    Ok(())
}

/// Best path of `v` among those consistent with the committed paths.
fn best_consistent<W: Scalar>(g: &WeightedGraph<W>, committed: &[Option<Path>], v: NodeId, score: Score) -> Path {
    let mut best: Option<Path> = None;
    let mut prefix = vec![v];
    let mut on_prefix = vec![false; g.node_count()];
    on_prefix[v.0] = true;
    extend(g, committed, &mut prefix, &mut on_prefix, &mut |candidate| {
        if best.as_ref().is_none_or(|cur| score.better(g, &candidate, cur) == Ordering::Greater) {
            best = Some(candidate);
        }
    });
    best.expect("connected graph offers at least one path")
}

/// Repeatedly commits the best-ranked consistent path over all uncommitted
/// nodes (ties to the lower node id), fixing every node along it.
fn greedy_commit<W: Scalar>(g: &WeightedGraph<W>, d: NodeId, score: Score) -> RoutingTree<'_, W> {
    let n = g.node_count();
    let mut committed: Vec<Option<Path>> = vec![None; n];
    committed[d.0] = Some(Path::trivial(d));

    loop {
        let mut winner: Option<Path> = None;
        for v in g.nodes().filter(|v| committed[v.0].is_none()) {
            let cand = best_consistent(g, &committed, v, score);
            if winner.as_ref().is_none_or(|cur| score.rank(g, &cand, cur) == Ordering::Greater) {
                winner = Some(cand);
            }
        }
        let Some(best) = winner else { break };
        let nodes = best.nodes();
        for (i, &u) in nodes.iter().enumerate() {
            if committed[u.0].is_some() {
                break;
            }
            committed[u.0] = Some(Path::from_nodes(nodes[i..].to_vec()));
        }
    }

    let edges = g
        .nodes()
        .filter(|&v| v != d)
        .map(|v| committed[v.0].as_ref().and_then(Path::first_edge).expect("every node committed"));
    RoutingTree::new(g, d, edges).expect("committed suffix paths form a tree")
}

/// Depth-first enumeration of paths that run through uncommitted nodes until
/// they reach a committed node, then follow its committed path.
fn extend<W: Scalar, F: FnMut(Path)>(
    g: &WeightedGraph<W>,
    committed: &[Option<Path>],
    prefix: &mut Vec<NodeId>,
    on_prefix: &mut [bool],
    visit: &mut F,
) {
    let tail = *prefix.last().expect("non-empty prefix");
    for &u in g.neighbors(tail) {
        if on_prefix[u.0] {
            continue;
        }
        if let Some(rest) = &committed[u.0] {
            let mut nodes = prefix.clone();
            nodes.extend_from_slice(rest.nodes());
            visit(Path::from_nodes(nodes));
            continue;
        }
        prefix.push(u);
        on_prefix[u.0] = true;
        extend(g, committed, prefix, on_prefix, visit);
        on_prefix[u.0] = false;
        prefix.pop();
    }
}

fn hop_layered<W: Scalar>(g: &WeightedGraph<W>, d: NodeId, score: Score) -> RoutingTree<'_, W> {
    let n = g.node_count();
    let mut hops = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    hops[d.0] = 0;
    let mut queue = VecDeque::from([d]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if hops[v.0] == usize::MAX {
                hops[v.0] = hops[u.0] + 1;
                queue.push_back(v);
            }
        }
    }

    let mut value: Vec<Option<W>> = vec![None; n];
    let mut edges = Vec::with_capacity(n - 1);
    for &v in order.iter().skip(1) {
        let mut best: Option<(W, NodeId)> = None;
        for &u in g.neighbors(v).iter().filter(|u| hops[u.0] + 1 == hops[v.0]) {
            let w = g.weight(EdgeId::between(u, v)).expect("edge");
            let cand = score.fold(value[u.0].clone(), w);
            let take = match &best {
                None => true,
                Some((cur, _)) => score.prefer(&cand, cur) == Ordering::Greater,
            };
            if take {
                best = Some((cand, u));
            }
        }
        let (val, parent) = best.expect("BFS parent exists");
        value[v.0] = Some(val);
        edges.push(EdgeId::between(v, parent));
    }
    RoutingTree::new(g, d, edges).expect("hop layers form a tree")
}

/// Longest-path tree, greedy construction.
pub fn longest_path_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'_, W>, RouteError> {
    longest_path_route_with(g, d, PathConstruction::Greedy)
}

pub fn longest_path_route_with<W: Scalar>(
    g: &WeightedGraph<W>,
    d: NodeId,
    construction: PathConstruction,
) -> Result<RoutingTree<'_, W>, RouteError> {
    check_size(g)?;
    Ok(match construction {
        PathConstruction::Greedy => greedy_commit(g, d, Score::MaxSum),
        PathConstruction::HopLayered => hop_layered(g, d, Score::MaxSum),
    })
}

/// Strongest-link tree (heaviest peak edge), greedy construction.
pub fn strongest_link_route<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'_, W>, RouteError> {
    strongest_link_route_with(g, d, StrongestReading::MaxOfMax, PathConstruction::Greedy)
}

pub fn strongest_link_route_with<W: Scalar>(
    g: &WeightedGraph<W>,
    d: NodeId,
    reading: StrongestReading,
    construction: PathConstruction,
) -> Result<RoutingTree<'_, W>, RouteError> {
    check_size(g)?;
    let score = match reading {
        StrongestReading::MaxOfMax => Score::MaxOfMax,
        StrongestReading::MinOfMin => Score::MinOfMin,
    };
    Ok(match construction {
        PathConstruction::Greedy => greedy_commit(g, d, score),
        PathConstruction::HopLayered => hop_layered(g, d, score),
    })
}
