use std::collections::VecDeque;

use crate::graph::{EdgeId, NodeId, WeightedGraph};
use crate::scalar::Scalar;

/// The cycle of a unicyclic graph as seen from a destination.
///
/// Every cycle node other than the exit (the cycle node closest to the
/// destination) has exactly two simple paths to the destination: one around
/// each side of the cycle, both finishing along the same stem from the exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleView {
    /// Cycle nodes in cyclic order, starting at the exit.
    cycle: Vec<NodeId>,
    /// Edges from the exit to the destination.
    stem: Vec<EdgeId>,
}

impl CycleView {
    /// `None` unless `g` has exactly one cycle.
    pub fn new<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Option<Self> {
        if !g.is_unicyclic() || !g.contains_node(d) {
            return None;
        }
        let n = g.node_count();
        // peel leaves until only the cycle remains
        let mut degree: Vec<usize> = g.nodes().map(|v| g.neighbors(v).len()).collect();
        let mut removed = vec![false; n];
        let mut leaves: Vec<NodeId> = g.nodes().filter(|v| degree[v.0] == 1).collect();
        while let Some(v) = leaves.pop() {
            removed[v.0] = true;
            for &u in g.neighbors(v) {
                if !removed[u.0] {
                    degree[u.0] -= 1;
                    if degree[u.0] == 1 {
                        leaves.push(u);
                    }
                }
            }
        }

        // closest cycle node to d, with the BFS tree giving the stem
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[d.0] = true;
        let mut queue = VecDeque::from([d]);
        let mut exit = None;
        while let Some(u) = queue.pop_front() {
            if !removed[u.0] {
                exit = Some(u);
                break;
            }
            for &v in g.neighbors(u) {
                if !seen[v.0] {
                    seen[v.0] = true;
                    parent[v.0] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        let exit = exit?;
        let mut stem = Vec::new();
        let mut cur = exit;
        while let Some(p) = parent[cur.0] {
            stem.push(EdgeId::between(cur, p));
            cur = p;
        }

        let mut cycle = vec![exit];
        let mut prev = None;
        let mut cur = exit;
        loop {
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&u| !removed[u.0] && Some(u) != prev)
                .expect("cycle nodes have two cycle neighbours");
            if next == exit {
                break;
            }
            cycle.push(next);
            prev = Some(cur);
            cur = next;
        }
        Some(CycleView { cycle, stem })
    }

    pub fn exit(&self) -> NodeId {
        self.cycle[0]
    }

    pub fn cycle(&self) -> &[NodeId] {
        &self.cycle
    }

    pub fn stem(&self) -> &[EdgeId] {
        &self.stem
    }

    /// Cycle nodes with two paths to the destination.
    pub fn branching_nodes(&self) -> &[NodeId] {
        &self.cycle[1..]
    }

    /// The edges each path of `v` uses around the cycle (the parts not
    /// shared with the other path).
    pub fn private_arcs(&self, v: NodeId) -> Option<(Vec<EdgeId>, Vec<EdgeId>)> {
        let i = self.cycle.iter().position(|&x| x == v).filter(|&i| i > 0)?;
        let k = self.cycle.len();
        let forward = (i..k).map(|j| EdgeId::between(self.cycle[j], self.cycle[(j + 1) % k])).collect();
        let backward = (1..=i).rev().map(|j| EdgeId::between(self.cycle[j], self.cycle[j - 1])).collect();
        Some((forward, backward))
    }

    /// Both full paths of `v` to the destination, as edge sequences.
    pub fn paths(&self, v: NodeId) -> Option<(Vec<EdgeId>, Vec<EdgeId>)> {
        let (mut a, mut b) = self.private_arcs(v)?;
        a.extend_from_slice(&self.stem);
        b.extend_from_slice(&self.stem);
        Some((a, b))
    }
}
