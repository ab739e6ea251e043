#![allow(dead_code)]

use proptest::prelude::*;
use routelab::{Graph, NodeId, Scalar, Weight};

pub fn graph(n: usize, edges: &[(usize, usize, i64)]) -> Graph {
    Graph::new(n, edges.iter().map(|&(a, b, w)| (a, b, Weight::from_int(w)))).unwrap()
}

pub fn w(x: i64) -> Weight {
    Weight::from_int(x)
}

/// {(0,1)=1, (1,2)=1, (0,2)=3}
pub fn g_tri() -> Graph {
    graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)])
}

/// {(0,1)=5, (1,2)=1, (0,2)=2}
pub fn g_wl() -> Graph {
    graph(3, &[(0, 1, 5), (1, 2, 1), (0, 2, 2)])
}

/// Connected graph on `nodes` nodes: a random spanning tree plus random
/// extra edges, integer weights in `lo..=hi` (ties allowed).
pub fn connected(nodes: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = (Graph, NodeId)> {
    nodes.prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(lo..=hi, m),
            0..n,
        )
            .prop_map(move |(parents, extra, weights, d)| {
                let mut chosen = vec![false; m];
                for (i, p) in parents.iter().enumerate() {
                    let child = i + 1;
                    let parent = p.index(child);
                    chosen[pairs.iter().position(|&e| e == (parent, child)).unwrap()] = true;
                }
                let edges: Vec<(usize, usize, Weight)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| chosen[*i] || extra[*i])
                    .map(|(i, &(a, b))| (a, b, Weight::from_int(weights[i])))
                    .collect();
                (Graph::new(n, edges).unwrap(), NodeId(d))
            })
    })
}
