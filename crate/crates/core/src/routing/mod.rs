//! Routing functions: each maps a connected weighted graph and a destination
//! to a spanning tree oriented toward that destination.
//!
//! The three characterized functions are [`mst_route`], [`shortest_path_route`]
//! and [`weakest_link_route`]. The remaining ones are alternatives that each
//! keep some routing axioms and give up others.

mod kruskal;
mod paths;
mod shortest;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, NodeId, RoutingTree, WeightedGraph};
use crate::scalar::Scalar;

pub use kruskal::{max_spanning_tree_route, mst_route, weakest_link_route, UnionFind};
pub use paths::{longest_path_route, longest_path_route_with, strongest_link_route, strongest_link_route_with};
pub use shortest::shortest_path_route;

/// Node limit for the brute-force path constructions.
pub const BRUTE_FORCE_MAX_NODES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RouteError {
    #[error("edge {0} has a non-positive weight")]
    NonPositiveWeight(EdgeId),
    #[error("{n} nodes exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a per-node best-path rule is turned into a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathConstruction {
    /// The best-ranked path consistent with earlier commitments, over all
    /// uncommitted nodes, is committed first (ties to the lower node id).
    Greedy,
    /// Each node picks, among neighbours one hop closer to the destination,
    /// the one whose extended path scores best. Restricts every node to
    /// minimum-hop paths.
    HopLayered,
}

/// The two readings of "strongest link".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrongestReading {
    /// Maximize the heaviest edge on the path.
    MaxOfMax,
    /// Minimize the lightest edge on the path.
    MinOfMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    Mst,
    ShortestPath,
    WeakestLink,
    MaxSpanningTree,
    LongestPath(PathConstruction),
    StrongestLink(StrongestReading, PathConstruction),
}

impl AlgorithmId {
    pub const LONGEST_PATH: AlgorithmId = AlgorithmId::LongestPath(PathConstruction::Greedy);
    pub const STRONGEST_LINK: AlgorithmId =
        AlgorithmId::StrongestLink(StrongestReading::MaxOfMax, PathConstruction::Greedy);

    /// The six base functions, with default variants.
    pub const BASE: [AlgorithmId; 6] = [
        AlgorithmId::Mst,
        AlgorithmId::ShortestPath,
        AlgorithmId::WeakestLink,
        AlgorithmId::MaxSpanningTree,
        AlgorithmId::LONGEST_PATH,
        AlgorithmId::STRONGEST_LINK,
    ];

    /// Every variant, including alternative constructions and readings.
    pub fn all() -> Vec<AlgorithmId> {
        use PathConstruction::*;
        use StrongestReading::*;
        let mut out =
            vec![AlgorithmId::Mst, AlgorithmId::ShortestPath, AlgorithmId::WeakestLink, AlgorithmId::MaxSpanningTree];
        for c in [Greedy, HopLayered] {
            out.push(AlgorithmId::LongestPath(c));
        }
        for r in [MaxOfMax, MinOfMin] {
            for c in [Greedy, HopLayered] {
                out.push(AlgorithmId::StrongestLink(r, c));
            }
        }
        out
    }

    pub fn name(self) -> String {
        use PathConstruction::*;
        use StrongestReading::*;
        let layered = |c: PathConstruction| if c == HopLayered { ":layered" } else { "" };
        match self {
            AlgorithmId::Mst => "mst".into(),
            AlgorithmId::ShortestPath => "shortest-path".into(),
            AlgorithmId::WeakestLink => "weakest-link".into(),
            AlgorithmId::MaxSpanningTree => "max-spanning-tree".into(),
            AlgorithmId::LongestPath(c) => format!("longest-path{}", layered(c)),
            AlgorithmId::StrongestLink(r, c) => {
                let reading = if r == MinOfMin { ":min-min" } else { "" };
                format!("strongest-link{reading}{}", layered(c))
            }
        }
    }

    pub fn requires_positive_weights(self) -> bool {
        self == AlgorithmId::ShortestPath
    }

    /// Whether larger weights are preferred (capacities rather than costs).
    /// Decides the natural monotonicity direction.
    pub fn prefers_heavy_edges(self) -> bool {
        matches!(
            self,
            AlgorithmId::WeakestLink
                | AlgorithmId::MaxSpanningTree
                | AlgorithmId::LongestPath(_)
                | AlgorithmId::StrongestLink(StrongestReading::MaxOfMax, _)
        )
    }

    pub fn route<'g, W: Scalar>(self, g: &'g WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'g, W>, RouteError> {
        if !g.contains_node(d) {
            return Err(GraphError::DestinationOutOfRange(d).into());
        }
        match self {
            AlgorithmId::Mst => Ok(mst_route(g, d)),
            AlgorithmId::ShortestPath => shortest_path_route(g, d),
            AlgorithmId::WeakestLink => Ok(weakest_link_route(g, d)),
            AlgorithmId::MaxSpanningTree => Ok(max_spanning_tree_route(g, d)),
            AlgorithmId::LongestPath(c) => longest_path_route_with(g, d, c),
            AlgorithmId::StrongestLink(r, c) => strongest_link_route_with(g, d, r, c),
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&AlgorithmId::name(*self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algorithm `{0}`")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        let aliases = [("sp", "shortest-path"), ("wl", "weakest-link"), ("max-st", "max-spanning-tree")];
        let wanted =
            aliases.iter().find(|(alias, _)| *alias == wanted).map(|(_, full)| full.to_string()).unwrap_or(wanted);
        AlgorithmId::all()
            .into_iter()
            .find(|a| AlgorithmId::name(*a) == wanted)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

impl Serialize for AlgorithmId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&AlgorithmId::name(*self))
    }
}

impl<'de> Deserialize<'de> for AlgorithmId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Anything that behaves as a routing function. Checkers are written against
/// this trait so hybrid functions can be tested the same way as the named ones.
pub trait Router<W: Scalar>: Sync {
    fn name(&self) -> String;

    fn route<'g>(&self, g: &'g WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'g, W>, RouteError>;
}

impl<W: Scalar> Router<W> for AlgorithmId {
    fn name(&self) -> String {
        AlgorithmId::name(*self)
    }

    fn route<'g>(&self, g: &'g WeightedGraph<W>, d: NodeId) -> Result<RoutingTree<'g, W>, RouteError> {
        AlgorithmId::route(*self, g, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in AlgorithmId::all() {
            assert_eq!(a.name().parse::<AlgorithmId>().unwrap(), a);
        }
        assert_eq!("SP".parse::<AlgorithmId>().unwrap(), AlgorithmId::ShortestPath);
        assert!("dijkstra".parse::<AlgorithmId>().is_err());
    }
}
