//! Destination-rooted routing functions and executable routing axioms.
//!
//! The crate provides
//!
//! * exact-weight graphs and routing trees ([`graph`], [`format`]),
//! * the minimum spanning tree, shortest path and weakest link routing
//!   functions plus the alternatives used to probe axiom tightness
//!   ([`routing`]),
//! * one checker per routing axiom, each producing replayable witnesses
//!   ([`axioms`]),
//! * seeded corpus generators and brute-force optimality oracles
//!   ([`corpus`], [`oracle`]),
//! * the axiom-drop experiments ([`tightness`]).
//!
//! Everything is generic over an exact [`Scalar`]. [`Weight`] (an
//! arbitrary-precision rational) is the default used by the CLI; [`SmallWeight`]
//! trades range for speed.

pub mod axioms;
pub mod corpus;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod routing;
pub mod scalar;
pub mod tightness;

mod seed;

pub use graph::{EdgeId, GraphError, NodeId, Path, RoutingTree, WeightedGraph};
pub use num_rational::Ratio;
pub use routing::{AlgorithmId, RouteError, Router};
pub use scalar::Scalar;

/// Arbitrary-precision rational weight.
pub type Weight = num_rational::BigRational;

/// Machine-word rational weight. Arithmetic panics on overflow.
pub type SmallWeight = num_rational::Ratio<i64>;

pub type Graph = WeightedGraph<Weight>;
pub type Tree<'g> = RoutingTree<'g, Weight>;
