//! Executable routing axioms.
//!
//! Every checker draws concrete axiom instances (an edge to remove, a factor
//! to scale by, ...) and describes each one as a [`Transformation`]. Whether
//! an instance passes is decided by [`evaluate`], which is also what
//! [`replay`] calls on a stored [`Witness`]; a witness therefore always
//! reproduces exactly the outcome pair that was reported.

mod checks;
mod cycle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::corpus::Corpus;
use crate::format::{parse_graph, write_graph, FormatError};
use crate::graph::{EdgeId, NodeId, RoutingTree, WeightedGraph};
use crate::routing::{RouteError, Router};
use crate::scalar::Scalar;
use crate::seed;

pub use checks::{
    check_first_hop, check_monotonicity, check_path_cardinal_invariance, check_path_ordinal_invariance,
    check_robustness, check_scale_invariance, check_shift_invariance,
};
pub use cycle::CycleView;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Robustness,
    ScaleInvariance,
    ShiftInvariance,
    Monotonicity,
    InverseMonotonicity,
    FirstHop,
    PathCardinalInvariance,
    PathOrdinalInvariance,
}

impl AxiomId {
    pub const ALL: [AxiomId; 8] = [
        AxiomId::Robustness,
        AxiomId::ScaleInvariance,
        AxiomId::ShiftInvariance,
        AxiomId::Monotonicity,
        AxiomId::InverseMonotonicity,
        AxiomId::FirstHop,
        AxiomId::PathCardinalInvariance,
        AxiomId::PathOrdinalInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Robustness => "robustness",
            AxiomId::ScaleInvariance => "scale-invariance",
            AxiomId::ShiftInvariance => "shift-invariance",
            AxiomId::Monotonicity => "monotonicity",
            AxiomId::InverseMonotonicity => "inverse-monotonicity",
            AxiomId::FirstHop => "first-hop",
            AxiomId::PathCardinalInvariance => "path-cardinal-invariance",
            AxiomId::PathOrdinalInvariance => "path-ordinal-invariance",
        }
    }

    /// Short numeric code; `4` is upward and `4d` downward monotonicity.
    pub fn code(self) -> &'static str {
        match self {
            AxiomId::Robustness => "1",
            AxiomId::ScaleInvariance => "2",
            AxiomId::ShiftInvariance => "3",
            AxiomId::Monotonicity => "4",
            AxiomId::InverseMonotonicity => "4d",
            AxiomId::FirstHop => "5",
            AxiomId::PathCardinalInvariance => "6",
            AxiomId::PathOrdinalInvariance => "7",
        }
    }

    /// Axioms whose hypothesis only makes sense on single-cycle graphs.
    pub fn needs_unicyclic(self) -> bool {
        matches!(self, AxiomId::PathCardinalInvariance | AxiomId::PathOrdinalInvariance)
    }

    /// Parses a comma-separated list such as `1,2,3,4d,7`.
    pub fn parse_list(text: &str) -> Result<Vec<AxiomId>, UnknownAxiom> {
        text.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        let wanted = match wanted.as_str() {
            "4u" | "4up" | "4-up" => "4",
            "4-down" | "4down" => "4d",
            other => other,
        };
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == wanted || a.code() == wanted)
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Which way monotonicity pushes an edge weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Raising a non-tree edge far enough keeps it out of the tree.
    Up,
    /// Lowering a tree edge far enough drops it from the tree.
    Down,
}

/// How far an ordinal re-weighting may move an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrdinalReading {
    /// The new weight stays strictly between its nearest lower and higher
    /// neighbours among the two competing paths' edges.
    #[default]
    Conservative,
    /// Only edges of the same path that were not heavier must stay not
    /// heavier; the edge may rise freely.
    Literal,
}

/// One concrete axiom instance. Weights are kept as exact decimal or
/// fraction text so the record is independent of the scalar type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transformation {
    /// Remove `edge`; the path of `node` avoided it.
    RemoveEdge { edge: EdgeId, node: NodeId },
    /// Multiply every weight by `alpha`.
    Scale { alpha: String },
    /// Add `alpha` to every weight.
    Shift { alpha: String },
    /// Set the weight of `edge`; under monotonicity it must then be excluded.
    SetWeight { edge: EdgeId, weight: String, direction: Direction },
    /// Replace the weights of the listed edges, none of which joins `node`
    /// to a candidate first hop.
    Reweight { node: NodeId, weights: Vec<(EdgeId, String)> },
    /// Add `alpha` to one edge private to each of the two cycle paths of `node`.
    CardinalShift { node: NodeId, edges: [EdgeId; 2], alpha: String },
    /// Move `edge` to `weight` without changing its rank among the two cycle
    /// paths of `node`.
    OrdinalMove { node: NodeId, edge: EdgeId, weight: String, reading: OrdinalReading },
}

/// What an axiom instance compares.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// A tree path, as its node sequence.
    Path(Vec<NodeId>),
    /// A whole tree, as its sorted edge set.
    Tree(Vec<EdgeId>),
    /// Whether an edge belongs to the tree.
    Membership { edge: EdgeId, in_tree: bool },
    /// The first edge of a node's path.
    FirstHop(EdgeId),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Path(nodes) => {
                let parts: Vec<String> = nodes.iter().map(|v| v.to_string()).collect();
                write!(f, "path {}", parts.join("->"))
            }
            Outcome::Tree(edges) => {
                let parts: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
                write!(f, "tree {{{}}}", parts.join(","))
            }
            Outcome::Membership { edge, in_tree } => {
                write!(f, "{edge} {}", if *in_tree { "in tree" } else { "not in tree" })
            }
            Outcome::FirstHop(e) => write!(f, "first hop {e}"),
        }
    }
}

/// A replayable axiom violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The graph in the line-oriented file format, destination included.
    pub graph: String,
    pub destination: NodeId,
    pub transformation: Transformation,
    pub expected: Outcome,
    pub actual: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub algorithm: String,
    pub seed: u64,
    pub trials: usize,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    pub violations: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(axiom: AxiomId, algorithm: String, seed: u64) -> Self {
        AxiomReport {
            axiom,
            algorithm,
            seed,
            trials: 0,
            skipped: 0,
            skip_reasons: BTreeMap::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passes(&self) -> usize {
        self.trials - self.skipped - self.violations.len()
    }

    /// Folds another report on the same axiom into this one.
    pub fn absorb(&mut self, other: AxiomReport) {
        self.trials += other.trials;
        self.skipped += other.skipped;
        for (reason, count) in other.skip_reasons {
            *self.skip_reasons.entry(reason).or_default() += count;
        }
        self.violations.extend(other.violations);
        for note in other.notes {
            if !self.notes.contains(&note) {
                self.notes.push(note);
            }
        }
    }

    pub(crate) fn skip(&mut self, reason: impl Into<String>) {
        self.trials += 1;
        self.skipped += 1;
        *self.skip_reasons.entry(reason.into()).or_default() += 1;
    }

    pub fn summary(&self) -> String {
        format!(
            "{:<26} {:<22} trials={:<6} skipped={:<6} violations={}",
            self.axiom.name(),
            self.algorithm,
            self.trials,
            self.skipped,
            self.violations.len()
        )
    }
}

/// Tunables shared by the sampling checkers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckParams {
    /// Random factors (scale, shift) or random instances (cardinal, ordinal)
    /// per graph, on top of any fixed probes.
    pub samples: usize,
    /// Random first-hop trials per graph.
    pub first_hop_trials: usize,
    /// Random re-weightings of the other edges tried by monotonicity, in
    /// addition to the original weights.
    pub reweightings: usize,
    pub ordinal_reading: OrdinalReading,
    /// Stop checking a graph after this many violations.
    pub max_violations_per_graph: Option<usize>,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            samples: 20,
            first_hop_trials: 20,
            reweightings: 3,
            ordinal_reading: OrdinalReading::Conservative,
            max_violations_per_graph: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("graph is not unicyclic ({m} edges for {n} nodes)")]
    NotUnicyclic { n: usize, m: usize },
    #[error(transparent)]
    Route(#[from] RouteError),
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("witness destination {0} disagrees with its graph")]
    DestinationMismatch(NodeId),
    #[error("transformation is not an axiom instance: {0}")]
    NotApplicable(String),
}

/// Why a drawn instance could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip(pub String);

impl Skip {
    fn new(reason: impl Into<String>) -> Self {
        Skip(reason.into())
    }
}

fn weight_of<W: Scalar>(text: &str) -> Result<W, Skip> {
    W::parse_exact(text).ok_or_else(|| Skip::new(format!("weight `{text}` is not representable")))
}

fn tree_outcome<W: Scalar>(t: &RoutingTree<'_, W>) -> Outcome {
    Outcome::Tree(t.edges().iter().copied().collect())
}

fn path_outcome<W: Scalar>(t: &RoutingTree<'_, W>, v: NodeId) -> Outcome {
    Outcome::Path(t.path(v).nodes().to_vec())
}

/// Candidate first hops of `v`: neighbours whose tree path avoids `v`.
pub(crate) fn candidates<W: Scalar>(t: &RoutingTree<'_, W>, v: NodeId) -> Vec<NodeId> {
    t.graph().neighbors(v).iter().copied().filter(|&c| !t.path_passes(c, v)).collect()
}

/// Applies `t` to `(g, d)` and returns the (expected, actual) pair the axiom
/// compares, or the reason the instance does not satisfy the axiom's
/// hypothesis.
pub fn evaluate<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    t: &Transformation,
) -> Result<(Outcome, Outcome), Skip>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let base = router.route(g, d).map_err(|e| Skip::new(format!("original graph rejected: {e}")))?;
    evaluate_with(router, &base, t)
}

pub(crate) fn evaluate_with<W, R>(
    router: &R,
    base: &RoutingTree<'_, W>,
    t: &Transformation,
) -> Result<(Outcome, Outcome), Skip>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let g = base.graph();
    let d = base.destination();
    let reroute = |g2: &WeightedGraph<W>, f: &dyn Fn(&RoutingTree<'_, W>) -> Outcome| {
        router
            .route(g2, d)
            .map(|t2| f(&t2))
            .map_err(|e| Skip::new(format!("transformed graph rejected: {}", short_reason(&e))))
    };
    let node_ok = |v: NodeId| {
        if g.contains_node(v) {
            Ok(())
        } else {
            Err(Skip::new("node out of range"))
        }
    };
    match t {
        Transformation::RemoveEdge { edge, node } => {
            node_ok(*node)?;
            if !g.contains_edge(*edge) {
                return Err(Skip::new("edge not in graph"));
            }
            if base.path(*node).contains_edge(*edge) {
                return Err(Skip::new("path uses the removed edge"));
            }
            let g2 = g.remove_edge(*edge).map_err(|_| Skip::new("bridge"))?;
            let actual = reroute(&g2, &|t2| path_outcome(t2, *node))?;
            Ok((path_outcome(base, *node), actual))
        }
        Transformation::Scale { alpha } => {
            let a: W = weight_of(alpha)?;
            let g2 = g.transform_weights(&a, &W::zero()).map_err(|_| Skip::new("non-positive scale"))?;
            Ok((tree_outcome(base), reroute(&g2, &tree_outcome)?))
        }
        Transformation::Shift { alpha } => {
            let a: W = weight_of(alpha)?;
            let g2 = g.transform_weights(&W::one(), &a).expect("unit scale");
            Ok((tree_outcome(base), reroute(&g2, &tree_outcome)?))
        }
        Transformation::SetWeight { edge, weight, .. } => {
            if g.is_bridge(*edge) {
                return Err(Skip::new("bridge"));
            }
            let w: W = weight_of(weight)?;
            let g2 = g.set_edge_weight(*edge, w).map_err(|_| Skip::new("edge not in graph"))?;
            let actual = reroute(&g2, &|t2| Outcome::Membership { edge: *edge, in_tree: t2.contains(*edge) })?;
            Ok((Outcome::Membership { edge: *edge, in_tree: false }, actual))
        }
        Transformation::Reweight { node, weights } => {
            node_ok(*node)?;
            if *node == d {
                return Err(Skip::new("node is the destination"));
            }
            let cands = candidates(base, *node);
            let mut overrides = BTreeMap::new();
            for (e, text) in weights {
                if !g.contains_edge(*e) {
                    return Err(Skip::new("edge not in graph"));
                }
                if e.other(*node).is_some_and(|c| cands.contains(&c)) {
                    return Err(Skip::new("re-weights a candidate first-hop edge"));
                }
                overrides.insert(*e, weight_of::<W>(text)?);
            }
            let g2 = g.map_weights(|e, w| overrides.get(&e).cloned().unwrap_or_else(|| w.clone()));
            let t2 = router
                .route(&g2, d)
                .map_err(|e| Skip::new(format!("transformed graph rejected: {}", short_reason(&e))))?;
            let kept = cands.iter().all(|&c| !t2.path_passes(c, *node));
            let no_new = g.neighbors(*node).iter().filter(|c| !cands.contains(c)).all(|&c| t2.path_passes(c, *node));
            if !(kept && no_new) {
                return Err(Skip::new("first-hop side conditions fail after re-weighting"));
            }
            let hop = |t: &RoutingTree<'_, W>| Outcome::FirstHop(t.first_hop(*node).expect("not the destination"));
            Ok((hop(base), hop(&t2)))
        }
        Transformation::CardinalShift { node, edges, alpha } => {
            node_ok(*node)?;
            let view = CycleView::new(g, d).ok_or_else(|| Skip::new("graph is not unicyclic"))?;
            let (only1, only2) =
                view.private_arcs(*node).ok_or_else(|| Skip::new("node is not on the cycle away from its exit"))?;
            let [e1, e2] = *edges;
            let split = (only1.contains(&e1) && only2.contains(&e2)) || (only1.contains(&e2) && only2.contains(&e1));
            if !split {
                return Err(Skip::new("edges are not private to different paths"));
            }
            let a: W = weight_of(alpha)?;
            let g2 = g.map_weights(|e, w| if e == e1 || e == e2 { w.clone() + a.clone() } else { w.clone() });
            Ok((path_outcome(base, *node), reroute(&g2, &|t2| path_outcome(t2, *node))?))
        }
        Transformation::OrdinalMove { node, edge, weight, reading } => {
            node_ok(*node)?;
            let view = CycleView::new(g, d).ok_or_else(|| Skip::new("graph is not unicyclic"))?;
            let (p1, p2) = view.paths(*node).ok_or_else(|| Skip::new("node is not on the cycle away from its exit"))?;
            let w: W = weight_of(weight)?;
            ordinal_move_allowed(g, &p1, &p2, *edge, &w, *reading)?;
            let g2 = g.set_edge_weight(*edge, w).expect("edge on a path of g");
            Ok((path_outcome(base, *node), reroute(&g2, &|t2| path_outcome(t2, *node))?))
        }
    }
}

fn short_reason(e: &RouteError) -> &'static str {
    match e {
        RouteError::NonPositiveWeight(_) => "non-positive weight",
        RouteError::TooLarge { .. } => "too large",
        RouteError::Graph(_) => "invalid graph",
    }
}

/// Bounds on the new weight of `edge` that keep its rank among the edges of
/// the two paths: `(lower, upper)`, each exclusive and `None` when unbounded.
pub(crate) fn ordinal_bounds<W: Scalar>(
    g: &WeightedGraph<W>,
    p1: &[EdgeId],
    p2: &[EdgeId],
    edge: EdgeId,
    reading: OrdinalReading,
) -> Result<(Option<W>, Option<W>, bool), Skip> {
    let mut union: Vec<EdgeId> = p1.iter().chain(p2).copied().collect();
    union.sort();
    union.dedup();
    if !union.contains(&edge) {
        return Err(Skip::new("edge is on neither path"));
    }
    let w = g.weight(edge).expect("path edge");
    let others: Vec<&W> = union.iter().filter(|e| **e != edge).map(|e| g.weight(*e).expect("path edge")).collect();
    let below = others.iter().filter(|x| **x < w).max().cloned();
    let above = others.iter().filter(|x| **x > w).min().cloned();
    if below.is_none() || above.is_none() {
        return Err(Skip::new("no eligible edge"));
    }
    match reading {
        OrdinalReading::Conservative => {
            if others.contains(&w) {
                return Err(Skip::new("no eligible edge"));
            }
            Ok((below.cloned(), above.cloned(), false))
        }
        OrdinalReading::Literal => {
            let own = if p1.contains(&edge) { p1 } else { p2 };
            let floor = own
                .iter()
                .filter(|e| **e != edge)
                .map(|e| g.weight(*e).expect("path edge"))
                .filter(|x| *x <= w)
                .max()
                .cloned();
            Ok((floor, None, true))
        }
    }
}

fn ordinal_move_allowed<W: Scalar>(
    g: &WeightedGraph<W>,
    p1: &[EdgeId],
    p2: &[EdgeId],
    edge: EdgeId,
    new: &W,
    reading: OrdinalReading,
) -> Result<(), Skip> {
    let (lower, upper, inclusive) = ordinal_bounds(g, p1, p2, edge, reading)?;
    let above_lower = lower.is_none_or(|l| if inclusive { *new >= l } else { *new > l });
    let below_upper = upper.is_none_or(|u| *new < u);
    if above_lower && below_upper {
        Ok(())
    } else {
        Err(Skip::new("new weight changes the edge's rank"))
    }
}

/// Re-evaluates a stored witness, returning its (expected, actual) pair.
pub fn replay<W, R>(router: &R, witness: &Witness) -> Result<(Outcome, Outcome), ReplayError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let (g, d) = parse_graph::<W>(&witness.graph)?;
    if d != witness.destination {
        return Err(ReplayError::DestinationMismatch(witness.destination));
    }
    evaluate(router, &g, d, &witness.transformation).map_err(|Skip(reason)| ReplayError::NotApplicable(reason))
}

/// True iff replaying `witness` reproduces its recorded outcome pair and that
/// pair actually differs.
pub fn witness_replays<W, R>(router: &R, witness: &Witness) -> bool
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    matches!(replay(router, witness), Ok((e, a)) if e == witness.expected && a == witness.actual && e != a)
}

pub(crate) fn make_witness<W: Scalar>(
    g: &WeightedGraph<W>,
    d: NodeId,
    transformation: Transformation,
    expected: Outcome,
    actual: Outcome,
) -> Witness {
    Witness { graph: write_graph(g, d), destination: d, transformation, expected, actual }
}

/// Runs one axiom checker on one graph.
pub fn check<W, R>(
    axiom: AxiomId,
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    match axiom {
        AxiomId::Robustness => check_robustness(router, g, d, params),
        AxiomId::ScaleInvariance => check_scale_invariance(router, g, d, params.samples, seed, params),
        AxiomId::ShiftInvariance => check_shift_invariance(router, g, d, params.samples, seed, params),
        AxiomId::Monotonicity => check_monotonicity(router, g, d, Direction::Up, seed, params),
        AxiomId::InverseMonotonicity => check_monotonicity(router, g, d, Direction::Down, seed, params),
        AxiomId::FirstHop => check_first_hop(router, g, d, params.first_hop_trials, seed, params),
        AxiomId::PathCardinalInvariance => check_path_cardinal_invariance(router, g, d, params.samples, seed, params),
        AxiomId::PathOrdinalInvariance => check_path_ordinal_invariance(router, g, d, params.samples, seed, params),
    }
}

/// Runs each axiom over the corpus and aggregates one report per axiom.
///
/// Cycle axioms use the unicyclic sub-corpus, the others use every graph.
/// Instance `i` of axiom `a` is checked with a seed derived from
/// `(seed, a, i)`, so results do not depend on thread scheduling. A checker
/// error on an instance is recorded as a skipped trial.
pub fn run_suite<W, R>(
    router: &R,
    axioms: &[AxiomId],
    corpus: &Corpus<W>,
    seed: u64,
    params: &CheckParams,
) -> Vec<AxiomReport>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    axioms
        .iter()
        .map(|&axiom| {
            let instances: Vec<_> =
                if axiom.needs_unicyclic() { corpus.unicyclic.iter().collect() } else { corpus.all().collect() };
            let axiom_key = AxiomId::ALL.iter().position(|a| *a == axiom).expect("listed") as u64;
            let parts: Vec<AxiomReport> = instances
                .par_iter()
                .enumerate()
                .map(|(i, inst)| {
                    let sub_seed = seed::derive(seed, &[axiom_key, i as u64]);
                    check(axiom, router, &inst.graph, inst.destination, sub_seed, params).unwrap_or_else(|e| {
                        let mut r = AxiomReport::new(axiom, router.name(), sub_seed);
                        r.skip(format!("checker error: {e}"));
                        r
                    })
                })
                .collect();
            let mut report = AxiomReport::new(axiom, router.name(), seed);
            for part in parts {
                report.absorb(part);
            }
            report
        })
        .collect()
}
