use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{
    candidates, evaluate_with, make_witness, ordinal_bounds, AxiomId, AxiomReport, CheckError, CheckParams, CycleView,
    Direction, Skip, Transformation,
};
use crate::graph::{EdgeId, NodeId, RoutingTree, WeightedGraph};
use crate::routing::Router;
use crate::scalar::Scalar;
use crate::seed;

const SCALE_PROBES: [(i64, i64); 5] = [(1, 2), (2, 1), (37, 10), (1, 1000), (1000, 1)];
const SHIFT_PROBES: [(i64, i64); 4] = [(-5, 1), (-1, 10), (1, 1), (42, 1)];
/// Monotonicity searches thresholds `max|w| + 2^k` for `k` up to this.
const MAX_DOUBLING: u32 = 40;
const MONOTONE_OFFSET: i64 = 17;

fn rational<W: Scalar>(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> W {
    let den = rng.gen_range(1..=max_den);
    W::from_ratio(rng.gen_range(lo * den..=hi * den), den)
}

/// Positive weight in `(0, 2 * scale]`, used to re-weight untouched edges.
/// Tying the range to the graph's own weights keeps both "lighter than" and
/// "heavier than" outcomes likely.
fn random_weight<W: Scalar>(rng: &mut ChaCha8Rng, scale: &W) -> W {
    let den = rng.gen_range(1..=100);
    scale.clone() * W::from_ratio(rng.gen_range(1..=2 * den), den)
}

fn weight_scale<W: Scalar>(g: &WeightedGraph<W>) -> W {
    let top = g.max_abs_weight();
    if top.is_zero() {
        W::one()
    } else {
        top
    }
}

/// Accumulates trial outcomes for one checker run on one graph.
struct Run<'a, 'g, W: Scalar, R: ?Sized> {
    router: &'a R,
    base: &'a RoutingTree<'g, W>,
    report: AxiomReport,
    limit: Option<usize>,
}

impl<'a, 'g, W: Scalar, R: Router<W> + ?Sized> Run<'a, 'g, W, R> {
    fn new(axiom: AxiomId, router: &'a R, base: &'a RoutingTree<'g, W>, seed: u64, params: &CheckParams) -> Self {
        Run {
            router,
            base,
            report: AxiomReport::new(axiom, router.name(), seed),
            limit: params.max_violations_per_graph,
        }
    }

    fn saturated(&self) -> bool {
        self.limit.is_some_and(|l| self.report.violations.len() >= l)
    }

    /// Evaluates one instance and records pass, skip or violation.
    /// Returns whether the instance was a violation.
    fn trial(&mut self, t: Transformation) -> bool {
        match evaluate_with(self.router, self.base, &t) {
            Err(Skip(reason)) => {
                self.report.skip(reason);
                false
            }
            Ok((expected, actual)) => {
                self.report.trials += 1;
                if expected == actual {
                    return false;
                }
                let g = self.base.graph();
                self.report.violations.push(make_witness(g, self.base.destination(), t, expected, actual));
                true
            }
        }
    }

    fn finish(self) -> AxiomReport {
        self.report
    }
}

fn base_tree<'g, W: Scalar, R: Router<W> + ?Sized>(
    router: &R,
    g: &'g WeightedGraph<W>,
    d: NodeId,
) -> Result<RoutingTree<'g, W>, CheckError> {
    Ok(router.route(g, d)?)
}

/// Removes each non-bridge edge once and compares the path of every node
/// that did not use it. One trial per edge; bridges are skipped.
pub fn check_robustness<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::Robustness, router, &base, 0, params);
    for e in g.edge_ids() {
        if run.saturated() {
            break;
        }
        let Ok(g2) = g.remove_edge(e) else {
            run.report.skip("bridge");
            continue;
        };
        let after = match router.route(&g2, d) {
            Ok(t) => t,
            Err(err) => {
                run.report.skip(format!("transformed graph rejected: {err}"));
                continue;
            }
        };
        let changed = g.nodes().find(|&v| {
            let before = base.path(v);
            !before.contains_edge(e) && before != after.path(v)
        });
        match changed {
            Some(v) => {
                let hit = run.trial(Transformation::RemoveEdge { edge: e, node: v });
                debug_assert!(hit, "witness must reproduce the changed path");
            }
            None => run.report.trials += 1,
        }
    }
    Ok(run.finish())
}

/// Fixed factors plus `samples` random positive rationals; the tree must
/// not change.
pub fn check_scale_invariance<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    samples: usize,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::ScaleInvariance, router, &base, seed, params);
    let mut rng = seed::rng(seed, &[2]);
    let fixed = SCALE_PROBES.iter().map(|&(p, q)| W::from_ratio(p, q));
    let random: Vec<W> = (0..samples)
        .map(|_| {
            let den = rng.gen_range(1..=1000);
            W::from_ratio(rng.gen_range(1..=1000 * den), den)
        })
        .collect();
    for alpha in fixed.chain(random) {
        if run.saturated() {
            break;
        }
        run.trial(Transformation::Scale { alpha: alpha.to_string() });
    }
    Ok(run.finish())
}

/// Fixed offsets plus `samples` random rationals in `[-50, 50]`; the tree
/// must not change. Offsets the algorithm rejects are skipped.
pub fn check_shift_invariance<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    samples: usize,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::ShiftInvariance, router, &base, seed, params);
    let mut rng = seed::rng(seed, &[3]);
    let fixed = SHIFT_PROBES.iter().map(|&(p, q)| W::from_ratio(p, q));
    let random: Vec<W> = (0..samples).map(|_| rational(&mut rng, -50, 50, 10)).collect();
    for alpha in fixed.chain(random) {
        if run.saturated() {
            break;
        }
        run.trial(Transformation::Shift { alpha: alpha.to_string() });
    }
    Ok(run.finish())
}

/// Threshold search for (inverse) monotonicity.
///
/// The original weights and `params.reweightings` random re-weightings are
/// each examined. Under every weighting, each non-bridge edge outside the
/// tree (inside it, for [`Direction::Down`]) is pushed to
/// `max|w| + 2^k` (`-max|w| - 2^k`) for growing `k` until it leaves the
/// tree; two further probes beyond the threshold must keep it out. No
/// threshold up to `2^40`, or a probe that brings the edge back, is a
/// violation. Bridges are skipped.
pub fn check_monotonicity<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    direction: Direction,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let axiom = match direction {
        Direction::Up => AxiomId::Monotonicity,
        Direction::Down => AxiomId::InverseMonotonicity,
    };
    let mut rng = seed::rng(seed, &[4]);
    let scale = weight_scale(g);
    let mut weightings = vec![g.clone()];
    for _ in 0..params.reweightings {
        weightings.push(g.map_weights(|_, _| random_weight(&mut rng, &scale)));
    }
    let mut report = AxiomReport::new(axiom, router.name(), seed);
    report
        .notes
        .push(format!("weights of other edges sampled: original plus {} random re-weightings", params.reweightings));
    for (i, gi) in weightings.iter().enumerate() {
        let base = match router.route(gi, d) {
            Ok(t) => t,
            Err(e) if i == 0 => return Err(e.into()),
            Err(e) => {
                report.skip(format!("re-weighted graph rejected: {e}"));
                continue;
            }
        };
        let mut run = Run::new(axiom, router, &base, seed, params);
        run.limit = params.max_violations_per_graph.map(|l| l.saturating_sub(report.violations.len()));
        for e in gi.edge_ids() {
            if run.saturated() {
                break;
            }
            if gi.is_bridge(e) {
                run.report.skip("bridge");
                continue;
            }
            let in_tree = base.contains(e);
            if in_tree != (direction == Direction::Down) {
                continue;
            }
            threshold_search(&mut run, e, direction);
        }
        report.absorb(run.finish());
        if params.max_violations_per_graph.is_some_and(|l| report.violations.len() >= l) {
            break;
        }
    }
    Ok(report)
}

fn threshold_search<W: Scalar, R: Router<W> + ?Sized>(run: &mut Run<'_, '_, W, R>, e: EdgeId, direction: Direction) {
    let g = run.base.graph();
    let sign = match direction {
        Direction::Up => W::one(),
        Direction::Down => -W::one(),
    };
    let probe = |w: &W| Transformation::SetWeight { edge: e, weight: w.to_string(), direction };
    let membership = |run: &Run<'_, '_, W, R>, w: &W| -> Result<bool, Skip> {
        match evaluate_with(run.router, run.base, &probe(w))? {
            (_, super::Outcome::Membership { in_tree, .. }) => Ok(in_tree),
            _ => unreachable!("set-weight evaluates to membership"),
        }
    };
    let top = g.max_abs_weight();
    let mut last = None;
    for k in 0..=MAX_DOUBLING {
        let m = sign.clone() * (top.clone() + W::pow2(k));
        match membership(run, &m) {
            Err(Skip(reason)) => {
                run.report.skip(reason);
                return;
            }
            Ok(true) => last = Some(m),
            Ok(false) => {
                let beyond = [m.clone() + sign.clone() * W::from_int(MONOTONE_OFFSET), m.clone() * W::from_int(2)];
                for w in beyond {
                    match membership(run, &w) {
                        Err(Skip(reason)) => {
                            run.report.skip(reason);
                            return;
                        }
                        Ok(true) => {
                            run.trial(probe(&w));
                            return;
                        }
                        Ok(false) => {}
                    }
                }
                run.report.trials += 1;
                return;
            }
        }
    }
    run.trial(probe(&last.expect("at least one probe")));
}

/// Random node, random weights on every edge except those joining it to its
/// candidate first hops; if the side conditions still hold, the first hop
/// must not change.
pub fn check_first_hop<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    trials: usize,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::FirstHop, router, &base, seed, params);
    let mut rng = seed::rng(seed, &[5]);
    let others: Vec<NodeId> = g.nodes().filter(|&v| v != d).collect();
    let scale = weight_scale(g);
    for _ in 0..trials {
        if run.saturated() {
            break;
        }
        let Some(&v) = others.choose(&mut rng) else {
            run.report.skip("no node other than the destination");
            continue;
        };
        let fixed = candidates(&base, v);
        let weights = g
            .edge_ids()
            .filter(|e| !e.other(v).is_some_and(|c| fixed.contains(&c)))
            .map(|e| (e, random_weight(&mut rng, &scale).to_string()))
            .collect();
        run.trial(Transformation::Reweight { node: v, weights });
    }
    Ok(run.finish())
}

fn unicyclic_view<W: Scalar>(g: &WeightedGraph<W>, d: NodeId) -> Result<CycleView, CheckError> {
    CycleView::new(g, d).ok_or(CheckError::NotUnicyclic { n: g.node_count(), m: g.edge_count() })
}

/// Random cycle node, one private edge from each of its two paths, random
/// offset in `[-10, 10]` added to both; the node's path must not change.
pub fn check_path_cardinal_invariance<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    samples: usize,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let view = unicyclic_view(g, d)?;
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::PathCardinalInvariance, router, &base, seed, params);
    let mut rng = seed::rng(seed, &[6]);
    for _ in 0..samples {
        if run.saturated() {
            break;
        }
        let v = *view.branching_nodes().choose(&mut rng).expect("a cycle has at least three nodes");
        let (a, b) = view.private_arcs(v).expect("branching node");
        let e1 = *a.choose(&mut rng).expect("non-empty arc");
        let e2 = *b.choose(&mut rng).expect("non-empty arc");
        let alpha: W = rational(&mut rng, -10, 10, 10);
        run.trial(Transformation::CardinalShift { node: v, edges: [e1, e2], alpha: alpha.to_string() });
    }
    Ok(run.finish())
}

/// Random cycle node and random non-extremal edge of its two paths, moved to
/// a random weight allowed by `params.ordinal_reading`; the node's path must
/// not change. Instances without an eligible edge are skipped.
pub fn check_path_ordinal_invariance<W, R>(
    router: &R,
    g: &WeightedGraph<W>,
    d: NodeId,
    samples: usize,
    seed: u64,
    params: &CheckParams,
) -> Result<AxiomReport, CheckError>
where
    W: Scalar,
    R: Router<W> + ?Sized,
{
    let view = unicyclic_view(g, d)?;
    let base = base_tree(router, g, d)?;
    let mut run = Run::new(AxiomId::PathOrdinalInvariance, router, &base, seed, params);
    let mut rng = seed::rng(seed, &[7]);
    let reading = params.ordinal_reading;
    for _ in 0..samples {
        if run.saturated() {
            break;
        }
        let v = *view.branching_nodes().choose(&mut rng).expect("a cycle has at least three nodes");
        let (p1, p2) = view.paths(v).expect("branching node");
        let mut union: Vec<EdgeId> = p1.iter().chain(&p2).copied().collect();
        union.sort();
        union.dedup();
        let eligible: Vec<(EdgeId, Option<W>, Option<W>)> = union
            .iter()
            .filter_map(|&e| ordinal_bounds(g, &p1, &p2, e, reading).ok().map(|(lo, hi, _)| (e, lo, hi)))
            .collect();
        let Some((e, lower, upper)) = eligible.choose(&mut rng).cloned() else {
            run.report.skip("no eligible edge");
            continue;
        };
        let spread = g.max_abs_weight() + W::one();
        let den = rng.gen_range(2..=20);
        let weight = match (lower, upper) {
            (Some(lo), Some(hi)) => {
                let t = W::from_ratio(rng.gen_range(1..den), den);
                lo.clone() + (hi - lo) * t
            }
            (Some(lo), None) => lo + spread * W::from_ratio(rng.gen_range(0..=2 * den), den),
            (None, _) => {
                let current = g.weight(e).expect("path edge").clone();
                current + spread * W::from_ratio(rng.gen_range(-den..=den), den)
            }
        };
        run.trial(Transformation::OrdinalMove { node: v, edge: e, weight: weight.to_string(), reading });
    }
    Ok(run.finish())
}
