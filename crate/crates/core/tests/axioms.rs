mod common;

use std::collections::BTreeSet;

use common::{g_tri, graph};
use routelab::axioms::{
    check, check_first_hop, check_monotonicity, check_path_cardinal_invariance, check_robustness,
    check_shift_invariance, evaluate, run_suite, witness_replays, AxiomId, CheckParams, Direction, OrdinalReading,
    Outcome, Transformation, Witness,
};
use routelab::corpus::{Corpus, CorpusSpec};
use routelab::format::parse_graph;
use routelab::oracle::enumerate_simple_paths;
use routelab::{AlgorithmId, EdgeId, Graph, NodeId, RoutingTree, Scalar, Weight};

fn params() -> CheckParams {
    CheckParams::default()
}

fn e(a: usize, b: usize) -> EdgeId {
    EdgeId::new(a, b)
}

fn tree(pairs: &[(usize, usize)]) -> Outcome {
    let s: BTreeSet<EdgeId> = pairs.iter().map(|&(a, b)| e(a, b)).collect();
    Outcome::Tree(s.into_iter().collect())
}

fn path(nodes: &[usize]) -> Outcome {
    Outcome::Path(nodes.iter().map(|&v| NodeId(v)).collect())
}

#[test]
fn robustness_examples() {
    let r = check_robustness(&AlgorithmId::Mst, &g_tri(), NodeId(2), &params()).unwrap();
    assert!(r.passed());
    assert!(r.trials > 0);

    let line = graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3)]);
    let r = check_robustness(&AlgorithmId::ShortestPath, &line, NodeId(0), &params()).unwrap();
    assert_eq!((r.trials, r.skipped), (3, 3));
}

#[test]
fn scale_and_shift_examples() {
    let g = g_tri();
    let d = NodeId(2);
    let scale = |a: &str| Transformation::Scale { alpha: a.into() };
    let shift = |a: &str| Transformation::Shift { alpha: a.into() };
    let mst_tree = tree(&[(0, 1), (1, 2)]);

    for t in [scale("1"), scale("2"), shift("0"), shift("2")] {
        assert_eq!(evaluate(&AlgorithmId::Mst, &g, d, &t).unwrap(), (mst_tree.clone(), mst_tree.clone()));
    }
    let sp = AlgorithmId::ShortestPath;
    assert_eq!(evaluate(&sp, &g, d, &scale("1000")).unwrap(), (mst_tree.clone(), mst_tree.clone()));
    assert_eq!(evaluate(&sp, &g, d, &shift("2")).unwrap(), (mst_tree, tree(&[(0, 2), (1, 2)])));

    let params = CheckParams { samples: 100, ..params() };
    let r = check_shift_invariance(&sp, &g, d, 100, 1, &params).unwrap();
    assert!(!r.passed());
    assert!(r.violations.iter().all(|w| witness_replays::<Weight, _>(&sp, w)));
}

#[test]
fn monotonicity_examples() {
    let g = g_tri();
    let d = NodeId(2);
    let r = check_monotonicity(&AlgorithmId::Mst, &g, d, Direction::Up, 1, &params()).unwrap();
    assert!(r.passed());

    let raise = Transformation::SetWeight { edge: e(1, 2), weight: "4".into(), direction: Direction::Up };
    let (expected, actual) = evaluate(&AlgorithmId::MaxSpanningTree, &g, d, &raise).unwrap();
    assert_ne!(expected, actual);
    let r = check_monotonicity(&AlgorithmId::MaxSpanningTree, &g, d, Direction::Up, 1, &params()).unwrap();
    assert!(!r.passed());

    let tri_pendant = graph(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 3), (0, 3, 2)]);
    let bridge = Transformation::SetWeight { edge: e(0, 3), weight: "100".into(), direction: Direction::Up };
    assert!(evaluate(&AlgorithmId::Mst, &tri_pendant, NodeId(2), &bridge).is_err());
}

#[test]
fn first_hop_examples() {
    let star = graph(4, &[(0, 1, 4), (0, 2, 9), (0, 3, 1)]);
    for algo in AlgorithmId::BASE {
        let r = check_first_hop(&algo, &star, NodeId(0), 20, 1, &params()).unwrap();
        assert!(r.passed());
    }

    // lengthening the road beyond node 1 moves node 0 over to node 2
    let square = graph(4, &[(0, 1, 1), (0, 2, 2), (1, 3, 1), (2, 3, 1)]);
    let t = Transformation::Reweight { node: NodeId(0), weights: vec![(e(1, 3), "3".into())] };
    let (expected, actual) = evaluate(&AlgorithmId::ShortestPath, &square, NodeId(3), &t).unwrap();
    assert_eq!(expected, Outcome::FirstHop(e(0, 1)));
    assert_eq!(actual, Outcome::FirstHop(e(0, 2)));
    // re-weighting a candidate's own edge is outside the axiom
    let bad = Transformation::Reweight { node: NodeId(0), weights: vec![(e(0, 1), "3".into())] };
    assert!(evaluate(&AlgorithmId::ShortestPath, &square, NodeId(3), &bad).is_err());
}

#[test]
fn cardinal_examples() {
    let g = g_tri();
    let d = NodeId(2);
    let shift =
        |alpha: &str| Transformation::CardinalShift { node: NodeId(0), edges: [e(0, 1), e(0, 2)], alpha: alpha.into() };
    assert_eq!(evaluate(&AlgorithmId::ShortestPath, &g, d, &shift("2")).unwrap(), (path(&[0, 1, 2]), path(&[0, 1, 2])));
    assert_eq!(evaluate(&AlgorithmId::Mst, &g, d, &shift("0")).unwrap(), (path(&[0, 1, 2]), path(&[0, 1, 2])));
    // a negative shift makes (1,2) the heaviest cycle edge
    assert_eq!(evaluate(&AlgorithmId::Mst, &g, d, &shift("-3")).unwrap(), (path(&[0, 1, 2]), path(&[0, 2])));
    let r = check_path_cardinal_invariance(&AlgorithmId::Mst, &g, d, 20, 1, &params()).unwrap();
    assert!(!r.passed());

    let not_unicyclic = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (0, 2, 1)]);
    assert!(check(
        AxiomId::PathCardinalInvariance,
        &AlgorithmId::ShortestPath,
        &not_unicyclic,
        NodeId(0),
        1,
        &params()
    )
    .is_err());
}

#[test]
fn ordinal_examples() {
    // node 0 reaches 3 by 0-1-3 (sum 10) or 0-2-3 (sum 11)
    let square = graph(4, &[(0, 1, 4), (1, 3, 6), (0, 2, 3), (2, 3, 8)]);
    let d = NodeId(3);
    let mv = |weight: &str| Transformation::OrdinalMove {
        node: NodeId(0),
        edge: e(1, 3),
        weight: weight.into(),
        reading: OrdinalReading::Conservative,
    };
    assert_eq!(
        evaluate(&AlgorithmId::WeakestLink, &square, d, &mv("7")).unwrap(),
        (path(&[0, 1, 3]), path(&[0, 1, 3]))
    );
    assert_eq!(
        evaluate(&AlgorithmId::ShortestPath, &square, d, &mv("6")).unwrap(),
        (path(&[0, 1, 3]), path(&[0, 1, 3]))
    );
    assert_eq!(
        evaluate(&AlgorithmId::ShortestPath, &square, d, &mv("15/2")).unwrap(),
        (path(&[0, 1, 3]), path(&[0, 2, 3]))
    );
    // passing the next heavier edge changes the order and is rejected
    assert!(evaluate(&AlgorithmId::ShortestPath, &square, d, &mv("9")).is_err());
}

fn small_corpus(seed: u64) -> Corpus<Weight> {
    let general = CorpusSpec { graph_count: 40, max_nodes: 6, ..CorpusSpec::standard_general(seed) };
    let unicyclic = CorpusSpec { graph_count: 30, max_nodes: 6, ..CorpusSpec::standard_unicyclic(seed) };
    Corpus::new(&general, &unicyclic).unwrap()
}

#[test]
fn reports_are_seed_deterministic() {
    let corpus = small_corpus(5);
    for algo in [AlgorithmId::ShortestPath, AlgorithmId::LONGEST_PATH] {
        let a = run_suite(&algo, &AxiomId::ALL, &corpus, 11, &params());
        let b = run_suite(&algo, &AxiomId::ALL, &corpus, 11, &params());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

fn weight(text: &str) -> Weight {
    Weight::parse_exact(text).unwrap()
}

fn outcome_path(t: &RoutingTree<'_, Weight>, v: NodeId) -> Vec<NodeId> {
    t.path(v).nodes().to_vec()
}

/// Re-derives the violation from the witness with graph operations only and
/// confirms the axiom's conclusion fails.
fn independently_violated(algo: AlgorithmId, w: &Witness) -> bool {
    let (g, d): (Graph, NodeId) = parse_graph(&w.graph).unwrap();
    let base = algo.route(&g, d).unwrap();
    match &w.transformation {
        Transformation::RemoveEdge { edge, node } => {
            let g2 = g.remove_edge(*edge).unwrap();
            let t2 = algo.route(&g2, d).unwrap();
            !base.path(*node).contains_edge(*edge) && outcome_path(&base, *node) != outcome_path(&t2, *node)
        }
        Transformation::Scale { alpha } => {
            let a = weight(alpha);
            let g2 = g.map_weights(|_, x| x.clone() * a.clone());
            a > Weight::from_int(0) && base.edges() != algo.route(&g2, d).unwrap().edges()
        }
        Transformation::Shift { alpha } => {
            let a = weight(alpha);
            let g2 = g.map_weights(|_, x| x.clone() + a.clone());
            base.edges() != algo.route(&g2, d).unwrap().edges()
        }
        Transformation::SetWeight { edge, weight: x, .. } => {
            let g2 = g.set_edge_weight(*edge, weight(x)).unwrap();
            !g.is_bridge(*edge) && algo.route(&g2, d).unwrap().contains(*edge)
        }
        Transformation::Reweight { node, weights } => {
            let cands: Vec<NodeId> =
                g.neighbors(*node).iter().copied().filter(|&c| !base.path(c).contains_node(*node)).collect();
            let touches_candidate = weights.iter().any(|(e, _)| cands.iter().any(|&c| *e == EdgeId::between(*node, c)));
            let g2 = g
                .map_weights(|e, x| weights.iter().find(|(f, _)| *f == e).map(|(_, t)| weight(t)).unwrap_or(x.clone()));
            let t2 = algo.route(&g2, d).unwrap();
            let same_candidates =
                g.neighbors(*node).iter().all(|&c| t2.path(c).contains_node(*node) != cands.contains(&c));
            !touches_candidate && same_candidates && base.first_hop(*node) != t2.first_hop(*node)
        }
        Transformation::CardinalShift { node, edges, alpha } => {
            let paths = enumerate_simple_paths(&g, *node, d).unwrap();
            let on = |p: usize, e: EdgeId| paths[p].contains_edge(e);
            let split = paths.len() == 2
                && ((on(0, edges[0]) && !on(1, edges[0]) && on(1, edges[1]) && !on(0, edges[1]))
                    || (on(1, edges[0]) && !on(0, edges[0]) && on(0, edges[1]) && !on(1, edges[1])));
            let a = weight(alpha);
            let g2 = g.map_weights(|e, x| if edges.contains(&e) { x.clone() + a.clone() } else { x.clone() });
            split && outcome_path(&base, *node) != outcome_path(&algo.route(&g2, d).unwrap(), *node)
        }
        Transformation::OrdinalMove { node, edge, weight: x, reading } => {
            let paths = enumerate_simple_paths(&g, *node, d).unwrap();
            let new = weight(x);
            let old = g.weight(*edge).unwrap();
            let union: BTreeSet<EdgeId> = paths.iter().flat_map(|p| p.edges()).collect();
            let order_kept = union.iter().filter(|f| *f != edge).all(|f| {
                let other = g.weight(*f).unwrap();
                match reading {
                    OrdinalReading::Conservative => old.cmp(other) == new.cmp(other),
                    OrdinalReading::Literal => {
                        old < other
                            || new >= *other
                            || !paths.iter().any(|p| p.contains_edge(*f) && p.contains_edge(*edge))
                    }
                }
            });
            let g2 = g.set_edge_weight(*edge, new).unwrap();
            paths.len() == 2
                && order_kept
                && outcome_path(&base, *node) != outcome_path(&algo.route(&g2, d).unwrap(), *node)
        }
    }
}

#[test]
fn witnesses_replay_and_are_sound() {
    let corpus = small_corpus(2);
    let mut seen = 0;
    for algo in AlgorithmId::all() {
        for report in run_suite(&algo, &AxiomId::ALL, &corpus, 3, &params()) {
            for w in &report.violations {
                seen += 1;
                assert!(witness_replays::<Weight, _>(&algo, w), "{algo} {}: {w:?}", report.axiom);
                assert!(independently_violated(algo, w), "{algo} {}: {w:?}", report.axiom);
            }
        }
    }
    assert!(seen > 100);
}
