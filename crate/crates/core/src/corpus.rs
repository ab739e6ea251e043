//! Seeded generators for checker corpora.
//!
//! Instance `i` of a spec depends only on `(spec.seed, i)`, so corpora can be
//! generated in parallel and any single instance regenerated on its own.

use num_integer::Integer;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

use crate::graph::{EdgeId, NodeId, WeightedGraph};
use crate::scalar::Scalar;
use crate::seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightDistribution {
    /// Integers in `lo..=hi`.
    UniformInt { lo: i64, hi: i64 },
    /// Multiples of `1/den` in `[lo, hi]`.
    UniformRational { lo: i64, hi: i64, den: i64 },
}

impl WeightDistribution {
    fn grid(self) -> (i64, i64, i64) {
        match self {
            WeightDistribution::UniformInt { lo, hi } => (lo, hi, 1),
            WeightDistribution::UniformRational { lo, hi, den } => (lo, hi, den),
        }
    }

    /// Number of distinct values the distribution can produce.
    fn support(self) -> u64 {
        let (lo, hi, den) = self.grid();
        ((hi - lo) as u64) * den as u64 + 1
    }

    fn sample<W: Scalar>(self, rng: &mut ChaCha8Rng) -> W {
        let (lo, hi, den) = self.grid();
        W::from_ratio(rng.gen_range(lo * den..=hi * den), den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub graph_count: usize,
    pub min_nodes: usize,
    pub max_nodes: usize,
    /// Target fraction of the `n(n-1)/2` possible edges. A spanning tree is
    /// always present, so low densities yield trees.
    pub edge_density: Ratio<u64>,
    pub weights: WeightDistribution,
    pub distinct_weights: bool,
    pub unicyclic: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("infeasible corpus spec: {0}")]
    InfeasibleSpec(String),
}

/// A generated graph together with the destination drawn for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<W> {
    pub index: usize,
    pub graph: WeightedGraph<W>,
    pub destination: NodeId,
}

const STREAM_GENERAL: u64 = 0x67656e;
const STREAM_UNICYCLIC: u64 = 0x756e69;

impl CorpusSpec {
    /// 200 distinct-weight connected graphs on 2 to 8 nodes, integer weights 1..=100.
    pub fn standard_general(seed: u64) -> Self {
        CorpusSpec {
            graph_count: 200,
            min_nodes: 2,
            max_nodes: 8,
            edge_density: Ratio::new(1, 2),
            weights: WeightDistribution::UniformInt { lo: 1, hi: 100 },
            distinct_weights: true,
            unicyclic: false,
            seed,
        }
    }

    /// 100 distinct-weight unicyclic graphs on 3 to 8 nodes.
    pub fn standard_unicyclic(seed: u64) -> Self {
        CorpusSpec {
            graph_count: 100,
            min_nodes: 3,
            unicyclic: true,
            seed: seed::derive(seed, &[STREAM_UNICYCLIC]),
            ..CorpusSpec::standard_general(seed)
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        let fail = |why: &str| Err(CorpusError::InfeasibleSpec(why.to_string()));
        if self.min_nodes < 2 {
            return fail("graphs need at least 2 nodes");
        }
        if self.unicyclic && self.min_nodes < 3 {
            return fail("unicyclic graphs need at least 3 nodes");
        }
        if self.min_nodes > self.max_nodes {
            return fail("empty node range");
        }
        if self.edge_density > Ratio::from_integer(1) || self.edge_density == Ratio::from_integer(0) {
            return fail("edge density must lie in (0, 1]");
        }
        let (lo, hi, den) = self.weights.grid();
        if lo > hi || den < 1 {
            return fail("empty weight range");
        }
        if self.distinct_weights && self.weights.support() < self.max_edges(self.max_nodes) as u64 {
            return fail("weight range too small for pairwise distinct weights");
        }
        Ok(())
    }

    fn max_edges(&self, n: usize) -> usize {
        if self.unicyclic {
            n
        } else {
            target_edges(n, self.edge_density)
        }
    }
}

fn target_edges(n: usize, density: Ratio<u64>) -> usize {
    let pairs = (n * (n - 1) / 2) as u64;
    let scaled = density * Ratio::from_integer(pairs);
    let wanted = Integer::div_ceil(scaled.numer(), scaled.denom()) as usize;
    wanted.max(n - 1)
}

fn random_spanning_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<EdgeId> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (1..n).map(|i| EdgeId::new(order[i], order[rng.gen_range(0..i)])).collect()
}

fn assign_weights<W: Scalar>(
    spec: &CorpusSpec,
    n: usize,
    mut edges: Vec<EdgeId>,
    rng: &mut ChaCha8Rng,
) -> WeightedGraph<W> {
    edges.sort();
    let mut used = BTreeSet::new();
    let weighted: Vec<(usize, usize, W)> = edges
        .into_iter()
        .map(|e| {
            let w = loop {
                let w: W = spec.weights.sample(rng);
                if !spec.distinct_weights || used.insert(w.clone()) {
                    break w;
                }
            };
            let (a, b) = e.endpoints();
            (a.0, b.0, w)
        })
        .collect();
    WeightedGraph::new(n, weighted).expect("spanning tree plus extra edges is connected and simple")
}

fn instance_rng(spec: &CorpusSpec, stream: u64, index: usize) -> ChaCha8Rng {
    seed::rng(spec.seed, &[stream, index as u64])
}

fn finish<W>(graph: WeightedGraph<W>, index: usize, rng: &mut ChaCha8Rng) -> Instance<W>
where
    W: Scalar,
{
    let destination = NodeId(rng.gen_range(0..graph.node_count()));
    Instance { index, graph, destination }
}

/// Connected graph number `index`: a random spanning tree plus random extra
/// edges up to the target density.
pub fn gen_connected<W: Scalar>(spec: &CorpusSpec, index: usize) -> Result<Instance<W>, CorpusError> {
    spec.validate()?;
    let mut rng = instance_rng(spec, STREAM_GENERAL, index);
    let n = rng.gen_range(spec.min_nodes..=spec.max_nodes);
    let mut edges = random_spanning_tree(n, &mut rng);
    let present: BTreeSet<EdgeId> = edges.iter().copied().collect();
    let mut extra: Vec<EdgeId> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| EdgeId::new(a, b))).filter(|e| !present.contains(e)).collect();
    extra.shuffle(&mut rng);
    edges.extend(extra.into_iter().take(target_edges(n, spec.edge_density) - (n - 1)));
    let graph = assign_weights(spec, n, edges, &mut rng);
    Ok(finish(graph, index, &mut rng))
}

/// Unicyclic graph number `index`: a random spanning tree plus one extra edge.
pub fn gen_unicyclic<W: Scalar>(spec: &CorpusSpec, index: usize) -> Result<Instance<W>, CorpusError> {
    spec.validate()?;
    if !spec.unicyclic {
        return Err(CorpusError::InfeasibleSpec("spec is not unicyclic".into()));
    }
    let mut rng = instance_rng(spec, STREAM_UNICYCLIC, index);
    let n = rng.gen_range(spec.min_nodes..=spec.max_nodes);
    let mut edges = random_spanning_tree(n, &mut rng);
    let present: BTreeSet<EdgeId> = edges.iter().copied().collect();
    let candidates: Vec<EdgeId> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| EdgeId::new(a, b))).filter(|e| !present.contains(e)).collect();
    edges.push(*candidates.choose(&mut rng).expect("a tree on 3+ nodes is not complete"));
    let graph = assign_weights(spec, n, edges, &mut rng);
    Ok(finish(graph, index, &mut rng))
}

/// Instance `index` of whichever family `spec` selects.
pub fn generate<W: Scalar>(spec: &CorpusSpec, index: usize) -> Result<Instance<W>, CorpusError> {
    if spec.unicyclic {
        gen_unicyclic(spec, index)
    } else {
        gen_connected(spec, index)
    }
}

/// All `spec.graph_count` instances, in index order.
pub fn generate_all<W: Scalar>(spec: &CorpusSpec) -> Result<Vec<Instance<W>>, CorpusError> {
    spec.validate()?;
    (0..spec.graph_count).into_par_iter().map(|i| generate(spec, i)).collect()
}

/// A general sub-corpus and a unicyclic one. Checkers for the cycle axioms
/// draw from the unicyclic part only; every other checker uses both.
#[derive(Debug, Clone)]
pub struct Corpus<W> {
    pub general: Vec<Instance<W>>,
    pub unicyclic: Vec<Instance<W>>,
}

impl<W: Scalar> Corpus<W> {
    pub fn new(general: &CorpusSpec, unicyclic: &CorpusSpec) -> Result<Self, CorpusError> {
        Ok(Corpus { general: generate_all(general)?, unicyclic: generate_all(unicyclic)? })
    }

    /// The standard evaluation corpus: [`CorpusSpec::standard_general`] plus
    /// [`CorpusSpec::standard_unicyclic`].
    pub fn standard(seed: u64) -> Self {
        Self::new(&CorpusSpec::standard_general(seed), &CorpusSpec::standard_unicyclic(seed))
            .expect("standard specs are feasible")
    }

    pub fn is_empty(&self) -> bool {
        self.general.is_empty() && self.unicyclic.is_empty()
    }

    /// General instances followed by unicyclic ones.
    pub fn all(&self) -> impl Iterator<Item = &Instance<W>> {
        self.general.iter().chain(self.unicyclic.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Weight;

    fn spec(min: usize, max: usize) -> CorpusSpec {
        CorpusSpec { min_nodes: min, max_nodes: max, ..CorpusSpec::standard_general(1) }
    }

    #[test]
    fn two_nodes_single_edge() {
        let g = gen_connected::<Weight>(&spec(2, 2), 0).unwrap().graph;
        assert_eq!(g.edge_count(), 1);
        assert!(g.contains_edge(EdgeId::new(0, 1)));
    }

    #[test]
    fn deterministic_per_index() {
        let s = spec(2, 8);
        assert_eq!(gen_connected::<Weight>(&s, 0).unwrap(), gen_connected::<Weight>(&s, 0).unwrap());
        assert_eq!(generate_all::<Weight>(&s).unwrap()[17], gen_connected::<Weight>(&s, 17).unwrap());
    }

    #[test]
    fn distinct_weights_are_distinct() {
        let s = spec(2, 8);
        for inst in generate_all::<Weight>(&CorpusSpec { graph_count: 100, ..s }).unwrap() {
            let ws: BTreeSet<_> = inst.graph.edges().map(|(_, w)| w.clone()).collect();
            assert_eq!(ws.len(), inst.graph.edge_count());
        }
    }

    #[test]
    fn unicyclic_shape() {
        let s = CorpusSpec { min_nodes: 3, max_nodes: 3, ..CorpusSpec::standard_unicyclic(4) };
        let g = gen_unicyclic::<Weight>(&s, 0).unwrap().graph;
        assert_eq!(g.edge_count(), 3);
        let s = CorpusSpec::standard_unicyclic(4);
        for inst in generate_all::<Weight>(&s).unwrap() {
            assert_eq!(inst.graph.edge_count(), inst.graph.node_count());
            assert_eq!(inst.graph.cycle_rank(), 1);
        }
    }

    #[test]
    fn infeasible_specs() {
        assert!(gen_unicyclic::<Weight>(&CorpusSpec { min_nodes: 2, ..CorpusSpec::standard_unicyclic(1) }, 0).is_err());
        assert!(gen_connected::<Weight>(&spec(1, 4), 0).is_err());
        let narrow = CorpusSpec { weights: WeightDistribution::UniformInt { lo: 1, hi: 3 }, ..spec(2, 8) };
        assert!(gen_connected::<Weight>(&narrow, 0).is_err());
        let sparse = CorpusSpec { edge_density: Ratio::new(0, 1), ..spec(2, 8) };
        assert!(gen_connected::<Weight>(&sparse, 0).is_err());
    }

    #[test]
    fn density_is_respected() {
        let dense = CorpusSpec { edge_density: Ratio::new(1, 1), ..spec(6, 6) };
        assert_eq!(gen_connected::<Weight>(&dense, 3).unwrap().graph.edge_count(), 15);
        let sparse = CorpusSpec { edge_density: Ratio::new(1, 100), ..spec(6, 6) };
        assert_eq!(gen_connected::<Weight>(&sparse, 3).unwrap().graph.edge_count(), 5);
    }

    #[test]
    fn rational_weights_on_grid() {
        let s = CorpusSpec { weights: WeightDistribution::UniformRational { lo: 0, hi: 2, den: 7 }, ..spec(4, 6) };
        for i in 0..20 {
            for (_, w) in gen_connected::<Weight>(&s, i).unwrap().graph.edges() {
                assert!(7 % w.denom().to_string().parse::<i64>().unwrap() == 0);
            }
        }
    }
}
