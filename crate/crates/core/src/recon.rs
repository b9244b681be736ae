//! ReCoN: community-preserving replication and scaling.
//!
//! A fitted [`ReconModel`] splits the edges of the input graph into the
//! edges inside each community and the edges between communities. A scale-`x`
//! replica starts from `x` disjoint copies of the input, randomizes every
//! community copy on its own with degree-preserving switches, then
//! randomizes all between-community edges of all copies together (which is
//! what connects the copies). Between-community edges that end up inside a
//! community copy ("forbidden" edges) are switched away with random partners.

use std::time::Instant;

use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::community::{plm, Partition};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::randomize::{default_swaps, SwitchChain};
use crate::rng::{derive_seed, rng_from_seed, stream};

/// Everything ReCoN needs to know about the input: the community structure
/// and the edges split by it. Immutable once fitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconModel {
    pub n: usize,
    pub assignment: Vec<usize>,
    pub community_sizes: Vec<usize>,
    pub internal_degree: Vec<usize>,
    pub external_degree: Vec<usize>,
    /// Edges inside each community, in original node ids.
    pub intra_edges: Vec<Vec<(NodeId, NodeId)>>,
    pub inter_edges: Vec<(NodeId, NodeId)>,
}

impl ReconModel {
    pub fn k(&self) -> usize {
        self.community_sizes.len()
    }

    pub fn m(&self) -> usize {
        self.inter_edges.len() + self.intra_edges.iter().map(Vec::len).sum::<usize>()
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.internal_degree[v] + self.external_degree[v]
    }

    pub fn intra_edge_counts(&self) -> Vec<usize> {
        self.intra_edges.iter().map(Vec::len).collect()
    }

    /// Fraction of edges running between communities.
    pub fn mixing(&self) -> f64 {
        let m = self.m();
        if m == 0 {
            0.0
        } else {
            self.inter_edges.len() as f64 / m as f64
        }
    }
}

/// Fits the model against `partition`, or against a PLM partition computed
/// from `seed` when none is given.
pub fn fit_recon(g: &Graph, partition: Option<&Partition>, seed: u64) -> Result<ReconModel> {
    let partition = match partition {
        Some(p) => {
            if p.n() != g.n() {
                return Err(Error::InvalidPartition(format!(
                    "partition covers {} nodes, graph has {}",
                    p.n(),
                    g.n()
                )));
            }
            Partition::new(g, p.assignment.clone())?
        }
        None => plm(g, derive_seed(seed, stream::PLM)),
    };
    let n = g.n();
    let mut internal_degree = vec![0; n];
    let mut external_degree = vec![0; n];
    let mut intra_edges = vec![Vec::new(); partition.k];
    let mut inter_edges = Vec::new();
    for (u, v) in g.edges() {
        let cu = partition.assignment[u];
        if cu == partition.assignment[v] {
            intra_edges[cu].push((u, v));
            internal_degree[u] += 1;
            internal_degree[v] += 1;
        } else {
            inter_edges.push((u, v));
            external_degree[u] += 1;
            external_degree[v] += 1;
        }
    }
    Ok(ReconModel {
        n,
        assignment: partition.assignment,
        community_sizes: partition.sizes,
        internal_degree,
        external_degree,
        intra_edges,
        inter_edges,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct ReconOptions {
    /// Worker threads for the per-community chains; 1 runs inline.
    pub threads: usize,
    pub max_rewire_passes: usize,
}

impl Default for ReconOptions {
    fn default() -> Self {
        ReconOptions {
            threads: 1,
            max_rewire_passes: 100,
        }
    }
}

/// Bookkeeping from one generation run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GenerationInfo {
    pub scale: usize,
    pub seed: u64,
    /// Communities in the fitted model (per copy).
    pub k: usize,
    pub community_chains: usize,
    pub intra_swaps: usize,
    pub global_swaps: usize,
    pub forbidden_after_global: usize,
    pub rewire_passes: usize,
    pub residual_forbidden: usize,
    pub ms_generate: f64,
}

#[derive(Clone, Debug)]
pub struct Replica {
    pub graph: Graph,
    pub info: GenerationInfo,
}

/// Randomizes the edges of one community copy. Returns edges in replica ids.
fn randomize_community(
    model: &ReconModel,
    local_index: &[usize],
    members: &[NodeId],
    community: usize,
    offset: usize,
    seed: u64,
) -> (Vec<(NodeId, NodeId)>, usize) {
    let local: Vec<(NodeId, NodeId)> = model.intra_edges[community]
        .iter()
        .map(|&(u, v)| (local_index[u], local_index[v]))
        .collect();
    let swaps = default_swaps(local.len());
    let edges = if members.len() < 2 || local.len() < 2 {
        local
    } else {
        let mut chain = SwitchChain::new(members.len(), local);
        chain.run(swaps, &mut rng_from_seed(seed));
        chain.into_edges()
    };
    let mapped = edges
        .into_iter()
        .map(|(a, b)| (offset + members[a], offset + members[b]))
        .collect();
    (mapped, if members.len() < 2 { 0 } else { swaps })
}

/// Generates a scale-`x` replica with default options.
pub fn generate(model: &ReconModel, x: usize, seed: u64) -> Result<Replica> {
    generate_with(model, x, seed, &ReconOptions::default())
}

pub fn generate_with(model: &ReconModel, x: usize, seed: u64, opts: &ReconOptions) -> Result<Replica> {
    if x == 0 {
        return Err(Error::InvalidParams("scaling factor must be at least 1".into()));
    }
    let start = Instant::now();
    let n = model.n;
    let k = model.k();
    let total_n = n * x;

    let mut members: Vec<Vec<NodeId>> = vec![Vec::new(); k];
    let mut local_index = vec![0; n];
    for (v, &c) in model.assignment.iter().enumerate() {
        local_index[v] = members[c].len();
        members[c].push(v);
    }

    // Step 3: every community copy gets its own chain and its own seed.
    let chain_base = derive_seed(seed, stream::COMMUNITY_CHAINS);
    let tasks: Vec<(usize, usize)> = (0..x)
        .flat_map(|copy| (0..k).map(move |c| (copy, c)))
        .filter(|&(_, c)| !model.intra_edges[c].is_empty())
        .collect();
    let run_task = |&(copy, c): &(usize, usize)| {
        randomize_community(
            model,
            &local_index,
            &members[c],
            c,
            copy * n,
            derive_seed(chain_base, (copy * k + c) as u64),
        )
    };
    let community_results: Vec<(Vec<(NodeId, NodeId)>, usize)> = if opts.threads > 1 && tasks.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run_task).collect())
    } else {
        tasks.iter().map(run_task).collect()
    };
    let intra_swaps = community_results.iter().map(|r| r.1).sum();
    let intra: Vec<(NodeId, NodeId)> = community_results.into_iter().flat_map(|r| r.0).collect();

    // Step 4: one chain over the between-community edges of all copies.
    let global: Vec<(NodeId, NodeId)> = (0..x)
        .flat_map(|copy| {
            model
                .inter_edges
                .iter()
                .map(move |&(u, v)| (copy * n + u, copy * n + v))
        })
        .collect();
    let global_swaps = default_swaps(global.len());
    let mut chain = SwitchChain::new(total_n, global);
    chain.add_fixed_edges(intra.iter().copied());
    let mut rng = rng_from_seed(derive_seed(seed, stream::GLOBAL_CHAIN));
    chain.run(global_swaps, &mut rng);

    let community_copy = |v: NodeId| (v / n.max(1), model.assignment[v % n.max(1)]);
    let is_forbidden = |(a, b): (NodeId, NodeId)| community_copy(a) == community_copy(b);
    let mut forbidden: Vec<usize> = forbidden_slots(chain.edges(), &is_forbidden);
    let forbidden_after_global = forbidden.len();

    let mut rng = rng_from_seed(derive_seed(seed, stream::REWIRE));
    let mut passes = 0;
    while !forbidden.is_empty() && passes < opts.max_rewire_passes && chain.edges().len() >= 2 {
        passes += 1;
        for &slot in &forbidden {
            let (u, v) = chain.edges()[slot];
            if !is_forbidden((u, v)) {
                continue;
            }
            let len = chain.edges().len();
            let mut partner = rng.random_range(0..len - 1);
            if partner >= slot {
                partner += 1;
            }
            let (mut y, mut z) = chain.edges()[partner];
            if rng.random_bool(0.5) {
                std::mem::swap(&mut y, &mut z);
            }
            if !chain.is_switchable(u, v, y, z) {
                continue;
            }
            let before = 1 + usize::from(is_forbidden((y, z)));
            let after = usize::from(is_forbidden((u, z))) + usize::from(is_forbidden((y, v)));
            if after <= before {
                chain.apply(slot, partner, (u, v), (y, z));
            }
        }
        forbidden = forbidden_slots(chain.edges(), &is_forbidden);
    }

    let mut edges = intra;
    edges.extend_from_slice(chain.edges());
    let graph = Graph::from_simple_edges(total_n, edges);
    let info = GenerationInfo {
        scale: x,
        seed,
        k,
        community_chains: tasks.len(),
        intra_swaps,
        global_swaps,
        forbidden_after_global,
        rewire_passes: passes,
        residual_forbidden: forbidden.len(),
        ms_generate: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(Replica { graph, info })
}

fn forbidden_slots(edges: &[(NodeId, NodeId)], is_forbidden: &impl Fn((NodeId, NodeId)) -> bool) -> Vec<usize> {
    edges
        .iter()
        .enumerate()
        .filter(|(_, &e)| is_forbidden(e))
        .map(|(i, _)| i)
        .collect()
}

/// Replica together with the model and timing of the fit.
#[derive(Clone, Debug)]
pub struct ReplicationRun {
    pub model: ReconModel,
    pub replica: Replica,
    pub ms_fit: f64,
}

/// Fits with PLM communities and generates a scale-`x` replica.
pub fn replicate(g: &Graph, x: usize, seed: u64) -> Result<ReplicationRun> {
    replicate_with(g, None, x, seed, &ReconOptions::default())
}

pub fn replicate_with(
    g: &Graph,
    partition: Option<&Partition>,
    x: usize,
    seed: u64,
    opts: &ReconOptions,
) -> Result<ReplicationRun> {
    let start = Instant::now();
    let model = fit_recon(g, partition, seed)?;
    let ms_fit = start.elapsed().as_secs_f64() * 1e3;
    let replica = generate_with(&model, x, seed, opts)?;
    Ok(ReplicationRun { model, replica, ms_fit })
}

/// Number of edges of `g` inside each community copy of a scale-`x`
/// replica built from `model` (forbidden edges included).
pub fn intra_counts_per_copy(model: &ReconModel, g: &Graph, x: usize) -> Vec<usize> {
    let k = model.k();
    let n = model.n.max(1);
    let mut counts = vec![0; k * x];
    for (a, b) in g.edges() {
        let (ca, cb) = (model.assignment[a % n], model.assignment[b % n]);
        if a / n == b / n && ca == cb {
            counts[(a / n) * k + ca] += 1;
        }
    }
    counts
}
