//! Disjoint community structures: modularity, a Louvain-style
//! move-and-contract maximizer (PLM), and the partition file format.

use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::rng_from_seed;

/// A disjoint assignment of every node to one of `k` communities, together
/// with the per-community edge counts it induces on a particular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub assignment: Vec<usize>,
    pub k: usize,
    pub sizes: Vec<usize>,
    pub intra_edges: Vec<usize>,
    pub inter_edges: usize,
}

impl Partition {
    /// Builds a partition of `g` from arbitrary community labels. Labels are
    /// compacted to `0..k` preserving their relative order, so dense input
    /// is kept as is.
    pub fn new(g: &Graph, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != g.n() {
            return Err(Error::InvalidPartition(format!(
                "{} labels for {} nodes",
                labels.len(),
                g.n()
            )));
        }
        let mut distinct = labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let assignment: Vec<usize> = if distinct.last().is_none_or(|&max| max + 1 == distinct.len()) {
            labels
        } else {
            labels
                .iter()
                .map(|l| distinct.binary_search(l).expect("label present"))
                .collect()
        };
        let k = distinct.len();
        let mut sizes = vec![0; k];
        for &c in &assignment {
            sizes[c] += 1;
        }
        let mut intra_edges = vec![0; k];
        let mut inter_edges = 0;
        for (u, v) in g.edges() {
            if assignment[u] == assignment[v] {
                intra_edges[assignment[u]] += 1;
            } else {
                inter_edges += 1;
            }
        }
        Ok(Partition {
            assignment,
            k,
            sizes,
            intra_edges,
            inter_edges,
        })
    }

    pub fn singletons(g: &Graph) -> Self {
        Self::new(g, (0..g.n()).collect()).expect("valid")
    }

    pub fn single_community(g: &Graph) -> Self {
        Self::new(g, vec![0; g.n()]).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_of(&self, v: NodeId) -> usize {
        self.assignment[v]
    }

    /// Member lists, each in increasing node order.
    pub fn members(&self) -> Vec<Vec<NodeId>> {
        let mut out: Vec<Vec<NodeId>> = self.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn total_intra_edges(&self) -> usize {
        self.intra_edges.iter().sum()
    }
}

/// Parses a partition file: line `v` holds the community id of node `v`.
/// Blank lines and `#`/`%` comments are skipped.
pub fn load_partition(text: &str, g: &Graph) -> Result<Partition> {
    let mut labels = Vec::with_capacity(g.n());
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let id = line.parse::<usize>().map_err(|_| Error::Parse {
            line: idx + 1,
            message: format!("malformed community id {line:?}"),
        })?;
        labels.push(id);
    }
    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.last().is_some_and(|&max| max + 1 != distinct.len()) {
        return Err(Error::InvalidPartition("community ids are not dense".into()));
    }
    Partition::new(g, labels)
}

pub fn read_partition(path: impl AsRef<Path>, g: &Graph) -> Result<Partition> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    load_partition(&text, g)
}

pub fn format_partition(p: &Partition) -> String {
    let mut out = String::with_capacity(4 * p.n());
    for c in &p.assignment {
        let _ = writeln!(out, "{c}");
    }
    out
}

/// Newman-Girvan modularity, `sum_c intra_c / m - (vol_c / 2m)^2`.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::UndefinedInput("modularity of an edgeless graph"));
    }
    if p.n() != g.n() {
        return Err(Error::InvalidPartition("partition size does not match graph".into()));
    }
    let m = g.m() as f64;
    let mut volume = vec![0usize; p.k];
    for v in 0..g.n() {
        volume[p.assignment[v]] += g.degree(v);
    }
    Ok((0..p.k)
        .map(|c| {
            let share = volume[c] as f64 / (2.0 * m);
            p.intra_edges[c] as f64 / m - share * share
        })
        .sum())
}

/// Fraction of edges running between communities.
pub fn mixing_parameter(g: &Graph, p: &Partition) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::UndefinedInput("mixing parameter of an edgeless graph"));
    }
    Ok(p.inter_edges as f64 / g.m() as f64)
}

/// Weighted graph used for the contracted levels. Self-loop weight is kept
/// separately and counts once per loop.
struct LevelGraph {
    adj: Vec<Vec<(usize, f64)>>,
    self_weight: Vec<f64>,
}

impl LevelGraph {
    fn from_graph(g: &Graph) -> Self {
        LevelGraph {
            adj: (0..g.n())
                .map(|u| g.neighbors(u).iter().map(|&v| (v, 1.0)).collect())
                .collect(),
            self_weight: vec![0.0; g.n()],
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn strength(&self, u: usize) -> f64 {
        self.adj[u].iter().map(|&(_, w)| w).sum::<f64>() + 2.0 * self.self_weight[u]
    }

    fn contract(&self, community: &[usize], k: usize) -> LevelGraph {
        let mut self_weight = vec![0.0; k];
        let mut links: Vec<(usize, usize, f64)> = Vec::new();
        for u in 0..self.n() {
            let cu = community[u];
            self_weight[cu] += self.self_weight[u];
            for &(v, w) in &self.adj[u] {
                let cv = community[v];
                if cu == cv {
                    // seen from both endpoints
                    self_weight[cu] += w / 2.0;
                } else {
                    links.push((cu, cv, w));
                }
            }
        }
        links.sort_by_key(|a| (a.0, a.1));
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); k];
        for (cu, cv, w) in links {
            match adj[cu].last_mut() {
                Some((last, acc)) if *last == cv => *acc += w,
                _ => adj[cu].push((cv, w)),
            }
        }
        LevelGraph { adj, self_weight }
    }
}

const GAIN_EPS: f64 = 1e-12;
const MAX_PASSES: usize = 1000;

/// Local moving on one level. Returns the dense community labels and
/// whether any node changed community.
fn move_phase(level: &LevelGraph, total: f64, rng: &mut crate::rng::Rng) -> (Vec<usize>, usize, bool) {
    let n = level.n();
    let strength: Vec<f64> = (0..n).map(|u| level.strength(u)).collect();
    let mut community: Vec<usize> = (0..n).collect();
    let mut tot = strength.clone();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut link_weight = vec![0.0f64; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut any_move = false;

    for _ in 0..MAX_PASSES {
        let mut moved = 0usize;
        for &u in &order {
            let current = community[u];
            let ku = strength[u];
            for &(v, w) in &level.adj[u] {
                let c = community[v];
                if link_weight[c] == 0.0 {
                    touched.push(c);
                }
                link_weight[c] += w;
            }
            tot[current] -= ku;
            let gain = |c: usize, lw: f64| lw - tot[c] * ku / total;
            let mut best = current;
            let mut best_gain = gain(current, link_weight[current]);
            for &c in &touched {
                let g = gain(c, link_weight[c]);
                if g > best_gain + GAIN_EPS {
                    best = c;
                    best_gain = g;
                }
            }
            tot[best] += ku;
            if best != current {
                community[u] = best;
                moved += 1;
            }
            for &c in &touched {
                link_weight[c] = 0.0;
            }
            touched.clear();
        }
        if moved == 0 {
            break;
        }
        any_move = true;
    }

    // relabel densely in order of first appearance
    let mut relabel = vec![usize::MAX; n];
    let mut k = 0;
    for c in community.iter_mut() {
        if relabel[*c] == usize::MAX {
            relabel[*c] = k;
            k += 1;
        }
        *c = relabel[*c];
    }
    (community, k, any_move)
}

/// Modularity maximization by repeated local moving and contraction,
/// starting from singletons. Node visiting order is shuffled from `seed`;
/// equal-gain moves keep the node in its current community.
/// Edgeless graphs yield all singletons.
pub fn plm(g: &Graph, seed: u64) -> Partition {
    if g.m() == 0 {
        return Partition::singletons(g);
    }
    let mut rng = rng_from_seed(seed);
    let total = 2.0 * g.m() as f64;
    let mut level = LevelGraph::from_graph(g);
    let mut assignment: Vec<usize> = (0..g.n()).collect();
    loop {
        let (community, k, moved) = move_phase(&level, total, &mut rng);
        if !moved {
            break;
        }
        for a in assignment.iter_mut() {
            *a = community[*a];
        }
        if k == level.n() {
            break;
        }
        level = level.contract(&community, k);
    }
    Partition::new(g, assignment).expect("plm produces one label per node")
}
