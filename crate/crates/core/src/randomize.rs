//! Degree-preserving randomization by random edge switches.
//!
//! A switch picks two distinct edges `{u, v}`, `{y, z}` and replaces them
//! with `{u, z}`, `{y, v}` unless that would create a self-loop or a
//! duplicate. Rejected attempts still consume one unit of the budget.

use rand::Rng as _;

use crate::graph::{Graph, NodeId};
use crate::rng::{rng_from_seed, Rng};

/// Number of switch attempts used for a graph with `m` edges.
pub fn default_swaps(m: usize) -> usize {
    10 * m
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SwitchStats {
    pub attempts: usize,
    pub accepted: usize,
}

/// Mutable state of one switching chain: the edges that may be switched and
/// an unsorted neighbor array per node. The adjacency may also contain
/// fixed edges that take part in simplicity checks but are never switched.
#[derive(Clone, Debug)]
pub struct SwitchChain {
    edges: Vec<(NodeId, NodeId)>,
    adj: Vec<Vec<NodeId>>,
}

impl SwitchChain {
    pub fn new(n: usize, edges: Vec<(NodeId, NodeId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        SwitchChain { edges, adj }
    }

    /// Registers edges that constrain switches without being switchable.
    pub fn add_fixed_edges(&mut self, fixed: impl IntoIterator<Item = (NodeId, NodeId)>) {
        for (u, v) in fixed {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<(NodeId, NodeId)> {
        self.edges
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&b)
    }

    fn replace_neighbor(&mut self, u: NodeId, old: NodeId, new: NodeId) {
        let slot = self.adj[u].iter().position(|&w| w == old).expect("neighbor present");
        self.adj[u][slot] = new;
    }

    /// Attempts the switch of edge slots `i` and `j`. With `flip` the second
    /// edge is read in reverse, selecting the other endpoint pairing.
    /// Returns whether the switch was applied.
    pub fn try_switch(&mut self, i: usize, j: usize, flip: bool) -> bool {
        if i == j {
            return false;
        }
        let (u, v) = self.edges[i];
        let (y, z) = if flip {
            let (a, b) = self.edges[j];
            (b, a)
        } else {
            self.edges[j]
        };
        if !self.is_switchable(u, v, y, z) {
            return false;
        }
        self.apply(i, j, (u, v), (y, z));
        true
    }

    /// Whether `{u, v}, {y, z} -> {u, z}, {y, v}` keeps the graph simple.
    pub(crate) fn is_switchable(&self, u: NodeId, v: NodeId, y: NodeId, z: NodeId) -> bool {
        u != z && y != v && !self.has_edge(u, z) && !self.has_edge(y, v)
    }

    pub(crate) fn apply(&mut self, i: usize, j: usize, (u, v): (NodeId, NodeId), (y, z): (NodeId, NodeId)) {
        self.replace_neighbor(u, v, z);
        self.replace_neighbor(z, y, u);
        self.replace_neighbor(y, z, v);
        self.replace_neighbor(v, u, y);
        self.edges[i] = (u, z);
        self.edges[j] = (y, v);
    }

    /// Two distinct edge slots and an orientation, uniformly at random.
    pub(crate) fn draw(&self, rng: &mut Rng) -> (usize, usize, bool) {
        let len = self.edges.len();
        let i = rng.random_range(0..len);
        let mut j = rng.random_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        (i, j, rng.random_bool(0.5))
    }

    /// Runs exactly `attempts` switch attempts.
    pub fn run(&mut self, attempts: usize, rng: &mut Rng) -> SwitchStats {
        let mut stats = SwitchStats { attempts, accepted: 0 };
        if self.edges.len() < 2 {
            return stats;
        }
        for _ in 0..attempts {
            let (i, j, flip) = self.draw(rng);
            if self.try_switch(i, j, flip) {
                stats.accepted += 1;
            }
        }
        stats
    }
}

/// Applies `swaps` switch attempts to a copy of `g`.
pub fn edge_switch(g: &Graph, swaps: usize, seed: u64) -> Graph {
    if g.m() < 2 {
        return g.clone();
    }
    let mut chain = SwitchChain::new(g.n(), g.edge_vec());
    let mut rng = rng_from_seed(seed);
    chain.run(swaps, &mut rng);
    Graph::from_simple_edges(g.n(), chain.into_edges())
}
