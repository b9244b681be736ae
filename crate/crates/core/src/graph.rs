//! Undirected simple graphs in compressed sparse row form, the edge-list
//! file format, and the basic structural statistics used across the crate.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::Path;

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

pub type NodeId = usize;

/// Immutable undirected simple graph. Neighbor lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

/// Counts of input edges discarded while building a simple graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dropped {
    pub duplicates: usize,
    pub self_loops: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a simple graph on `n` nodes, discarding self-loops and repeated
    /// pairs (in either orientation).
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> (Self, Dropped)
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut dropped = Dropped::default();
        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        let mut removed = 0;
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            removed += before - list.len();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        // every duplicate pair was removed once from each endpoint's list
        dropped.duplicates = removed / 2;
        (Graph { offsets, targets }, dropped)
    }

    /// Like [`Graph::from_edges`] for input already known to be simple.
    pub fn from_simple_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let (g, dropped) = Self::from_edges(n, edges);
        debug_assert_eq!(dropped, Dropped::default());
        g
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_vec(&self) -> Vec<(NodeId, NodeId)> {
        self.edges().collect()
    }

    /// Full check of the simple/undirected invariants. Intended for tests.
    pub fn is_consistent(&self) -> bool {
        (0..self.n()).all(|u| {
            let nb = self.neighbors(u);
            nb.windows(2).all(|w| w[0] < w[1])
                && nb
                    .iter()
                    .all(|&v| v != u && v < self.n() && self.neighbors(v).binary_search(&u).is_ok())
        })
    }

    /// Node-induced subgraph; nodes are relabeled in the order given.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let edges = nodes.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.neighbors(v).iter().filter_map(move |&w| {
                let j = local[w];
                (j != usize::MAX && i < j).then_some((i, j))
            })
        });
        Graph::from_simple_edges(nodes.len(), edges.collect::<Vec<_>>())
    }
}

/// Result of parsing an edge list.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub dropped: Dropped,
}

/// Parses the edge-list text format: one `u v` pair per line, 0-based ids,
/// lines starting with `#` or `%` are comments. A comment of the form
/// `# nodes N ...` declares the node count so trailing isolated nodes
/// survive a write/read cycle.
pub fn load_edge_list(text: &str) -> Result<LoadedGraph> {
    let mut edges = Vec::new();
    let mut declared_n = 0usize;
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#').or_else(|| line.strip_prefix('%')) {
            let mut words = comment.split_whitespace();
            if words.next() == Some("nodes") {
                if let Some(Ok(n)) = words.next().map(str::parse::<usize>) {
                    declared_n = declared_n.max(n);
                }
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut next_id = |what: &str| -> Result<usize> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("missing {what} node id"),
            })?;
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("malformed node id {tok:?}"),
            })
        };
        let u = next_id("first")?;
        let v = next_id("second")?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected token {extra:?}"),
            });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = declared_n.max(max_id.map_or(0, |m| m + 1));
    let (graph, dropped) = Graph::from_edges(n, edges);
    if dropped.duplicates > 0 || dropped.self_loops > 0 {
        log::warn!(
            "dropped {} duplicate edge(s) and {} self-loop(s)",
            dropped.duplicates,
            dropped.self_loops
        );
    }
    Ok(LoadedGraph { graph, dropped })
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<LoadedGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    load_edge_list(&text)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * g.m() + 32);
    let _ = writeln!(out, "# nodes {} edges {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_edge_list(g)).map_err(|e| Error::io(path, e))
}

/// `x` vertex-disjoint copies of `g`; copy `i` of node `v` is `i * n + v`.
pub fn disjoint_union(g: &Graph, x: usize) -> Graph {
    assert!(x >= 1, "scaling factor must be at least 1");
    let n = g.n();
    let base = g.edge_vec();
    let edges = (0..x).flat_map(|i| base.iter().map(move |&(u, v)| (i * n + u, i * n + v)));
    Graph::from_simple_edges(n * x, edges.collect::<Vec<_>>())
}

/// Per-node degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable();
        d
    }

    /// `x` back-to-back copies of the sequence.
    pub fn repeated(&self, x: usize) -> DegreeSequence {
        DegreeSequence(std::iter::repeat_n(&self.0, x).flatten().copied().collect())
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence((0..g.n()).map(|v| g.degree(v)).collect())
}

/// Population Gini coefficient of a list of non-negative values.
pub fn gini(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::UndefinedInput("gini of an empty list"));
    }
    if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::UndefinedInput("gini requires finite non-negative values"));
    }
    let total: f64 = values.iter().sum();
    if total <= 0.0 {
        return Err(Error::UndefinedInput("gini of an all-zero list"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let weighted: f64 = sorted.iter().enumerate().map(|(i, x)| (i as f64 + 1.0) * x).sum();
    let g = 2.0 * weighted / (n * total) - (n + 1.0) / n;
    Ok(g.clamp(0.0, 1.0))
}

/// Gini coefficient of the degree distribution; 0 for edgeless graphs.
pub fn degree_gini(g: &Graph) -> f64 {
    let degrees: Vec<f64> = (0..g.n()).map(|v| g.degree(v) as f64).collect();
    gini(&degrees).unwrap_or(0.0)
}

/// Number of triangles through each node.
pub fn triangles_per_node(g: &Graph) -> Vec<usize> {
    let mut tri = vec![0usize; g.n()];
    for (u, v) in g.edges() {
        // count each triangle once at its lowest edge (u < v < w)
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (a.partition_point(|&w| w <= v), b.partition_point(|&w| w <= v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let w = a[i];
                    tri[u] += 1;
                    tri[v] += 1;
                    tri[w] += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    tri
}

/// Local clustering coefficient per node; nodes of degree < 2 get 0.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    triangles_per_node(g)
        .into_iter()
        .enumerate()
        .map(|(v, t)| {
            let d = g.degree(v);
            if d < 2 {
                0.0
            } else {
                2.0 * t as f64 / (d * (d - 1)) as f64
            }
        })
        .collect()
}

pub fn avg_local_clustering(g: &Graph) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    local_clustering(g).iter().sum::<f64>() / g.n() as f64
}

/// Average clustering `c_d` over the `n_d` nodes of each degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeClustering {
    pub degree: usize,
    pub count: usize,
    pub avg_clustering: f64,
}

pub fn clustering_by_degree(g: &Graph) -> Vec<DegreeClustering> {
    let cc = local_clustering(g);
    let dmax = g.max_degree();
    let mut sum = vec![0.0; dmax + 1];
    let mut count = vec![0usize; dmax + 1];
    for (v, c) in cc.iter().enumerate() {
        let d = g.degree(v);
        sum[d] += c;
        count[d] += 1;
    }
    (0..=dmax)
        .filter(|&d| count[d] > 0)
        .map(|d| DegreeClustering {
            degree: d,
            count: count[d],
            avg_clustering: sum[d] / count[d] as f64,
        })
        .collect()
}

/// Connected components with dense ids in order of first discovery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub id: Vec<usize>,
}

impl Components {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.id {
            sizes[c] += 1;
        }
        sizes
    }

    /// Nodes of the largest component (ties go to the lowest id).
    pub fn largest(&self) -> Vec<NodeId> {
        let sizes = self.sizes();
        let Some(best) = (0..self.count).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))) else {
            return Vec::new();
        };
        (0..self.id.len()).filter(|&v| self.id[v] == best).collect()
    }
}

pub fn connected_components(g: &Graph) -> Components {
    let n = g.n();
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        id[s] = count;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if id[v] == usize::MAX {
                    id[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    Components { count, id }
}

/// BFS distances from `source`; unreachable nodes get `usize::MAX`.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterMode {
    /// Largest eccentricity in the largest connected component.
    Exact,
    /// Distance within which 90% of connected pairs of the largest
    /// component lie, interpolated between integer hop counts.
    Effective90,
}

impl std::str::FromStr for DiameterMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DiameterMode::Exact),
            "effective90" => Ok(DiameterMode::Effective90),
            other => Err(Error::Usage(format!(
                "unknown diameter mode {other:?} (exact, effective90)"
            ))),
        }
    }
}

impl std::fmt::Display for DiameterMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DiameterMode::Exact => "exact",
            DiameterMode::Effective90 => "effective90",
        })
    }
}

/// Above `exhaustive_limit` nodes in the largest component, BFS runs from
/// `sampled_sources` uniformly chosen sources instead of from every node.
#[derive(Clone, Copy, Debug)]
pub struct DiameterOptions {
    pub exhaustive_limit: usize,
    pub sampled_sources: usize,
    pub seed: u64,
}

impl Default for DiameterOptions {
    fn default() -> Self {
        DiameterOptions {
            exhaustive_limit: 10_000,
            sampled_sources: 1000,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterEstimate {
    pub value: f64,
    pub mode: DiameterMode,
    pub sources: usize,
    pub exhaustive: bool,
}

pub fn diameter(g: &Graph, mode: DiameterMode) -> Result<f64> {
    diameter_with(g, mode, &DiameterOptions::default()).map(|d| d.value)
}

pub fn diameter_with(g: &Graph, mode: DiameterMode, opts: &DiameterOptions) -> Result<DiameterEstimate> {
    if g.n() == 0 {
        return Err(Error::UndefinedInput("diameter of an empty graph"));
    }
    let lcc = connected_components(g).largest();
    let exhaustive = lcc.len() <= opts.exhaustive_limit;
    let sources: Vec<NodeId> = if exhaustive {
        lcc.clone()
    } else {
        let mut rng = rng_from_seed(opts.seed);
        let mut s: Vec<NodeId> = sample(&mut rng, lcc.len(), opts.sampled_sources.min(lcc.len()))
            .into_iter()
            .map(|i| lcc[i])
            .collect();
        s.sort_unstable();
        s
    };

    // histogram[h] = number of (source, target) pairs at distance h >= 1
    let mut histogram: Vec<u64> = Vec::new();
    let mut ecc_max = 0usize;
    for &s in &sources {
        for d in bfs_distances(g, s) {
            if d == usize::MAX || d == 0 {
                continue;
            }
            if d >= histogram.len() {
                histogram.resize(d + 1, 0);
            }
            histogram[d] += 1;
            ecc_max = ecc_max.max(d);
        }
    }

    let value = match mode {
        DiameterMode::Exact => ecc_max as f64,
        DiameterMode::Effective90 => effective_diameter(&histogram, 0.9),
    };
    Ok(DiameterEstimate {
        value,
        mode,
        sources: sources.len(),
        exhaustive,
    })
}

fn effective_diameter(histogram: &[u64], quantile: f64) -> f64 {
    let total: u64 = histogram.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let target = quantile * total as f64;
    let mut cum_prev = 0.0;
    for (h, &count) in histogram.iter().enumerate().skip(1) {
        let cum = cum_prev + count as f64;
        if cum >= target {
            let fraction = if count == 0 {
                0.0
            } else {
                (target - cum_prev) / count as f64
            };
            return (h - 1) as f64 + fraction;
        }
        cum_prev = cum;
    }
    (histogram.len() - 1) as f64
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn triangle() -> Graph {
        Graph::from_simple_edges(3, [(0, 1), (1, 2), (0, 2)])
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_simple_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_simple_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_simple_edges(n, edges)
    }

    /// Triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}.
    pub fn two_triangles_bridge() -> Graph {
        Graph::from_simple_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    }

    /// 4-cycle 0-1-2-3 plus chord {1,3}.
    pub fn cycle4_chord() -> Graph {
        Graph::from_simple_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn loads_path() {
        let g = load_edge_list("0 1\n1 2").unwrap().graph;
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn drops_duplicates_and_loops() {
        let loaded = load_edge_list("0 1\n1 0\n2 2").unwrap();
        assert_eq!((loaded.graph.n(), loaded.graph.m()), (3, 1));
        assert_eq!(
            loaded.dropped,
            Dropped {
                duplicates: 1,
                self_loops: 1
            }
        );
        assert!(loaded.graph.is_consistent());
    }

    #[test]
    fn comments_and_declared_nodes() {
        let g = load_edge_list("% header\n# nodes 10 edges 1\n\n3 4\n").unwrap().graph;
        assert_eq!((g.n(), g.m()), (10, 1));
        let again = load_edge_list(&format_edge_list(&g)).unwrap().graph;
        assert_eq!(again, g);
    }

    #[test]
    fn malformed_token_reports_line() {
        match load_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load_edge_list("0 -1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load_edge_list("5"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load_edge_list("1 2 3"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn union_of_copies() {
        let t = triangle();
        assert_eq!(disjoint_union(&t, 1), t);
        let two = disjoint_union(&t, 2);
        assert_eq!((two.n(), two.m()), (6, 6));
        assert_eq!(connected_components(&two).count, 2);
        assert!(two.has_edge(3, 5) && !two.has_edge(2, 3));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&triangle()).0, vec![2, 2, 2]);
        assert_eq!(degree_sequence(&star(3)).0, vec![3, 1, 1, 1]);
        assert_eq!(degree_sequence(&path(3)).0, vec![1, 2, 1]);
        assert_eq!(DegreeSequence(vec![3, 2, 1]).repeated(2).0, vec![3, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn gini_values() {
        assert_eq!(gini(&[2.0, 2.0, 2.0, 2.0]).unwrap(), 0.0);
        // 2*(4*1)/(4*1) - 5/4
        assert!((gini(&[0.0, 0.0, 0.0, 1.0]).unwrap() - 0.75).abs() < 1e-12);
        // 2*(1+2+3+12)/(4*6) - 5/4
        assert!((gini(&[1.0, 1.0, 1.0, 3.0]).unwrap() - 0.25).abs() < 1e-12);
        assert!(matches!(gini(&[0.0, 0.0]), Err(Error::UndefinedInput(_))));
        assert!(gini(&[]).is_err());
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(avg_local_clustering(&triangle()), 1.0);
        assert_eq!(avg_local_clustering(&star(4)), 0.0);
        // nodes 1,3: 2 of 3 pairs closed; nodes 0,2: 1 of 1
        assert!((avg_local_clustering(&cycle4_chord()) - 5.0 / 6.0).abs() < 1e-12);
        let by_degree = clustering_by_degree(&cycle4_chord());
        assert_eq!(by_degree.len(), 2);
        assert_eq!((by_degree[0].degree, by_degree[0].count), (2, 2));
        assert!((by_degree[1].avg_clustering - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn component_counts() {
        assert_eq!(connected_components(&triangle()).count, 1);
        assert_eq!(connected_components(&disjoint_union(&triangle(), 2)).count, 2);
        let c = connected_components(&Graph::empty(5));
        assert_eq!(c.count, 5);
        assert_eq!(c.id, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn exact_diameters() {
        assert_eq!(diameter(&path(5), DiameterMode::Exact).unwrap(), 4.0);
        assert_eq!(diameter(&complete(4), DiameterMode::Exact).unwrap(), 1.0);
        assert_eq!(diameter(&two_triangles_bridge(), DiameterMode::Exact).unwrap(), 3.0);
        assert!(diameter(&Graph::empty(0), DiameterMode::Exact).is_err());
        assert_eq!(diameter(&Graph::empty(3), DiameterMode::Exact).unwrap(), 0.0);
    }

    #[test]
    fn diameter_uses_largest_component() {
        let (g, _) = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (5, 6)]);
        assert_eq!(diameter(&g, DiameterMode::Exact).unwrap(), 3.0);
    }

    #[test]
    fn effective_diameter_path() {
        // P5 ordered pair distances: 8 at 1, 6 at 2, 4 at 3, 2 at 4 (total 20).
        // 90% = 18 falls inside h=3 (cum 14 -> 18), so 2 + (18-14)/4 = 3.0
        let d = diameter(&path(5), DiameterMode::Effective90).unwrap();
        assert!((d - 3.0).abs() < 1e-12);
        let k4 = diameter(&complete(4), DiameterMode::Effective90).unwrap();
        assert!((k4 - 0.9).abs() < 1e-12);
    }

    #[test]
    fn sampled_diameter_is_lower_bound() {
        let g = path(60);
        let opts = DiameterOptions {
            exhaustive_limit: 10,
            sampled_sources: 5,
            seed: 3,
        };
        let est = diameter_with(&g, DiameterMode::Exact, &opts).unwrap();
        assert!(!est.exhaustive);
        assert_eq!(est.sources, 5);
        assert!(est.value <= 59.0 && est.value >= 30.0);
    }
}
