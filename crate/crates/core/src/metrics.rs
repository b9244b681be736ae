//! Realism metrics: scalar feature vectors, original-vs-replica comparison,
//! and min-max normalized centrality distributions.

use rand::seq::index::sample;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bench::{betweenness_approx, core_decomposition, pagerank, DEFAULT_DAMPING, DEFAULT_TOLERANCE};
use crate::community::plm;
use crate::error::{Error, Result};
use crate::graph::{
    avg_local_clustering, bfs_distances, connected_components, degree_gini, diameter_with, local_clustering,
    DiameterMode, DiameterOptions, Graph, NodeId,
};
use crate::rng::{derive_seed, rng_from_seed, stream};

/// Communities smaller than this do not count as nontrivial.
pub const NONTRIVIAL_COMMUNITY_SIZE: usize = 3;

/// Exhaustive closeness and betweenness up to this many nodes, sampled
/// sources above.
pub const EXHAUSTIVE_CENTRALITY_LIMIT: usize = 10_000;
pub const SAMPLED_CENTRALITY_SOURCES: usize = 1000;

pub const QUANTILES: [f64; 7] = [0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub degree_gini: f64,
    pub avg_clustering: f64,
    pub diameter: f64,
    pub diameter_mode: DiameterMode,
    pub components: usize,
    pub communities: usize,
    /// PLM communities with at least three members.
    pub nontrivial_communities: usize,
}

impl FeatureVector {
    pub const NAMES: [&'static str; 9] = [
        "n",
        "m",
        "max_degree",
        "degree_gini",
        "avg_clustering",
        "diameter",
        "components",
        "communities",
        "nontrivial_communities",
    ];

    /// Numeric features in [`FeatureVector::NAMES`] order.
    pub fn values(&self) -> [f64; 9] {
        [
            self.n as f64,
            self.m as f64,
            self.max_degree as f64,
            self.degree_gini,
            self.avg_clustering,
            self.diameter,
            self.components as f64,
            self.communities as f64,
            self.nontrivial_communities as f64,
        ]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProfileOptions {
    pub diameter: DiameterMode,
    pub seed: u64,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            diameter: DiameterMode::Exact,
            seed: crate::rng::DEFAULT_SEED,
        }
    }
}

pub fn profile(g: &Graph, seed: u64) -> Result<FeatureVector> {
    profile_with(
        g,
        &ProfileOptions {
            seed,
            ..ProfileOptions::default()
        },
    )
}

pub fn profile_with(g: &Graph, opts: &ProfileOptions) -> Result<FeatureVector> {
    if g.n() == 0 {
        return Err(Error::UndefinedInput("profile of an empty graph"));
    }
    let diameter = diameter_with(
        g,
        opts.diameter,
        &DiameterOptions {
            seed: derive_seed(opts.seed, stream::SAMPLING),
            ..DiameterOptions::default()
        },
    )?;
    let partition = plm(g, derive_seed(opts.seed, stream::PLM));
    Ok(FeatureVector {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        degree_gini: degree_gini(g),
        avg_clustering: avg_local_clustering(g),
        diameter: diameter.value,
        diameter_mode: diameter.mode,
        components: connected_components(g).count,
        communities: partition.k,
        nontrivial_communities: partition
            .sizes
            .iter()
            .filter(|&&s| s >= NONTRIVIAL_COMMUNITY_SIZE)
            .count(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonKind {
    /// replica / original
    Ratio,
    /// replica - original, used when the original value is 0
    Delta,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureComparison {
    pub feature: String,
    pub original: f64,
    pub replica: f64,
    pub value: f64,
    pub kind: ComparisonKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralityComparison {
    pub measure: String,
    pub original: [f64; 7],
    pub replica: [f64; 7],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub original: FeatureVector,
    pub replica: FeatureVector,
    pub features: Vec<FeatureComparison>,
    pub quantiles: [f64; 7],
    pub centralities: Vec<CentralityComparison>,
}

impl ComparisonReport {
    pub fn feature(&self, name: &str) -> Option<&FeatureComparison> {
        self.features.iter().find(|f| f.feature == name)
    }

    /// One row per feature: feature, original, replica, value, kind.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for f in &self.features {
            w.serialize(f)?;
        }
        w.flush().map_err(|e| Error::Csv(e.into()))?;
        Ok(())
    }
}

pub fn compare(original: &FeatureVector, replica: &FeatureVector) -> ComparisonReport {
    let features = FeatureVector::NAMES
        .iter()
        .zip(original.values().into_iter().zip(replica.values()))
        .map(|(name, (o, r))| {
            let (value, kind) = if o == 0.0 {
                (r - o, ComparisonKind::Delta)
            } else {
                (r / o, ComparisonKind::Ratio)
            };
            FeatureComparison {
                feature: name.to_string(),
                original: o,
                replica: r,
                value,
                kind,
            }
        })
        .collect();
    ComparisonReport {
        original: original.clone(),
        replica: replica.clone(),
        features,
        quantiles: QUANTILES,
        centralities: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Centrality {
    Degree,
    Closeness,
    Clustering,
    CoreNumber,
    Pagerank,
    Betweenness,
}

impl Centrality {
    pub const ALL: [Centrality; 6] = [
        Centrality::Degree,
        Centrality::Closeness,
        Centrality::Clustering,
        Centrality::CoreNumber,
        Centrality::Pagerank,
        Centrality::Betweenness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Centrality::Degree => "degree",
            Centrality::Closeness => "closeness",
            Centrality::Clustering => "clustering",
            Centrality::CoreNumber => "core_number",
            Centrality::Pagerank => "pagerank",
            Centrality::Betweenness => "betweenness",
        }
    }
}

/// Min-max normalization onto [0, 1]; constant input maps to zeros.
pub fn min_max_normalize(values: &[f64]) -> Vec<f64> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi.partial_cmp(&lo) != Some(std::cmp::Ordering::Greater) {
        return vec![0.0; values.len()];
    }
    values.iter().map(|v| ((v - lo) / (hi - lo)).clamp(0.0, 1.0)).collect()
}

/// Quantile by linear interpolation between order statistics at rank
/// `q (len - 1)`.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    match sorted.len() {
        0 => f64::NAN,
        1 => sorted[0],
        len => {
            let h = q.clamp(0.0, 1.0) * (len - 1) as f64;
            let lo = h.floor() as usize;
            let hi = (lo + 1).min(len - 1);
            sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
        }
    }
}

pub fn quantile_summary(values: &[f64]) -> [f64; 7] {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    QUANTILES.map(|q| quantile(&sorted, q))
}

/// Harmonic closeness `sum_{u != v} 1/d(u, v) / (n - 1)`. Above the
/// exhaustive limit, sums run over sampled sources and are rescaled.
pub fn harmonic_closeness(g: &Graph, seed: u64) -> Vec<f64> {
    let n = g.n();
    if n < 2 {
        return vec![0.0; n];
    }
    let (sources, scale): (Vec<NodeId>, f64) = if n <= EXHAUSTIVE_CENTRALITY_LIMIT {
        ((0..n).collect(), 1.0)
    } else {
        let mut rng = rng_from_seed(derive_seed(seed, stream::SAMPLING));
        let s = sample(&mut rng, n, SAMPLED_CENTRALITY_SOURCES).into_vec();
        (s, n as f64 / SAMPLED_CENTRALITY_SOURCES as f64)
    };
    // distances are symmetric, so a BFS from s credits every target
    let mut sum = vec![0.0; n];
    for &s in &sources {
        for (v, d) in bfs_distances(g, s).into_iter().enumerate() {
            if d != 0 && d != usize::MAX {
                sum[v] += 1.0 / d as f64;
            }
        }
    }
    sum.iter().map(|x| x * scale / (n - 1) as f64).collect()
}

/// Raw (unnormalized) scores of one measure.
pub fn raw_centrality(g: &Graph, measure: Centrality, seed: u64) -> Result<Vec<f64>> {
    Ok(match measure {
        Centrality::Degree => (0..g.n()).map(|v| g.degree(v) as f64).collect(),
        Centrality::Closeness => harmonic_closeness(g, seed),
        Centrality::Clustering => local_clustering(g),
        Centrality::CoreNumber => core_decomposition(g).core.into_iter().map(|c| c as f64).collect(),
        Centrality::Pagerank => {
            if g.n() == 0 {
                Vec::new()
            } else {
                pagerank(g, DEFAULT_DAMPING, DEFAULT_TOLERANCE)?
            }
        }
        Centrality::Betweenness => {
            let samples = if g.n() <= EXHAUSTIVE_CENTRALITY_LIMIT {
                g.n().max(1)
            } else {
                SAMPLED_CENTRALITY_SOURCES
            };
            betweenness_approx(g, samples, seed)?
        }
    })
}

/// Every measure, min-max normalized, in [`Centrality::ALL`] order. With
/// `threads > 1` the measures run concurrently; the output does not depend
/// on the thread count.
pub fn centrality_distributions(g: &Graph, seed: u64, threads: usize) -> Result<Vec<(Centrality, Vec<f64>)>> {
    let run = |c: Centrality| raw_centrality(g, c, seed).map(|raw| (c, min_max_normalize(&raw)));
    if threads <= 1 {
        return Centrality::ALL.into_iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    pool.install(|| Centrality::ALL.into_par_iter().map(run).collect())
}

#[derive(Clone, Copy, Debug)]
pub struct CompareOptions {
    pub profile: ProfileOptions,
    pub threads: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            profile: ProfileOptions::default(),
            threads: 1,
        }
    }
}

/// Profiles both graphs and adds centrality quantile summaries.
pub fn compare_graphs(original: &Graph, replica: &Graph, opts: &CompareOptions) -> Result<ComparisonReport> {
    let mut report = compare(
        &profile_with(original, &opts.profile)?,
        &profile_with(replica, &opts.profile)?,
    );
    let seed = opts.profile.seed;
    let a = centrality_distributions(original, seed, opts.threads)?;
    let b = centrality_distributions(replica, seed, opts.threads)?;
    report.centralities = a
        .into_iter()
        .zip(b)
        .map(|((c, xs), (_, ys))| CentralityComparison {
            measure: c.name().to_string(),
            original: quantile_summary(&xs),
            replica: quantile_summary(&ys),
        })
        .collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::models::gen_er;
    use proptest::prelude::*;

    #[test]
    fn profile_examples() {
        let f = profile(&triangle(), 1).unwrap();
        assert_eq!((f.m, f.max_degree, f.components), (3, 2, 1));
        assert_eq!((f.degree_gini, f.avg_clustering, f.diameter), (0.0, 1.0, 1.0));
        assert_eq!(f.diameter_mode, DiameterMode::Exact);

        let f = profile(&Graph::empty(4), 1).unwrap();
        assert_eq!((f.m, f.avg_clustering, f.components), (0, 0.0, 4));
        assert_eq!((f.communities, f.nontrivial_communities), (4, 0));

        let f = profile(&two_triangles_bridge(), 3).unwrap();
        assert_eq!(f.nontrivial_communities, 2);
        assert!(profile(&Graph::empty(0), 0).is_err());
    }

    #[test]
    fn profile_is_deterministic() {
        let g = gen_er(80, 0.08, 5).unwrap();
        assert_eq!(profile(&g, 9).unwrap(), profile(&g, 9).unwrap());
    }

    #[test]
    fn compare_examples() {
        let f = profile(&two_triangles_bridge(), 0).unwrap();
        let r = compare(&f, &f);
        assert!(r
            .features
            .iter()
            .all(|c| c.kind == ComparisonKind::Ratio && c.value == 1.0));

        let mut doubled = f.clone();
        doubled.m *= 2;
        assert_eq!(compare(&f, &doubled).feature("m").unwrap().value, 2.0);

        let edgeless = profile(&Graph::empty(4), 0).unwrap();
        let mut other = edgeless.clone();
        other.m = 3;
        let c = compare(&edgeless, &other);
        let m = c.feature("m").unwrap();
        assert_eq!((m.kind, m.value), (ComparisonKind::Delta, 3.0));
    }

    #[test]
    fn comparison_csv_has_one_row_per_feature() {
        let f = profile(&triangle(), 0).unwrap();
        let mut buf = Vec::new();
        compare(&f, &f).write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("feature,original,replica,value,kind\n"));
        assert_eq!(text.lines().count(), 1 + FeatureVector::NAMES.len());
    }

    #[test]
    fn normalization_examples() {
        let d = centrality_distributions(&triangle(), 0, 1).unwrap();
        assert_eq!(d[0], (Centrality::Degree, vec![0.0; 3]));
        let d = centrality_distributions(&star(4), 0, 1).unwrap();
        assert_eq!(d[0].1, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        let d = centrality_distributions(&path(3), 0, 1).unwrap();
        let bc = &d.iter().find(|(c, _)| *c == Centrality::Betweenness).unwrap().1;
        assert_eq!(bc, &vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn harmonic_closeness_by_hand() {
        // P3: ends 1 + 1/2, center 2, divided by n - 1 = 2
        assert_eq!(harmonic_closeness(&path(3), 0), vec![0.75, 1.0, 0.75]);
        assert_eq!(harmonic_closeness(&Graph::empty(3), 0), vec![0.0; 3]);
    }

    #[test]
    fn quantile_interpolation() {
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(quantile(&xs, 0.5), 3.0);
        assert_eq!(quantile(&xs, 0.25), 2.0);
        assert!((quantile(&xs, 0.99) - 4.96).abs() < 1e-12);
        assert!((quantile(&xs, 0.01) - 1.04).abs() < 1e-12);
        assert_eq!(quantile(&[7.0], 0.3), 7.0);
        assert!(quantile(&[], 0.3).is_nan());
    }

    #[test]
    fn threads_do_not_change_centralities() {
        let g = gen_er(60, 0.1, 2).unwrap();
        assert_eq!(
            centrality_distributions(&g, 4, 1).unwrap(),
            centrality_distributions(&g, 4, 3).unwrap()
        );
    }

    #[test]
    fn compare_graphs_fills_centralities() {
        let g = gen_er(40, 0.15, 3).unwrap();
        let r = compare_graphs(&g, &g, &CompareOptions::default()).unwrap();
        assert_eq!(r.centralities.len(), 6);
        assert!(r.centralities.iter().all(|c| c.original == c.replica));
        assert!(r
            .features
            .iter()
            .all(|f| f.kind == ComparisonKind::Delta || f.value == 1.0));
    }

    proptest! {
        #[test]
        fn normalized_values_in_unit_interval(values in proptest::collection::vec(-1e6f64..1e6, 1..40)) {
            let out = min_max_normalize(&values);
            prop_assert!(out.iter().all(|v| (0.0..=1.0).contains(v)));
            let constant = values.iter().all(|v| *v == values[0]);
            let max = out.iter().copied().fold(0.0, f64::max);
            prop_assert_eq!(max, if constant { 0.0 } else { 1.0 });
        }

        #[test]
        fn centralities_in_unit_interval(n in 1usize..25, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = gen_er(n, p, seed).unwrap();
            for (_, scores) in centrality_distributions(&g, seed, 1).unwrap() {
                prop_assert_eq!(scores.len(), n);
                prop_assert!(scores.iter().all(|v| (0.0..=1.0).contains(v)));
            }
        }
    }
}
