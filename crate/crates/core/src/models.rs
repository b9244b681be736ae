//! Baseline generative models (ER, BA, Chung-Lu, ESMC, RMAT), their
//! fit/scale schemes, and the power-law fits used for LFR and hyperbolic
//! parameters.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::community::plm;
use crate::error::{Error, Result};
use crate::graph::{degree_sequence, DegreeSequence, Graph, NodeId};
use crate::randomize::{default_swaps, edge_switch};
use crate::rng::{derive_seed, rng_from_seed, stream, Rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Er,
    Ba,
    Cl,
    Esmc,
    Rmat,
    /// Parameters only; no hyperbolic generator is provided.
    Hudg,
    /// Parameters only; no LFR generator is provided.
    Lfr,
}

impl ModelKind {
    pub const ALL: [ModelKind; 7] = [
        ModelKind::Er,
        ModelKind::Ba,
        ModelKind::Cl,
        ModelKind::Esmc,
        ModelKind::Rmat,
        ModelKind::Hudg,
        ModelKind::Lfr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Er => "er",
            ModelKind::Ba => "ba",
            ModelKind::Cl => "cl",
            ModelKind::Esmc => "esmc",
            ModelKind::Rmat => "rmat",
            ModelKind::Hudg => "hudg",
            ModelKind::Lfr => "lfr",
        }
    }

    pub fn can_generate(self) -> bool {
        !matches!(self, ModelKind::Hudg | ModelKind::Lfr)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnsupportedModel(s.to_string()))
    }
}

/// 2x2 RMAT initiator; `a, b` are the top row, `c, d` the bottom row.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Initiator {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Raw initiator published for fb-Caltech36 (sums to 1 - 2e-9).
const CALTECH36: [f64; 4] = [0.378802757, 0.249474498, 0.255098510, 0.116624233];

impl Initiator {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let init = Initiator { a, b, c, d };
        init.validate()?;
        Ok(init)
    }

    pub fn validate(&self) -> Result<()> {
        let parts = [self.a, self.b, self.c, self.d];
        if parts.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidParams("initiator entries must be non-negative".into()));
        }
        let sum: f64 = parts.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParams(format!("initiator sums to {sum}, expected 1")));
        }
        Ok(())
    }

    /// The fb-Caltech36 kronfit initiator, rescaled to sum to exactly one.
    pub fn caltech36() -> Self {
        let sum: f64 = CALTECH36.iter().sum();
        let [a, b, c, d] = CALTECH36.map(|p| p / sum);
        Initiator { a, b, c, d }
    }

    /// Uniformly random entries, normalized.
    pub fn random(rng: &mut Rng) -> Self {
        let raw: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>() + f64::MIN_POSITIVE);
        let sum: f64 = raw.iter().sum();
        let [a, b, c, d] = raw.map(|p| p / sum);
        Initiator { a, b, c, d }
    }
}

impl FromStr for Initiator {
    type Err = Error;

    /// Four comma-separated reals `a,b,c,d`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParams(format!("initiator {s:?}: {e}")))?;
        match parts[..] {
            [a, b, c, d] => Initiator::new(a, b, c, d),
            _ => Err(Error::InvalidParams(format!("initiator {s:?} needs four values"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitiatorSource {
    Caltech36Preset,
    Random,
    User,
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum InitiatorChoice {
    #[default]
    Caltech36,
    /// Fresh random initiator drawn from the given seed.
    Random(u64),
    Given(Initiator),
}

/// Discrete power law `p(d) ~ d^gamma` on `[d_min, d_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub gamma: f64,
    pub d_min: usize,
    pub d_max: usize,
    /// `d_min == d_max`; `gamma` is then a placeholder.
    pub degenerate: bool,
    /// The target mean was outside the reachable range and `gamma` sits on
    /// a bound.
    pub clamped: bool,
}

/// Community-size power law, possibly with a raised minimum size.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommunityFit {
    pub beta: f64,
    pub c_min: usize,
    pub c_max: usize,
    pub degenerate: bool,
    pub raised_min: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum ModelParams {
    Er {
        n: usize,
        p: f64,
    },
    Ba {
        n: usize,
        k: usize,
    },
    Cl {
        degrees: DegreeSequence,
    },
    Esmc {
        degrees: DegreeSequence,
    },
    Rmat {
        n: usize,
        s: u32,
        e: usize,
        initiator: Initiator,
        initiator_source: InitiatorSource,
    },
    PowerLaw(PowerLawFit),
    CommunitySizes(CommunityFit),
    /// Reference row only: node count, average degree, exponent (> 2).
    Hudg {
        n: usize,
        avg_degree: f64,
        gamma: f64,
    },
    /// Reference row only.
    Lfr {
        n: usize,
        degrees: PowerLawFit,
        communities: CommunityFit,
        mixing: f64,
    },
}

impl ModelParams {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ModelParams::Er { .. } => "er",
            ModelParams::Ba { .. } => "ba",
            ModelParams::Cl { .. } => "cl",
            ModelParams::Esmc { .. } => "esmc",
            ModelParams::Rmat { .. } => "rmat",
            ModelParams::PowerLaw(_) => "power_law",
            ModelParams::CommunitySizes(_) => "community_sizes",
            ModelParams::Hudg { .. } => "hudg",
            ModelParams::Lfr { .. } => "lfr",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FitOptions {
    pub initiator: InitiatorChoice,
    /// Seed for the PLM run behind the LFR community-size fit.
    pub seed: u64,
}

/// Smallest `s` with `2^s >= n`.
pub fn rmat_scale(n: usize) -> u32 {
    n.max(1).next_power_of_two().trailing_zeros()
}

pub fn fit(g: &Graph, kind: ModelKind, x: usize) -> Result<ModelParams> {
    fit_with(g, kind, x, &FitOptions::default())
}

/// Fitting and scaling scheme per model for a scale-`x` replica.
pub fn fit_with(g: &Graph, kind: ModelKind, x: usize, opts: &FitOptions) -> Result<ModelParams> {
    let (n, m) = (g.n(), g.m());
    if n < 2 || m < 1 {
        return Err(Error::UndefinedInput("fitting needs n >= 2 and m >= 1"));
    }
    if x == 0 {
        return Err(Error::InvalidParams("scaling factor must be at least 1".into()));
    }
    let params = match kind {
        ModelKind::Er => ModelParams::Er {
            n: x * n,
            p: 2.0 * m as f64 / (x as f64 * n as f64 * (n as f64 - 1.0)),
        },
        ModelKind::Ba => ModelParams::Ba { n: x * n, k: m / n },
        ModelKind::Cl => ModelParams::Cl {
            degrees: degree_sequence(g).repeated(x),
        },
        ModelKind::Esmc => ModelParams::Esmc {
            degrees: degree_sequence(g).repeated(x),
        },
        ModelKind::Rmat => {
            let (initiator, initiator_source) = match opts.initiator {
                InitiatorChoice::Caltech36 => (Initiator::caltech36(), InitiatorSource::Caltech36Preset),
                InitiatorChoice::Random(seed) => (
                    Initiator::random(&mut rng_from_seed(derive_seed(seed, stream::INITIATOR))),
                    InitiatorSource::Random,
                ),
                InitiatorChoice::Given(init) => {
                    init.validate()?;
                    (init, InitiatorSource::User)
                }
            };
            ModelParams::Rmat {
                n: x * n,
                s: rmat_scale(x * n),
                e: m / n,
                initiator,
                initiator_source,
            }
        }
        ModelKind::Hudg => {
            let pl = plfit(&positive_degrees(g)?)?;
            ModelParams::Hudg {
                n: x * n,
                avg_degree: 2.0 * m as f64 / n as f64,
                gamma: (-pl.gamma).max(2.1),
            }
        }
        ModelKind::Lfr => {
            let degrees = plfit(&positive_degrees(g)?)?;
            let p = plm(g, derive_seed(opts.seed, stream::PLM));
            let communities = plfit_star(&p.sizes)?;
            ModelParams::Lfr {
                n: x * n,
                degrees,
                communities,
                mixing: p.inter_edges as f64 / m as f64,
            }
        }
    };
    Ok(params)
}

fn positive_degrees(g: &Graph) -> Result<Vec<usize>> {
    let d: Vec<usize> = degree_sequence(g).0.into_iter().filter(|&d| d > 0).collect();
    if d.is_empty() {
        Err(Error::UndefinedInput("no node has positive degree"))
    } else {
        Ok(d)
    }
}

/// Generates a graph from generator parameters.
pub fn generate(params: &ModelParams, seed: u64) -> Result<Graph> {
    let seed = derive_seed(seed, stream::GENERATOR);
    match params {
        ModelParams::Er { n, p } => gen_er(*n, *p, seed),
        ModelParams::Ba { n, k } => gen_ba(*n, *k, seed),
        ModelParams::Cl { degrees } => Ok(gen_cl(&degrees.0, seed)),
        ModelParams::Esmc { degrees } => gen_esmc(&degrees.0, seed),
        ModelParams::Rmat { n, s, e, initiator, .. } => gen_rmat(*s, *e, initiator, *n, seed),
        other => Err(Error::UnsupportedModel(format!(
            "{} parameters describe no generator here",
            other.kind_name()
        ))),
    }
}

/// Every pair independently with probability `p`, by geometric skipping
/// over the pair sequence.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} outside [0, 1]")));
    }
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        return Ok(Graph::from_simple_edges(n, edges));
    }
    let mut rng = rng_from_seed(seed);
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::new();
    let (mut v, mut w): (usize, i64) = (1, -1);
    while v < n {
        let r: f64 = rng.random();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v));
        }
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// Preferential attachment from a `(k+1)`-clique; each new node links to
/// `k` distinct existing nodes chosen proportionally to degree.
pub fn gen_ba(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParams("BA needs k >= 1".into()));
    }
    if n <= k {
        return Err(Error::InvalidParams(format!("BA needs n > k (n = {n}, k = {k})")));
    }
    let mut rng = rng_from_seed(seed);
    let seed_size = k + 1;
    let mut edges = Vec::with_capacity(seed_size * k / 2 + (n - seed_size) * k);
    // every node appears once per incident edge
    let mut pool: Vec<NodeId> = Vec::with_capacity(2 * edges.capacity());
    for u in 0..seed_size {
        for v in u + 1..seed_size {
            edges.push((u, v));
            pool.push(u);
            pool.push(v);
        }
    }
    let mut targets: Vec<NodeId> = Vec::with_capacity(k);
    for v in seed_size..n {
        targets.clear();
        while targets.len() < k {
            let t = pool[rng.random_range(0..pool.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            pool.push(t);
            pool.push(v);
        }
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// Chung-Lu: pair `{u, v}` present independently with probability
/// `min(1, d_u d_v / sum(d))`. Sampled in expected linear time by skipping
/// through nodes sorted by decreasing weight.
pub fn gen_cl(degrees: &[usize], seed: u64) -> Graph {
    let n = degrees.len();
    let total: f64 = degrees.iter().map(|&d| d as f64).sum();
    if total == 0.0 {
        return Graph::empty(n);
    }
    let dmax = degrees.iter().copied().max().unwrap_or(0) as f64;
    if dmax * dmax > total {
        log::warn!(
            "Chung-Lu: max(d)^2 = {} exceeds sum(d) = {}, probabilities clamped",
            dmax * dmax,
            total
        );
    }
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(degrees[v]), v));
    let w: Vec<f64> = order.iter().map(|&v| degrees[v] as f64).collect();
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        if w[i] == 0.0 {
            break;
        }
        let mut j = i + 1;
        let mut p = (w[i] * w[j.min(n - 1)] / total).min(1.0);
        while j < n && p > 0.0 {
            if p < 1.0 {
                let r: f64 = rng.random();
                j += ((1.0 - r).ln() / (1.0 - p).ln()).floor() as usize;
            }
            if j < n {
                let q = (w[i] * w[j] / total).min(1.0);
                if rng.random::<f64>() < q / p {
                    edges.push((order[i], order[j]));
                }
                p = q;
                j += 1;
            }
        }
    }
    Graph::from_simple_edges(n, edges)
}

/// Erdős–Gallai test.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let n = degrees.len();
    let total: usize = degrees.iter().sum();
    if !total.is_multiple_of(2) || degrees.iter().any(|&d| d >= n.max(1) && d > 0) {
        return n == 0 || (total.is_multiple_of(2) && degrees.iter().all(|&d| d == 0));
    }
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + d[i];
    }
    let mut prefix = 0usize;
    // reach = number of entries with d_i >= k; nonincreasing in k
    let mut reach = n;
    for k in 1..=n {
        prefix += d[k - 1];
        while reach > 0 && d[reach - 1] < k {
            reach -= 1;
        }
        let capped_end = reach.max(k);
        let rhs = k * (k - 1) + k * reach.saturating_sub(k) + suffix[capped_end];
        if prefix > rhs {
            return false;
        }
    }
    true
}

/// Havel–Hakimi realization, highest remaining degree first; ties by id.
pub fn havel_hakimi(degrees: &[usize]) -> Result<Graph> {
    let n = degrees.len();
    let mut heap: BinaryHeap<(usize, Reverse<NodeId>)> = degrees
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(v, &d)| (d, Reverse(v)))
        .collect();
    let mut edges = Vec::with_capacity(degrees.iter().sum::<usize>() / 2);
    let mut popped = Vec::new();
    while let Some((d, Reverse(u))) = heap.pop() {
        popped.clear();
        for _ in 0..d {
            let (dv, Reverse(v)) = heap.pop().ok_or(Error::NotGraphical)?;
            edges.push((u, v));
            popped.push((dv - 1, Reverse(v)));
        }
        heap.extend(popped.iter().copied().filter(|(dv, _)| *dv > 0));
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// Uniform-ish sample with exactly the given degrees: Havel–Hakimi
/// followed by `10 m` edge switches.
pub fn gen_esmc(degrees: &[usize], seed: u64) -> Result<Graph> {
    if !is_graphical(degrees) {
        return Err(Error::NotGraphical);
    }
    let g = havel_hakimi(degrees)?;
    Ok(edge_switch(&g, default_swaps(g.m()), seed))
}

/// RMAT on `2^s` nodes with `e * 2^s` quadrant-descent draws, symmetrized;
/// self-loops and repeats are dropped, then uniformly chosen nodes are
/// deleted until `n` remain (relabeled in increasing order).
pub fn gen_rmat(s: u32, e: usize, initiator: &Initiator, n: usize, seed: u64) -> Result<Graph> {
    initiator.validate()?;
    if s >= usize::BITS - 1 {
        return Err(Error::InvalidParams(format!("RMAT scale {s} too large")));
    }
    let size = 1usize << s;
    if n > size {
        return Err(Error::InvalidParams(format!("RMAT target {n} exceeds 2^{s}")));
    }
    let mut rng = rng_from_seed(seed);
    let (ab, abc) = (initiator.a + initiator.b, initiator.a + initiator.b + initiator.c);
    let draws = e * size;
    let mut edges = Vec::with_capacity(draws);
    for _ in 0..draws {
        let (mut u, mut v) = (0usize, 0usize);
        for _ in 0..s {
            let r: f64 = rng.random();
            let (bu, bv) = if r < initiator.a {
                (0, 0)
            } else if r < ab {
                (0, 1)
            } else if r < abc {
                (1, 0)
            } else {
                (1, 1)
            };
            u = 2 * u + bu;
            v = 2 * v + bv;
        }
        edges.push((u, v));
    }
    let (full, _) = Graph::from_edges(size, edges);
    if n == size {
        return Ok(full);
    }
    let mut keep: Vec<NodeId> = sample(&mut rng, size, n).into_vec();
    keep.sort_unstable();
    Ok(full.induced_subgraph(&keep))
}

/// Mean of the discrete power law `p(d) ~ d^gamma` on `[d_min, d_max]`.
pub fn power_law_mean(gamma: f64, d_min: usize, d_max: usize) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for d in d_min..=d_max {
        let w = (d as f64).powf(gamma);
        num += d as f64 * w;
        den += w;
    }
    num / den
}

pub const GAMMA_RANGE: (f64, f64) = (-6.0, -1.0);
pub const GAMMA_TOLERANCE: f64 = 1e-3;
const DEGENERATE_GAMMA: f64 = -3.0;

/// Exponent in [-6, -1] whose power law on the observed `[d_min, d_max]`
/// reproduces the observed mean, found by bisection to an interval width of
/// 1e-3. Out-of-range means clamp to the nearer bound.
pub fn plfit(values: &[usize]) -> Result<PowerLawFit> {
    let d_min = *values
        .iter()
        .min()
        .ok_or(Error::UndefinedInput("plfit of an empty list"))?;
    let d_max = *values.iter().max().expect("non-empty");
    if d_min == 0 {
        return Err(Error::UndefinedInput("plfit needs values >= 1"));
    }
    let mean = values.iter().sum::<usize>() as f64 / values.len() as f64;
    Ok(fit_exponent(mean, d_min, d_max))
}

fn fit_exponent(mean: f64, d_min: usize, d_max: usize) -> PowerLawFit {
    let (mut lo, mut hi) = GAMMA_RANGE;
    let mut fit = PowerLawFit {
        gamma: DEGENERATE_GAMMA,
        d_min,
        d_max,
        degenerate: d_min == d_max,
        clamped: false,
    };
    if fit.degenerate {
        return fit;
    }
    if mean >= power_law_mean(hi, d_min, d_max) {
        fit.gamma = hi;
        fit.clamped = mean > power_law_mean(hi, d_min, d_max);
        return fit;
    }
    if mean <= power_law_mean(lo, d_min, d_max) {
        fit.gamma = lo;
        fit.clamped = mean < power_law_mean(lo, d_min, d_max);
        return fit;
    }
    while hi - lo > GAMMA_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if power_law_mean(mid, d_min, d_max) < mean {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    fit.gamma = 0.5 * (lo + hi);
    fit
}

/// [`plfit`] on community sizes; when even the flattest exponent expects a
/// smaller mean than observed, the minimum size is raised by integer
/// bisection until the expected mean is as close as possible to it.
pub fn plfit_star(sizes: &[usize]) -> Result<CommunityFit> {
    let base = plfit(sizes)?;
    let mean = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
    let mut out = CommunityFit {
        beta: base.gamma,
        c_min: base.d_min,
        c_max: base.d_max,
        degenerate: base.degenerate,
        raised_min: false,
    };
    if base.degenerate || power_law_mean(base.gamma, base.d_min, base.d_max) >= mean {
        return Ok(out);
    }
    // smallest c_min whose expected mean reaches the observed mean
    let (mut lo, mut hi) = (base.d_min, base.d_max);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if power_law_mean(base.gamma, mid, base.d_max) >= mean {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let above = (power_law_mean(base.gamma, lo, base.d_max) - mean).abs();
    let below = (power_law_mean(base.gamma, lo - 1, base.d_max) - mean).abs();
    out.c_min = if lo > base.d_min && below < above { lo - 1 } else { lo };
    out.raised_min = out.c_min > base.d_min;
    Ok(out)
}
