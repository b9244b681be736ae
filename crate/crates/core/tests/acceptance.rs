//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! ```text
//! cargo test --test acceptance
//! ```

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use recon::bench::{betweenness_approx, core_decomposition, spanning_forest, triangle_count};
use recon::community::plm;
use recon::graph::{
    avg_local_clustering, connected_components, degree_sequence, diameter, DegreeSequence, DiameterMode, Graph,
};
use recon::models::{fit, gen_er, generate, plfit, ModelKind, ModelParams};
use recon::randomize::{default_swaps, edge_switch};
use recon::recon::{fit_recon, generate_with, replicate, ReconOptions};

use common::{caveman_ring, dolphins, oracles, planted_two_block};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed < limit
}

fn degree_exactness() -> Outcome {
    let g = dolphins();
    let original = degree_sequence(&g);
    let start = Instant::now();
    let mut bad = Vec::new();
    for seed in 0..20 {
        let r = replicate(&g, 1, seed).expect("replicate").replica.graph;
        if r.n() != 62 || r.m() != 159 || degree_sequence(&r) != original {
            bad.push(seed);
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && within(Duration::from_secs(5), t),
        format!("20 seeds, mismatching seeds {bad:?}, {t:.2?} (limit 5s)"),
    )
}

fn linear_scaling() -> Outcome {
    let g = dolphins();
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut ok = true;
    for x in [1, 2, 4, 8, 16, 32] {
        let r = replicate(&g, x, 42).expect("replicate").replica.graph;
        ok &= r.n() == 62 * x && r.m() == 159 * x;
        rows.push(format!("x={x}:{}/{}", r.n(), r.m()));
    }
    let t = start.elapsed();
    outcome(
        ok && within(Duration::from_secs(30), t),
        format!("{} in {t:.2?} (limit 30s)", rows.join(" ")),
    )
}

fn lcc_diameter(g: &Graph) -> f64 {
    diameter(g, DiameterMode::Exact).expect("diameter")
}

fn diameter_stability() -> Outcome {
    let g = caveman_ring(10, 20);
    assert_eq!(connected_components(&g).count, 1);
    let original = lcc_diameter(&g);
    let mut values = Vec::new();
    for seed in 0..10 {
        let r = replicate(&g, 8, seed).expect("replicate").replica.graph;
        values.push(lcc_diameter(&r));
    }
    let close = values.iter().filter(|&&d| (d - original).abs() <= 3.0).count();
    outcome(
        close >= 8,
        format!("original {original}, scale-8 replicas {values:?}, {close}/10 within +-3"),
    )
}

fn clustering_retention() -> Outcome {
    let g = caveman_ring(10, 20);
    let seeds = 10;
    let (mut recon_sum, mut esmc_sum) = (0.0, 0.0);
    let esmc = fit(&g, ModelKind::Esmc, 1).expect("fit");
    for seed in 0..seeds {
        recon_sum += avg_local_clustering(&replicate(&g, 1, seed).expect("replicate").replica.graph);
        esmc_sum += avg_local_clustering(&generate(&esmc, seed).expect("esmc"));
    }
    let (a, b) = (recon_sum / seeds as f64, esmc_sum / seeds as f64);
    outcome(
        a >= 4.0 * b,
        format!("ReCoN {a:.4} vs ESMC {b:.4} (ratio {:.2}, need >= 4)", a / b),
    )
}

fn switch_uniformity() -> Outcome {
    let start_graph = Graph::from_simple_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
    let runs = 30_000u64;
    let start = Instant::now();
    let mut counts: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
    for seed in 0..runs {
        let r = edge_switch(&start_graph, default_swaps(start_graph.m()), seed);
        *counts.entry(r.edge_vec()).or_default() += 1;
    }
    let t = start.elapsed();
    let freqs: Vec<f64> = counts.values().map(|&c| c as f64 / runs as f64).collect();
    let ok = freqs.len() == 3 && freqs.iter().all(|f| (f - 1.0 / 3.0).abs() <= 0.05);
    outcome(
        ok && within(Duration::from_secs(60), t),
        format!(
            "{} realizations, frequencies {freqs:.4?}, {t:.2?} (limit 60s)",
            freqs.len()
        ),
    )
}

/// Independent bisection on the mean of p(d) ~ d^g over {1, 2, 3}.
fn oracle_gamma(target: f64) -> f64 {
    let mean = |g: f64| {
        let (num, den) = (1..=3).fold((0.0, 0.0), |(num, den), d| {
            let w = (d as f64).powf(g);
            (num + d as f64 * w, den + w)
        });
        num / den
    };
    let (mut lo, mut hi) = (-6.0f64, -1.0f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if mean(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn plfit_precision() -> Outcome {
    // d_min 1, d_max 3, mean 1.5
    let fit = plfit(&[1, 1, 1, 1, 1, 1, 3, 3, 1, 2]).expect("plfit");
    let oracle = oracle_gamma(1.5);
    let clamped = plfit(&[1, 2, 3]).expect("plfit");
    let ok = (fit.gamma - oracle).abs() <= 1e-3 && clamped.gamma == -1.0;
    outcome(
        ok,
        format!(
            "gamma {:.6} vs oracle {oracle:.6} (|diff| {:.2e}); mean 2.0 -> {}",
            fit.gamma,
            (fit.gamma - oracle).abs(),
            clamped.gamma
        ),
    )
}

fn fitting_goldens() -> Outcome {
    let g = dolphins();
    let mut notes = Vec::new();
    let mut ok = true;
    match fit(&g, ModelKind::Er, 1).expect("er") {
        ModelParams::Er { p, .. } => {
            let expected = 2.0 * 159.0 / (62.0 * 61.0);
            ok &= (p - expected).abs() <= 1e-12;
            notes.push(format!("p={p:.9}"));
        }
        _ => ok = false,
    }
    match fit(&g, ModelKind::Ba, 1).expect("ba") {
        ModelParams::Ba { k, .. } => {
            ok &= k == 2;
            notes.push(format!("k={k}"));
        }
        _ => ok = false,
    }
    match fit(&g, ModelKind::Rmat, 1).expect("rmat") {
        ModelParams::Rmat { s, e, .. } => {
            ok &= s == 6 && e == 2;
            notes.push(format!("s={s} e={e}"));
        }
        _ => ok = false,
    }
    let base = degree_sequence(&g).0;
    let doubled = DegreeSequence([base.clone(), base].concat());
    for kind in [ModelKind::Cl, ModelKind::Esmc] {
        match fit(&g, kind, 2).expect("fit") {
            ModelParams::Cl { degrees } | ModelParams::Esmc { degrees } => ok &= degrees == doubled,
            _ => ok = false,
        }
    }
    notes.push("CL/ESMC x2 concatenation checked".into());
    outcome(ok, notes.join(", "))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 12);
        let p = 0.1 + 0.8 * ((seed * 37 % 100) as f64 / 100.0);
        let g = gen_er(n, p, seed).expect("er");
        let tri = triangle_count(&g);
        let comps = oracles::components(&g);
        let bc = betweenness_approx(&g, n, seed).expect("betweenness");
        let ok = (tri.total, tri.per_node) == oracles::triangles(&g)
            && core_decomposition(&g).core == oracles::cores(&g)
            && connected_components(&g).count == comps
            && spanning_forest(&g).len() == n - comps
            && bc
                .iter()
                .zip(oracles::betweenness(&g))
                .all(|(a, b)| (a - b).abs() <= 1e-9);
        if !ok {
            failures.push(seed);
        }
    }
    let t = start.elapsed();
    outcome(
        failures.is_empty() && within(Duration::from_secs(30), t),
        format!("100 graphs, failing seeds {failures:?}, {t:.2?} (limit 30s)"),
    )
}

fn plm_sanity() -> Outcome {
    let mut exact = 0;
    for seed in 0..10 {
        let g = planted_two_block(100, 0.3, 0.01, seed);
        let p = plm(&g, seed);
        let a = &p.assignment;
        let recovered = p.k == 2 && (0..100).all(|v| (a[v] == a[0]) == (v < 50));
        exact += recovered as usize;
    }
    outcome(exact >= 9, format!("{exact}/10 seeds recover the planted bipartition"))
}

fn throughput() -> Outcome {
    let g = dolphins();
    let start = Instant::now();
    let model = fit_recon(&g, None, 42).expect("fit");
    let opts = ReconOptions {
        threads: 4,
        ..ReconOptions::default()
    };
    let r = generate_with(&model, 10_000, 42, &opts).expect("generate");
    let t = start.elapsed();
    let m = r.graph.m();
    let residual = r.info.residual_forbidden as f64 / m as f64;
    outcome(
        m == 1_590_000 && residual < 1e-3 && within(Duration::from_secs(120), t),
        format!(
            "m={m}, residual forbidden {} ({:.4}%), {t:.2?} (limit 120s)",
            r.info.residual_forbidden,
            100.0 * residual
        ),
    )
}

fn run_cli(args: &[&str]) -> bool {
    Command::new(env!("CARGO_BIN_EXE_recon"))
        .args(args)
        .status()
        .map(|s| s.success())
        .unwrap_or(false)
}

/// Bench CSV without the timing columns.
fn bench_without_timings(text: &str) -> String {
    text.lines()
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            format!("{},{},{}", cols[0], cols[1], cols[4])
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = common::dolphins_path();
    let input = input.to_str().expect("utf-8 path");
    let mut checked = Vec::new();
    let mut mismatched = Vec::new();
    for round in 0..2 {
        // both rounds write identical paths; the first round is moved aside
        let work = dir.path().join("run");
        std::fs::create_dir_all(&work).expect("mkdir");
        let out = |name: &str| work.join(name);
        let s = |p: &Path| p.to_str().expect("utf-8").to_string();
        let mut ok = true;
        for model in ["recon", "er", "ba", "cl", "esmc", "rmat"] {
            let o = s(&out(&format!("{model}.el")));
            ok &= run_cli(&[
                "replicate",
                input,
                "--model",
                model,
                "--scale",
                "2",
                "--seed",
                "7",
                "--threads",
                "1",
                "--no-timings",
                "--out",
                &o,
            ]);
        }
        let o = s(&out("recon.el"));
        ok &= run_cli(&["fit", input, "--model", "rmat", "--out", &s(&out("fit.json"))]);
        ok &= run_cli(&[
            "compare",
            input,
            &o,
            "--json",
            &s(&out("cmp.json")),
            "--csv",
            &s(&out("cmp.csv")),
        ]);
        ok &= run_cli(&[
            "scaling-study",
            input,
            "--scales",
            "1,2",
            "--seeds",
            "2",
            "--out",
            &s(&out("scaling.csv")),
        ]);
        ok &= run_cli(&["profile", input, "--centralities", "--out", &s(&out("profile.json"))]);
        ok &= run_cli(&["bench", input, "--out", &s(&out("bench.csv"))]);
        if !ok {
            return outcome(false, format!("a command failed in round {round}"));
        }
        std::fs::rename(&work, dir.path().join(format!("round{round}"))).expect("rename");
    }
    let read =
        |name: &str, round: u32| std::fs::read_to_string(dir.path().join(format!("round{round}/{name}"))).unwrap();
    let mut names: Vec<String> = ["recon", "er", "ba", "cl", "esmc", "rmat"]
        .iter()
        .flat_map(|m| [format!("{m}.el"), format!("{m}.el.json")])
        .collect();
    names.extend(["fit.json", "cmp.json", "cmp.csv", "scaling.csv", "profile.json"].map(String::from));
    for name in &names {
        checked.push(name.clone());
        if read(name, 0) != read(name, 1) {
            mismatched.push(name.clone());
        }
    }
    if bench_without_timings(&read("bench.csv", 0)) != bench_without_timings(&read("bench.csv", 1)) {
        mismatched.push("bench.csv".into());
    }
    outcome(
        mismatched.is_empty(),
        format!(
            "{} outputs compared (+ bench rows without timings), mismatches {mismatched:?}",
            checked.len()
        ),
    )
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check); 11] = [
        ("degree exactness", degree_exactness),
        ("linear scaling", linear_scaling),
        ("diameter stability", diameter_stability),
        ("clustering retention", clustering_retention),
        ("edge-switch uniformity", switch_uniformity),
        ("plfit precision", plfit_precision),
        ("fitting goldens", fitting_goldens),
        ("oracle equivalence", oracle_equivalence),
        ("PLM sanity", plm_sanity),
        ("throughput", throughput),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += !o.pass as usize;
        println!(
            "{} {:>2}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
