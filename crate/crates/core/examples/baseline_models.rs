//! Fits every baseline model to a graph and generates one replica of each.

use recon::graph::{avg_local_clustering, degree_gini, read_edge_list};
use recon::models::{fit, generate, ModelKind};

fn main() -> recon::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let scale = 2;
    let g = read_edge_list(&path)?.graph;
    println!(
        "original  n={:<5} m={:<5} gini={:.3} clustering={:.3}",
        g.n(),
        g.m(),
        degree_gini(&g),
        avg_local_clustering(&g)
    );

    for kind in ModelKind::ALL {
        let params = fit(&g, kind, scale)?;
        if !kind.can_generate() {
            println!("{kind:<9} {}", serde_json::to_string(&params)?);
            continue;
        }
        let r = generate(&params, 7)?;
        println!(
            "{kind:<9} n={:<5} m={:<5} gini={:.3} clustering={:.3}",
            r.n(),
            r.m(),
            degree_gini(&r),
            avg_local_clustering(&r)
        );
    }
    Ok(())
}
