//! Network characterization of a generated community.
//!
//! Prints the summary statistics (path length, clustering, assortativity)
//! and fits a power law to the degree CCDFs — the preferential-attachment
//! backbone should show a positive exponent and negative assortativity.
//!
//! Run with: `cargo run -p brandnet --example network_stats`

use brandnet::graph::build_graph;
use brandnet::netstats::{empirical_ccdf, fit_powerlaw, summarize};
use brandnet::synth::{generate_synthetic, SyntheticSpec};

fn main() {
    let community = generate_synthetic(&SyntheticSpec::small(42)).unwrap();
    let graph = build_graph(&community.posts, &community.comments, &community.follows).unwrap();

    let summary = summarize(&graph).unwrap();
    println!("nodes:                  {}", summary.node_count);
    println!("edges:                  {}", summary.edge_count);
    println!("density:                {:.6}", summary.density);
    println!("avg path length:        {:.3} hops", summary.avg_path_length);
    println!("avg weighted degree:    {:.3}", summary.avg_weighted_degree);
    println!(
        "clustering coefficient: {:.4} (random reference {:.4})",
        summary.clustering_coefficient, summary.random_reference_clustering
    );
    println!("assortativity:          {:.4}", summary.assortativity);

    let out_degrees: Vec<u64> = (0..graph.node_count())
        .map(|v| graph.out_degree(v) as u64)
        .collect();
    match fit_powerlaw(&out_degrees) {
        Ok(fit) => {
            println!(
                "\nout-degree CCDF fit: alpha {:.3}, c {:.3}, r^2 {:.3}",
                fit.alpha, fit.c, fit.r_squared
            );
            println!("\n{:>6}  {:>8}", "degree", "P[X > x]");
            for (x, p) in empirical_ccdf(&out_degrees).iter().take(12) {
                println!("{x:>6}  {p:>8.4}");
            }
        }
        Err(e) => println!("\nno power-law fit: {e}"),
    }
}
