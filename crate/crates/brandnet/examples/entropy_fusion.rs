//! Entropy-weight fusion of the network and brand scores.
//!
//! The entropy method gives the more discriminating criterion the larger
//! weight: a near-uniform column says little about who matters and is
//! discounted, a concentrated column decides the ranking.
//!
//! Run with: `cargo run -p brandnet --example entropy_fusion`

use brandnet::graph::UserId;
use brandnet::valuation::{entropy_weights, individual_values, ScoreMatrix};

fn matrix(label: &str, network: Vec<f64>, brand: Vec<f64>) {
    let ids: Vec<UserId> = (0..network.len())
        .map(|i| UserId::new(format!("u{i}")).unwrap())
        .collect();
    let m = ScoreMatrix::from_columns(ids.clone(), network, brand);
    let w = entropy_weights(&m);
    let values = individual_values(&m, w);
    println!("{label}");
    println!("  weights: network {:.4}, brand {:.4}", w.network, w.brand);
    for id in &ids {
        println!("  {id}: value {:.4}", values[id]);
    }
    println!();
}

fn main() {
    // Brand engagement concentrated on one user: the brand column carries
    // most of the information and earns the larger weight.
    matrix(
        "concentrated brand column",
        vec![0.55, 0.60, 0.50, 0.58],
        vec![0.00, 0.00, 0.00, 1.00],
    );

    // A flat brand column is uninformative and gets weight ~0.
    matrix(
        "uniform brand column",
        vec![0.10, 0.45, 0.80, 0.30],
        vec![0.70, 0.70, 0.70, 0.70],
    );

    // Two equally spread columns share the weight about evenly.
    matrix(
        "balanced columns",
        vec![0.10, 0.40, 0.70, 1.00],
        vec![1.00, 0.70, 0.40, 0.10],
    );
}
