//! The topological potential field and the influence-factor search.
//!
//! Prints the potential-entropy curve H(sigma) over the search grid for a
//! ring-with-chords graph: near both ends of the grid the field flattens
//! and H approaches ln n; the optimizer picks the interior minimum, where
//! the field is most concentrated on structurally central nodes.
//!
//! Run with: `cargo run -p brandnet --example potential_field`

use std::collections::{BTreeMap, BTreeSet};

use brandnet::graph::{invert_weights, UserId, WeightedDigraph};
use brandnet::paths::all_pairs_shortest;
use brandnet::potential::{optimize_sigma, potential_entropy, topological_potential};
use brandnet::valuation::attach_values;

fn uid(i: usize) -> UserId {
    UserId::new(format!("n{i:02}")).unwrap()
}

fn main() {
    // A 24-node directed ring with two shortcut chords.
    let n = 24;
    let nodes: BTreeSet<UserId> = (0..n).map(uid).collect();
    let mut edges: BTreeMap<(UserId, UserId), u64> = BTreeMap::new();
    for i in 0..n {
        edges.insert((uid(i), uid((i + 1) % n)), 1);
    }
    for (a, b) in [(0, 12), (12, 0), (6, 18), (18, 6)] {
        edges.insert((uid(a), uid(b)), 1);
    }
    let graph = WeightedDigraph::from_parts(nodes, edges);
    let distances = invert_weights(&graph).unwrap();
    let table = all_pairs_shortest(&distances);
    let values: BTreeMap<UserId, f64> = graph.ids().iter().map(|id| (id.clone(), 1.0)).collect();
    let dual = attach_values(&graph, &distances, &values).unwrap();

    let (d_min, d_max) = table.finite_distance_range().unwrap();
    let lo = d_min as f64 / 10.0;
    let hi = 3.0 * d_max as f64;
    println!("search range: sigma in [{lo:.3}, {hi:.1}], ln n = {:.4}\n", (n as f64).ln());

    println!("{:>10}  {:>8}  curve", "sigma", "H");
    for i in 0..25 {
        let sigma = lo * (hi / lo).powf(i as f64 / 24.0);
        let field = topological_potential(&dual, &table, sigma).unwrap();
        let h = potential_entropy(&field).unwrap();
        let bar = "#".repeat((h * 12.0) as usize);
        println!("{sigma:>10.4}  {h:>8.4}  {bar}");
    }

    let sigma = optimize_sigma(&dual, &table).unwrap();
    let field = topological_potential(&dual, &table, sigma).unwrap();
    let h = potential_entropy(&field).unwrap();
    println!("\nsigma* = {sigma:.4} with H = {h:.4}");

    // Chord endpoints sit closest to everything and concentrate potential.
    let mut ranked: Vec<(usize, f64)> = field.phi.iter().copied().enumerate().collect();
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    println!("\nhighest-potential nodes:");
    for (node, phi) in ranked.iter().take(6) {
        println!("  {}  phi {phi:.4}", graph.id(*node));
    }
}
