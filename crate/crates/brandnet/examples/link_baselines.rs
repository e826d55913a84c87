//! Weighted PageRank and HITS on a small interaction graph.
//!
//! Run with: `cargo run -p brandnet --example link_baselines`

use std::collections::{BTreeMap, BTreeSet};

use brandnet::baselines::{hits, pagerank, rank_by};
use brandnet::graph::{UserId, WeightedDigraph};

fn uid(s: &str) -> UserId {
    UserId::new(s).unwrap()
}

fn main() {
    // hub broadcasts to everyone; mid relays; the leaves mostly listen.
    let names = ["hub", "mid", "x1", "x2", "x3"];
    let nodes: BTreeSet<UserId> = names.iter().map(|s| uid(s)).collect();
    let mut edges: BTreeMap<(UserId, UserId), u64> = BTreeMap::new();
    for (s, t, w) in [
        ("hub", "mid", 4u64),
        ("hub", "x1", 2),
        ("hub", "x2", 2),
        ("mid", "x3", 3),
        ("mid", "hub", 1),
        ("x1", "hub", 1),
        ("x3", "mid", 2),
    ] {
        edges.insert((uid(s), uid(t)), w);
    }
    let graph = WeightedDigraph::from_parts(nodes, edges);

    let pr = pagerank(&graph, 0.85, 1e-10, 500).unwrap();
    println!(
        "pagerank converged after {} iterations (residual {:.2e})",
        pr.iterations, pr.residual
    );
    for (id, score) in rank_by(&pr, 100.0).unwrap().entries {
        println!("  {id:<5} {score:.5}");
    }

    let (auth, hub) = hits(&graph, 1e-10, 500).unwrap();
    println!("\nhits authority (who receives attention):");
    for (id, score) in rank_by(&auth, 100.0).unwrap().entries {
        println!("  {id:<5} {score:.5}");
    }
    println!("\nhits hub (who directs attention):");
    for (id, score) in rank_by(&hub, 100.0).unwrap().entries {
        println!("  {id:<5} {score:.5}");
    }
}
