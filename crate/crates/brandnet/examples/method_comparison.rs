//! Coverage comparison: potential ranking versus PageRank, HITS, and a
//! random order on a community with planted influencers.
//!
//! The coverage ratio at n% is the share of users inside the top n% or
//! one hop downstream of it. A good ranking reaches most of the community
//! with a small top slice.
//!
//! Run with: `cargo run --release -p brandnet --example method_comparison`

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use brandnet::baselines::{hits, pagerank, rank_by};
use brandnet::engagement::{brand_scores, SentimentLexicon};
use brandnet::evaluation::{compare_methods, verified_ratio};
use brandnet::graph::{build_graph, invert_weights, prune, UserId};
use brandnet::paths::all_pairs_shortest;
use brandnet::potential::rank_influential;
use brandnet::structural::network_score;
use brandnet::synth::{generate_synthetic, SyntheticSpec};
use brandnet::valuation::{attach_values, build_score_matrix, entropy_weights, individual_values};

fn main() {
    let community = generate_synthetic(&SyntheticSpec {
        node_count: 600,
        attach_edges: 3,
        planted_count: 8,
        planted_engagement: 18,
        brand_post_rate: 0.3,
        seed: 13,
    })
    .unwrap();
    let graph = build_graph(&community.posts, &community.comments, &community.follows).unwrap();
    let pruned = prune(&graph, 2);
    let distances = invert_weights(&pruned).unwrap();
    let table = all_pairs_shortest(&distances);
    let structural = network_score(&pruned, &table).unwrap();
    let lexicon = SentimentLexicon::builtin();
    let brand = brand_scores(pruned.ids(), &community.posts, &community.comments, &lexicon);
    let matrix = build_score_matrix(&structural, &brand).unwrap();
    let weights = entropy_weights(&matrix);
    let values = individual_values(&matrix, weights);
    let dual = attach_values(&pruned, &distances, &values).unwrap();

    let potential = rank_influential(&dual, &table, 0.0, 100.0, &structural, &brand).unwrap();
    let pr = rank_by(&pagerank(&pruned, 0.85, 1e-8, 200).unwrap(), 100.0).unwrap();
    let (auth, _) = hits(&pruned, 1e-8, 200).unwrap();
    let auth = rank_by(&auth, 100.0).unwrap();
    let mut random: Vec<UserId> = pruned.ids().to_vec();
    random.shuffle(&mut ChaCha8Rng::seed_from_u64(99));

    let orderings = vec![
        ("potential".to_string(), potential.order()),
        ("pagerank".to_string(), pr.order()),
        ("hits-authority".to_string(), auth.order()),
        ("random".to_string(), random),
    ];
    let grid = vec![2.5, 5.0, 10.0, 20.0, 40.0, 100.0];
    let curves = compare_methods(&pruned, &orderings, &grid).unwrap();

    println!("coverage by top-n% cut ({} pruned nodes):\n", pruned.node_count());
    print!("{:<16}", "method");
    for pct in &grid {
        print!("{pct:>8}%");
    }
    println!();
    for curve in &curves {
        print!("{:<16}", curve.method);
        for (_, c) in &curve.points {
            print!("{c:>9.3}");
        }
        println!();
    }

    // Planted influencers are the verified users of a synthetic community.
    let verified: std::collections::HashSet<UserId> = community.planted.iter().cloned().collect();
    println!("\nplanted (verified) users among each method's top 2.5%:");
    let take = ((0.025 * pruned.node_count() as f64).ceil()) as usize;
    for (method, order) in &orderings {
        let top: Vec<UserId> = order.iter().take(take).cloned().collect();
        let (count, total) = verified_ratio(&top, &verified).unwrap();
        println!("  {method:<16} {count}/{total}");
    }
}
