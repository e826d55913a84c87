//! Influential-node analytics for brand communities.
//!
//! `brandnet` turns raw social-interaction records (posts, comments,
//! follows) into a weighted directed graph whose edges point the way
//! information spreads, scores every user from two sides — network
//! structure (weighted out-degree + betweenness over inverted-weight
//! shortest paths) and brand engagement (signed support-rate sums) — fuses
//! the two with entropy weights into an individual value, and ranks users
//! by their topological potential: how much value a user and their
//! surroundings concentrate under a distance-decaying field whose range is
//! tuned by entropy minimization. Weighted PageRank and HITS baselines and
//! coverage/verified-ratio evaluation round out the toolkit.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── build_network.rs      # records -> weighted graph, pruning, inversion
//! ├── influence_ranking.rs  # the full ranking on a synthetic community
//! ├── entropy_fusion.rs     # entropy-weight fusion of the two scores
//! ├── potential_field.rs    # the potential field and the sigma search
//! ├── link_baselines.rs     # weighted PageRank and HITS
//! ├── network_stats.rs      # summary stats + power-law CCDF fit
//! └── method_comparison.rs  # coverage curves, potential vs baselines
//! ```
//!
//! ```bash
//! cargo run -p brandnet --example influence_ranking
//! ```
//!
//! The `brandnet` binary drives the same pipeline from CSV files; see the
//! README for the subcommands.

#![forbid(unsafe_code)]

pub mod baselines;
pub mod engagement;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod io;
pub mod netstats;
pub mod paths;
pub mod pipeline;
pub mod potential;
mod rank_util;
pub mod structural;
pub mod synth;
pub mod valuation;

pub use error::{Error, Result};
pub use graph::{
    build_graph, invert_weights, prune, Comment, DistanceWeights, FollowRelation, Polarity, Post,
    UserId, WeightedDigraph,
};
pub use paths::{all_pairs_shortest, through_count, ShortestPathTable};
