//! Command-line driver for the brandnet pipeline.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use brandnet::error::{Error, Result};
use brandnet::graph::prune;
use brandnet::pipeline::{self, compute_stats, PipelineConfig};
use brandnet::synth::{generate_synthetic, SyntheticSpec};
use brandnet::{baselines, io};

#[derive(Parser)]
#[command(name = "brandnet", version, about = "Influential-node analytics for brand communities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the interaction graph, prune it, and write its statistics.
    Build(DataArgs),
    /// Run the full influence-ranking pipeline and write all artifacts.
    Rank(DataArgs),
    /// Rank with PageRank / HITS only and write baseline.csv.
    Baseline(BaselineArgs),
    /// Rank with every method and compare coverage and verified ratios.
    Compare(DataArgs),
    /// Generate a seeded synthetic community as dataset CSV files.
    Gen(GenArgs),
    /// Write summary statistics for the raw or pruned graph.
    Stats(StatsArgs),
}

#[derive(Args)]
struct DataArgs {
    /// Config file with key = value lines; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    posts: Option<PathBuf>,
    #[arg(long)]
    comments: Option<PathBuf>,
    #[arg(long)]
    follows: Option<PathBuf>,
    /// Optional users.csv with verified flags.
    #[arg(long)]
    users: Option<PathBuf>,
    /// Optional sentiment lexicon; the built-in one is used otherwise.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Output directory for artifacts.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Drop edges lighter than this during pruning.
    #[arg(long)]
    min_weight: Option<u64>,
    /// PageRank damping factor.
    #[arg(long)]
    damping: Option<f64>,
    /// Share of ranked nodes reported as influential.
    #[arg(long)]
    top_percent: Option<f64>,
    /// Minimum potential for a node to stay in the ranking.
    #[arg(long)]
    phi_threshold: Option<f64>,
    /// Convergence tolerance for the iterative baselines.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Seed for the random comparison ordering.
    #[arg(long)]
    seed: Option<u64>,
    /// Refuse exact all-pairs analysis above this many pruned nodes.
    #[arg(long)]
    node_cap: Option<usize>,
}

#[derive(Args)]
struct BaselineArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Which baseline to run.
    #[arg(long, value_parser = ["pagerank", "hits", "both"], default_value = "both")]
    method: String,
}

#[derive(Args)]
struct GenArgs {
    /// Output directory for the dataset CSV files.
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long, default_value_t = 2000)]
    nodes: usize,
    /// Preferential-attachment follow edges per joining user.
    #[arg(long, default_value_t = 3)]
    attach: usize,
    #[arg(long, default_value_t = 20)]
    planted: usize,
    /// Loyal commenters recruited per planted influencer.
    #[arg(long, default_value_t = 25)]
    engagement: usize,
    /// Probability that a background lurker publishes a post.
    #[arg(long, default_value_t = 0.3)]
    post_rate: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Analyze the raw graph instead of the pruned one.
    #[arg(long)]
    raw: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build(args) => build(args),
        Command::Rank(args) => rank(args, false),
        Command::Compare(args) => rank(args, true),
        Command::Baseline(args) => baseline(args),
        Command::Gen(args) => gen(args),
        Command::Stats(args) => stats(args),
    }
}

fn resolve_config(args: &DataArgs) -> Result<PipelineConfig> {
    let mut config = PipelineConfig::new("posts.csv", "comments.csv", "follows.csv", "out");
    if let Some(path) = &args.config {
        let pairs = io::parse_config_file(path)?;
        config.apply_pairs(&pairs)?;
    }
    if let Some(p) = &args.posts {
        config.posts = p.clone();
    }
    if let Some(p) = &args.comments {
        config.comments = p.clone();
    }
    if let Some(p) = &args.follows {
        config.follows = p.clone();
    }
    if let Some(p) = &args.users {
        config.users = Some(p.clone());
    }
    if let Some(p) = &args.lexicon {
        config.lexicon = Some(p.clone());
    }
    if let Some(p) = &args.out {
        config.out_dir = p.clone();
    }
    if let Some(v) = args.min_weight {
        config.prune_min_weight = v;
    }
    if let Some(v) = args.damping {
        config.damping = v;
    }
    if let Some(v) = args.top_percent {
        config.top_percent = v;
    }
    if let Some(v) = args.phi_threshold {
        config.phi_threshold = v;
    }
    if let Some(v) = args.tolerance {
        config.tolerance = v;
    }
    if let Some(v) = args.max_iter {
        config.max_iter = v;
    }
    if let Some(v) = args.seed {
        config.seed = v;
    }
    if let Some(v) = args.node_cap {
        config.node_cap = v;
    }
    Ok(config)
}

fn print_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn build(args: DataArgs) -> Result<()> {
    let config = resolve_config(&args)?;
    let (raw_graph, dataset, _) = pipeline::load_and_build(&config)?;
    print_warnings(&dataset.warnings);
    let pruned = prune(&raw_graph, config.prune_min_weight);
    println!(
        "raw graph:    {} nodes, {} edges",
        raw_graph.node_count(),
        raw_graph.edge_count()
    );
    println!(
        "pruned graph: {} nodes, {} edges (min weight {})",
        pruned.node_count(),
        pruned.edge_count(),
        config.prune_min_weight
    );
    if pruned.is_empty() {
        return Err(Error::in_stage("prune")(Error::EmptyGraph));
    }
    let stats = compute_stats(&pruned).map_err(Error::in_stage("netstats"))?;
    std::fs::create_dir_all(&config.out_dir)?;
    let stats_path = config.out_dir.join("stats.json");
    let ccdf_path = config.out_dir.join("ccdf.csv");
    io::write_stats_json(&stats_path, &stats.summary)?;
    io::write_ccdf(&ccdf_path, &stats.in_ccdf, &stats.out_ccdf)?;
    print_summary_block(&stats);
    println!("wrote {}", stats_path.display());
    println!("wrote {}", ccdf_path.display());
    Ok(())
}

fn print_summary_block(stats: &pipeline::GraphStats) {
    let s = &stats.summary;
    println!("density:                {:.6}", s.density);
    println!("avg path length:        {:.3}", s.avg_path_length);
    println!("avg weighted degree:    {:.3}", s.avg_weighted_degree);
    println!(
        "clustering coefficient: {:.4} (random reference {:.4})",
        s.clustering_coefficient, s.random_reference_clustering
    );
    println!("assortativity:          {:.4}", s.assortativity);
    if let Some(a) = stats.alpha_in {
        println!("in-degree CCDF alpha:   {a:.3}");
    }
    if let Some(a) = stats.alpha_out {
        println!("out-degree CCDF alpha:  {a:.3}");
    }
}

fn rank(args: DataArgs, focus_comparison: bool) -> Result<()> {
    let config = resolve_config(&args)?;
    let outcome = pipeline::run_pipeline(&config)?;
    print_warnings(&outcome.warnings);
    let meta = &outcome.metadata;
    println!(
        "graph: {} -> {} nodes, {} -> {} edges after pruning",
        meta.raw_nodes, meta.pruned_nodes, meta.raw_edges, meta.pruned_edges
    );
    println!(
        "sigma* = {:.6}, entropy weights: network {:.4} / brand {:.4}",
        meta.sigma, meta.entropy_weight_network, meta.entropy_weight_brand
    );
    if focus_comparison {
        println!("\ncoverage at n%:");
        println!("{:<16} {:>8} {:>8} {:>8} {:>8}", "method", "2.5%", "10%", "25%", "100%");
        for curve in &outcome.curves {
            let at = |pct: f64| {
                curve
                    .points
                    .iter()
                    .find(|(p, _)| (*p - pct).abs() < 1e-9)
                    .map(|(_, c)| *c)
                    .unwrap_or(f64::NAN)
            };
            println!(
                "{:<16} {:>8.3} {:>8.3} {:>8.3} {:>8.3}",
                curve.method,
                at(2.5),
                at(10.0),
                at(25.0),
                at(100.0)
            );
        }
        if let Some(rows) = &outcome.verified {
            println!("\nverified users in the top {}%:", meta.top_percent);
            for (method, count, total) in rows {
                println!("{method:<16} {count}/{total}");
            }
        }
    } else {
        println!(
            "\ntop {}% influential nodes ({} entries):",
            meta.top_percent,
            outcome.ranking.entries.len()
        );
        println!(
            "{:>4} {:<12} {:>12} {:>10} {:>10} {:>10}",
            "rank", "user", "phi", "network", "brand", "value"
        );
        for (i, e) in outcome.ranking.entries.iter().take(20).enumerate() {
            println!(
                "{:>4} {:<12} {:>12.4} {:>10.4} {:>10.4} {:>10.4}",
                i + 1,
                e.user.to_string(),
                e.phi,
                e.score_network,
                e.score_brand,
                e.value
            );
        }
        if outcome.ranking.entries.len() > 20 {
            println!("  ... ({} more in ranking.csv)", outcome.ranking.entries.len() - 20);
        }
    }
    println!();
    for p in &outcome.artifacts {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn baseline(args: BaselineArgs) -> Result<()> {
    let config = resolve_config(&args.data)?;
    let (raw_graph, dataset, _) = pipeline::load_and_build(&config)?;
    print_warnings(&dataset.warnings);
    let pruned = prune(&raw_graph, config.prune_min_weight);
    if pruned.is_empty() {
        return Err(Error::in_stage("prune")(Error::EmptyGraph));
    }
    let mut rankings = Vec::new();
    if args.method == "pagerank" || args.method == "both" {
        let pr = baselines::pagerank(&pruned, config.damping, config.tolerance, config.max_iter)?;
        rankings.push(baselines::rank_by(&pr, config.top_percent)?);
    }
    if args.method == "hits" || args.method == "both" {
        let (auth, hub) = baselines::hits(&pruned, config.tolerance, config.max_iter)?;
        rankings.push(baselines::rank_by(&auth, config.top_percent)?);
        rankings.push(baselines::rank_by(&hub, config.top_percent)?);
    }
    std::fs::create_dir_all(&config.out_dir)?;
    let path = config.out_dir.join("baseline.csv");
    io::write_baseline(&path, &rankings)?;
    for ranking in &rankings {
        println!("{} (top {}%):", ranking.method, ranking.top_percent);
        for (i, (user, score)) in ranking.entries.iter().take(10).enumerate() {
            println!("{:>4} {:<12} {:.6}", i + 1, user.to_string(), score);
        }
        println!();
    }
    println!("wrote {}", path.display());
    Ok(())
}

fn gen(args: GenArgs) -> Result<()> {
    let spec = SyntheticSpec {
        node_count: args.nodes,
        attach_edges: args.attach,
        planted_count: args.planted,
        planted_engagement: args.engagement,
        brand_post_rate: args.post_rate,
        seed: args.seed,
    };
    let community = generate_synthetic(&spec)?;
    let files = pipeline::write_synthetic(&args.out, &community)?;
    println!(
        "generated {} users ({} planted influencers, verified in users.csv), {} posts, {} comments, {} follows",
        args.nodes,
        community.planted.len(),
        community.posts.len(),
        community.comments.len(),
        community.follows.len()
    );
    for f in &files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn stats(args: StatsArgs) -> Result<()> {
    let config = resolve_config(&args.data)?;
    let (raw_graph, dataset, _) = pipeline::load_and_build(&config)?;
    print_warnings(&dataset.warnings);
    let graph = if args.raw {
        raw_graph
    } else {
        prune(&raw_graph, config.prune_min_weight)
    };
    println!(
        "{} graph: {} nodes, {} edges",
        if args.raw { "raw" } else { "pruned" },
        graph.node_count(),
        graph.edge_count()
    );
    if graph.is_empty() {
        return Err(Error::in_stage("netstats")(Error::EmptyGraph));
    }
    let stats = compute_stats(&graph).map_err(Error::in_stage("netstats"))?;
    std::fs::create_dir_all(&config.out_dir)?;
    let stats_path = config.out_dir.join("stats.json");
    let ccdf_path = config.out_dir.join("ccdf.csv");
    io::write_stats_json(&stats_path, &stats.summary)?;
    io::write_ccdf(&ccdf_path, &stats.in_ccdf, &stats.out_ccdf)?;
    print_summary_block(&stats);
    println!("wrote {}", stats_path.display());
    println!("wrote {}", ccdf_path.display());
    Ok(())
}
