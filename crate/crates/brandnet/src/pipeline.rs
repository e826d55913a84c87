//! End-to-end pipeline: ingest, build, prune, score, fuse, rank, compare,
//! and emit artifacts.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::baselines::{self, BaselineRanking};
use crate::engagement::{brand_scores, SentimentLexicon};
use crate::error::{Error, Result};
use crate::evaluation::{self, CoverageCurve};
use crate::graph::{build_graph, invert_weights, prune, UserId, WeightedDigraph};
use crate::io;
use crate::netstats::{self, NetworkSummary};
use crate::paths::all_pairs_shortest;
use crate::potential::{optimize_sigma, rank_with_sigma, RankingResult};
use crate::structural::network_score;
use crate::valuation::{attach_values, build_score_matrix, entropy_weights, individual_values};

/// Everything a run needs. Defaults: prune weight 2, damping 0.85,
/// top 2.5%, no phi threshold, tolerance 1e-8, at most 200 iterations,
/// node cap 5000.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub posts: PathBuf,
    pub comments: PathBuf,
    pub follows: PathBuf,
    pub users: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub out_dir: PathBuf,
    pub prune_min_weight: u64,
    pub damping: f64,
    pub top_percent: f64,
    pub phi_threshold: f64,
    pub tolerance: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub node_cap: usize,
}

impl PipelineConfig {
    pub fn new(
        posts: impl Into<PathBuf>,
        comments: impl Into<PathBuf>,
        follows: impl Into<PathBuf>,
        out_dir: impl Into<PathBuf>,
    ) -> Self {
        PipelineConfig {
            posts: posts.into(),
            comments: comments.into(),
            follows: follows.into(),
            users: None,
            lexicon: None,
            out_dir: out_dir.into(),
            prune_min_weight: 2,
            damping: baselines::DEFAULT_DAMPING,
            top_percent: 2.5,
            phi_threshold: 0.0,
            tolerance: baselines::DEFAULT_TOLERANCE,
            max_iter: baselines::DEFAULT_MAX_ITER,
            seed: 0,
            node_cap: 5000,
        }
    }

    /// Apply `key = value` pairs from a config file. Flag handling lives in
    /// the CLI; it applies explicit flags after this, so flags win.
    pub fn apply_pairs(&mut self, pairs: &[(String, String)]) -> Result<()> {
        for (key, value) in pairs {
            match key.as_str() {
                "posts" => self.posts = PathBuf::from(value),
                "comments" => self.comments = PathBuf::from(value),
                "follows" => self.follows = PathBuf::from(value),
                "users" => self.users = Some(PathBuf::from(value)),
                "lexicon" => self.lexicon = Some(PathBuf::from(value)),
                "out_dir" => self.out_dir = PathBuf::from(value),
                "prune_min_weight" => self.prune_min_weight = parse_num(key, value)?,
                "damping" => self.damping = parse_num(key, value)?,
                "top_percent" => self.top_percent = parse_num(key, value)?,
                "phi_threshold" => self.phi_threshold = parse_num(key, value)?,
                "tolerance" => self.tolerance = parse_num(key, value)?,
                "max_iter" => self.max_iter = parse_num(key, value)?,
                "seed" => self.seed = parse_num(key, value)?,
                "node_cap" => self.node_cap = parse_num(key, value)?,
                other => {
                    return Err(Error::Config(format!("unknown config key `{other}`")));
                }
            }
        }
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("invalid value `{value}` for `{key}`")))
}

/// Run metadata emitted next to the rankings.
#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    pub sigma: f64,
    pub entropy_weight_network: f64,
    pub entropy_weight_brand: f64,
    pub phi_threshold: f64,
    pub top_percent: f64,
    pub prune_min_weight: u64,
    pub damping: f64,
    pub tolerance: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub raw_nodes: usize,
    pub raw_edges: usize,
    pub pruned_nodes: usize,
    pub pruned_edges: usize,
    pub powerlaw_alpha_in: Option<f64>,
    pub powerlaw_alpha_out: Option<f64>,
}

/// In-memory results of a pipeline run, for display and tests.
pub struct PipelineOutcome {
    pub metadata: RunMetadata,
    pub summary: NetworkSummary,
    pub ranking: RankingResult,
    pub baselines: Vec<BaselineRanking>,
    pub curves: Vec<CoverageCurve>,
    pub verified: Option<Vec<(String, usize, usize)>>,
    pub warnings: Vec<String>,
    pub artifacts: Vec<PathBuf>,
}

/// All stats for one graph: the summary plus degree CCDFs and the
/// power-law fits when the degree spread supports them.
pub struct GraphStats {
    pub summary: NetworkSummary,
    pub in_ccdf: Vec<(u64, f64)>,
    pub out_ccdf: Vec<(u64, f64)>,
    pub alpha_in: Option<f64>,
    pub alpha_out: Option<f64>,
}

pub fn compute_stats(g: &WeightedDigraph) -> Result<GraphStats> {
    let summary = netstats::summarize(g)?;
    let in_degrees: Vec<u64> = (0..g.node_count()).map(|v| g.in_degree(v) as u64).collect();
    let out_degrees: Vec<u64> = (0..g.node_count()).map(|v| g.out_degree(v) as u64).collect();
    let alpha_in = netstats::fit_powerlaw(&in_degrees).ok().map(|f| f.alpha);
    let alpha_out = netstats::fit_powerlaw(&out_degrees).ok().map(|f| f.alpha);
    Ok(GraphStats {
        summary,
        in_ccdf: netstats::empirical_ccdf(&in_degrees),
        out_ccdf: netstats::empirical_ccdf(&out_degrees),
        alpha_in,
        alpha_out,
    })
}

/// Load the dataset and build the raw interaction graph.
pub fn load_and_build(config: &PipelineConfig) -> Result<(WeightedDigraph, io::Dataset, SentimentLexicon)> {
    let stage = Error::in_stage("ingest");
    let dataset = io::ingest(
        &config.posts,
        &config.comments,
        &config.follows,
        config.users.as_deref(),
    )
    .map_err(stage)?;
    let lexicon = match &config.lexicon {
        Some(path) => io::read_lexicon(path).map_err(Error::in_stage("ingest"))?,
        None => SentimentLexicon::builtin(),
    };
    let mut graph =
        build_graph(&dataset.posts, &dataset.comments, &dataset.follows)
            .map_err(Error::in_stage("build-graph"))?;
    if let Some(verified) = &dataset.verified {
        graph.set_verified(verified);
    }
    Ok((graph, dataset, lexicon))
}

/// Execute the whole pipeline and write every artifact under the output
/// directory. Any stage failure aborts with the stage name; files already
/// written by the failing run are removed.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineOutcome> {
    let (raw_graph, dataset, lexicon) = load_and_build(config)?;
    let raw_nodes = raw_graph.node_count();
    let raw_edges = raw_graph.edge_count();

    let pruned = prune(&raw_graph, config.prune_min_weight);
    if pruned.is_empty() {
        return Err(Error::in_stage("prune")(Error::EmptyGraph));
    }
    if pruned.node_count() > config.node_cap {
        return Err(Error::in_stage("prune")(Error::NodeCapExceeded {
            nodes: pruned.node_count(),
            cap: config.node_cap,
        }));
    }

    let distances = invert_weights(&pruned).map_err(Error::in_stage("shortest-paths"))?;
    let table = all_pairs_shortest(&distances);

    let structural = network_score(&pruned, &table).map_err(Error::in_stage("structural-scores"))?;
    let brand = brand_scores(pruned.ids(), &dataset.posts, &dataset.comments, &lexicon);

    let stage = Error::in_stage("valuation");
    let matrix = build_score_matrix(&structural, &brand).map_err(stage)?;
    let weights = entropy_weights(&matrix);
    let values = individual_values(&matrix, weights);
    let dual = attach_values(&pruned, &distances, &values).map_err(Error::in_stage("valuation"))?;

    let stage = Error::in_stage("potential-ranking");
    let sigma = optimize_sigma(&dual, &table).map_err(stage)?;
    let full_ranking = rank_with_sigma(&dual, &table, sigma, 0.0, 100.0, &structural, &brand)
        .map_err(Error::in_stage("potential-ranking"))?;
    let top_ranking = rank_with_sigma(
        &dual,
        &table,
        sigma,
        config.phi_threshold,
        config.top_percent,
        &structural,
        &brand,
    )
    .map_err(Error::in_stage("potential-ranking"))?;

    let stage = Error::in_stage("baselines");
    let pr = baselines::pagerank(&pruned, config.damping, config.tolerance, config.max_iter)
        .map_err(stage)?;
    let (auth, hub) = baselines::hits(&pruned, config.tolerance, config.max_iter)
        .map_err(Error::in_stage("baselines"))?;
    let pr_full = baselines::rank_by(&pr, 100.0).map_err(Error::in_stage("baselines"))?;
    let auth_full = baselines::rank_by(&auth, 100.0).map_err(Error::in_stage("baselines"))?;
    let hub_full = baselines::rank_by(&hub, 100.0).map_err(Error::in_stage("baselines"))?;

    let stage = Error::in_stage("evaluation");
    let mut random_order: Vec<UserId> = pruned.ids().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    random_order.shuffle(&mut rng);
    let orderings = vec![
        ("potential".to_string(), full_ranking.order()),
        ("pagerank".to_string(), pr_full.order()),
        ("hits-authority".to_string(), auth_full.order()),
        ("random".to_string(), random_order),
    ];
    let curves = evaluation::compare_methods(&pruned, &orderings, &evaluation::default_grid())
        .map_err(stage)?;

    let verified_set: Option<HashSet<UserId>> = dataset.verified.clone();
    let verified = match &verified_set {
        None => None,
        Some(set) => {
            let take = crate::rank_util::top_slice_len(pruned.node_count(), config.top_percent);
            let mut rows = Vec::new();
            for (method, order) in &orderings {
                if method == "random" {
                    continue;
                }
                let top: Vec<UserId> = order.iter().take(take).cloned().collect();
                let (count, total) =
                    evaluation::verified_ratio(&top, set).map_err(Error::in_stage("evaluation"))?;
                rows.push((method.clone(), count, total));
            }
            Some(rows)
        }
    };

    let stats = compute_stats(&pruned).map_err(Error::in_stage("netstats"))?;

    let metadata = RunMetadata {
        sigma,
        entropy_weight_network: weights.network,
        entropy_weight_brand: weights.brand,
        phi_threshold: config.phi_threshold,
        top_percent: config.top_percent,
        prune_min_weight: config.prune_min_weight,
        damping: config.damping,
        tolerance: config.tolerance,
        max_iter: config.max_iter,
        seed: config.seed,
        raw_nodes,
        raw_edges,
        pruned_nodes: pruned.node_count(),
        pruned_edges: pruned.edge_count(),
        powerlaw_alpha_in: stats.alpha_in,
        powerlaw_alpha_out: stats.alpha_out,
    };

    // Emit artifacts; a failed run leaves nothing behind.
    std::fs::create_dir_all(&config.out_dir).map_err(|e| Error::in_stage("write-artifacts")(e.into()))?;
    let mut written: Vec<PathBuf> = Vec::new();
    let emit_result: Result<()> = (|| {
        let ranking_path = config.out_dir.join("ranking.csv");
        written.push(ranking_path.clone());
        io::write_ranking(&ranking_path, &top_ranking)?;

        let baseline_path = config.out_dir.join("baseline.csv");
        written.push(baseline_path.clone());
        io::write_baseline(
            &baseline_path,
            &[pr_full.clone(), auth_full.clone(), hub_full.clone()],
        )?;

        let scores_path = config.out_dir.join("scores.csv");
        written.push(scores_path.clone());
        io::write_scores(
            &scores_path,
            pruned.ids(),
            &structural.score,
            &brand.score,
            dual.values(),
        )?;

        let stats_path = config.out_dir.join("stats.json");
        written.push(stats_path.clone());
        io::write_stats_json(&stats_path, &stats.summary)?;

        let ccdf_path = config.out_dir.join("ccdf.csv");
        written.push(ccdf_path.clone());
        io::write_ccdf(&ccdf_path, &stats.in_ccdf, &stats.out_ccdf)?;

        let comparison_path = config.out_dir.join("comparison.csv");
        written.push(comparison_path.clone());
        io::write_comparison(&comparison_path, &curves)?;

        if let Some(rows) = &verified {
            let verified_path = config.out_dir.join("verified.csv");
            written.push(verified_path.clone());
            io::write_verified(&verified_path, rows)?;
        }

        let run_path = config.out_dir.join("run.json");
        written.push(run_path.clone());
        io::write_json(&run_path, &metadata)?;
        Ok(())
    })();
    if let Err(e) = emit_result {
        for p in &written {
            let _ = std::fs::remove_file(p);
        }
        return Err(Error::in_stage("write-artifacts")(e));
    }
    let artifacts = written;

    Ok(PipelineOutcome {
        metadata,
        summary: stats.summary,
        ranking: top_ranking,
        baselines: vec![pr_full, auth_full, hub_full],
        curves,
        verified,
        warnings: dataset.warnings,
        artifacts,
    })
}

/// Write a generated community to `dir` as the standard dataset files.
pub fn write_synthetic(dir: &Path, community: &crate::synth::SyntheticCommunity) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let posts = dir.join("posts.csv");
    let comments = dir.join("comments.csv");
    let follows = dir.join("follows.csv");
    let users = dir.join("users.csv");
    io::write_posts(&posts, &community.posts)?;
    io::write_comments(&comments, &community.comments)?;
    io::write_follows(&follows, &community.follows)?;
    io::write_users(&users, &community.users)?;
    Ok(vec![posts, comments, follows, users])
}
