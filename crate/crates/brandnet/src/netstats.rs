//! Network characterization: small-world style summary statistics and a
//! least-squares power-law fit of the degree CCDF.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;

/// Headline statistics of a community graph.
///
/// Path length is hop-based (unweighted) over the directed graph and
/// averages only reachable ordered pairs. Clustering and assortativity use
/// the undirected projection, which is also what the random-graph
/// reference value `mean_degree / n` is defined on.
#[derive(Debug, Clone, Serialize)]
pub struct NetworkSummary {
    pub node_count: usize,
    pub edge_count: usize,
    pub density: f64,
    pub avg_path_length: f64,
    pub avg_weighted_degree: f64,
    pub clustering_coefficient: f64,
    pub random_reference_clustering: f64,
    pub assortativity: f64,
}

/// Power-law fit of an empirical CCDF: `P[X > x] ~ c * x^(-alpha)`.
#[derive(Debug, Clone)]
pub struct PowerLawFit {
    pub alpha: f64,
    pub c: f64,
    pub r_squared: f64,
    /// The (degree, ccdf) points the line was fitted on (ccdf > 0 only).
    pub points: Vec<(u64, f64)>,
}

fn hop_distances_from(g: &WeightedDigraph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.node_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &(v, _) in g.out_edges(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Undirected neighbor sets (direction and weights dropped).
fn undirected_neighbors(g: &WeightedDigraph) -> Vec<Vec<usize>> {
    let mut sets: Vec<std::collections::BTreeSet<usize>> =
        vec![std::collections::BTreeSet::new(); g.node_count()];
    for (s, t, _) in g.edges() {
        sets[s].insert(t);
        sets[t].insert(s);
    }
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

fn pearson_degree_correlation(neighbors: &[Vec<usize>]) -> f64 {
    // Newman's r over undirected edges, symmetrized.
    let deg: Vec<f64> = neighbors.iter().map(|l| l.len() as f64).collect();
    let mut m = 0.0;
    let mut sum_prod = 0.0;
    let mut sum_half = 0.0;
    let mut sum_sq_half = 0.0;
    for (u, l) in neighbors.iter().enumerate() {
        for &v in l {
            if v <= u {
                continue;
            }
            m += 1.0;
            let (j, k) = (deg[u], deg[v]);
            sum_prod += j * k;
            sum_half += 0.5 * (j + k);
            sum_sq_half += 0.5 * (j * j + k * k);
        }
    }
    if m == 0.0 {
        return 0.0;
    }
    let mean = sum_half / m;
    let numer = sum_prod / m - mean * mean;
    let denom = sum_sq_half / m - mean * mean;
    if denom <= 0.0 {
        0.0
    } else {
        (numer / denom).clamp(-1.0, 1.0)
    }
}

/// Compute the full summary. Errors on an empty graph.
pub fn summarize(g: &WeightedDigraph) -> Result<NetworkSummary> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let e = g.edge_count();
    let density = if n > 1 {
        e as f64 / (n as f64 * (n as f64 - 1.0))
    } else {
        0.0
    };

    let mut reach_sum = 0u64;
    let mut reach_pairs = 0u64;
    for s in 0..n {
        for (t, d) in hop_distances_from(g, s).into_iter().enumerate() {
            if t != s {
                if let Some(d) = d {
                    reach_sum += d as u64;
                    reach_pairs += 1;
                }
            }
        }
    }
    let avg_path_length = if reach_pairs > 0 {
        reach_sum as f64 / reach_pairs as f64
    } else {
        0.0
    };

    let avg_weighted_degree = (0..n)
        .map(|v| (g.out_weight(v) + g.in_weight(v)) as f64)
        .sum::<f64>()
        / n as f64;

    let neighbors = undirected_neighbors(g);
    let mut clustering_sum = 0.0;
    for l in &neighbors {
        let k = l.len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        for (i, &a) in l.iter().enumerate() {
            for &b in &l[i + 1..] {
                if neighbors[a].binary_search(&b).is_ok() {
                    links += 1;
                }
            }
        }
        clustering_sum += 2.0 * links as f64 / (k * (k - 1)) as f64;
    }
    let clustering_coefficient = clustering_sum / n as f64;
    let mean_degree = neighbors.iter().map(|l| l.len() as f64).sum::<f64>() / n as f64;
    let random_reference_clustering = mean_degree / n as f64;

    Ok(NetworkSummary {
        node_count: n,
        edge_count: e,
        density,
        avg_path_length,
        avg_weighted_degree,
        clustering_coefficient,
        random_reference_clustering,
        assortativity: pearson_degree_correlation(&neighbors),
    })
}

/// Empirical CCDF evaluated at every distinct positive degree value
/// (the largest degree gets CCDF 0).
pub fn empirical_ccdf(degrees: &[u64]) -> Vec<(u64, f64)> {
    let n = degrees.len();
    if n == 0 {
        return Vec::new();
    }
    let mut distinct: Vec<u64> = degrees.iter().copied().filter(|&d| d > 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    distinct
        .into_iter()
        .map(|x| {
            let above = degrees.iter().filter(|&&d| d > x).count();
            (x, above as f64 / n as f64)
        })
        .collect()
}

/// Least-squares line on `(ln x, ln ccdf)` over the CCDF points with
/// positive mass; `alpha` is the negated slope. Needs at least three
/// distinct positive degree values.
pub fn fit_powerlaw(degrees: &[u64]) -> Result<PowerLawFit> {
    let ccdf = empirical_ccdf(degrees);
    let points: Vec<(u64, f64)> = ccdf.into_iter().filter(|&(_, p)| p > 0.0).collect();
    let distinct_positive = degrees
        .iter()
        .copied()
        .filter(|&d| d > 0)
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    if distinct_positive < 3 || points.len() < 2 {
        return Err(Error::InsufficientSupport(distinct_positive));
    }

    let xs: Vec<f64> = points.iter().map(|&(x, _)| (x as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, p)| p.ln()).collect();
    let m = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / m;
    let mean_y = ys.iter().sum::<f64>() / m;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::InsufficientSupport(distinct_positive));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(PowerLawFit {
        alpha: -slope,
        c: intercept.exp(),
        r_squared,
        points,
    })
}
