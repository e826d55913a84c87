//! Ranking evaluation: verified-user ratio and one-hop coverage curves.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{UserId, WeightedDigraph};
use crate::rank_util::top_slice_len;

/// Coverage as a function of the top-n% cut, for one method.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCurve {
    pub method: String,
    /// `(n_percent, coverage)` points; coverage never decreases along the grid.
    pub points: Vec<(f64, f64)>,
}

/// Fraction of the selected users carrying a verified badge, as
/// `(verified_count, total)`. Errors on an empty selection.
pub fn verified_ratio(selected: &[UserId], verified: &HashSet<UserId>) -> Result<(usize, usize)> {
    if selected.is_empty() {
        return Err(Error::EmptyRanking);
    }
    let count = selected.iter().filter(|u| verified.contains(u)).count();
    Ok((count, selected.len()))
}

/// Fraction of all nodes inside the top n% of `ranked` or one hop
/// downstream of it. `ranked` must be a full descending order over the
/// graph's node set.
pub fn coverage_ratio(g: &WeightedDigraph, ranked: &[UserId], n_percent: f64) -> Result<f64> {
    if !(0.0 < n_percent && n_percent <= 100.0) {
        return Err(Error::InvalidPercent(n_percent));
    }
    let order = full_order_indices(g, ranked)?;
    Ok(coverage_of_prefix(g, &order, top_slice_len(order.len(), n_percent)))
}

fn full_order_indices(g: &WeightedDigraph, ranked: &[UserId]) -> Result<Vec<usize>> {
    let mut seen = vec![false; g.node_count()];
    let mut order = Vec::with_capacity(ranked.len());
    let mut extra = Vec::new();
    for id in ranked {
        match g.index_of(id) {
            Some(i) if !seen[i] => {
                seen[i] = true;
                order.push(i);
            }
            _ => extra.push(id.to_string()),
        }
    }
    if order.len() != g.node_count() || !extra.is_empty() {
        let missing = seen
            .iter()
            .enumerate()
            .filter(|&(_, &s)| !s)
            .map(|(i, _)| g.id(i).to_string())
            .collect();
        return Err(Error::PopulationMismatch { missing, extra });
    }
    Ok(order)
}

fn coverage_of_prefix(g: &WeightedDigraph, order: &[usize], take: usize) -> f64 {
    if g.node_count() == 0 {
        return 0.0;
    }
    let mut covered = vec![false; g.node_count()];
    for &u in &order[..take.min(order.len())] {
        covered[u] = true;
        for &(v, _) in g.out_edges(u) {
            covered[v] = true;
        }
    }
    covered.iter().filter(|&&c| c).count() as f64 / g.node_count() as f64
}

/// Evaluate each full ordering's coverage on a shared n% grid.
/// All orderings must cover exactly the graph's node set.
pub fn compare_methods(
    g: &WeightedDigraph,
    orderings: &[(String, Vec<UserId>)],
    grid: &[f64],
) -> Result<Vec<CoverageCurve>> {
    let mut curves = Vec::with_capacity(orderings.len());
    for (method, ranked) in orderings {
        let order = full_order_indices(g, ranked)?;
        let points = grid
            .iter()
            .map(|&pct| {
                if !(0.0 < pct && pct <= 100.0) {
                    return Err(Error::InvalidPercent(pct));
                }
                Ok((pct, coverage_of_prefix(g, &order, top_slice_len(order.len(), pct))))
            })
            .collect::<Result<Vec<_>>>()?;
        curves.push(CoverageCurve {
            method: method.clone(),
            points,
        });
    }
    Ok(curves)
}

/// The grid the comparison report defaults to: 2.5% steps up to 100%.
pub fn default_grid() -> Vec<f64> {
    (1..=40).map(|i| i as f64 * 2.5).collect()
}
