//! Network-structure scoring: weighted out-degree, betweenness centrality
//! over the inverted-distance shortest paths, and their min-max fusion.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{UserId, WeightedDigraph};
use crate::paths::{through_count, ShortestPathTable};

/// Per-node structural metrics, index-aligned with the graph's id table.
#[derive(Debug, Clone)]
pub struct StructuralScores {
    ids: Vec<UserId>,
    pub outdegree: Vec<f64>,
    pub betweenness: Vec<f64>,
    pub outdegree_norm: Vec<f64>,
    pub betweenness_norm: Vec<f64>,
    /// `(outdegree_norm + betweenness_norm) / 2`, in [0, 1].
    pub score: Vec<f64>,
}

impl StructuralScores {
    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Weighted out-degree of a user: the sum of original interaction weights
/// on edges leaving the node.
pub fn outdegree(g: &WeightedDigraph, user: &UserId) -> Result<f64> {
    let v = g
        .index_of(user)
        .ok_or_else(|| Error::UnknownUser(user.to_string()))?;
    Ok(g.out_weight(v) as f64)
}

/// Betweenness centrality of a user: over every ordered pair `(j, k)` with
/// at least one path and `j != u != k`, the fraction of shortest `j -> k`
/// paths passing through `u`.
pub fn betweenness(t: &ShortestPathTable, user: &UserId) -> Result<f64> {
    let v = t
        .index_of(user)
        .ok_or_else(|| Error::UnknownUser(user.to_string()))?;
    Ok(betweenness_at(t, v))
}

fn betweenness_at(t: &ShortestPathTable, v: usize) -> f64 {
    let n = t.node_count();
    let mut total = 0.0;
    for j in 0..n {
        if j == v {
            continue;
        }
        for k in 0..n {
            if k == v || k == j {
                continue;
            }
            let all = t.path_count(j, k);
            if all == 0 {
                continue;
            }
            let through = through_count(t, j, v, k);
            if through > 0 {
                total += through as f64 / all as f64;
            }
        }
    }
    total
}

/// Map values onto [0, 1] by `(f - min) / (max - min)`. A constant series
/// carries no information and maps to all zeros.
pub fn minmax_normalize(values: &[f64]) -> Vec<f64> {
    let Some(min) = values.iter().copied().reduce(f64::min) else {
        return Vec::new();
    };
    let max = values.iter().copied().fold(min, f64::max);
    if max == min {
        return vec![0.0; values.len()];
    }
    values.iter().map(|f| (f - min) / (max - min)).collect()
}

/// Compute every node's structural metrics and the combined network score.
/// Normalization runs over the full node population.
pub fn network_score(g: &WeightedDigraph, t: &ShortestPathTable) -> Result<StructuralScores> {
    if g.ids() != t.ids() {
        return Err(population_mismatch(g.ids(), t.ids()));
    }
    let n = g.node_count();
    let outdeg: Vec<f64> = (0..n).map(|v| g.out_weight(v) as f64).collect();
    let betw: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|v| betweenness_at(t, v))
        .collect();
    let outdeg_norm = minmax_normalize(&outdeg);
    let betw_norm = minmax_normalize(&betw);
    let score = outdeg_norm
        .iter()
        .zip(&betw_norm)
        .map(|(o, b)| (o + b) / 2.0)
        .collect();
    Ok(StructuralScores {
        ids: g.ids().to_vec(),
        outdegree: outdeg,
        betweenness: betw,
        outdegree_norm: outdeg_norm,
        betweenness_norm: betw_norm,
        score,
    })
}

pub(crate) fn population_mismatch(expected: &[UserId], got: &[UserId]) -> Error {
    let e: std::collections::BTreeSet<_> = expected.iter().collect();
    let g: std::collections::BTreeSet<_> = got.iter().collect();
    Error::PopulationMismatch {
        missing: e.difference(&g).map(|id| id.to_string()).collect(),
        extra: g.difference(&e).map(|id| id.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::invert_weights;
    use crate::paths::all_pairs_shortest;
    use std::collections::{BTreeMap, BTreeSet};

    fn uid(s: &str) -> UserId {
        UserId::new(s).unwrap()
    }

    fn graph(nodes: &[&str], edges: &[(&str, &str, u64)]) -> WeightedDigraph {
        let node_set: BTreeSet<UserId> = nodes.iter().map(|s| uid(s)).collect();
        let edge_map: BTreeMap<(UserId, UserId), u64> = edges
            .iter()
            .map(|&(s, t, w)| ((uid(s), uid(t)), w))
            .collect();
        WeightedDigraph::from_parts(node_set, edge_map)
    }

    fn table(g: &WeightedDigraph) -> ShortestPathTable {
        all_pairs_shortest(&invert_weights(g).unwrap())
    }

    #[test]
    fn outdegree_sums_original_weights() {
        let g = graph(&["A", "B", "C"], &[("A", "B", 2), ("A", "C", 3)]);
        assert_eq!(outdegree(&g, &uid("A")).unwrap(), 5.0);
        assert_eq!(outdegree(&g, &uid("B")).unwrap(), 0.0);
    }

    #[test]
    fn outdegree_single_edge_identity() {
        let g = graph(&["A", "B"], &[("A", "B", 1)]);
        assert_eq!(outdegree(&g, &uid("A")).unwrap(), 1.0);
    }

    #[test]
    fn outdegree_unknown_node_errors() {
        let g = graph(&["A"], &[]);
        assert!(matches!(
            outdegree(&g, &uid("Z")),
            Err(Error::UnknownUser(_))
        ));
    }

    #[test]
    fn chain_middle_node_has_unit_betweenness() {
        let g = graph(&["A", "B", "C"], &[("A", "B", 1), ("B", "C", 1)]);
        let t = table(&g);
        assert_eq!(betweenness(&t, &uid("B")).unwrap(), 1.0);
        assert_eq!(betweenness(&t, &uid("A")).unwrap(), 0.0);
        assert_eq!(betweenness(&t, &uid("C")).unwrap(), 0.0);
    }

    #[test]
    fn star_centre_has_zero_betweenness() {
        // All shortest paths originate at the centre; none pass through it.
        let g = graph(
            &["c", "x1", "x2", "x3"],
            &[("c", "x1", 1), ("c", "x2", 1), ("c", "x3", 1)],
        );
        let t = table(&g);
        assert_eq!(betweenness(&t, &uid("c")).unwrap(), 0.0);
    }

    #[test]
    fn isolated_node_has_zero_betweenness() {
        let g = graph(&["A", "B", "Z"], &[("A", "B", 1)]);
        let t = table(&g);
        assert_eq!(betweenness(&t, &uid("Z")).unwrap(), 0.0);
    }

    #[test]
    fn split_shortest_paths_share_betweenness() {
        // Diamond: A -> {B, C} -> D; each middle node carries half the A->D traffic.
        let g = graph(
            &["A", "B", "C", "D"],
            &[("A", "B", 1), ("A", "C", 1), ("B", "D", 1), ("C", "D", 1)],
        );
        let t = table(&g);
        assert_eq!(betweenness(&t, &uid("B")).unwrap(), 0.5);
        assert_eq!(betweenness(&t, &uid("C")).unwrap(), 0.5);
    }

    #[test]
    fn minmax_examples() {
        assert_eq!(minmax_normalize(&[2.0, 4.0, 6.0]), vec![0.0, 0.5, 1.0]);
        assert_eq!(minmax_normalize(&[7.0, 7.0, 7.0]), vec![0.0, 0.0, 0.0]);
        let v = minmax_normalize(&[3.0, -1.0, 10.0]);
        assert_eq!(v[1], 0.0);
        assert_eq!(v[2], 1.0);
    }

    #[test]
    fn network_score_extremes() {
        // B is max in out-degree; C is the sole in-between node. A chain gives
        // clean extreme cases: B max out-degree AND max betweenness? Use a
        // 4-node graph where one node dominates both metrics.
        let g = graph(
            &["A", "B", "C", "D"],
            &[
                ("A", "B", 1),
                ("B", "C", 5),
                ("B", "D", 5),
                ("C", "A", 1),
            ],
        );
        let t = table(&g);
        let s = network_score(&g, &t).unwrap();
        let b = g.index_of(&uid("B")).unwrap();
        // B has the largest weighted out-degree (10) and the most through-traffic.
        assert_eq!(s.outdegree_norm[b], 1.0);
        assert_eq!(s.betweenness_norm[b], 1.0);
        assert_eq!(s.score[b], 1.0);
        let d = g.index_of(&uid("D")).unwrap();
        assert_eq!(s.outdegree_norm[d], 0.0);
        assert_eq!(s.betweenness_norm[d], 0.0);
        assert_eq!(s.score[d], 0.0);
        assert!(s.score.iter().all(|&x| (0.0..=1.0).contains(&x)));
    }

    #[test]
    fn network_score_averages_mixed_extremes() {
        // On this 3-cycle every node carries exactly one crossing pair, so
        // betweenness is constant and normalizes to 0 for everyone; A's
        // maximal out-degree alone yields (1 + 0) / 2.
        let g = graph(
            &["A", "B", "C"],
            &[("A", "B", 9), ("B", "C", 1), ("C", "A", 1)],
        );
        let t = table(&g);
        let s = network_score(&g, &t).unwrap();
        let a = g.index_of(&uid("A")).unwrap();
        assert_eq!(s.outdegree_norm[a], 1.0);
        assert_eq!(s.betweenness_norm[a], 0.0);
        assert_eq!(s.score[a], 0.5);
    }

    #[test]
    fn betweenness_depends_only_on_the_table() {
        // Scaling all weights preserves the inverted-distance structure here,
        // so the tables and hence betweenness agree.
        let g1 = graph(&["A", "B", "C"], &[("A", "B", 1), ("B", "C", 1)]);
        let g2 = graph(&["A", "B", "C"], &[("A", "B", 4), ("B", "C", 4)]);
        let t1 = table(&g1);
        let t2 = table(&g2);
        for id in ["A", "B", "C"] {
            assert_eq!(
                betweenness(&t1, &uid(id)).unwrap(),
                betweenness(&t2, &uid(id)).unwrap()
            );
        }
    }
}
