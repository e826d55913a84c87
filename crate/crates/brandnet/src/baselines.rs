//! Weighted PageRank and HITS baselines for comparison with the
//! potential ranker.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{UserId, WeightedDigraph};
use crate::rank_util::{descending_order, top_slice_len};

pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineMethod {
    PageRank,
    HitsAuthority,
    HitsHub,
}

impl fmt::Display for BaselineMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaselineMethod::PageRank => "pagerank",
            BaselineMethod::HitsAuthority => "hits-authority",
            BaselineMethod::HitsHub => "hits-hub",
        })
    }
}

/// Converged (or best-effort) per-node scores for one baseline method.
#[derive(Debug, Clone)]
pub struct BaselineScores {
    pub method: BaselineMethod,
    ids: Vec<UserId>,
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
    pub converged: bool,
}

impl BaselineScores {
    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }
}

/// Baseline ranking with the same selection envelope as the potential
/// ranker: descending score, id tie-break, ceil(top%) slice.
#[derive(Debug, Clone)]
pub struct BaselineRanking {
    pub method: BaselineMethod,
    pub top_percent: f64,
    pub entries: Vec<(UserId, f64)>,
}

impl BaselineRanking {
    pub fn order(&self) -> Vec<UserId> {
        self.entries.iter().map(|(id, _)| id.clone()).collect()
    }
}

/// Weighted PageRank: `LR(u) = (1 - d) + d * sum over edges v -> u of
/// LR(v) * w(v -> u) / C(v)` with `C(v)` the total out-weight of `v`.
/// Iterates from all ones and returns the first vector whose defining
/// recursion reproduces it within `tol`.
pub fn pagerank(
    g: &WeightedDigraph,
    damping: f64,
    tol: f64,
    max_iter: usize,
) -> Result<BaselineScores> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !(0.0 < damping && damping < 1.0) {
        return Err(Error::InvalidDamping(damping));
    }
    let n = g.node_count();
    let out_weight: Vec<f64> = (0..n).map(|v| g.out_weight(v) as f64).collect();
    let mut x = vec![1.0; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < max_iter {
        let mut next = vec![0.0; n];
        for u in 0..n {
            let mut acc = 0.0;
            for &(v, w) in g.in_edges(u) {
                acc += x[v] * w as f64 / out_weight[v];
            }
            next[u] = (1.0 - damping) + damping * acc;
        }
        iterations += 1;
        residual = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            // `x` already satisfies the recursion; `next` is its image.
            break;
        }
        x = next;
    }
    Ok(BaselineScores {
        method: BaselineMethod::PageRank,
        ids: g.ids().to_vec(),
        scores: x,
        iterations,
        residual,
        converged: residual <= tol,
    })
}

fn l2_normalized(v: &[f64]) -> Vec<f64> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / norm).collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// HITS mutual recursion on the unweighted edge structure: a node's hub
/// score sums the authority of nodes it points to, its authority sums the
/// hub scores pointing at it. Both vectors are L2-normalized every pass;
/// the returned pair reproduces itself under one more pass within `tol`.
pub fn hits(
    g: &WeightedDigraph,
    tol: f64,
    max_iter: usize,
) -> Result<(BaselineScores, BaselineScores)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.node_count();
    let authority_from = |hub: &[f64]| -> Vec<f64> {
        let mut a = vec![0.0; n];
        for u in 0..n {
            for &(v, _) in g.in_edges(u) {
                a[u] += hub[v];
            }
        }
        l2_normalized(&a)
    };
    let hub_from = |auth: &[f64]| -> Vec<f64> {
        let mut h = vec![0.0; n];
        for u in 0..n {
            for &(v, _) in g.out_edges(u) {
                h[u] += auth[v];
            }
        }
        l2_normalized(&h)
    };

    let unit = 1.0 / (n as f64).sqrt();
    let mut auth = vec![unit; n];
    let mut hub = vec![unit; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < max_iter {
        let next_auth = authority_from(&hub);
        let sync_hub = hub_from(&auth);
        iterations += 1;
        residual = max_abs_diff(&auth, &next_auth).max(max_abs_diff(&hub, &sync_hub));
        if residual <= tol {
            // The current pair reproduces itself under one more pass.
            break;
        }
        hub = hub_from(&next_auth);
        auth = next_auth;
    }
    let converged = residual <= tol;
    Ok((
        BaselineScores {
            method: BaselineMethod::HitsAuthority,
            ids: g.ids().to_vec(),
            scores: auth,
            iterations,
            residual,
            converged,
        },
        BaselineScores {
            method: BaselineMethod::HitsHub,
            ids: g.ids().to_vec(),
            scores: hub,
            iterations,
            residual,
            converged,
        },
    ))
}

/// Top-percent slice of a converged baseline, with the shared envelope.
pub fn rank_by(scores: &BaselineScores, top_percent: f64) -> Result<BaselineRanking> {
    if !(0.0 < top_percent && top_percent <= 100.0) {
        return Err(Error::InvalidPercent(top_percent));
    }
    if !scores.converged {
        return Err(Error::NotConverged {
            method: match scores.method {
                BaselineMethod::PageRank => "pagerank",
                _ => "hits",
            },
            max_iter: scores.iterations,
            residual: scores.residual,
        });
    }
    let order = descending_order(&scores.ids, &scores.scores);
    let take = top_slice_len(scores.ids.len(), top_percent);
    let entries = order
        .into_iter()
        .take(take)
        .map(|i| (scores.ids[i].clone(), scores.scores[i]))
        .collect();
    Ok(BaselineRanking {
        method: scores.method,
        top_percent,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn isolated_node_scores_one_minus_damping() {
        let g = graph(&["A", "B", "Z"], &[("A", "B", 1), ("B", "A", 1)]);
        let s = pagerank(&g, 0.85, 1e-8, 200).unwrap();
        let z = g.index_of(&uid("Z")).unwrap();
        assert_eq!(s.scores[z], 1.0 - 0.85);
        assert!(s.converged);
    }

    #[test]
    fn two_cycle_fixed_point_is_all_ones() {
        let g = graph(&["A", "B"], &[("A", "B", 3), ("B", "A", 3)]);
        let s = pagerank(&g, 0.85, 1e-10, 500).unwrap();
        assert!((s.scores[0] - 1.0).abs() < 1e-9);
        assert!((s.scores[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn pagerank_satisfies_its_recursion() {
        let g = graph(
            &["A", "B", "C", "D"],
            &[
                ("A", "B", 2),
                ("B", "C", 1),
                ("C", "A", 4),
                ("A", "C", 1),
                ("D", "A", 1),
            ],
        );
        let d = 0.85;
        let s = pagerank(&g, d, 1e-10, 500).unwrap();
        assert!(s.converged);
        for u in 0..g.node_count() {
            let mut acc = 0.0;
            for &(v, w) in g.in_edges(u) {
                acc += s.scores[v] * w as f64 / g.out_weight(v) as f64;
            }
            let rhs = (1.0 - d) + d * acc;
            assert!((s.scores[u] - rhs).abs() <= 1e-10, "residual at node {u}");
        }
    }

    #[test]
    fn pagerank_floor_is_one_minus_damping() {
        let g = graph(
            &["A", "B", "C"],
            &[("A", "B", 5), ("B", "C", 1), ("C", "B", 2)],
        );
        let s = pagerank(&g, 0.85, 1e-8, 200).unwrap();
        assert!(s.scores.iter().all(|&x| x >= 1.0 - 0.85 - 1e-12));
    }

    #[test]
    fn pagerank_rejects_bad_damping() {
        let g = graph(&["A", "B"], &[("A", "B", 1)]);
        assert!(matches!(
            pagerank(&g, 1.0, 1e-8, 100),
            Err(Error::InvalidDamping(_))
        ));
        assert!(matches!(
            pagerank(&g, 0.0, 1e-8, 100),
            Err(Error::InvalidDamping(_))
        ));
    }

    #[test]
    fn hits_zero_scores_without_in_or_out_edges() {
        // A -> B -> C: A has no in-edges (authority 0), C no out-edges (hub 0).
        let g = graph(&["A", "B", "C"], &[("A", "B", 1), ("B", "C", 1)]);
        let (auth, hub) = hits(&g, 1e-10, 500).unwrap();
        let a = g.index_of(&uid("A")).unwrap();
        let c = g.index_of(&uid("C")).unwrap();
        assert_eq!(auth.scores[a], 0.0);
        assert_eq!(hub.scores[c], 0.0);
    }

    #[test]
    fn hits_complete_bipartite_shares_scores_by_side() {
        let g = graph(
            &["s1", "s2", "t1", "t2", "t3"],
            &[
                ("s1", "t1", 1),
                ("s1", "t2", 1),
                ("s1", "t3", 1),
                ("s2", "t1", 1),
                ("s2", "t2", 1),
                ("s2", "t3", 1),
            ],
        );
        let (auth, hub) = hits(&g, 1e-10, 500).unwrap();
        let s1 = g.index_of(&uid("s1")).unwrap();
        let s2 = g.index_of(&uid("s2")).unwrap();
        let t: Vec<usize> = ["t1", "t2", "t3"]
            .iter()
            .map(|s| g.index_of(&uid(s)).unwrap())
            .collect();
        assert!((hub.scores[s1] - hub.scores[s2]).abs() < 1e-9);
        assert!((auth.scores[t[0]] - auth.scores[t[1]]).abs() < 1e-9);
        assert!((auth.scores[t[1]] - auth.scores[t[2]]).abs() < 1e-9);
        // Normalized vectors on each active side.
        let hub_norm: f64 = hub.scores.iter().map(|x| x * x).sum::<f64>();
        let auth_norm: f64 = auth.scores.iter().map(|x| x * x).sum::<f64>();
        assert!((hub_norm - 1.0).abs() < 1e-10);
        assert!((auth_norm - 1.0).abs() < 1e-10);
    }

    #[test]
    fn hits_vectors_reproduce_themselves() {
        let g = graph(
            &["A", "B", "C", "D"],
            &[
                ("A", "B", 1),
                ("A", "C", 1),
                ("B", "C", 1),
                ("C", "D", 1),
                ("D", "A", 1),
            ],
        );
        let (auth, hub) = hits(&g, 1e-10, 1000).unwrap();
        assert!(auth.converged);
        assert!(auth.scores.iter().chain(&hub.scores).all(|&x| x >= 0.0));
        let n = g.node_count();
        let mut a2 = vec![0.0; n];
        for u in 0..n {
            for &(v, _) in g.in_edges(u) {
                a2[u] += hub.scores[v];
            }
        }
        let a2 = l2_normalized(&a2);
        let mut h2 = vec![0.0; n];
        for u in 0..n {
            for &(v, _) in g.out_edges(u) {
                h2[u] += auth.scores[v];
            }
        }
        let h2 = l2_normalized(&h2);
        assert!(max_abs_diff(&auth.scores, &a2) <= 1e-8);
        assert!(max_abs_diff(&hub.scores, &h2) <= 1e-8);
    }

    #[test]
    fn rank_by_mirrors_the_shared_envelope() {
        let g = graph(
            &["A", "B", "C", "D"],
            &[("A", "B", 2), ("B", "A", 2), ("C", "A", 1), ("D", "A", 1)],
        );
        let s = pagerank(&g, 0.85, 1e-9, 500).unwrap();
        let all = rank_by(&s, 100.0).unwrap();
        assert_eq!(all.entries.len(), 4);
        for pair in all.entries.windows(2) {
            assert!(pair[0].1 >= pair[1].1);
        }
        let top = rank_by(&s, 25.0).unwrap();
        assert_eq!(top.entries.len(), 1);
        assert_eq!(top.entries[0].0, all.entries[0].0);
    }

    #[test]
    fn rank_by_requires_convergence() {
        // Asymmetric cycle: the fixed point is not the all-ones start, so
        // two iterations cannot reach a 1e-30 residual.
        let g = graph(
            &["A", "B", "C"],
            &[("A", "B", 5), ("A", "C", 1), ("B", "C", 1), ("C", "A", 2)],
        );
        let s = pagerank(&g, 0.85, 1e-30, 2).unwrap();
        assert!(!s.converged);
        assert!(matches!(rank_by(&s, 10.0), Err(Error::NotConverged { .. })));
    }
}
