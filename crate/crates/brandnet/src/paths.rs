//! All-pairs shortest distances and shortest-path counts over inverted
//! edge distances, computed with a path-counting variant of the Floyd
//! algorithm.
//!
//! Distances are integers so ties are exact; path counts use saturating
//! 128-bit arithmetic since they can grow combinatorially.

use rayon::prelude::*;

use crate::graph::{DistanceWeights, UserId};

const INF: u64 = u64::MAX;

/// Directed shortest distances and path counts between every node pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPathTable {
    n: usize,
    ids: Vec<UserId>,
    dist: Vec<u64>,
    count: Vec<u128>,
}

impl ShortestPathTable {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn index_of(&self, id: &UserId) -> Option<usize> {
        self.ids.binary_search(id).ok()
    }

    /// Shortest distance from `source` to `target`, `None` when unreachable.
    pub fn distance(&self, source: usize, target: usize) -> Option<u64> {
        let d = self.dist[source * self.n + target];
        (d != INF).then_some(d)
    }

    /// Number of distinct shortest paths from `source` to `target`
    /// (0 when unreachable, 1 for the trivial source == target pair).
    pub fn path_count(&self, source: usize, target: usize) -> u128 {
        self.count[source * self.n + target]
    }

    /// Smallest and largest finite positive distances, if any pair is connected.
    pub fn finite_distance_range(&self) -> Option<(u64, u64)> {
        let mut lo = INF;
        let mut hi = 0;
        for &d in &self.dist {
            if d != INF && d > 0 {
                lo = lo.min(d);
                hi = hi.max(d);
            }
        }
        (hi > 0).then_some((lo, hi))
    }
}

/// Run the path-counting Floyd algorithm over the distance weights.
///
/// Strictly shorter routes through a pivot replace the count with the
/// product of the sub-counts; equal-length routes add it.
pub fn all_pairs_shortest(d: &DistanceWeights) -> ShortestPathTable {
    let n = d.node_count();
    let mut dist = vec![INF; n * n];
    let mut count = vec![0u128; n * n];
    for v in 0..n {
        dist[v * n + v] = 0;
        count[v * n + v] = 1;
    }
    for (s, t, w) in d.edges() {
        dist[s * n + t] = w;
        count[s * n + t] = 1;
    }

    let mut pivot_dist = vec![INF; n];
    let mut pivot_count = vec![0u128; n];
    for k in 0..n {
        pivot_dist.copy_from_slice(&dist[k * n..(k + 1) * n]);
        pivot_count.copy_from_slice(&count[k * n..(k + 1) * n]);
        dist.par_chunks_mut(n)
            .zip(count.par_chunks_mut(n))
            .enumerate()
            .for_each(|(i, (dist_row, count_row))| {
                if i == k || dist_row[k] == INF {
                    return;
                }
                let dik = dist_row[k];
                let cik = count_row[k];
                for j in 0..n {
                    if j == k || pivot_dist[j] == INF {
                        continue;
                    }
                    let alt = dik + pivot_dist[j];
                    let via = cik.saturating_mul(pivot_count[j]);
                    if alt < dist_row[j] {
                        dist_row[j] = alt;
                        count_row[j] = via;
                    } else if alt == dist_row[j] {
                        count_row[j] = count_row[j].saturating_add(via);
                    }
                }
            });
    }

    ShortestPathTable {
        n,
        ids: d.ids().to_vec(),
        dist,
        count,
    }
}

/// Number of shortest `from -> to` paths that pass through `via`:
/// the product of the sub-counts when the distances compose, else 0.
pub fn through_count(t: &ShortestPathTable, from: usize, via: usize, to: usize) -> u128 {
    if via == from || via == to {
        return 0;
    }
    match (t.distance(from, via), t.distance(via, to), t.distance(from, to)) {
        (Some(a), Some(b), Some(whole)) if a + b == whole => {
            t.path_count(from, via).saturating_mul(t.path_count(via, to))
        }
        _ => 0,
    }
}
