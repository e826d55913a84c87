//! Shared ranking envelope: descending score order with ascending-id
//! tie-breaks, and the top-n% slice length. Both the potential ranker and
//! the baselines use this, so their outputs compare apples to apples.

use crate::graph::UserId;

/// Indices sorted by score descending; ties broken by node id ascending.
pub(crate) fn descending_order(ids: &[UserId], scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ids.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("scores are finite")
            .then_with(|| ids[a].cmp(&ids[b]))
    });
    order
}

/// `ceil(top_percent% * kept)` entries make the cut.
pub(crate) fn top_slice_len(kept: usize, top_percent: f64) -> usize {
    (top_percent / 100.0 * kept as f64).ceil() as usize
}
