//! Entropy-weight fusion of the network-structure and brand-engagement
//! scores into per-node individual values, and assembly of the
//! dual-weighted graph (edge distances plus node values).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::engagement::BrandScores;
use crate::graph::{DistanceWeights, UserId, WeightedDigraph};
use crate::structural::{minmax_normalize, population_mismatch, StructuralScores};

/// Two-criterion score matrix: one row per node, columns for the network
/// score (already in [0, 1]) and the min-max-normalized brand score.
#[derive(Debug, Clone)]
pub struct ScoreMatrix {
    ids: Vec<UserId>,
    pub network: Vec<f64>,
    pub brand: Vec<f64>,
}

impl ScoreMatrix {
    pub fn ids(&self) -> &[UserId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Directly wrap two preprocessed, non-negative columns.
    pub fn from_columns(ids: Vec<UserId>, network: Vec<f64>, brand: Vec<f64>) -> Self {
        assert_eq!(ids.len(), network.len());
        assert_eq!(ids.len(), brand.len());
        ScoreMatrix { ids, network, brand }
    }
}

/// Criterion weights from the entropy method; they sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyWeights {
    pub network: f64,
    pub brand: f64,
}

/// The analysis model: interaction graph, inverted edge distances, and a
/// value per node.
#[derive(Debug, Clone)]
pub struct DualWeightedDigraph {
    graph: WeightedDigraph,
    distances: DistanceWeights,
    values: Vec<f64>,
}

impl DualWeightedDigraph {
    pub fn graph(&self) -> &WeightedDigraph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceWeights {
        &self.distances
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn ids(&self) -> &[UserId] {
        self.graph.ids()
    }

    /// Individual values, index-aligned with `ids()`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Assemble the score matrix from both score sets over the same population.
/// Brand scores can be negative, so they are min-max normalized here;
/// the network score is already normalized by construction.
pub fn build_score_matrix(
    structural: &StructuralScores,
    brand: &BrandScores,
) -> Result<ScoreMatrix> {
    if structural.ids() != brand.ids() {
        return Err(population_mismatch(structural.ids(), brand.ids()));
    }
    Ok(ScoreMatrix {
        ids: structural.ids().to_vec(),
        network: structural.score.clone(),
        brand: minmax_normalize(&brand.score),
    })
}

fn column_entropy(column: &[f64], inv_ln_n: f64) -> f64 {
    let sum: f64 = column.iter().sum();
    if sum <= 0.0 {
        // A contentless criterion is treated as maximally uncertain.
        return 1.0;
    }
    let mut h = 0.0;
    for &r in column {
        let f = r / sum;
        if f > 0.0 {
            h -= f * f.ln();
        }
    }
    (h * inv_ln_n).clamp(0.0, 1.0)
}

/// Entropy weights of the two criteria: `w_j = (1 - H_j) / (2 - H_1 - H_2)`.
/// A lower-entropy (more discriminating) column gets the larger weight.
/// When both columns are uniform the weights fall back to 0.5 each; a
/// single-node matrix does the same.
pub fn entropy_weights(matrix: &ScoreMatrix) -> EntropyWeights {
    let n = matrix.len();
    if n <= 1 {
        return EntropyWeights {
            network: 0.5,
            brand: 0.5,
        };
    }
    let inv_ln_n = 1.0 / (n as f64).ln();
    let h1 = column_entropy(&matrix.network, inv_ln_n);
    let h2 = column_entropy(&matrix.brand, inv_ln_n);
    let denom = 2.0 - h1 - h2;
    if denom <= 1e-9 {
        return EntropyWeights {
            network: 0.5,
            brand: 0.5,
        };
    }
    // Clamp away float spill and keep the pair summing to exactly 1.
    let network = ((1.0 - h1) / denom).clamp(0.0, 1.0);
    EntropyWeights {
        network,
        brand: 1.0 - network,
    }
}

/// Weighted sum of the two preprocessed scores per node; values land in [0, 1].
pub fn individual_values(matrix: &ScoreMatrix, weights: EntropyWeights) -> BTreeMap<UserId, f64> {
    matrix
        .ids
        .iter()
        .enumerate()
        .map(|(i, id)| {
            (
                id.clone(),
                weights.network * matrix.network[i] + weights.brand * matrix.brand[i],
            )
        })
        .collect()
}

/// Attach individual values to the graph and its distances. Every node
/// must have a value.
pub fn attach_values(
    g: &WeightedDigraph,
    distances: &DistanceWeights,
    values: &BTreeMap<UserId, f64>,
) -> Result<DualWeightedDigraph> {
    if g.ids() != distances.ids() {
        return Err(population_mismatch(g.ids(), distances.ids()));
    }
    let aligned = g
        .ids()
        .iter()
        .map(|id| {
            values
                .get(id)
                .copied()
                .ok_or_else(|| Error::MissingValue(id.to_string()))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(DualWeightedDigraph {
        graph: g.clone(),
        distances: distances.clone(),
        values: aligned,
    })
}
