//! Rasta graphs: layered digraphs over a summand set, with every vertex of
//! one column joined to every vertex of the next.

use super::DiGraph;
use crate::error::{CurlError, Result};
use crate::summand::SummandSet;

/// Builds the Rasta digraph. Column `i` holds `parts[i]` vertices, numbered
/// consecutively column by column.
pub fn rasta(ts: &SummandSet) -> Result<DiGraph> {
    let parts = ts.parts();
    if parts.len() < 2 {
        return Err(CurlError::InvalidSummandSet(format!(
            "a Rasta graph needs at least 2 parts, got {}",
            parts.len()
        )));
    }
    let sizes: Vec<usize> = parts.iter().map(|&t| t as usize).collect();
    let total: usize = sizes.iter().sum();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in &sizes {
        offsets.push(acc);
        acc += s;
    }
    let mut g = DiGraph::empty(total);
    for col in 0..sizes.len() - 1 {
        for a in 0..sizes[col] {
            for b in 0..sizes[col + 1] {
                g.add_arc_unchecked(offsets[col] + a, offsets[col + 1] + b);
            }
        }
    }
    Ok(g)
}

/// Degree string predicted column by column, before equal values are merged:
/// `(t_2)^{t_1} ∘ (t_1 + t_3)^{t_2} ∘ … ∘ (t_{l-1})^{t_l}`.
pub fn rasta_predicted_degree_string(ts: &SummandSet) -> Vec<(u64, u64)> {
    let p = ts.parts();
    (0..p.len())
        .map(|i| {
            let left = if i > 0 { p[i - 1] } else { 0 };
            let right = p.get(i + 1).copied().unwrap_or(0);
            (left + right, p[i])
        })
        .collect()
}
