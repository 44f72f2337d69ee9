//! Jaco graphs of order 1.
//!
//! `J_n(1)` is the digraph on `v_1..v_n` with an arc `(v_i, v_j)` exactly when
//! `i < j <= 2i - d⁻(v_i)`. In-degrees depend only on earlier vertices, so
//! processing vertices in index order fixes each `d⁻(v_i)` before its
//! out-arcs are added, and truncating to `n` vertices never changes the
//! in-degree of a surviving vertex.

use super::DiGraph;
use crate::error::{CurlError, Result};
use crate::seqcore::IntString;

/// Reference rows for `n = 1..=25`: `(degree sequence, ic, curling index, cn)`.
pub const JACO_REFERENCE_TABLE: [(&[u64], u64, u64, u64); 25] = [
    (&[0], 1, 1, 1),
    (&[1, 1], 1, 1, 2),
    (&[1, 2, 1], 1, 1, 2),
    (&[1, 2, 2, 1], 2, 4, 2),
    (&[1, 2, 3, 2, 2], 1, 1, 3),
    (&[1, 2, 3, 3, 3, 2], 1, 1, 3),
    (&[1, 2, 3, 4, 4, 3, 3], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 4, 4, 3], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 5, 5, 4, 3], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 6, 6, 5, 4, 4], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 6, 5, 5, 4], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 7, 6, 6, 5, 4], 1, 1, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 8, 7, 7, 6, 5, 5], 2, 4, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 8, 8, 8, 7, 6, 6, 5], 2, 4, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 8, 7, 7, 6, 6], 2, 4, 3),
    (&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9, 8, 8, 7, 7, 6], 2, 4, 3),
    (
        &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 10, 9, 9, 8, 8, 7, 6],
        2,
        4,
        3,
    ),
    (
        &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 10, 10, 9, 9, 8, 7, 7],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 11, 11, 10, 10, 9, 8, 8, 7,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 12, 11, 11, 10, 9, 9, 8, 8,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 12, 12, 11, 10, 10, 9, 9, 8,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 13, 13, 12, 11, 11, 10, 10, 9, 8,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 14, 13, 12, 12, 11, 11, 10, 9, 9,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 14, 13, 13, 12, 12, 11, 10, 10,
        ],
        3,
        9,
        3,
    ),
    (
        &[
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 15, 14, 14, 13, 13, 12, 11, 11, 10,
            9,
        ],
        3,
        9,
        3,
    ),
];

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(CurlError::InvalidParameter {
            family: "jaco",
            reason: "n = 0, need n >= 1".into(),
        })
    } else {
        Ok(())
    }
}

/// Builds `J_n(1)`; vertex `v_i` has id `i - 1`.
pub fn jaco(n: usize) -> Result<DiGraph> {
    check_order(n)?;
    let mut g = DiGraph::empty(n);
    let mut in_deg = vec![0usize; n + 1];
    for i in 1..=n {
        let reach = (2 * i - in_deg[i]).min(n);
        for j in i + 1..=reach {
            g.add_arc_unchecked(i - 1, j - 1);
        }
        for d in &mut in_deg[i + 1..=reach] {
            *d += 1;
        }
    }
    Ok(g)
}

/// In-degrees and out-reach of the infinite Jaco graph, precomputed up to
/// some bound. Degree sequences of every `J*_n(1)` up to that bound can then
/// be read off in `O(n)` without materialising arcs.
#[derive(Debug, Clone)]
pub struct JacoDegrees {
    /// `in_deg[i]` for `i` in `1..=bound` (index 0 unused).
    in_deg: Vec<usize>,
    /// `reach[i] = 2i - d⁻(v_i)`: the last head of an arc out of `v_i`.
    reach: Vec<usize>,
}

impl JacoDegrees {
    pub fn new(bound: usize) -> Result<Self> {
        check_order(bound)?;
        // Difference array: each v_i contributes +1 to in-degrees of (i, reach].
        let mut diff = vec![0isize; bound + 2];
        let mut in_deg = vec![0usize; bound + 1];
        let mut reach = vec![0usize; bound + 1];
        let mut running = 0isize;
        for i in 1..=bound {
            running += diff[i];
            in_deg[i] = running as usize;
            reach[i] = 2 * i - in_deg[i];
            let hi = reach[i].min(bound);
            if hi > i {
                diff[i + 1] += 1;
                diff[hi + 1] -= 1;
            }
        }
        Ok(JacoDegrees { in_deg, reach })
    }

    pub fn bound(&self) -> usize {
        self.in_deg.len() - 1
    }

    /// Degree sequence of `J*_n(1)` in vertex order, for `1 <= n <= bound`.
    pub fn degrees(&self, n: usize) -> Result<IntString> {
        check_order(n)?;
        if n > self.bound() {
            return Err(CurlError::InvalidParameter {
                family: "jaco",
                reason: format!("n = {n} exceeds precomputed bound {}", self.bound()),
            });
        }
        Ok((1..=n)
            .map(|i| {
                let out = self.reach[i].min(n).saturating_sub(i);
                (self.in_deg[i] + out) as u64
            })
            .collect())
    }
}

/// Degree sequence of `J*_n(1)` without building its arcs.
pub fn jaco_degree_sequence(n: usize) -> Result<IntString> {
    JacoDegrees::new(n)?.degrees(n)
}
