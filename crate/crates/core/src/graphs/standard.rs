//! Standard families: paths, cycles, complete and complete bipartite graphs,
//! wheels, ladders, and the cage order bound.

use super::SimpleGraph;
use crate::error::{CurlError, Result};

fn require(family: &'static str, ok: bool, reason: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(CurlError::InvalidParameter {
            family,
            reason: reason(),
        })
    }
}

/// `P_n`.
pub fn path(n: usize) -> Result<SimpleGraph> {
    require("path", n >= 1, || format!("n = {n}, need n >= 1"))?;
    let mut g = SimpleGraph::empty(n);
    for i in 1..n {
        g.add_edge_unchecked(i - 1, i);
    }
    Ok(g)
}

/// `C_n`.
pub fn cycle(n: usize) -> Result<SimpleGraph> {
    require("cycle", n >= 3, || format!("n = {n}, need n >= 3"))?;
    let mut g = path(n)?;
    g.add_edge_unchecked(n - 1, 0);
    Ok(g)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<SimpleGraph> {
    require("complete", n >= 1, || format!("n = {n}, need n >= 1"))?;
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// `K_{m,n}` with the `m`-side on ids `0..m` and the `n`-side on `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<SimpleGraph> {
    require("complete_bipartite", m >= 1 && n >= 1, || {
        format!("m = {m}, n = {n}, need both >= 1")
    })?;
    let mut g = SimpleGraph::empty(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// `W_n = C_{n-1} + K_1`: rim on `0..n-1`, hub `n-1`.
pub fn wheel(n: usize) -> Result<SimpleGraph> {
    require("wheel", n >= 4, || format!("n = {n}, need n >= 4"))?;
    let mut g = SimpleGraph::empty(n);
    let rim = n - 1;
    for i in 0..rim {
        g.add_edge_unchecked(i, (i + 1) % rim);
        g.add_edge_unchecked(i, rim);
    }
    Ok(g)
}

/// `L_n = P_n × P_2`: rails on `0..n` and `n..2n`, rungs `{i, n+i}`.
pub fn ladder(n: usize) -> Result<SimpleGraph> {
    require("ladder", n >= 2, || format!("n = {n}, need n >= 2"))?;
    let mut g = SimpleGraph::empty(2 * n);
    for i in 0..n {
        g.add_edge_unchecked(i, n + i);
        if i + 1 < n {
            g.add_edge_unchecked(i, i + 1);
            g.add_edge_unchecked(n + i, n + i + 1);
        }
    }
    Ok(g)
}

/// Vertex count `f(m, n)` for an `m`-regular graph of girth `n` (the Moore
/// bound). Actual cages can be larger than this for some parameters.
pub fn cage_order(m: u64, n: u64) -> Result<u64> {
    require("cage_order", m >= 2 && n >= 3, || {
        format!("m = {m}, n = {n}, need m >= 2 and n >= 3")
    })?;
    if m == 2 {
        return Ok(n);
    }
    let overflow = || CurlError::InvalidParameter {
        family: "cage_order",
        reason: format!("f({m}, {n}) overflows u64"),
    };
    let (lead, r) = if n % 2 == 1 {
        (m, (n - 1) / 2)
    } else {
        (2, n / 2)
    };
    let r = u32::try_from(r).map_err(|_| overflow())?;
    let numerator = (m - 1)
        .checked_pow(r)
        .and_then(|p| p.checked_mul(lead))
        .ok_or_else(overflow)?
        - 2;
    Ok(numerator / (m - 2))
}
