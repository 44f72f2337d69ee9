//! Set-graphs: the intersection graph of the non-empty subsets of an
//! `n`-element set.

use num_bigint::BigUint;

use super::SimpleGraph;
use crate::error::{CurlError, Result};

pub const MAX_SET_GRAPH_N: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetGraphSpec {
    pub n: u32,
}

impl SetGraphSpec {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(CurlError::InvalidParameter {
                family: "setgraph",
                reason: "n = 0, need n >= 1".into(),
            });
        }
        if n > MAX_SET_GRAPH_N {
            return Err(CurlError::SetGraphTooLarge(n));
        }
        Ok(SetGraphSpec { n })
    }

    /// `2^n - 1`.
    pub fn vertex_count(&self) -> usize {
        (1usize << self.n) - 1
    }

    /// Subset (as a bitmask) represented by vertex `id`.
    pub fn subset_of(id: usize) -> u32 {
        (id + 1) as u32
    }
}

/// Vertex `id` is the subset with bitmask `id + 1`; two subsets are adjacent
/// when they intersect.
pub fn set_graph(spec: SetGraphSpec) -> Result<SimpleGraph> {
    let spec = SetGraphSpec::new(spec.n)?;
    let count = spec.vertex_count();
    let mut g = SimpleGraph::empty(count);
    for a in 0..count {
        let sa = SetGraphSpec::subset_of(a);
        for b in a + 1..count {
            if sa & SetGraphSpec::subset_of(b) != 0 {
                g.add_edge_unchecked(a, b);
            }
        }
    }
    Ok(g)
}

/// Closed-form compound curling number of the set-graph on `n` elements,
/// with the hyperfactorial identity evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetGraphCompound {
    pub n: u32,
    /// `prod_{i=1..n} C(n, i)`.
    pub product: u128,
    /// `H(n)^2 / (n!)^(n+1)` with `H(n) = prod i^i`.
    pub hyperfactorial_value: BigUint,
    /// The same expression minus one.
    pub hyperfactorial_minus_one: BigUint,
    /// Whether the division was exact and equals `product`.
    pub identity_holds: bool,
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

pub fn set_graph_compound_closed_form(n: u32) -> Result<SetGraphCompound> {
    if n == 0 {
        return Err(CurlError::InvalidParameter {
            family: "setgraph",
            reason: "n = 0, need n >= 1".into(),
        });
    }
    let nn = u128::from(n);
    let product = (1..=nn)
        .try_fold(1u128, |acc, i| acc.checked_mul(binomial(nn, i)?))
        .ok_or(CurlError::ProductOverflow)?;

    let mut hyper = BigUint::from(1u32);
    let mut fact = BigUint::from(1u32);
    for i in 1..=n {
        hyper *= BigUint::from(i).pow(i);
        fact *= i;
    }
    let numerator = &hyper * &hyper;
    let denominator = fact.pow(n + 1);
    let hyperfactorial_value = &numerator / &denominator;
    let exact = (&hyperfactorial_value * &denominator) == numerator;
    let identity_holds = exact && hyperfactorial_value == BigUint::from(product);
    let hyperfactorial_minus_one = if hyperfactorial_value > BigUint::ZERO {
        &hyperfactorial_value - 1u32
    } else {
        BigUint::ZERO
    };
    Ok(SetGraphCompound {
        n,
        product,
        hyperfactorial_value,
        hyperfactorial_minus_one,
        identity_holds,
    })
}
