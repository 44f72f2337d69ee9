//! Summand sets: partitions of `n` into distinct parts greater than one.
//!
//! Two notions of a "maximal" `l`-term set live here side by side. The
//! iterative splitting chain ([`greedy_summand_chain`]) repeatedly halves one
//! part; the true maximiser ([`max_product_summand`]) searches every
//! partition. They disagree (for `n = 30, l = 3` the chain gives `{14,9,7}`
//! while `{11,10,9}` has the larger product), so callers must say which one
//! they mean.

use std::fmt;

use serde::Serialize;

use crate::degseq::{compound_cn, group_degrees};
use crate::error::{CurlError, Result};
use crate::graphs::{degree_sequence, rasta};

/// Strictly decreasing parts, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SummandSet {
    parts: Vec<u64>,
}

impl SummandSet {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(CurlError::InvalidSummandSet("no parts".into()));
        }
        if let Some(&p) = parts.iter().find(|&&p| p < 2) {
            return Err(CurlError::InvalidSummandSet(format!(
                "part {p} is not greater than 1"
            )));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CurlError::InvalidSummandSet(format!(
                "parts {parts:?} are not strictly decreasing"
            )));
        }
        Ok(SummandSet { parts })
    }

    /// Sorts and validates an unordered collection of parts.
    pub fn from_unordered(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn target(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn product(&self) -> u128 {
        self.parts.iter().map(|&p| u128::from(p)).product()
    }
}

impl fmt::Display for SummandSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Caps the work done by an enumeration.
#[derive(Debug, Clone, Copy)]
pub struct StepBudget {
    limit: u64,
    used: u64,
}

impl StepBudget {
    pub fn new(limit: u64) -> Self {
        StepBudget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        StepBudget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<()> {
        if self.used >= self.limit {
            return Err(CurlError::BudgetExhausted(self.limit));
        }
        self.used += 1;
        Ok(())
    }
}

fn check_nl(n: u64, l: usize) -> Result<()> {
    if n < 3 || l < 2 {
        return Err(CurlError::InvalidParameter {
            family: "summand",
            reason: format!("n = {n}, l = {l}, need n >= 3 and l >= 2"),
        });
    }
    Ok(())
}

/// Smallest sum of `k` distinct parts each at least 2.
fn min_sum(k: u64) -> u64 {
    k * (k + 3) / 2
}

/// Largest sum of `k` distinct parts each at most `max`.
fn max_sum(k: u64, max: u64) -> u64 {
    if k == 0 || k > max.saturating_sub(1) {
        return 0;
    }
    k * max - k * (k - 1) / 2
}

/// Every partition of `n` into exactly `l` distinct parts greater than one, in
/// lexicographically decreasing order.
pub fn enumerate_summand_sets(n: u64, l: usize) -> Result<Vec<SummandSet>> {
    enumerate_summand_sets_with_budget(n, l, &mut StepBudget::unlimited())
}

pub fn enumerate_summand_sets_with_budget(
    n: u64,
    l: usize,
    budget: &mut StepBudget,
) -> Result<Vec<SummandSet>> {
    check_nl(n, l)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(l);
    enumerate_rec(n, l as u64, n, &mut current, &mut out, budget)?;
    Ok(out)
}

fn enumerate_rec(
    remaining: u64,
    slots: u64,
    max_part: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<SummandSet>,
    budget: &mut StepBudget,
) -> Result<()> {
    budget.tick()?;
    if slots == 0 {
        if remaining == 0 {
            out.push(SummandSet {
                parts: current.clone(),
            });
        }
        return Ok(());
    }
    // The next part p needs the other slots - 1 parts to fit strictly below it.
    let rest = slots - 1;
    let hi = max_part.min(remaining.saturating_sub(min_sum(rest)));
    for p in (2..=hi).rev() {
        if max_sum(rest, p - 1) + p < remaining {
            break;
        }
        current.push(p);
        enumerate_rec(remaining - p, rest, p - 1, current, out, budget)?;
        current.pop();
    }
    Ok(())
}

/// Two distinct parts greater than one with the largest product summing to
/// `m`, or [`CurlError::NoValidSplit`].
pub fn split2(m: u64) -> Result<SummandSet> {
    if m < 5 {
        return Err(CurlError::NoValidSplit(m));
    }
    let (a, b) = if m % 2 == 1 {
        (m.div_ceil(2), m / 2)
    } else {
        (m / 2 + 1, m / 2 - 1)
    };
    SummandSet::new(vec![a, b]).map_err(|_| CurlError::NoValidSplit(m))
}

/// The iterative splitting chain: start from `split2(n)`, then repeatedly
/// replace the largest part whose split yields two parts not already present.
pub fn greedy_summand_chain(n: u64) -> Result<Vec<SummandSet>> {
    if n < 5 {
        return Err(CurlError::NoTwoTermSummandSet(n));
    }
    let mut chain = vec![split2(n)?];
    loop {
        let cur = chain.last().expect("chain is never empty");
        let next = cur.parts.iter().enumerate().find_map(|(idx, &p)| {
            let split = split2(p).ok()?;
            let mut rest = cur.parts.clone();
            rest.remove(idx);
            if split.parts.iter().any(|s| rest.contains(s)) {
                return None;
            }
            rest.extend_from_slice(&split.parts);
            SummandSet::from_unordered(rest).ok()
        });
        match next {
            Some(s) => chain.push(s),
            None => return Ok(chain),
        }
    }
}

/// The `l`-term summand set of `n` with the largest product of parts. Ties go
/// to the lexicographically largest set. `None` when no set exists.
pub fn max_product_summand(n: u64, l: usize) -> Result<Option<SummandSet>> {
    max_product_summand_with_budget(n, l, &mut StepBudget::unlimited())
}

pub fn max_product_summand_with_budget(
    n: u64,
    l: usize,
    budget: &mut StepBudget,
) -> Result<Option<SummandSet>> {
    let all = enumerate_summand_sets_with_budget(n, l, budget)?;
    let mut best: Option<(u128, SummandSet)> = None;
    // Enumeration order is lexicographically decreasing, so keeping the first
    // maximum implements the tie-break.
    for s in all {
        let p = s.product();
        if best.as_ref().is_none_or(|(bp, _)| p > *bp) {
            best = Some((p, s));
        }
    }
    Ok(best.map(|(_, s)| s))
}

/// Largest `l` for which some `l`-term summand set of `n` exists.
pub fn l_star(n: u64) -> Result<usize> {
    if n < 5 {
        return Err(CurlError::NoTwoTermSummandSet(n));
    }
    let mut l = 2u64;
    while min_sum(l + 1) <= n {
        l += 1;
    }
    Ok(l as usize)
}

/// `(l, compound curling number)` of the Rasta graph for each set in the
/// greedy chain, computed from the constructed graphs.
pub fn rasta_compound_series(n: u64) -> Result<Vec<(usize, u128)>> {
    greedy_summand_chain(n)?
        .iter()
        .map(|s| {
            let g = rasta(s)?.underlying();
            let d = group_degrees(&degree_sequence(&g)?)?;
            Ok((s.len(), compound_cn(&d)?))
        })
        .collect()
}
