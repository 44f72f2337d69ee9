//! Degree-sequence invariants.
//!
//! Every invariant here is a function of the multiset of degrees, so the
//! canonical input is an [`IdentityString`]: the degrees grouped into
//! `(value, multiplicity)` runs, one run per distinct value, ordered by
//! decreasing value.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{CurlError, Result};
use crate::seqcore::IntString;

/// Largest `ic` for which `ic + ic!` fits in a `u64`.
pub const MAX_IC_FOR_INDEX: u64 = 20;

/// One maximal run of equal degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub value: u64,
    pub multiplicity: u64,
}

/// Degrees grouped into runs with pairwise distinct values, sorted by value
/// descending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IdentityString {
    runs: Vec<Run>,
}

impl IdentityString {
    /// Builds from `(value, multiplicity)` pairs in any order. Pairs that share
    /// a value are merged.
    pub fn from_runs<I>(runs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
        for (value, multiplicity) in runs {
            if multiplicity == 0 {
                return Err(CurlError::ZeroMultiplicity { value });
            }
            *acc.entry(value).or_default() += multiplicity;
        }
        Ok(Self::from_map(acc))
    }

    fn from_map(acc: BTreeMap<u64, u64>) -> Self {
        IdentityString {
            runs: acc
                .into_iter()
                .rev()
                .map(|(value, multiplicity)| Run {
                    value,
                    multiplicity,
                })
                .collect(),
        }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total number of entries (vertices).
    pub fn total(&self) -> u64 {
        self.runs.iter().map(|r| r.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, value: u64) -> u64 {
        self.runs
            .iter()
            .find(|r| r.value == value)
            .map_or(0, |r| r.multiplicity)
    }

    /// Expands back into a sequence in canonical (descending) order.
    pub fn expand(&self) -> IntString {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity as usize))
            .collect()
    }

    pub fn as_pairs(&self) -> Vec<(u64, u64)> {
        self.runs
            .iter()
            .map(|r| (r.value, r.multiplicity))
            .collect()
    }

    fn require_non_empty(&self) -> Result<()> {
        if self.runs.is_empty() {
            Err(CurlError::EmptyIdentityString)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for IdentityString {
    /// Formats as `(6)^1∘(5)^3∘(3)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str("∘")?;
            }
            write!(f, "({})^{}", r.value, r.multiplicity)?;
        }
        Ok(())
    }
}

impl Serialize for IdentityString {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.runs.iter().map(|r| [r.value, r.multiplicity]))
    }
}

/// Groups a sequence into its identity string.
pub fn group_degrees(s: &IntString) -> Result<IdentityString> {
    if s.is_empty() {
        return Err(CurlError::EmptyString);
    }
    let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in s.entries() {
        *acc.entry(d).or_default() += 1;
    }
    Ok(IdentityString::from_map(acc))
}

/// Curling number of a graph: the largest run multiplicity.
pub fn cn_graph(d: &IdentityString) -> Result<u64> {
    d.require_non_empty()?;
    Ok(d.runs.iter().map(|r| r.multiplicity).max().unwrap_or(0))
}

/// Number of runs whose multiplicity attains the curling number.
pub fn ic_graph(d: &IdentityString) -> Result<u64> {
    let cn = cn_graph(d)?;
    Ok(d.runs.iter().filter(|r| r.multiplicity == cn).count() as u64)
}

/// `1` when a single run attains the curling number, otherwise `ic + ic!`.
pub fn curling_index(d: &IdentityString) -> Result<u64> {
    let ic = ic_graph(d)?;
    if ic == 1 {
        return Ok(1);
    }
    (1..=ic)
        .try_fold(1u64, |acc, i| acc.checked_mul(i))
        .and_then(|fact| fact.checked_add(ic))
        .ok_or(CurlError::CurlingIndexOverflow)
}

/// Product of all run multiplicities.
pub fn compound_cn(d: &IdentityString) -> Result<u128> {
    d.require_non_empty()?;
    checked_product(d.runs.iter().map(|r| r.multiplicity))
}

fn checked_product(factors: impl IntoIterator<Item = u64>) -> Result<u128> {
    factors
        .into_iter()
        .try_fold(1u128, |acc, k| acc.checked_mul(u128::from(k)))
        .ok_or(CurlError::ProductOverflow)
}

/// All four invariants of a degree string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub cn: u64,
    pub ic: u64,
    pub curling_index: u64,
    pub compound_cn: u128,
}

impl GraphInvariants {
    pub fn of(d: &IdentityString) -> Result<Self> {
        Ok(GraphInvariants {
            cn: cn_graph(d)?,
            ic: ic_graph(d)?,
            curling_index: curling_index(d)?,
            compound_cn: compound_cn(d)?,
        })
    }

    pub fn of_sequence(s: &IntString) -> Result<Self> {
        Self::of(&group_degrees(s)?)
    }
}

/// Degree string of a disjoint union: runs with equal values are merged by
/// adding multiplicities.
pub fn merge_union(ds: &[IdentityString]) -> Result<IdentityString> {
    if ds.is_empty() {
        return Err(CurlError::EmptyUnion);
    }
    let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
    for d in ds {
        for r in &d.runs {
            *acc.entry(r.value).or_default() += r.multiplicity;
        }
    }
    Ok(IdentityString::from_map(acc))
}

/// Both sides of the two-graph union formula for the compound curling number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnionCompound {
    /// `cn^c(G) * prod(H without the shared run) + cn^c(H) * prod(G without the shared run)`.
    pub formula: u128,
    /// `compound_cn(merge_union([G, H]))`.
    pub merged: u128,
}

/// Evaluates the union formula for two degree strings that share exactly one
/// value, alongside the compound curling number of the merged string.
pub fn union_compound_formula(
    dg: &IdentityString,
    dh: &IdentityString,
    shared_value: u64,
) -> Result<UnionCompound> {
    dg.require_non_empty()?;
    dh.require_non_empty()?;
    let shared: Vec<u64> = dg
        .runs
        .iter()
        .map(|r| r.value)
        .filter(|v| dh.multiplicity_of(*v) > 0)
        .collect();
    if shared != [shared_value] {
        return Err(CurlError::UnionPrecondition(format!(
            "expected {shared_value} to be the only shared value, found {shared:?}"
        )));
    }
    let excluding = |d: &IdentityString| {
        checked_product(
            d.runs
                .iter()
                .filter(|r| r.value != shared_value)
                .map(|r| r.multiplicity),
        )
    };
    let lhs = compound_cn(dg)?
        .checked_mul(excluding(dh)?)
        .ok_or(CurlError::ProductOverflow)?;
    let rhs = compound_cn(dh)?
        .checked_mul(excluding(dg)?)
        .ok_or(CurlError::ProductOverflow)?;
    let formula = lhs.checked_add(rhs).ok_or(CurlError::ProductOverflow)?;
    let merged = compound_cn(&merge_union(&[dg.clone(), dh.clone()])?)?;
    Ok(UnionCompound { formula, merged })
}

/// Predicted ordering of `cn^c(G - uv)` against `cn^c(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeletionOrdering {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<")]
    Less,
}

impl fmt::Display for DeletionOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeletionOrdering::AtLeast => "≥",
            DeletionOrdering::Less => "<",
        })
    }
}

/// Predicts the effect on the compound curling number of deleting an edge
/// between two vertices of degree `dj`. With `t* = t_j - 2` and `t_next` the
/// multiplicity of value `dj - 1` (zero when absent), the prediction is `≥`
/// iff `t* >= t_next`.
pub fn edge_deletion_prediction(d: &IdentityString, dj: u64) -> Result<DeletionOrdering> {
    let tj = d.multiplicity_of(dj);
    if tj == 0 {
        return Err(CurlError::DeletionPrecondition(format!(
            "no run with value {dj}"
        )));
    }
    if tj < 2 {
        return Err(CurlError::DeletionPrecondition(format!(
            "run for value {dj} has multiplicity {tj} < 2"
        )));
    }
    let t_star = tj - 2;
    let t_next = match dj.checked_sub(1) {
        Some(v) => d.multiplicity_of(v),
        None => 0,
    };
    Ok(if t_star >= t_next {
        DeletionOrdering::AtLeast
    } else {
        DeletionOrdering::Less
    })
}

/// Orderings under which a degree sequence is fed to the extension process.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Arrangement {
    /// Vertex order, unchanged.
    AsIs,
    #[default]
    Descending,
    Ascending,
    /// Runs laid out by increasing multiplicity (ties by decreasing value),
    /// so a longest run sits at the tail.
    IdentityString,
}

impl Arrangement {
    pub const ALL: [Arrangement; 4] = [
        Arrangement::AsIs,
        Arrangement::Descending,
        Arrangement::Ascending,
        Arrangement::IdentityString,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Arrangement::AsIs => "asis",
            Arrangement::Descending => "descending",
            Arrangement::Ascending => "ascending",
            Arrangement::IdentityString => "identity-string",
        }
    }

    pub fn apply(self, s: &IntString) -> IntString {
        let mut v = s.entries().to_vec();
        match self {
            Arrangement::AsIs => {}
            Arrangement::Descending => v.sort_unstable_by(|a, b| b.cmp(a)),
            Arrangement::Ascending => v.sort_unstable(),
            Arrangement::IdentityString => {
                let Ok(d) = group_degrees(s) else {
                    return IntString::default();
                };
                let mut runs = d.runs;
                runs.sort_by(|a, b| {
                    a.multiplicity
                        .cmp(&b.multiplicity)
                        .then(b.value.cmp(&a.value))
                });
                v = runs
                    .iter()
                    .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity as usize))
                    .collect();
            }
        }
        IntString::new(v)
    }
}

impl FromStr for Arrangement {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Arrangement::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown arrangement {s:?}"))
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
