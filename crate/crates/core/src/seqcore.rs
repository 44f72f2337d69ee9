//! Curling numbers of finite integer strings.
//!
//! A string `S` can be written as `X Y^k`: a (possibly empty) prefix `X`
//! followed by `k` copies of a non-empty block `Y`. The curling number is the
//! largest such `k`. Appending the curling number to the string and repeating
//! is the extension process that the curling number conjecture says always
//! eventually appends a `1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{CurlError, Result};

/// Default bound on extension steps for [`verify_conjecture`].
pub const DEFAULT_MAX_STEPS: usize = 1000;

/// A finite sequence of nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntString(Vec<u64>);

impl IntString {
    pub fn new(entries: Vec<u64>) -> Self {
        IntString(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Concatenation `self ∘ other`.
    pub fn concat(&self, other: &IntString) -> IntString {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        IntString(out)
    }

    fn require_non_empty(&self) -> Result<()> {
        if self.0.is_empty() {
            Err(CurlError::EmptyString)
        } else {
            Ok(())
        }
    }
}

impl From<Vec<u64>> for IntString {
    fn from(v: Vec<u64>) -> Self {
        IntString(v)
    }
}

impl From<&[u64]> for IntString {
    fn from(v: &[u64]) -> Self {
        IntString(v.to_vec())
    }
}

impl<const N: usize> From<[u64; N]> for IntString {
    fn from(v: [u64; N]) -> Self {
        IntString(v.to_vec())
    }
}

impl FromIterator<u64> for IntString {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        IntString(iter.into_iter().collect())
    }
}

impl fmt::Display for IntString {
    /// Formats as `(a,b,c)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Parses one line of the degree-sequence text format: base-10 entries
/// separated by single spaces.
impl FromStr for IntString {
    type Err = CurlError;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence_line(s, 1)
    }
}

/// A decomposition `prefix ∘ block^count` of a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub prefix: IntString,
    pub block: IntString,
    pub count: usize,
}

impl Factorization {
    /// Reassembles `prefix ∘ block^count`.
    pub fn reassemble(&self) -> IntString {
        let mut out = self.prefix.0.clone();
        for _ in 0..self.count {
            out.extend_from_slice(&self.block.0);
        }
        IntString(out)
    }
}

/// Number of consecutive copies of the length-`len` suffix block that end the
/// string.
fn suffix_repeats(s: &[u64], len: usize) -> usize {
    let n = s.len();
    let block = &s[n - len..];
    let mut count = 1;
    while (count + 1) * len <= n {
        let start = n - (count + 1) * len;
        // Mismatches tend to sit near the block end, so compare backwards.
        if !s[start..start + len].iter().rev().eq(block.iter().rev()) {
            break;
        }
        count += 1;
    }
    count
}

/// Returns `(block_len, count)` for the maximal repetition, preferring the
/// shortest block on ties.
fn max_repetition(s: &[u64]) -> (usize, usize) {
    let n = s.len();
    let mut best = (1, 1);
    for len in 1..=n / 2 {
        // No block this long can beat the current best.
        if (best.1 + 1) * len > n {
            break;
        }
        let k = suffix_repeats(s, len);
        if k > best.1 {
            best = (len, k);
        }
    }
    best
}

/// Maximal-repetition factorization of a non-empty string. Among block
/// lengths achieving the maximum count, the shortest block is returned.
pub fn factorize_max(s: &IntString) -> Result<Factorization> {
    s.require_non_empty()?;
    let (len, count) = max_repetition(&s.0);
    let n = s.len();
    Ok(Factorization {
        prefix: IntString(s.0[..n - len * count].to_vec()),
        block: IntString(s.0[n - len..].to_vec()),
        count,
    })
}

/// The curling number of a string.
pub fn cn_string(s: &IntString) -> Result<usize> {
    s.require_non_empty()?;
    Ok(max_repetition(&s.0).1)
}

/// Curling number when the entries may be freely rearranged before
/// factorizing. This is the largest multiplicity of any single value: a block
/// repeated `k` times needs every one of its values at least `k` times, and a
/// one-entry block of the most frequent value attains the bound.
pub fn cn_rearranged(s: &IntString) -> Result<usize> {
    s.require_non_empty()?;
    let mut sorted = s.0.clone();
    sorted.sort_unstable();
    let mut best = 1;
    let mut run = 1;
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            run += 1;
            best = best.max(run);
        } else {
            run = 1;
        }
    }
    Ok(best)
}

/// Returns `s ∘ (cn(s))`.
pub fn extend_once(s: &IntString) -> Result<IntString> {
    let k = cn_string(s)?;
    let mut out = s.0.clone();
    out.push(k as u64);
    Ok(IntString(out))
}

/// Record of an extension run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurlingTrace {
    pub start: IntString,
    pub appended: Vec<u64>,
    pub reached_one: bool,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureOptions {
    pub max_steps: usize,
    /// Stop as soon as a `1` is appended. When false the run always performs
    /// `max_steps` extensions.
    pub stop_at_one: bool,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions {
            max_steps: DEFAULT_MAX_STEPS,
            stop_at_one: true,
        }
    }
}

/// Extends `s` by its curling number until a `1` is appended or `max_steps`
/// extensions have been made. `reached_one == false` means the budget ran
/// out, not that the conjecture failed.
pub fn verify_conjecture(s: &IntString, max_steps: usize) -> Result<CurlingTrace> {
    verify_conjecture_with(
        s,
        ConjectureOptions {
            max_steps,
            stop_at_one: true,
        },
    )
}

pub fn verify_conjecture_with(s: &IntString, opts: ConjectureOptions) -> Result<CurlingTrace> {
    s.require_non_empty()?;
    if opts.max_steps == 0 {
        return Err(CurlError::ZeroMaxSteps);
    }
    let mut current = s.0.clone();
    current.reserve(opts.max_steps);
    let mut appended = Vec::new();
    let mut reached_one = false;
    for _ in 0..opts.max_steps {
        let k = max_repetition(&current).1 as u64;
        current.push(k);
        appended.push(k);
        if k == 1 {
            reached_one = true;
            if opts.stop_at_one {
                break;
            }
        }
    }
    Ok(CurlingTrace {
        start: s.clone(),
        steps: appended.len(),
        appended,
        reached_one,
    })
}

fn parse_sequence_line(line: &str, line_no: usize) -> Result<IntString> {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Err(CurlError::Parse {
            line: line_no,
            message: "empty sequence".into(),
        });
    }
    trimmed
        .split(' ')
        .map(|tok| {
            if tok.is_empty() {
                return Err(CurlError::Parse {
                    line: line_no,
                    message: "entries must be separated by single spaces".into(),
                });
            }
            tok.parse::<u64>().map_err(|_| CurlError::Parse {
                line: line_no,
                message: format!("invalid entry {tok:?}"),
            })
        })
        .collect()
}

/// Parses the degree-sequence text format: one sequence per line, entries
/// separated by single spaces. Blank lines and `#` lines are skipped.
pub fn parse_sequences(text: &str) -> Result<Vec<IntString>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_sequence_line(trimmed, idx + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(v: [u64; N]) -> IntString {
        IntString::from(v)
    }

    #[test]
    fn factorize_examples() {
        let f = factorize_max(&s([5, 5, 5])).unwrap();
        assert_eq!((f.prefix, f.block, f.count), (s([]), s([5]), 3));

        let f = factorize_max(&s([7])).unwrap();
        assert_eq!((f.prefix, f.block, f.count), (s([]), s([7]), 1));

        let f = factorize_max(&s([2, 2, 3, 2, 3])).unwrap();
        assert_eq!((f.prefix, f.block, f.count), (s([2]), s([2, 3]), 2));
    }

    #[test]
    fn factorize_prefers_shortest_block() {
        // (3,3,3,3) is both (3)^4 and (3,3)^2; the count picks (3)^4.
        let f = factorize_max(&s([1, 2, 1, 2])).unwrap();
        assert_eq!(f.block, s([1, 2]));
        let f = factorize_max(&s([3, 3, 3, 3])).unwrap();
        assert_eq!((f.block, f.count), (s([3]), 4));
    }

    #[test]
    fn cn_string_examples() {
        assert_eq!(cn_string(&s([3, 5, 3, 5, 3, 5])).unwrap(), 3);
        assert_eq!(cn_string(&s([1, 2, 3])).unwrap(), 1);
        assert_eq!(cn_string(&s([1, 1, 2, 1, 1, 2, 2])).unwrap(), 2);
    }

    #[test]
    fn empty_inputs_are_rejected() {
        let e = s([]);
        assert_eq!(cn_string(&e), Err(CurlError::EmptyString));
        assert_eq!(
            factorize_max(&e).unwrap_err().to_string(),
            "empty string has no curling number"
        );
        assert!(cn_rearranged(&e).is_err());
        assert!(extend_once(&e).is_err());
        assert!(verify_conjecture(&e, 10).is_err());
    }

    #[test]
    fn cn_rearranged_examples() {
        assert_eq!(cn_rearranged(&s([3, 5, 3, 3, 5, 5, 6])).unwrap(), 3);
        assert_eq!(cn_rearranged(&s([4, 4, 4, 4])).unwrap(), 4);
        assert_eq!(cn_rearranged(&s([1, 2, 2, 3, 3])).unwrap(), 2);
    }

    #[test]
    fn extend_once_examples() {
        assert_eq!(extend_once(&s([2, 2])).unwrap(), s([2, 2, 2]));
        assert_eq!(extend_once(&s([2, 2, 2])).unwrap(), s([2, 2, 2, 3]));
        assert_eq!(
            extend_once(&s([1, 1, 2, 1, 1, 2])).unwrap(),
            s([1, 1, 2, 1, 1, 2, 2])
        );
    }

    #[test]
    fn conjecture_examples() {
        let t = verify_conjecture(&s([2, 2]), 10).unwrap();
        assert_eq!(t.appended, vec![2, 3, 1]);
        assert!(t.reached_one);
        assert_eq!(t.steps, 3);

        let t = verify_conjecture(&s([1]), 1).unwrap();
        assert_eq!((t.appended, t.reached_one, t.steps), (vec![1], true, 1));

        let t = verify_conjecture_with(
            &s([1]),
            ConjectureOptions {
                max_steps: 9,
                stop_at_one: false,
            },
        )
        .unwrap();
        assert_eq!(t.appended, vec![1, 2, 1, 1, 2, 2, 2, 3, 1]);
        assert_eq!(t.steps, 9);
        assert!(t.reached_one);
    }

    #[test]
    fn conjecture_exhaustion_is_not_an_error() {
        // (2,2) needs three steps to reach 1.
        let t = verify_conjecture(&s([2, 2]), 2).unwrap();
        assert_eq!(t.appended, vec![2, 3]);
        assert!(!t.reached_one);
        assert_eq!(t.steps, 2);
        assert_eq!(verify_conjecture(&s([2]), 0), Err(CurlError::ZeroMaxSteps));
    }

    #[test]
    fn parse_sequence_file() {
        let text = "# degrees\n3 5 3\n\n1 2 2 1\n";
        let seqs = parse_sequences(text).unwrap();
        assert_eq!(seqs, vec![s([3, 5, 3]), s([1, 2, 2, 1])]);

        let err = parse_sequences("1 2\n3  4\n").unwrap_err();
        assert!(matches!(err, CurlError::Parse { line: 2, .. }));
        let err = parse_sequences("1 -2\n").unwrap_err();
        assert!(matches!(err, CurlError::Parse { line: 1, .. }));
    }

    #[test]
    fn display_format() {
        assert_eq!(s([1, 2, 2, 1]).to_string(), "(1,2,2,1)");
        assert_eq!(s([0]).to_string(), "(0)");
    }
}
