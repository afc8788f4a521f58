//! Slow reference implementations of the definitions.
//!
//! Nothing here shares code with the production algorithms; these functions
//! are the referees in tests and in `runs verify`. They read symbols
//! directly and do not count comparisons.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::nss::NssArray;
use crate::runs::{Direction, Run};
use crate::text::{OrderSpec, Text};

/// Largest input the quadratic and cubic oracles accept.
pub const ORACLE_MAX_LEN: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn check_cap(text: &Text) -> Result<()> {
    if text.len() > ORACLE_MAX_LEN {
        return Err(Error::OracleInputTooLarge { len: text.len(), cap: ORACLE_MAX_LEN });
    }
    Ok(())
}

/// Lexicographic order of the suffixes starting at 1-based `i` and `j`.
pub fn compare_suffixes(text: &Text, i: usize, j: usize, order: &OrderSpec) -> Ordering {
    let s = text.as_bytes();
    let rank = |b: &u8| order.ranks()[*b as usize];
    s[i - 1..].iter().map(rank).cmp(s[j - 1..].iter().map(rank))
}

/// NSS array straight from its definition: the first later suffix that is
/// smaller, or `n + 1`.
pub fn oracle_nss(text: &Text, order: &OrderSpec) -> Result<NssArray> {
    check_cap(text)?;
    let n = text.len();
    let values: Vec<usize> = (1..=n)
        .map(|i| {
            (i + 1..=n)
                .find(|&j| compare_suffixes(text, i, j, order) == Ordering::Greater)
                .unwrap_or(n + 1)
        })
        .collect();
    NssArray::from_values(&values)
}

/// Longest common extension by definition. `Right`: common prefix of the
/// suffixes at `i` and `j` (`n + 1` is the empty suffix). `Left`: common
/// suffix of the prefixes ending at `i` and `j` (`0` is the empty prefix).
pub fn oracle_lce(text: &Text, i: usize, j: usize, side: Side) -> Result<usize> {
    let s = text.as_bytes();
    let n = s.len();
    let out_of_range = |index| Error::IndexOutOfRange { index, len: n };
    match side {
        Side::Right => {
            for &k in &[i, j] {
                if k == 0 || k > n + 1 {
                    return Err(out_of_range(k));
                }
            }
            Ok(s[i - 1..].iter().zip(&s[j - 1..]).take_while(|(a, b)| a == b).count())
        }
        Side::Left => {
            for &k in &[i, j] {
                if k > n {
                    return Err(out_of_range(k));
                }
            }
            Ok(s[..i].iter().rev().zip(s[..j].iter().rev()).take_while(|(a, b)| a == b).count())
        }
    }
}

/// Smallest `p ≥ 1` such that `S[x] = S[x + p]` for all `x ∈ [i, j - p]`.
pub fn minimal_period(text: &Text, i: usize, j: usize) -> usize {
    assert!(1 <= i && i <= j && j <= text.len(), "invalid range {i}..={j}");
    let w = &text.as_bytes()[i - 1..j];
    (1..=w.len())
        .find(|&p| (0..w.len() - p).all(|x| w[x] == w[x + p]))
        .expect("the length is always a period")
}

fn ranked(text: &Text, i: usize, j: usize, order: &OrderSpec) -> Vec<u8> {
    text.as_bytes()[i - 1..j].iter().map(|&b| order.ranks()[b as usize]).collect()
}

/// Whether `S[i..=j]` is strictly smaller than each of its non-trivial
/// cyclic shifts.
pub fn is_lyndon(text: &Text, i: usize, j: usize, order: &OrderSpec) -> bool {
    assert!(1 <= i && i <= j && j <= text.len(), "invalid range {i}..={j}");
    let w = ranked(text, i, j, order);
    (1..w.len()).all(|k| {
        let rotation = w[k..].iter().chain(&w[..k]);
        w.iter().cmp(rotation) == Ordering::Less
    })
}

/// Whether `S[i..=j]` is strictly smaller than each of its proper suffixes.
/// Equivalent to [`is_lyndon`]; kept as an independent cross-check.
pub fn is_lyndon_by_suffixes(text: &Text, i: usize, j: usize, order: &OrderSpec) -> bool {
    assert!(1 <= i && i <= j && j <= text.len(), "invalid range {i}..={j}");
    let w = ranked(text, i, j, order);
    (1..w.len()).all(|k| w[..] < w[k..])
}

/// All runs, with directions relative to the natural order.
pub fn oracle_runs(text: &Text) -> Result<Vec<Run>> {
    oracle_runs_under(text, &OrderSpec::natural())
}

/// All runs, with directions and roots relative to `order`.
///
/// For every start `i` and candidate period `p` the periodicity is extended
/// as far right as it goes; the triple is kept when it is left-maximal,
/// spans at least two periods, and `p` is the minimal period of the span.
/// This visits every maximal periodic substring exactly once.
pub fn oracle_runs_under(text: &Text, order: &OrderSpec) -> Result<Vec<Run>> {
    check_cap(text)?;
    let s = text.as_bytes();
    let n = s.len();
    let mut runs = Vec::new();
    for i in 1..=n {
        for p in 1..=(n - i).div_ceil(2) {
            // S[x] = S[x + p] for x in [i, j - p].
            let mut j = i + p - 1;
            while j < n && s[j] == s[j - p] {
                j += 1;
            }
            if j - i + 1 < 2 * p {
                continue;
            }
            if i > 1 && s[i - 2] == s[i - 2 + p] {
                continue;
            }
            if minimal_period(text, i, j) != p {
                continue;
            }
            let direction = if compare_suffixes(text, i, i + p, order) == Ordering::Greater {
                Direction::Decreasing
            } else {
                Direction::Increasing
            };
            let root_order = match direction {
                Direction::Decreasing => order.clone(),
                Direction::Increasing => order.reverse(),
            };
            let root = (i..i + p)
                .find(|&r| is_lyndon(text, r, r + p - 1, &root_order))
                .expect("a primitive period has a Lyndon rotation");
            runs.push(Run { start: i, end: j, period: p, root, direction });
        }
    }
    runs.sort_unstable();
    Ok(runs)
}
