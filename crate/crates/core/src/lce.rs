//! Batched longest-common-extension tables for `(i, nss[i])` pairs.
//!
//! `rlce[i] = lcp(S_i, S_nss[i])` and `llce[i] = lcs(S[1..i], S[1..nss[i]])`,
//! defined wherever `nss[i] ≤ n`. Both are computed with a frontier: the
//! extreme text position inspected so far. Positions beyond the frontier
//! are compared at most once; positions behind it are either skipped
//! because a lower bound is known, or the whole value is copied from an
//! earlier pair at the same offset inside a repeated block. Symbol
//! comparisons per direction are at most `n` plus one per computed value.
//!
//! Only the `(i, nss[i])` batch is supported, not arbitrary LCE queries.

use alloc::vec;
use alloc::vec::Vec;

use crate::nss::NssArray;
use crate::text::{ComparisonCounter, OrderSpec, Scanner, Text};

/// Reserved table entry for positions with `nss[i] = n + 1`.
pub(crate) const UNDEFINED: usize = usize::MAX;

/// One LCE value per text position, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LceTable {
    values: Vec<usize>,
}

impl LceTable {
    pub(crate) fn from_raw(values: Vec<usize>) -> Self {
        debug_assert!(!values.is_empty());
        LceTable { values }
    }

    /// Builds a table from 1-based entries (`entries[0]` is position 1).
    pub fn from_entries(entries: &[Option<usize>]) -> Self {
        let mut values = Vec::with_capacity(entries.len() + 1);
        values.push(UNDEFINED);
        values.extend(entries.iter().map(|e| e.unwrap_or(UNDEFINED)));
        LceTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value at 1-based position `i`; `None` where `nss[i] = n + 1`.
    #[inline]
    pub fn get(&self, i: usize) -> Option<usize> {
        match self.values[i] {
            UNDEFINED => None,
            v => Some(v),
        }
    }

    /// Overwrites position `i`. Intended for fault injection in tests.
    pub fn set(&mut self, i: usize, value: Option<usize>) {
        self.values[i] = value.unwrap_or(UNDEFINED);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        (1..self.values.len()).map(|i| (i, self.get(i)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LceTables {
    pub rlce: LceTable,
    pub llce: LceTable,
}

/// Positions `i` with `nss[i] ≤ n`, ordered by increasing `nss[i]` and, for
/// equal `nss[i]`, decreasing `i`. Counting sort on `nss[i]`.
fn rlce_order(nss: &NssArray) -> Vec<usize> {
    let raw = nss.raw();
    let n = nss.len();
    let mut start = vec![0usize; n + 2];
    for &j in &raw[1..] {
        if j <= n {
            start[j + 1] += 1;
        }
    }
    for j in 1..start.len() {
        start[j] += start[j - 1];
    }
    let total = start[n + 1];
    let mut out = vec![0usize; total];
    // Fill each bucket back to front while reading i upwards, which leaves
    // every bucket in decreasing order of i.
    let mut fill: Vec<usize> = start[2..].to_vec();
    for (i, &j) in raw.iter().enumerate().skip(1) {
        if j <= n {
            fill[j - 1] -= 1;
            out[fill[j - 1]] = i;
        }
    }
    out
}

/// R-LCE of every `(i, nss[i])` pair.
///
/// Right indices are visited in increasing order and, within one right
/// index, left indices in decreasing order. With `x` the frontier and
/// `d = j' - i'` the shift of the last scanned pair:
///
/// * if `i, j ∈ (j', x)`, `nss[i - d] = j - d` and that pair's extension
///   ends before `x`, the value is copied from `rlce[i - d]`;
/// * otherwise `min(x, j) - j` symbols are known to match and are skipped,
///   the rest is scanned, and the frontier moves to `j + rlce[i]`.
pub fn compute_all_rlce(
    text: &Text,
    nss: &NssArray,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> LceTable {
    debug_assert_eq!(nss.len(), text.len());
    debug_assert_eq!(nss.check_structure(), Ok(()));
    let n = text.len();
    let nss_raw = nss.raw();
    let mut scan = Scanner::new(text, order, counter);
    let mut rlce = vec![UNDEFINED; n + 1];
    let (mut j_prime, mut x, mut d) = (0usize, 1usize, 0usize);

    for i in rlce_order(nss) {
        let j = nss_raw[i];
        let inside = j_prime < i && i < x && j_prime < j && j < x;
        if inside && nss_raw[i - d] == j - d && j + rlce[i - d] < x {
            rlce[i] = rlce[i - d];
        } else {
            let k = x.max(j) - j;
            rlce[i] = k + scan.extend_right(i + k, j + k).0;
            j_prime = j;
            x = j + rlce[i];
            d = j - i;
        }
    }
    LceTable::from_raw(rlce)
}

/// L-LCE of every `(i, nss[i])` pair.
///
/// Left indices are visited in decreasing order. With `x` the leftmost
/// inspected position and `d = j' - i'` the shift of the last scanned pair:
///
/// * if `i ∈ (x, i')` and the extension of `(i + d, j + d)` stays right of
///   `x`, the value is copied from `llce[i + d]` (in that situation
///   `nss[i + d] = j + d` always holds);
/// * otherwise `i - min(x, i)` symbols are skipped, the rest is scanned
///   leftwards, and the frontier moves to `i - llce[i]`.
pub fn compute_all_llce(
    text: &Text,
    nss: &NssArray,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> LceTable {
    debug_assert_eq!(nss.len(), text.len());
    debug_assert_eq!(nss.check_structure(), Ok(()));
    let n = text.len();
    let nss_raw = nss.raw();
    let mut scan = Scanner::new(text, order, counter);
    let mut llce = vec![UNDEFINED; n + 1];
    let (mut i_prime, mut x, mut d) = (0usize, n, 0usize);

    for i in (1..=n).rev() {
        let j = nss_raw[i];
        if j == n + 1 {
            continue;
        }
        if x < i && i < i_prime && i > x.saturating_add(llce[i + d]) {
            debug_assert_eq!(nss_raw[i + d], j + d, "L-LCE copy from a non-NSS pair at i = {i}");
            llce[i] = llce[i + d];
        } else {
            let k = i - x.min(i);
            llce[i] = k + scan.extend_left(i - k, j - k);
            i_prime = i;
            x = i - llce[i];
            d = j - i;
        }
    }
    LceTable::from_raw(llce)
}
