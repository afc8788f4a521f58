//! Next-smaller-suffix (Lyndon) arrays.
//!
//! `nss[i]` is the smallest `j > i` with `S_j ≺ S_i`, or `n + 1` if there is
//! none. `S[i..nss[i])` is then the longest Lyndon word starting at `i`, so
//! the Lyndon array is `λ[i] = nss[i] - i`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lce::{compute_all_rlce, LceTable, UNDEFINED};
use crate::oracle;
use crate::text::{ComparisonCounter, OrderSpec, Scanner, Text};

/// Next-smaller-suffix array with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NssArray {
    // Slot 0 is unused so that `nss[i]` reads like the math.
    nss: Vec<usize>,
}

impl NssArray {
    /// Wraps 1-based values (`values[0]` is `nss[1]`) after checking the
    /// structural invariants: range and non-intersection.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        let mut nss = Vec::with_capacity(values.len() + 1);
        nss.push(0);
        nss.extend_from_slice(values);
        let arr = NssArray { nss };
        arr.check_structure()?;
        Ok(arr)
    }

    pub(crate) fn from_raw(nss: Vec<usize>) -> Self {
        debug_assert!(!nss.is_empty());
        NssArray { nss }
    }

    pub(crate) fn raw(&self) -> &[usize] {
        &self.nss
    }

    pub fn len(&self) -> usize {
        self.nss.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `nss[i]` for `1 ≤ i ≤ n`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.len(), "nss index {i} out of range 1..={}", self.len());
        self.nss[i]
    }

    /// Values `nss[1..=n]` in order.
    pub fn values(&self) -> &[usize] {
        &self.nss[1..]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nss.iter().copied().enumerate().skip(1)
    }

    pub fn lyndon_lengths(&self) -> Vec<usize> {
        lyndon_lengths(self)
    }

    /// Checks `i < nss[i] ≤ n + 1` and that no two NSS intervals cross.
    /// Needs no symbol comparisons, so it cannot certify the array for a
    /// particular text.
    pub fn check_structure(&self) -> Result<()> {
        let n = self.len();
        for (i, j) in self.iter() {
            if j <= i || j > n + 1 {
                return Err(Error::InvalidNss { position: i, reason: "value outside (i, n + 1]" });
            }
        }
        // Intervals [i, nss[i]) must nest: every i' inside satisfies
        // nss[i'] ≤ nss[i]. A stack of open interval ends checks this.
        let mut ends: Vec<usize> = Vec::new();
        for (i, j) in self.iter() {
            while ends.last().is_some_and(|&e| e <= i) {
                ends.pop();
            }
            if ends.last().is_some_and(|&e| j > e) {
                return Err(Error::InvalidNss { position: i, reason: "intervals intersect" });
            }
            ends.push(j);
        }
        Ok(())
    }
}

/// `λ[i] = nss[i] - i`, returned 0-based (`result[0]` is `λ[1]`).
pub fn lyndon_lengths(nss: &NssArray) -> Vec<usize> {
    nss.iter().map(|(i, j)| j - i).collect()
}

/// Computes the NSS array together with `rlce[i] = lcp(S_i, S_nss[i])`.
///
/// A left-to-right stack scan: the stack holds the positions whose next
/// smaller suffix has not been found yet, and reading `j` pops every stack
/// entry whose suffix is larger than `S_j`. Pops happen for increasing `j`
/// and, within one `j`, for decreasing `i`, which is the order in which the
/// R-LCE frontier argument runs. Each stack test needs `lcp(i, j)`; those
/// values are obtained without rescanning in three ways:
///
/// * the entry below a popped `t` is `pss[t]`, and `lcp(pss[t], t)` together
///   with `lcp(t, j)` decides the next test outright unless the two are
///   equal, in which case scanning resumes at that offset;
/// * inside the frontier window `[j', x)`, where `S[q] = S[q - d]`, a pair
///   whose shifted copy `(i - d, j - d)` was already decided (as an NSS pair
///   or as a previous-smaller pair) is copied, or scanning skips ahead to `x`;
/// * otherwise the symbols are scanned directly.
pub fn compute_nss_interleaved(
    text: &Text,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> (NssArray, LceTable) {
    let n = text.len();
    let mut scan = Scanner::new(text, order, counter);
    let mut nss = vec![0usize; n + 1];
    let mut rlce = vec![UNDEFINED; n + 1];
    // Previous smaller suffix of each position (0 if none) and the common
    // prefix length with it.
    let mut pss = vec![0usize; n + 2];
    let mut plcp = vec![UNDEFINED; n + 2];
    let mut frontier = Frontier { j_prime: 0, x: 1, d: 0 };
    let mut stack: Vec<usize> = Vec::with_capacity(64);

    if n > 0 {
        stack.push(1);
    }
    for j in 2..=n {
        // Common prefix of S_j with the entry popped last.
        let mut popped: Option<(usize, usize)> = None;
        while let Some(&i) = stack.last() {
            let (l, ord) = match popped {
                None => frontier.resolve(&mut scan, &nss, &rlce, &pss, &plcp, i, j, 0),
                Some((t, x)) => {
                    let c = plcp[t];
                    match c.cmp(&x) {
                        Ordering::Less => (c, Ordering::Less),
                        Ordering::Greater => (x, Ordering::Greater),
                        Ordering::Equal => frontier.resolve(&mut scan, &nss, &rlce, &pss, &plcp, i, j, x),
                    }
                }
            };
            debug_assert_ne!(ord, Ordering::Equal);
            if ord == Ordering::Greater {
                stack.pop();
                nss[i] = j;
                rlce[i] = l;
                popped = Some((i, l));
            } else {
                pss[j] = i;
                plcp[j] = l;
                break;
            }
        }
        stack.push(j);
    }
    for i in stack {
        nss[i] = n + 1;
    }
    (NssArray::from_raw(nss), LceTable::from_raw(rlce))
}

/// Rightmost scanned region: `S[q] = S[q - d]` for all `q ∈ [j_prime, x)`.
struct Frontier {
    j_prime: usize,
    x: usize,
    d: usize,
}

impl Frontier {
    /// `lcp(i, j)` and the order of `S_i` against `S_j`, given a known lower
    /// bound `lower` on the common prefix.
    #[allow(clippy::too_many_arguments)]
    #[inline]
    fn resolve(
        &mut self,
        scan: &mut Scanner<'_>,
        nss: &[usize],
        rlce: &[usize],
        pss: &[usize],
        plcp: &[usize],
        i: usize,
        j: usize,
        lower: usize,
    ) -> (usize, Ordering) {
        let mut skip = lower;
        if i >= self.j_prime && j < self.x && self.d > 0 {
            let (si, sj) = (i - self.d, j - self.d);
            let known = if nss[si] == sj {
                Some((rlce[si], Ordering::Greater))
            } else if pss[sj] == si {
                Some((plcp[sj], Ordering::Less))
            } else {
                None
            };
            if let Some((m, ord)) = known {
                if j + m < self.x {
                    return (m, ord);
                }
                skip = skip.max(self.x - j);
            }
        }
        let (l, ord) = scan.extend_right(i + skip, j + skip);
        let l = l + skip;
        if j + l >= self.x {
            self.j_prime = j;
            self.x = j + l;
            self.d = j - i;
        }
        (l, ord)
    }
}

/// Differential-testing path: NSS by the quadratic oracle, then R-LCEs by the
/// standalone frontier algorithm. Only the second phase is counted.
pub fn compute_nss_two_phase(
    text: &Text,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> Result<(NssArray, LceTable)> {
    let nss = oracle::oracle_nss(text, order)?;
    let rlce = compute_all_rlce(text, &nss, order, counter);
    Ok((nss, rlce))
}
