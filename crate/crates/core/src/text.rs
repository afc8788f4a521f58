//! Texts over an ordered byte alphabet.
//!
//! Symbols are opaque bytes. The algorithms never look at a symbol value
//! directly: they ask [`OrderSpec`] to order two positions, and each such
//! question is counted by a [`ComparisonCounter`]. This is the only module
//! that reads raw symbols.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// An immutable sequence of byte symbols.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Text {
    symbols: Vec<u8>,
}

impl Text {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Text { symbols: symbols.into() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.symbols
    }

    /// Symbol at 1-based position `i`.
    #[inline]
    pub(crate) fn at(&self, i: usize) -> u8 {
        self.symbols[i - 1]
    }

    fn check_index(&self, index: usize, lo: usize, hi: usize) -> Result<()> {
        if index < lo || index > hi {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        Ok(())
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Text(\"")?;
        for &b in &self.symbols {
            write!(f, "{}", core::ascii::escape_default(b))?;
        }
        f.write_str("\")")
    }
}

impl From<Vec<u8>> for Text {
    fn from(symbols: Vec<u8>) -> Self {
        Text { symbols }
    }
}

impl From<&[u8]> for Text {
    fn from(symbols: &[u8]) -> Self {
        Text { symbols: symbols.to_vec() }
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text { symbols: s.as_bytes().to_vec() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderMode {
    Natural,
    Reversed,
    Permutation,
}

/// A total order on the 256 byte symbols.
///
/// Internally every mode is a rank table; `Natural` is the identity and
/// `Reversed` maps `b` to `255 - b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    mode: OrderMode,
    ranks: [u8; 256],
}

impl OrderSpec {
    pub fn natural() -> Self {
        let mut ranks = [0u8; 256];
        for (b, r) in ranks.iter_mut().enumerate() {
            *r = b as u8;
        }
        OrderSpec { mode: OrderMode::Natural, ranks }
    }

    pub fn reversed() -> Self {
        let mut ranks = [0u8; 256];
        for (b, r) in ranks.iter_mut().enumerate() {
            *r = 255 - b as u8;
        }
        OrderSpec { mode: OrderMode::Reversed, ranks }
    }

    /// Builds an order from `ranks[symbol] = rank`. The table must be a
    /// bijection on `0..=255`.
    pub fn permutation(ranks: [u8; 256]) -> Result<Self> {
        let mut seen = [false; 256];
        for &r in &ranks {
            if seen[r as usize] {
                return Err(Error::InvalidPermutation { rank: r });
            }
            seen[r as usize] = true;
        }
        Ok(OrderSpec { mode: OrderMode::Permutation, ranks })
    }

    pub fn mode(&self) -> OrderMode {
        self.mode
    }

    pub fn ranks(&self) -> &[u8; 256] {
        &self.ranks
    }

    /// The order with every comparison flipped.
    pub fn reverse(&self) -> Self {
        match self.mode {
            OrderMode::Natural => OrderSpec::reversed(),
            OrderMode::Reversed => OrderSpec::natural(),
            OrderMode::Permutation => {
                let mut ranks = self.ranks;
                for r in ranks.iter_mut() {
                    *r = 255 - *r;
                }
                OrderSpec { mode: OrderMode::Permutation, ranks }
            }
        }
    }

    /// Orders two raw symbols. Uncounted; the algorithms go through
    /// [`compare_symbols`] or the scan operations instead.
    #[inline]
    pub fn cmp_symbols(&self, a: u8, b: u8) -> Ordering {
        self.ranks[a as usize].cmp(&self.ranks[b as usize])
    }
}

impl Default for OrderSpec {
    fn default() -> Self {
        OrderSpec::natural()
    }
}

impl fmt::Debug for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            OrderMode::Natural => f.write_str("OrderSpec::Natural"),
            OrderMode::Reversed => f.write_str("OrderSpec::Reversed"),
            OrderMode::Permutation => f.debug_tuple("OrderSpec::Permutation").field(&&self.ranks[..]).finish(),
        }
    }
}

/// Running tally of symbol comparisons.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComparisonCounter {
    count: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn count(&self) -> u64 {
        self.count
    }

    #[inline]
    fn tick(&mut self) {
        self.count += 1;
    }
}

/// Orders `text[a]` against `text[b]` (1-based) and counts one comparison.
pub fn compare_symbols(
    text: &Text,
    a: usize,
    b: usize,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> Result<Ordering> {
    text.check_index(a, 1, text.len())?;
    text.check_index(b, 1, text.len())?;
    Ok(Scanner::new(text, order, counter).cmp(a, b))
}

/// Length of the longest common prefix of the suffixes starting at `i` and
/// `j`. Index `n + 1` denotes the empty suffix.
pub fn naive_scan_rlce(
    text: &Text,
    i: usize,
    j: usize,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> Result<usize> {
    text.check_index(i, 1, text.len() + 1)?;
    text.check_index(j, 1, text.len() + 1)?;
    Ok(Scanner::new(text, order, counter).extend_right(i, j).0)
}

/// Length of the longest common suffix of the prefixes ending at `i` and
/// `j`. Index `0` denotes the empty prefix.
pub fn naive_scan_llce(
    text: &Text,
    i: usize,
    j: usize,
    order: &OrderSpec,
    counter: &mut ComparisonCounter,
) -> Result<usize> {
    text.check_index(i, 0, text.len())?;
    text.check_index(j, 0, text.len())?;
    Ok(Scanner::new(text, order, counter).extend_left(i, j))
}

/// Counted access to a text under one order. Positions are 1-based.
pub(crate) struct Scanner<'a> {
    text: &'a Text,
    ranks: &'a [u8; 256],
    counter: &'a mut ComparisonCounter,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(text: &'a Text, order: &'a OrderSpec, counter: &'a mut ComparisonCounter) -> Self {
        Scanner { text, ranks: &order.ranks, counter }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.text.len()
    }

    #[inline]
    pub(crate) fn cmp(&mut self, a: usize, b: usize) -> Ordering {
        self.counter.tick();
        let ra = self.ranks[self.text.at(a) as usize];
        let rb = self.ranks[self.text.at(b) as usize];
        ra.cmp(&rb)
    }

    /// Scans `S_i` and `S_j` left to right. Returns the common prefix length
    /// and the order of `S_i` relative to `S_j`; a suffix that runs out first
    /// is the smaller one.
    ///
    /// Uses `ℓ + 1` comparisons, or `ℓ` when a suffix end stops the scan.
    pub(crate) fn extend_right(&mut self, i: usize, j: usize) -> (usize, Ordering) {
        let end = self.len() + 1;
        let mut l = 0;
        loop {
            let (a, b) = (i + l, j + l);
            match (a == end, b == end) {
                (true, true) => return (l, Ordering::Equal),
                (true, false) => return (l, Ordering::Less),
                (false, true) => return (l, Ordering::Greater),
                (false, false) => {}
            }
            match self.cmp(a, b) {
                Ordering::Equal => l += 1,
                ord => return (l, ord),
            }
        }
    }

    /// Scans the prefixes ending at `i` and `j` right to left.
    pub(crate) fn extend_left(&mut self, i: usize, j: usize) -> usize {
        let mut l = 0;
        while l < i && l < j && self.cmp(i - l, j - l) == Ordering::Equal {
            l += 1;
        }
        l
    }
}
