//! Runs from Lyndon roots.
//!
//! Every run `⟨i, j, p⟩` that is decreasing under some order has exactly one
//! position `i0 ∈ [i, i + p)` whose longest Lyndon word has length `p`. So
//! checking each `i0` with `nss[i0] ≤ n` as a candidate root, and extending
//! its period with the two LCE tables, finds all decreasing runs. A second
//! pass under the reversed order finds the rest.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::time::Duration;

use crate::lce::{compute_all_llce, LceTables};
use crate::nss::{compute_nss_interleaved, NssArray};
use crate::text::{ComparisonCounter, OrderSpec, Scanner, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// `S_i ≻ S_{i+p}`.
    Decreasing,
    /// `S_i ≺ S_{i+p}`.
    Increasing,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Decreasing => "dec",
            Direction::Increasing => "inc",
        }
    }
}

/// A maximal periodic substring `S[start..=end]` with minimal period
/// `period`, spanning at least two periods. Ordered by `(start, end, period)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
    /// The leftmost position in `[start, start + period)` whose longest
    /// Lyndon word has length `period`, under the order in which the run is
    /// decreasing.
    pub root: usize,
    pub direction: Direction,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Decreasing runs under the order that produced `nss` and `lce`.
///
/// The returned runs carry `Direction::Decreasing`, meaning decreasing
/// under that order; [`compute_runs`] reclassifies against the base order.
pub fn decreasing_runs(nss: &NssArray, lce: &LceTables) -> Vec<Run> {
    let n = nss.len();
    let mut runs = Vec::new();
    for (root, next) in nss.iter() {
        if next == n + 1 {
            continue;
        }
        let p = next - root;
        let (Some(left), Some(right)) = (lce.llce.get(root), lce.rlce.get(root)) else {
            panic!("LCE tables undefined at root candidate {root}");
        };
        if left <= p {
            // left ≥ 1 whenever a run is found, so start ≥ 1 below.
            let start = (root + 1).saturating_sub(left);
            let end = next + right - 1;
            if end + 1 >= start + 2 * p {
                runs.push(Run { start, end, period: p, root, direction: Direction::Decreasing });
            }
        }
    }
    runs
}

/// Orders `S_i` against `S_{i+p}` for a valid run: the two suffixes agree
/// up to position `end`, so one comparison (or the text end) decides.
pub fn classify_run(text: &Text, run: &Run, order: &OrderSpec, counter: &mut ComparisonCounter) -> Direction {
    let after = run.end + 1;
    if after > text.len() {
        // S_{i+p} is a proper prefix of S_i.
        return Direction::Decreasing;
    }
    let mut scan = Scanner::new(text, order, counter);
    match scan.cmp(after - run.period, after) {
        Ordering::Greater => Direction::Decreasing,
        Ordering::Less => Direction::Increasing,
        Ordering::Equal => panic!("run {run:?} is not right-maximal"),
    }
}

/// Everything one order's pass produced.
#[derive(Debug, Clone)]
pub struct PassOutput {
    pub order: OrderSpec,
    pub nss: NssArray,
    pub lce: LceTables,
    /// Runs decreasing under `order`, in emission order. The reversed pass
    /// omits runs that end at the last position.
    pub runs: Vec<Run>,
    pub comparisons: u64,
}

#[derive(Debug, Clone)]
pub struct RunsComputation {
    /// The pass under the base order, then the pass under its reverse.
    pub passes: [PassOutput; 2],
    /// All runs sorted by `(start, end, period)`, directions relative to the
    /// base order.
    pub runs: Vec<Run>,
    /// Total comparisons, including classification.
    pub comparisons: u64,
}

fn run_pass(text: &Text, order: OrderSpec, keep_suffix_runs: bool) -> PassOutput {
    let mut counter = ComparisonCounter::new();
    let (nss, rlce) = compute_nss_interleaved(text, &order, &mut counter);
    let llce = compute_all_llce(text, &nss, &order, &mut counter);
    let lce = LceTables { rlce, llce };
    let mut runs = decreasing_runs(&nss, &lce);
    if !keep_suffix_runs {
        runs.retain(|run| run.end < text.len());
    }
    PassOutput { order, nss, lce, runs, comparisons: counter.count() }
}

/// All runs of `text`, with directions relative to `order`.
///
/// A run ending at position `n` is decreasing under every order, since
/// `S_{i+p}` is then a proper prefix of `S_i`. The base pass reports those;
/// the reversed pass keeps only runs that end before `n`.
pub fn compute_runs(text: &Text, order: &OrderSpec) -> RunsComputation {
    let passes = [run_pass(text, order.clone(), true), run_pass(text, order.reverse(), false)];
    let mut counter = ComparisonCounter::new();
    let mut runs: Vec<Run> = passes
        .iter()
        .flat_map(|pass| pass.runs.iter())
        .map(|&run| Run { direction: classify_run(text, &run, order, &mut counter), ..run })
        .collect();
    runs.sort_unstable();
    let comparisons = passes.iter().map(|p| p.comparisons).sum::<u64>() + counter.count();
    RunsComputation { passes, runs, comparisons }
}

/// All runs of `text` under the natural byte order, sorted by
/// `(start, end, period)`.
pub fn all_runs(text: &Text) -> Vec<Run> {
    compute_runs(text, &OrderSpec::natural()).runs
}

/// Summary numbers in the shape of a throughput table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunStats {
    pub n: usize,
    pub run_count: usize,
    pub runs_per_100n: f64,
    pub comparisons: u64,
    /// Input bytes per second.
    pub throughput: f64,
}

pub fn run_stats(text: &Text, runs: &[Run], counter: &ComparisonCounter, elapsed: Duration) -> RunStats {
    let n = text.len();
    let run_count = runs.len();
    let runs_per_100n = if n == 0 { 0.0 } else { 100.0 * run_count as f64 / n as f64 };
    let secs = elapsed.as_secs_f64();
    let throughput = if n == 0 || secs == 0.0 { 0.0 } else { n as f64 / secs };
    RunStats { n, run_count, runs_per_100n, comparisons: counter.count(), throughput }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_nss;
    use crate::lce::compute_all_rlce;

    fn triples(runs: &[Run]) -> Vec<(usize, usize, usize)> {
        runs.iter().map(|r| (r.start, r.end, r.period)).collect()
    }

    #[test]
    fn banana_decreasing() {
        let text = Text::from("banana");
        let order = OrderSpec::natural();
        let nss = oracle_nss(&text, &order).unwrap();
        let mut c = ComparisonCounter::new();
        let lce = LceTables {
            rlce: compute_all_rlce(&text, &nss, &order, &mut c),
            llce: compute_all_llce(&text, &nss, &order, &mut c),
        };
        let runs = decreasing_runs(&nss, &lce);
        assert_eq!(triples(&runs), [(2, 6, 2)]);
        assert_eq!(runs[0].root, 2);
    }

    #[test]
    fn all_runs_examples() {
        assert_eq!(triples(&all_runs(&Text::from("bananatree"))), [(2, 6, 2), (9, 10, 1)]);
        assert_eq!(triples(&all_runs(&Text::from("abaababa"))), [(1, 6, 3), (3, 4, 1), (4, 8, 2)]);
        assert!(all_runs(&Text::from("")).is_empty());
        assert!(all_runs(&Text::from("a")).is_empty());
        let aa = all_runs(&Text::from("aa"));
        assert_eq!(triples(&aa), [(1, 2, 1)]);
        assert_eq!(aa[0].direction, Direction::Decreasing);
    }

    #[test]
    fn classify_examples() {
        let nat = OrderSpec::natural();
        let mut c = ComparisonCounter::new();
        let run = |start, end, period| Run { start, end, period, root: start, direction: Direction::Increasing };
        assert_eq!(classify_run(&Text::from("banana"), &run(2, 6, 2), &nat, &mut c), Direction::Decreasing);
        assert_eq!(classify_run(&Text::from("aa"), &run(1, 2, 1), &nat, &mut c), Direction::Decreasing);
        // "aba" is a proper prefix of "ababa", so S_1 ≻ S_3.
        assert_eq!(classify_run(&Text::from("ababa"), &run(1, 5, 2), &nat, &mut c), Direction::Decreasing);
        assert_eq!(classify_run(&Text::from("ababac"), &run(1, 5, 2), &nat, &mut c), Direction::Increasing);
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn stats_arithmetic() {
        let text = Text::from("bananatree");
        let runs = all_runs(&text);
        let s = run_stats(&text, &runs, &ComparisonCounter::new(), Duration::from_millis(1));
        assert_eq!(s.run_count, 2);
        assert!((s.runs_per_100n - 20.0).abs() < 1e-12);
        assert!((s.throughput - 10_000.0).abs() < 1e-6);
        let empty = run_stats(&Text::from(""), &[], &ComparisonCounter::new(), Duration::ZERO);
        assert_eq!((empty.runs_per_100n, empty.throughput), (0.0, 0.0));
    }
}
