//! Linear-time computation of all runs (maximal periodic substrings) over a
//! general ordered alphabet.
//!
//! The only operation ever performed on symbols is an order test routed
//! through [`OrderSpec`], and every such test is tallied by a
//! [`ComparisonCounter`]. The pipeline for one alphabet order is:
//!
//! 1. [`compute_nss_interleaved`] builds the next-smaller-suffix array with a
//!    left-to-right stack scan and produces `rlce[i] = lcp(S_i, S_nss[i])` as a
//!    by-product.
//! 2. [`compute_all_llce`] fills `llce[i] = lcs(S[1..i], S[1..nss[i]])` with a
//!    right-to-left frontier scan that copies values where the text repeats.
//! 3. [`decreasing_runs`] turns each Lyndon root into at most one run.
//!
//! [`all_runs`] repeats this under the reversed order to pick up the
//! increasing runs. All public positions are 1-based and inclusive, matching
//! the usual `⟨i, j, p⟩` notation for runs.
//!
//! ```
//! use runs_core::{all_runs, Text};
//!
//! let runs = all_runs(&Text::from("bananatree"));
//! let triples: Vec<_> = runs.iter().map(|r| (r.start, r.end, r.period)).collect();
//! assert_eq!(triples, [(2, 6, 2), (9, 10, 1)]);
//! ```

#![no_std]

extern crate alloc;

mod error;
pub mod gen;
pub mod lce;
pub mod nss;
pub mod oracle;
pub mod runs;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use gen::{enumerate_all, gen_fibonacci, gen_random, gen_thue_morse, Family, GenSpec};
pub use lce::{compute_all_llce, compute_all_rlce, LceTable, LceTables};
pub use nss::{compute_nss_interleaved, compute_nss_two_phase, lyndon_lengths, NssArray};
pub use runs::{
    all_runs, classify_run, compute_runs, decreasing_runs, run_stats, Direction, PassOutput, Run,
    RunStats, RunsComputation,
};
pub use text::{
    compare_symbols, naive_scan_llce, naive_scan_rlce, ComparisonCounter, OrderMode, OrderSpec, Text,
};
pub use verify::{diff_against_oracle, Mismatch};
