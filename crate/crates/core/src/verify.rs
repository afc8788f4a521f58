//! Structured comparison of a [`RunsComputation`] against the oracles.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::lce::LceTable;
use crate::oracle::{self, Side};
use crate::runs::{Direction, Run, RunsComputation};
use crate::text::{OrderSpec, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Rlce,
    Llce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Nss { pass: usize, position: usize, expected: usize, actual: usize },
    Lce { pass: usize, table: Table, position: usize, expected: Option<usize>, actual: Option<usize> },
    MissingRun(Run),
    UnexpectedRun(Run),
    Direction { run: Run, expected: Direction },
    Root { run: Run, expected: usize },
    /// A run reported by both passes, or classified against its pass.
    Partition { run: Run, pass: usize },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: &Option<usize>| v.map_or(-1, |x| x as i64);
        match self {
            Mismatch::Nss { pass, position, expected, actual } => {
                write!(f, "nss\tpass={pass}\ti={position}\texpected={expected}\tactual={actual}")
            }
            Mismatch::Lce { pass, table, position, expected, actual } => {
                let name = match table {
                    Table::Rlce => "rlce",
                    Table::Llce => "llce",
                };
                write!(f, "{name}\tpass={pass}\ti={position}\texpected={}\tactual={}", opt(expected), opt(actual))
            }
            Mismatch::MissingRun(r) => write!(f, "run\tmissing\t{}\t{}\t{}", r.start, r.end, r.period),
            Mismatch::UnexpectedRun(r) => write!(f, "run\tunexpected\t{}\t{}\t{}", r.start, r.end, r.period),
            Mismatch::Direction { run, expected } => write!(
                f,
                "direction\t{}\t{}\t{}\texpected={}\tactual={}",
                run.start,
                run.end,
                run.period,
                expected.as_str(),
                run.direction.as_str()
            ),
            Mismatch::Root { run, expected } => {
                write!(f, "root\t{}\t{}\t{}\texpected={expected}\tactual={}", run.start, run.end, run.period, run.root)
            }
            Mismatch::Partition { run, pass } => {
                write!(f, "partition\tpass={pass}\t{}\t{}\t{}", run.start, run.end, run.period)
            }
        }
    }
}

fn diff_table(
    out: &mut Vec<Mismatch>,
    text: &Text,
    pass: usize,
    nss: &[usize],
    table: &LceTable,
    kind: Table,
) -> Result<()> {
    let n = text.len();
    for i in 1..=n {
        let j = nss[i - 1];
        let expected = if j == n + 1 {
            None
        } else {
            let side = match kind {
                Table::Rlce => Side::Right,
                Table::Llce => Side::Left,
            };
            Some(oracle::oracle_lce(text, i, j, side)?)
        };
        let actual = table.get(i);
        if expected != actual {
            out.push(Mismatch::Lce { pass, table: kind, position: i, expected, actual });
        }
    }
    Ok(())
}

/// Every disagreement between `computed` and the oracles for `text` under
/// `order`. Empty means the computation is correct.
pub fn diff_against_oracle(text: &Text, order: &OrderSpec, computed: &RunsComputation) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for (pass, output) in computed.passes.iter().enumerate() {
        let expected = oracle::oracle_nss(text, &output.order)?;
        for (i, (&e, &a)) in expected.values().iter().zip(output.nss.values()).enumerate() {
            if e != a {
                out.push(Mismatch::Nss { pass, position: i + 1, expected: e, actual: a });
            }
        }
        let nss = expected.values();
        diff_table(&mut out, text, pass, nss, &output.lce.rlce, Table::Rlce)?;
        diff_table(&mut out, text, pass, nss, &output.lce.llce, Table::Llce)?;
    }

    let expected = oracle::oracle_runs_under(text, order)?;
    let key = |r: &Run| (r.start, r.end, r.period);
    let (mut e, mut a) = (expected.iter().peekable(), computed.runs.iter().peekable());
    loop {
        match (e.peek(), a.peek()) {
            (None, None) => break,
            (Some(&&x), None) => {
                out.push(Mismatch::MissingRun(x));
                e.next();
            }
            (None, Some(&&y)) => {
                out.push(Mismatch::UnexpectedRun(y));
                a.next();
            }
            (Some(&&x), Some(&&y)) => match key(&x).cmp(&key(&y)) {
                core::cmp::Ordering::Less => {
                    out.push(Mismatch::MissingRun(x));
                    e.next();
                }
                core::cmp::Ordering::Greater => {
                    out.push(Mismatch::UnexpectedRun(y));
                    a.next();
                }
                core::cmp::Ordering::Equal => {
                    if x.direction != y.direction {
                        out.push(Mismatch::Direction { run: y, expected: x.direction });
                    }
                    if x.root != y.root {
                        out.push(Mismatch::Root { run: y, expected: x.root });
                    }
                    e.next();
                    a.next();
                }
            },
        }
    }

    // Pass 0 must emit exactly the runs classified decreasing, pass 1 the
    // increasing ones.
    for (pass, output) in computed.passes.iter().enumerate() {
        let want = if pass == 0 { Direction::Decreasing } else { Direction::Increasing };
        for run in &output.runs {
            let classified = expected.iter().find(|r| key(r) == key(run)).map(|r| r.direction);
            if classified != Some(want) {
                out.push(Mismatch::Partition { run: *run, pass });
            }
        }
    }
    Ok(out)
}
