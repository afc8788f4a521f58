use std::io::{self, Write};

use runs_core::{Direction, NssArray, Run};

pub fn write_runs(out: &mut dyn Write, runs: &[Run], direction: bool) -> io::Result<()> {
    let mut buf = io::BufWriter::new(out);
    for r in runs {
        if direction {
            writeln!(buf, "{}\t{}\t{}\t{}", r.start, r.end, r.period, r.direction.as_str())?;
        } else {
            writeln!(buf, "{}\t{}\t{}", r.start, r.end, r.period)?;
        }
    }
    buf.flush()
}

pub fn write_nss(out: &mut dyn Write, nss: &NssArray) -> io::Result<()> {
    let mut buf = io::BufWriter::new(out);
    for (i, next) in nss.iter() {
        writeln!(buf, "{i}\t{next}\t{}", next - i)?;
    }
    buf.flush()
}

/// `(start, end, period, direction)`; the direction is `None` for
/// three-column lines.
pub type RunRecord = (usize, usize, usize, Option<Direction>);

/// Parses the output of [`write_runs`] back into records.
pub fn parse_runs_tsv(tsv: &str) -> Option<Vec<RunRecord>> {
    tsv.lines()
        .map(|line| {
            let mut cols = line.split('\t');
            let mut num = || cols.next()?.parse::<usize>().ok();
            let (start, end, period) = (num()?, num()?, num()?);
            let direction = match cols.next() {
                None => None,
                Some("dec") => Some(Direction::Decreasing),
                Some("inc") => Some(Direction::Increasing),
                Some(_) => return None,
            };
            cols.next().is_none().then_some((start, end, period, direction))
        })
        .collect()
}

/// Formats with one decimal, truncating toward zero rather than rounding.
pub fn trunc1(x: f64) -> String {
    format!("{:.1}", (x * 10.0).trunc() / 10.0)
}
