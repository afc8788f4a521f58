use std::io::Read;
use std::path::Path;

use runs_core::{OrderSpec, Text};

use crate::{CliError, Result};

/// Reads raw bytes from `path`, or from `stdin` when `path` is absent or `-`.
pub fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Text> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read(p)
            .map(Text::new)
            .map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        _ => {
            let mut bytes = Vec::new();
            stdin
                .read_to_end(&mut bytes)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(Text::new(bytes))
        }
    }
}

/// `natural`, `reversed`, or `perm:<file>`.
pub fn parse_order(spec: &str) -> Result<OrderSpec> {
    match spec {
        "natural" => Ok(OrderSpec::natural()),
        "reversed" => Ok(OrderSpec::reversed()),
        _ => match spec.strip_prefix("perm:") {
            Some(path) => {
                let contents = std::fs::read_to_string(path)
                    .map_err(|source| CliError::Io { path: path.into(), source })?;
                parse_permutation_file(&contents)
            }
            None => Err(CliError::Usage(format!("unknown order {spec:?}; expected natural, reversed or perm:<file>"))),
        },
    }
}

/// Line `b` (0-based) holds the rank of byte value `b`. Blank lines are
/// ignored; exactly 256 ranks forming a permutation are required.
pub fn parse_permutation_file(contents: &str) -> Result<OrderSpec> {
    let ranks = contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(k, l)| l.parse::<u8>().map_err(|_| CliError::Usage(format!("permutation line {}: bad rank {l:?}", k + 1))))
        .collect::<Result<Vec<u8>>>()?;
    let count = ranks.len();
    let ranks: [u8; 256] =
        ranks.try_into().map_err(|_| CliError::Usage(format!("permutation file has {count} ranks, expected 256")))?;
    Ok(OrderSpec::permutation(ranks)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_file() {
        let reversed: String = (0..=255u8).rev().map(|r| format!("{r}\n")).collect();
        assert_eq!(parse_permutation_file(&reversed).unwrap().ranks(), OrderSpec::reversed().ranks());
        assert!(parse_permutation_file("0\n1\n").is_err());
        let dup: String = (0..256).map(|_| "3\n").collect();
        assert!(parse_permutation_file(&dup).is_err());
    }

    #[test]
    fn order_names() {
        assert!(parse_order("natural").is_ok());
        assert!(parse_order("reversed").is_ok());
        assert!(parse_order("lexicographic").is_err());
    }
}
