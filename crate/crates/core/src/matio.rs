//! Plain-text matrix files: first line `n m`, then `n` lines of `m`
//! whitespace-separated integers.

use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, MatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(MatError::Malformed {
        line: 1,
        msg: "empty file".into(),
    })?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(MatError::Malformed {
            line: hline + 1,
            msg: "header must be `rows cols`".into(),
        });
    }
    let n: usize = dims[0].parse().map_err(|_| MatError::Malformed {
        line: hline + 1,
        msg: "bad row count".into(),
    })?;
    let m: usize = dims[1].parse().map_err(|_| MatError::Malformed {
        line: hline + 1,
        msg: "bad column count".into(),
    })?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (lno, line) = lines.next().ok_or(MatError::Malformed {
            line: hline + 1,
            msg: format!("expected {n} rows"),
        })?;
        let row: Result<Vec<i64>, _> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| MatError::Malformed {
                    line: lno + 1,
                    msg: format!("bad integer `{tok}`"),
                })
            })
            .collect();
        let row = row?;
        if row.len() != m {
            return Err(MatError::Malformed {
                line: lno + 1,
                msg: format!("expected {m} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn read_matrix(path: &Path) -> Result<Vec<Vec<i64>>, MatError> {
    let text = std::fs::read_to_string(path).map_err(|e| MatError::Io(e.to_string()))?;
    parse_matrix(&text)
}

pub fn format_matrix(rows: &[Vec<i64>]) -> String {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    let mut out = format!("{n} {m}\n");
    for r in rows {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let rows = vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]];
        let text = format_matrix(&rows);
        assert_eq!(parse_matrix(&text).unwrap(), rows);
    }

    #[test]
    fn diagnostics() {
        let e = parse_matrix("2 2\n1 2\n3 x").unwrap_err();
        assert_eq!(
            e,
            MatError::Malformed {
                line: 3,
                msg: "bad integer `x`".into()
            }
        );
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2 3\n1 2 3\n4 5").is_err());
    }
}
