//! Matrix text format.
//!
//! ```text
//! # m=4 n=1
//! # labels: e a b c d
//! 1 1 0 0 1
//! ...
//! ```
//!
//! The rows are the full symmetric `(m+n)×(m+n)` assembly. The `labels`
//! line is optional; other `#` lines are comments.

use std::fmt::Write as _;
use std::path::Path;

use super::{IssrMatrix, ZeroOneMatrix};
use crate::{Error, Result};

pub fn parse_issr(text: &str) -> Result<IssrMatrix> {
    let mut dims: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| Error::Parse { line: lineno + 1, msg };
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("labels:") {
                labels = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if comment.starts_with("m=") {
                let mut m = None;
                let mut n = None;
                for tok in comment.split_whitespace() {
                    let (key, val) = tok.split_once('=').ok_or_else(|| err(format!("bad header token {tok:?}")))?;
                    let val: usize = val.parse().map_err(|_| err(format!("bad integer {val:?}")))?;
                    match key {
                        "m" => m = Some(val),
                        "n" => n = Some(val),
                        _ => return Err(err(format!("unknown header key {key:?}"))),
                    }
                }
                match (m, n) {
                    (Some(m), Some(n)) => dims = Some((m, n)),
                    _ => return Err(err("header needs both m= and n=".into())),
                }
            }
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                _ => Err(err(format!("entry {t:?} is not 0/1"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }
    let (m, n) = dims.ok_or(Error::Parse { line: 1, msg: "missing `# m=<int> n=<int>` header".into() })?;
    let full = if rows.is_empty() { ZeroOneMatrix::zeros(0, 0) } else { ZeroOneMatrix::from_rows(&rows)? };
    IssrMatrix::from_full(&full, m, n, labels)
}

pub fn format_issr(mat: &IssrMatrix) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# m={} n={}", mat.m, mat.n);
    let _ = writeln!(s, "# labels: {}", mat.labels.join(" "));
    for row in mat.assemble().to_rows() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        let _ = writeln!(s, "{}", cells.join(" "));
    }
    s
}

pub fn read_issr(path: impl AsRef<Path>) -> Result<IssrMatrix> {
    parse_issr(&std::fs::read_to_string(path)?)
}

pub fn write_issr(mat: &IssrMatrix, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_issr(mat))?;
    Ok(())
}

impl IssrMatrix {
    pub fn to_text(&self) -> String {
        format_issr(self)
    }
}
