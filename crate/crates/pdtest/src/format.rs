//! Matrix text format.
//!
//! Lines starting with `#` are comments. The first token is `n`, followed by
//! `n * n` whitespace-separated entries in row-major order. Each entry is an
//! integer or a fraction `p/q` with `q > 0`.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use pdtest_core::InputMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty input: expected the matrix size")]
    MissingSize,
    #[error("invalid matrix size {0:?}")]
    BadSize(String),
    #[error("invalid entry {token:?} at row {row}, column {col}")]
    BadEntry { token: String, row: usize, col: usize },
    #[error("expected {expected} entries, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_entry(token: &str) -> Option<BigRational> {
    match token.split_once('/') {
        None => Some(BigRational::from_integer(token.parse::<BigInt>().ok()?)),
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if !q.is_positive() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<InputMatrix, ParseError> {
    let tokens: Vec<&str> = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .collect();
    let (size, body) = tokens.split_first().ok_or(ParseError::MissingSize)?;
    let n: usize = match size.parse() {
        Ok(n) if n >= 1 => n,
        _ => return Err(ParseError::BadSize((*size).to_owned())),
    };
    let expected = n.checked_mul(n).ok_or_else(|| ParseError::BadSize((*size).to_owned()))?;
    if body.len() != expected {
        return Err(ParseError::WrongCount { expected, found: body.len() });
    }
    let entries = body
        .iter()
        .enumerate()
        .map(|(k, token)| {
            parse_entry(token).ok_or_else(|| ParseError::BadEntry {
                token: (*token).to_owned(),
                row: k / n + 1,
                col: k % n + 1,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InputMatrix::new(n, entries).expect("size and entry count checked"))
}

pub fn read_matrix(path: &Path) -> Result<InputMatrix, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_matrix(&text)
}

fn format_entry(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Writes `a` in the text format, preceded by optional comment lines.
pub fn format_matrix(a: &InputMatrix, comments: &[&str]) -> String {
    let n = a.n();
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| format_entry(a.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
