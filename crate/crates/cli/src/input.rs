//! Line-oriented input: integers separated by commas and/or whitespace,
//! blank lines and `#` comment lines skipped.

use std::io::{self, BufRead};

use degseq::DegreeSequence;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid integer '{0}'")]
    InvalidInteger(String),
    #[error("negative degree {value} at position {position}")]
    NegativeDegree { position: usize, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputRecord {
    /// 1-based.
    pub line_number: usize,
    pub raw: String,
    pub parsed: Result<Vec<i64>, ParseError>,
}

impl InputRecord {
    pub fn sequence(&self) -> Result<DegreeSequence, ParseError> {
        let raw = self.parsed.as_ref().map_err(Clone::clone)?;
        DegreeSequence::canonicalize(raw).map_err(|e| match e {
            degseq::Error::NegativeDegree { index, value } => ParseError::NegativeDegree {
                position: index + 1,
                value,
            },
            other => unreachable!("canonicalize only rejects negatives: {other}"),
        })
    }
}

/// `None` for lines that carry no record.
pub fn parse_line(raw: &str) -> Option<Result<Vec<i64>, ParseError>> {
    let trimmed = raw.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return None;
    }
    let parsed = trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| ParseError::InvalidInteger(tok.to_owned()))
        })
        .collect();
    Some(parsed)
}

/// Reads every record from `reader`, skipping blank and comment lines.
pub fn records<R: BufRead>(reader: R) -> impl Iterator<Item = io::Result<InputRecord>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(raw) => parse_line(&raw).map(|parsed| {
                Ok(InputRecord {
                    line_number: i + 1,
                    raw,
                    parsed,
                })
            }),
        })
}

/// Reads a whole corpus, returning the sequences and the diagnostics for
/// lines that failed to parse.
pub fn read_corpus<R: BufRead>(reader: R) -> io::Result<(Vec<DegreeSequence>, Vec<String>)> {
    let mut corpus = Vec::new();
    let mut errors = Vec::new();
    for record in records(reader) {
        let record = record?;
        match record.sequence() {
            Ok(seq) => corpus.push(seq),
            Err(e) => errors.push(format!("line {}: {e}", record.line_number)),
        }
    }
    Ok((corpus, errors))
}
