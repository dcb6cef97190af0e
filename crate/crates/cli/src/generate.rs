use std::io::{self, Write};

use degseq::{random_with_stats, sharpness_family, SequenceStats};

use crate::Exit;

pub fn cmd_sharpness<W: Write, E: Write>(
    alpha1: u64,
    out: &mut W,
    diag: &mut E,
) -> io::Result<Exit> {
    let family = match sharpness_family(alpha1) {
        Ok(f) => f,
        Err(e) => {
            writeln!(diag, "error: {e}")?;
            return Ok(Exit::Input);
        }
    };
    writeln!(out, "base: {}", family.base)?;
    for (which, seq) in &family.perturbations {
        writeln!(out, "{which}: {seq}")?;
    }
    Ok(Exit::Success)
}

/// Parses `a1,an,n,s`.
pub fn parse_stats(text: &str) -> Result<SequenceStats, String> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid integer '{}'", p.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let [a1, an, n, s] = parts[..] else {
        return Err(format!("expected a1,an,n,s, got '{text}'"));
    };
    SequenceStats::new(a1, an, n, s).map_err(|e| e.to_string())
}

/// Emits `count` members of the class, the `i`-th drawn with seed `seed + i`.
pub fn cmd_random<W: Write, E: Write>(
    stats: &str,
    count: usize,
    seed: u64,
    out: &mut W,
    diag: &mut E,
) -> io::Result<Exit> {
    let stats = match parse_stats(stats) {
        Ok(s) => s,
        Err(e) => {
            writeln!(diag, "error: {e}")?;
            return Ok(Exit::Input);
        }
    };
    for i in 0..count as u64 {
        match random_with_stats(&stats, seed.wrapping_add(i)) {
            Ok(seq) => writeln!(out, "{seq}")?,
            Err(e) => {
                writeln!(diag, "error: {e}")?;
                return Ok(Exit::Input);
            }
        }
    }
    Ok(Exit::Success)
}
