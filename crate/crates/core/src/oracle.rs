//! Independent ground truth: a constructive Havel–Hakimi realizer and an
//! exhaustive enumerator of degree sequences. Nothing here touches the
//! inequality machinery in [`crate::eg`] or [`crate::bounds`] except
//! [`cross_check`], which compares against it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{classify, cz_check, cz_reordered_check, near_regular_check, zz_check, Stage};
use crate::eg::{eg_full, eg_reduced};
use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

/// Largest `n_max` accepted by [`cross_check`].
pub const EXHAUSTIVE_LIMIT: usize = 10;

/// A simple graph on vertices `0..n`, vertex `i` carrying the `i`-th degree
/// of the sequence it realizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub n: usize,
    /// Unordered pairs stored as `(low, high)`.
    pub edges: Vec<(usize, usize)>,
}

impl Realization {
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// No loops, no repeated pairs, all endpoints in range.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges
            .iter()
            .all(|&(u, v)| u < v && v < self.n && seen.insert((u, v)))
    }

    /// Whether this graph is simple and has exactly the degrees of `seq`,
    /// vertex by vertex.
    pub fn realizes(&self, seq: &DegreeSequence) -> bool {
        self.n == seq.len() && self.is_simple() && self.degrees() == seq.as_slice()
    }
}

/// Orders `alive` by remaining degree, largest first, with a counting sort.
fn sort_by_remaining(alive: &mut Vec<usize>, remaining: &[u64], scratch: &mut Vec<usize>) {
    let top = alive.iter().map(|&v| remaining[v]).max().unwrap_or(0) as usize;
    let mut starts = vec![0usize; top + 2];
    for &v in alive.iter() {
        starts[top - remaining[v] as usize + 1] += 1;
    }
    for i in 1..starts.len() {
        starts[i] += starts[i - 1];
    }
    scratch.clear();
    scratch.resize(alive.len(), 0);
    for &v in alive.iter() {
        let slot = &mut starts[top - remaining[v] as usize];
        scratch[*slot] = v;
        *slot += 1;
    }
    std::mem::swap(alive, scratch);
}

/// Realizes `seq` by repeatedly joining the vertex of largest remaining
/// degree to the next-largest ones; `None` when that gets stuck, which
/// happens exactly when `seq` is not graphic.
pub fn havel_hakimi(seq: &DegreeSequence) -> Option<Realization> {
    let n = seq.len();
    if seq.iter().any(|&d| d as usize >= n) {
        return None;
    }
    let mut remaining = seq.as_slice().to_vec();
    let mut alive: Vec<usize> = (0..n).filter(|&v| remaining[v] > 0).collect();
    let mut scratch = Vec::with_capacity(n);
    let mut edges = Vec::new();

    while !alive.is_empty() {
        sort_by_remaining(&mut alive, &remaining, &mut scratch);
        let hub = alive[0];
        let need = remaining[hub] as usize;
        if need >= alive.len() {
            return None;
        }
        for &u in &alive[1..=need] {
            remaining[u] -= 1;
            edges.push((hub.min(u), hub.max(u)));
        }
        remaining[hub] = 0;
        alive.retain(|&v| remaining[v] > 0);
    }
    Some(Realization { n, edges })
}

/// Every nonincreasing sequence of a fixed length with entries in
/// `0..=max_degree`, in lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct Sequences {
    next: Option<Vec<u64>>,
}

impl Iterator for Sequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        let current = self.next.take()?;
        if let Some(i) = current.iter().rposition(|&d| d > 0) {
            let mut succ = current.clone();
            succ[i] -= 1;
            let fill = succ[i];
            succ[i + 1..].fill(fill);
            self.next = Some(succ);
        }
        Some(DegreeSequence::from_sorted(current))
    }
}

pub fn enumerate_sequences(n: usize, max_degree: u64) -> Sequences {
    Sequences {
        next: Some(vec![max_degree; n]),
    }
}

/// Tallies from an exhaustive [`cross_check`] run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub n_max: usize,
    pub sequences: usize,
    pub graphic: usize,
    /// How many sequences each pipeline stage settled.
    pub decided_by: BTreeMap<Stage, usize>,
    /// How many times each standalone bound answered graphic.
    pub bound_hits: BTreeMap<Stage, usize>,
}

impl CrossCheckReport {
    pub fn merge(&mut self, other: &CrossCheckReport) {
        self.n_max = self.n_max.max(other.n_max);
        self.sequences += other.sequences;
        self.graphic += other.graphic;
        for (stage, count) in &other.decided_by {
            *self.decided_by.entry(*stage).or_default() += count;
        }
        for (stage, count) in &other.bound_hits {
            *self.bound_hits.entry(*stage).or_default() += count;
        }
    }
}

fn disagreement(seq: &DegreeSequence, detail: String) -> Error {
    Error::OracleDisagreement {
        sequence: seq.clone(),
        detail,
    }
}

/// Checks one sequence against the oracle and adds it to `report`.
pub fn check_one(seq: &DegreeSequence, report: &mut CrossCheckReport) -> Result<()> {
    let realization = havel_hakimi(seq);
    if let Some(r) = &realization {
        if !r.realizes(seq) {
            return Err(disagreement(seq, format!("bad realization {:?}", r.edges)));
        }
    }
    let truth = realization.is_some();

    let full = eg_full(seq);
    let reduced = eg_reduced(seq);
    if full.graphic != truth || reduced.graphic != truth {
        return Err(disagreement(
            seq,
            format!(
                "havel-hakimi={truth} eg_full={} eg_reduced={}",
                full.graphic, reduced.graphic
            ),
        ));
    }

    let trace = classify(seq);
    if trace.is_graphic() != truth {
        return Err(disagreement(
            seq,
            format!("havel-hakimi={truth} classify={trace}"),
        ));
    }

    // Every bound on its own, not only the one the pipeline reached first.
    let stripped = seq.strip_zeros();
    if let Ok(stats) = stripped.stats() {
        let bounds = [
            (Stage::NearRegular, near_regular_check(&stats)),
            (Stage::ZzBound, zz_check(&stats)),
            (Stage::CzBound, cz_check(&stats)),
            (Stage::CzBound, cz_reordered_check(&stats)),
        ];
        for (stage, verdict) in bounds {
            if verdict.is_graphic() {
                if !truth {
                    return Err(disagreement(seq, format!("{stage} claims graphic")));
                }
                *report.bound_hits.entry(stage).or_default() += 1;
            }
        }
    }

    report.sequences += 1;
    report.graphic += usize::from(truth);
    *report.decided_by.entry(trace.deciding_stage).or_default() += 1;
    Ok(())
}

/// Runs every sequence with `n <= n_max` and entries `<= n − 1` through the
/// oracle, both Erdős–Gallai variants, every bound and the pipeline.
/// Stops at the first disagreement.
pub fn cross_check(n_max: usize) -> Result<CrossCheckReport> {
    if n_max > EXHAUSTIVE_LIMIT {
        return Err(Error::ExhaustiveLimit {
            limit: EXHAUSTIVE_LIMIT,
            requested: n_max,
        });
    }
    let mut report = CrossCheckReport {
        n_max,
        ..Default::default()
    };
    for n in 0..=n_max {
        for seq in enumerate_sequences(n, n.saturating_sub(1) as u64) {
            check_one(&seq, &mut report)?;
        }
    }
    Ok(report)
}
