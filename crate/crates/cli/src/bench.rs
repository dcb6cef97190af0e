//! Times the short-circuiting pipeline against an Erdős–Gallai-only
//! baseline over a corpus, attributing pipeline time to the stage that
//! settled each sequence.

use std::collections::BTreeMap;
use std::hint::black_box;
use std::io::{self, BufRead, Write};
use std::time::Instant;

use degseq::{classify, eg_full, DegreeSequence, Stage};
use serde::Serialize;

use crate::input::read_corpus;
use crate::Exit;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct StageTally {
    pub decided: usize,
    pub fraction: f64,
    /// Pipeline time spent on the sequences this stage settled, all repeats.
    pub nanos: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub total: usize,
    pub repeat: usize,
    pub stages: BTreeMap<Stage, StageTally>,
    pub pipeline_nanos: u128,
    pub baseline_nanos: u128,
    pub mean_pipeline_ns: f64,
    pub mean_baseline_ns: f64,
    pub disagreements: usize,
    pub agreement: bool,
}

fn mean(nanos: u128, runs: usize) -> f64 {
    if runs == 0 {
        0.0
    } else {
        nanos as f64 / runs as f64
    }
}

/// Runs both paths `repeat` times over `corpus`. Decision counts and
/// agreement come from the first pass; timings accumulate over all passes.
pub fn run_bench(corpus: &[DegreeSequence], repeat: usize) -> BenchReport {
    let repeat = repeat.max(1);
    let mut stages: BTreeMap<Stage, StageTally> = Stage::ALL
        .iter()
        .map(|&s| (s, StageTally::default()))
        .collect();
    let mut pipeline_nanos = 0u128;
    let mut baseline_nanos = 0u128;
    let mut disagreements = 0;

    for pass in 0..repeat {
        for seq in corpus {
            let start = Instant::now();
            let trace = classify(black_box(seq));
            let spent = start.elapsed().as_nanos();
            pipeline_nanos += spent;

            let start = Instant::now();
            let baseline = eg_full(black_box(seq));
            baseline_nanos += start.elapsed().as_nanos();

            let tally = stages
                .get_mut(&trace.deciding_stage)
                .expect("all stages present");
            tally.nanos += spent;
            if pass == 0 {
                tally.decided += 1;
                disagreements += usize::from(trace.is_graphic() != baseline.graphic);
            }
        }
    }

    let total = corpus.len();
    for tally in stages.values_mut() {
        tally.fraction = if total == 0 {
            0.0
        } else {
            tally.decided as f64 / total as f64
        };
    }
    let runs = total * repeat;
    BenchReport {
        total,
        repeat,
        stages,
        pipeline_nanos,
        baseline_nanos,
        mean_pipeline_ns: mean(pipeline_nanos, runs),
        mean_baseline_ns: mean(baseline_nanos, runs),
        disagreements,
        agreement: disagreements == 0,
    }
}

impl BenchReport {
    /// Folds in a report over a further batch run with the same `repeat`.
    pub fn merge(&mut self, other: &BenchReport) {
        self.total += other.total;
        self.pipeline_nanos += other.pipeline_nanos;
        self.baseline_nanos += other.baseline_nanos;
        self.disagreements += other.disagreements;
        self.agreement = self.disagreements == 0;
        for (stage, tally) in &other.stages {
            let mine = self.stages.entry(*stage).or_default();
            mine.decided += tally.decided;
            mine.nanos += tally.nanos;
        }
        for tally in self.stages.values_mut() {
            tally.fraction = if self.total == 0 {
                0.0
            } else {
                tally.decided as f64 / self.total as f64
            };
        }
        let runs = self.total * self.repeat;
        self.mean_pipeline_ns = mean(self.pipeline_nanos, runs);
        self.mean_baseline_ns = mean(self.baseline_nanos, runs);
    }

    pub fn write_human<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "sequences: {} (repeat {})", self.total, self.repeat)?;
        writeln!(
            out,
            "{:<18}{:>10}{:>10}{:>14}",
            "stage", "decided", "fraction", "mean_ns"
        )?;
        for (stage, tally) in &self.stages {
            let per = mean(tally.nanos, tally.decided * self.repeat);
            writeln!(
                out,
                "{:<18}{:>10}{:>10.4}{:>14.1}",
                stage.name(),
                tally.decided,
                tally.fraction,
                per
            )?;
        }
        writeln!(
            out,
            "pipeline: {:.1} ns/sequence, eg_full baseline: {:.1} ns/sequence",
            self.mean_pipeline_ns, self.mean_baseline_ns
        )?;
        writeln!(
            out,
            "agreement: {} ({} disagreements)",
            if self.agreement { "yes" } else { "NO" },
            self.disagreements
        )
    }
}

pub fn cmd_bench<R: BufRead, W: Write, E: Write>(
    input: R,
    out: &mut W,
    diag: &mut E,
    repeat: usize,
) -> io::Result<Exit> {
    let (corpus, errors) = read_corpus(input)?;
    for e in &errors {
        writeln!(diag, "{e}")?;
    }
    let report = run_bench(&corpus, repeat);
    report.write_human(out)?;
    writeln!(
        out,
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    )?;
    if !report.agreement {
        writeln!(
            diag,
            "pipeline disagrees with eg_full on {} sequences",
            report.disagreements
        )?;
        return Ok(Exit::Internal);
    }
    Ok(if errors.is_empty() {
        Exit::Success
    } else {
        Exit::Input
    })
}
