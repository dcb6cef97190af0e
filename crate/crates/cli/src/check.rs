use std::io::{self, BufRead, Write};

use degseq::{classify, PipelineTrace, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{records, InputRecord};
use crate::Exit;

/// Lines handed to the worker pool at a time; results are written back in
/// input order before the next chunk is read.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub format: Format,
    pub trace: bool,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    line: usize,
    verdict: Verdict,
    deciding_stage: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a PipelineTrace>,
}

enum Outcome {
    Line(String),
    Diagnostic(String),
}

fn render(trace: &PipelineTrace, line: usize, opts: CheckOptions) -> String {
    match opts.format {
        Format::Tsv if opts.trace => {
            format!("{}\t{}\t{}", trace.verdict, trace.deciding_stage, trace)
        }
        Format::Tsv => format!("{}\t{}", trace.verdict, trace.deciding_stage),
        Format::Json => serde_json::to_string(&JsonRecord {
            line,
            verdict: trace.verdict,
            deciding_stage: trace.deciding_stage.name(),
            trace: opts.trace.then_some(trace),
        })
        .expect("trace serializes"),
    }
}

fn process(record: &InputRecord, opts: CheckOptions) -> Outcome {
    match record.sequence() {
        Ok(seq) => Outcome::Line(render(&classify(&seq), record.line_number, opts)),
        Err(e) => Outcome::Diagnostic(format!("line {}: {e}", record.line_number)),
    }
}

/// Classifies every record of `input`, one output line per valid record.
/// Parse errors go to `diag` and make the exit code [`Exit::Input`], but
/// never stop the batch.
pub fn cmd_check<R: BufRead, W: Write, E: Write>(
    input: R,
    out: &mut W,
    diag: &mut E,
    opts: CheckOptions,
) -> io::Result<Exit> {
    let mut exit = Exit::Success;
    let mut recs = records(input);
    loop {
        let chunk = recs.by_ref().take(CHUNK).collect::<io::Result<Vec<_>>>()?;
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = chunk.par_iter().map(|r| process(r, opts)).collect();
        for outcome in outcomes {
            match outcome {
                Outcome::Line(line) => writeln!(out, "{line}")?,
                Outcome::Diagnostic(msg) => {
                    writeln!(diag, "{msg}")?;
                    exit = Exit::Input;
                }
            }
        }
    }
    out.flush()?;
    Ok(exit)
}
