use std::fmt;

use serde::Serialize;

use super::{cz_check, near_regular_check, zz_check, BoundVerdict, NotApplicableReason};
use crate::eg::{reduced_verdict_on, EgFailure, EgVerdict};
use crate::sequence::{nonzero_len, DegreeSequence, SequenceStats};

/// Pipeline stages in execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Stage {
    Empty,
    ParityCheck,
    DegreeRangeCheck,
    NearRegular,
    #[serde(rename = "ZZBound")]
    ZzBound,
    #[serde(rename = "CZBound")]
    CzBound,
    ErdosGallai,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Empty,
        Stage::ParityCheck,
        Stage::DegreeRangeCheck,
        Stage::NearRegular,
        Stage::ZzBound,
        Stage::CzBound,
        Stage::ErdosGallai,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Stage::Empty => "Empty",
            Stage::ParityCheck => "ParityCheck",
            Stage::DegreeRangeCheck => "DegreeRangeCheck",
            Stage::NearRegular => "NearRegular",
            Stage::ZzBound => "ZZBound",
            Stage::CzBound => "CZBound",
            Stage::ErdosGallai => "ErdosGallai",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Graphic,
    NonGraphic,
}

impl Verdict {
    pub fn is_graphic(&self) -> bool {
        matches!(self, Verdict::Graphic)
    }
}

impl From<bool> for Verdict {
    fn from(graphic: bool) -> Self {
        if graphic {
            Verdict::Graphic
        } else {
            Verdict::NonGraphic
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Graphic => "graphic",
            Verdict::NonGraphic => "non-graphic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StageOutcome {
    Graphic,
    NonGraphic,
    Inconclusive,
    NotApplicable(NotApplicableReason),
}

impl StageOutcome {
    pub fn settles(&self) -> bool {
        matches!(self, StageOutcome::Graphic | StageOutcome::NonGraphic)
    }
}

impl From<BoundVerdict> for StageOutcome {
    fn from(v: BoundVerdict) -> Self {
        match v {
            BoundVerdict::Graphic => StageOutcome::Graphic,
            BoundVerdict::Inconclusive => StageOutcome::Inconclusive,
            BoundVerdict::NotApplicable(r) => StageOutcome::NotApplicable(r),
        }
    }
}

impl fmt::Display for StageOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StageOutcome::Graphic => f.write_str("graphic"),
            StageOutcome::NonGraphic => f.write_str("non-graphic"),
            StageOutcome::Inconclusive => f.write_str("inconclusive"),
            StageOutcome::NotApplicable(r) => write!(f, "not-applicable({r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StageRecord {
    pub stage: Stage,
    pub outcome: StageOutcome,
}

/// What [`classify`] did: the verdict, which stage settled it, and every
/// stage visited on the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineTrace {
    pub verdict: Verdict,
    pub deciding_stage: Stage,
    pub stage_results: Vec<StageRecord>,
    pub stripped_zeros: usize,
    /// Present only when the Erdős–Gallai fallback ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eg: Option<EgVerdict>,
}

impl PipelineTrace {
    pub fn is_graphic(&self) -> bool {
        self.verdict.is_graphic()
    }
}

impl fmt::Display for PipelineTrace {
    /// `Stage=outcome` pairs joined by commas, then `zeros=N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for record in &self.stage_results {
            write!(f, "{}={}", record.stage, record.outcome)?;
            if record.stage == Stage::ErdosGallai {
                if let Some(EgFailure::Inequality(k)) = self.eg.as_ref().and_then(|v| v.failure) {
                    write!(f, "(k={k})")?;
                }
            }
            f.write_str(",")?;
        }
        write!(f, "zeros={}", self.stripped_zeros)
    }
}

struct Recorder {
    stage_results: Vec<StageRecord>,
    stripped_zeros: usize,
}

impl Recorder {
    fn pass(&mut self, stage: Stage, outcome: StageOutcome) {
        self.stage_results.push(StageRecord { stage, outcome });
    }

    fn settle(mut self, stage: Stage, verdict: Verdict, eg: Option<EgVerdict>) -> PipelineTrace {
        let outcome = match verdict {
            Verdict::Graphic => StageOutcome::Graphic,
            Verdict::NonGraphic => StageOutcome::NonGraphic,
        };
        self.stage_results.push(StageRecord { stage, outcome });
        PipelineTrace {
            verdict,
            deciding_stage: stage,
            stage_results: self.stage_results,
            stripped_zeros: self.stripped_zeros,
            eg,
        }
    }
}

type BoundCheck = fn(&SequenceStats) -> BoundVerdict;

/// Decides graphicality, cheapest stage first.
///
/// Zeros are stripped, then: empty (graphic), odd sum (non-graphic),
/// `α₁ >= n` (non-graphic), the near-regular rule, the length bound, the
/// main bound, and finally the reduced Erdős–Gallai test, which always
/// settles.
pub fn classify(seq: &DegreeSequence) -> PipelineTrace {
    let all = seq.as_slice();
    let degrees = &all[..nonzero_len(all)];
    let mut rec = Recorder {
        stage_results: Vec::with_capacity(Stage::ALL.len()),
        stripped_zeros: all.len() - degrees.len(),
    };

    let (Some(&alpha1), Some(&alphan)) = (degrees.first(), degrees.last()) else {
        return rec.settle(Stage::Empty, Verdict::Graphic, None);
    };

    let sum: u128 = degrees.iter().map(|&d| u128::from(d)).sum();
    if sum % 2 == 1 {
        return rec.settle(Stage::ParityCheck, Verdict::NonGraphic, None);
    }
    rec.pass(Stage::ParityCheck, StageOutcome::Inconclusive);

    let n = degrees.len() as u64;
    if alpha1 >= n {
        return rec.settle(Stage::DegreeRangeCheck, Verdict::NonGraphic, None);
    }
    rec.pass(Stage::DegreeRangeCheck, StageOutcome::Inconclusive);

    // Every degree is below n here, so s < n² and the stats are valid.
    let stats = SequenceStats::new(alpha1, alphan, n, sum as u64)
        .expect("stats of a sorted nonempty sequence are valid");

    let bounds: [(Stage, BoundCheck); 3] = [
        (Stage::NearRegular, near_regular_check),
        (Stage::ZzBound, zz_check),
        (Stage::CzBound, cz_check),
    ];
    for (stage, check) in bounds {
        let verdict = check(&stats);
        if verdict.is_graphic() {
            return rec.settle(stage, Verdict::Graphic, None);
        }
        rec.pass(stage, verdict.into());
    }

    let eg = reduced_verdict_on(degrees);
    rec.settle(Stage::ErdosGallai, eg.graphic.into(), Some(eg))
}
