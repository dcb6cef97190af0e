//! Sufficient conditions for graphicality stated in terms of
//! [`SequenceStats`] alone, evaluated in exact integer arithmetic.
//!
//! Each check answers `Graphic` only when every hypothesis of its theorem
//! holds; otherwise it is `Inconclusive` (hypotheses hold, inequality
//! does not) or `NotApplicable` (some hypothesis fails).

mod pipeline;

use std::fmt;

use serde::Serialize;

use crate::sequence::SequenceStats;

pub use pipeline::{classify, PipelineTrace, Stage, StageOutcome, StageRecord, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotApplicableReason {
    OddSum,
    /// The bound needs positive degrees.
    ZeroMinDegree,
    /// `α₁ > n − 1`.
    DegreeRange,
    /// `n·α₁ = s` or `s = n·αₙ`: the sequence is regular.
    RegularDenominator,
    /// An intermediate product left the 128-bit range.
    Overflow,
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::OddSum => "odd-sum",
            Self::ZeroMinDegree => "zero-min-degree",
            Self::DegreeRange => "degree-range",
            Self::RegularDenominator => "regular-denominator",
            Self::Overflow => "overflow",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVerdict {
    Graphic,
    Inconclusive,
    NotApplicable(NotApplicableReason),
}

impl BoundVerdict {
    pub fn is_graphic(&self) -> bool {
        matches!(self, Self::Graphic)
    }

    fn from_bool(graphic: bool) -> Self {
        if graphic {
            Self::Graphic
        } else {
            Self::Inconclusive
        }
    }
}

struct Wide {
    alpha1: i128,
    alphan: i128,
    n: i128,
    s: i128,
}

impl From<&SequenceStats> for Wide {
    fn from(st: &SequenceStats) -> Self {
        Self {
            alpha1: st.alpha1().into(),
            alphan: st.alphan().into(),
            n: st.n().into(),
            s: st.s().into(),
        }
    }
}

impl Wide {
    /// `(n·α₁ − s, s − n·αₙ)`, the two denominators of the main bound.
    fn gaps(&self) -> Option<(i128, i128)> {
        let upper = self.n.checked_mul(self.alpha1)?.checked_sub(self.s)?;
        let lower = self.s.checked_sub(self.n.checked_mul(self.alphan)?)?;
        Some((upper, lower))
    }
}

/// The main bound with both denominators cleared:
///
/// ```text
/// (α₁−αₙ)·[(n−α₁−1)(s−nαₙ) + αₙ(nα₁−s)]  >=  (nα₁−s)(s−nαₙ)
/// ```
///
/// Both denominators are positive wherever this is defined, so the cleared
/// form is equivalent to the fractional one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundComparison {
    pub lhs_cross: i128,
    pub rhs_cross: i128,
    pub satisfied: bool,
}

impl BoundComparison {
    /// Evaluates the cleared inequality. Does not check `α₁ <= n − 1`; see
    /// [`cz_check`] for the applicability gate.
    pub fn evaluate(stats: &SequenceStats) -> Result<Self, NotApplicableReason> {
        let w = Wide::from(stats);
        let (upper, lower) = w.gaps().ok_or(NotApplicableReason::Overflow)?;
        if upper <= 0 || lower <= 0 {
            return Err(NotApplicableReason::RegularDenominator);
        }
        let cross = || -> Option<(i128, i128)> {
            let room = w.n - w.alpha1 - 1;
            let bracket = room
                .checked_mul(lower)?
                .checked_add(w.alphan.checked_mul(upper)?)?;
            let lhs = (w.alpha1 - w.alphan).checked_mul(bracket)?;
            let rhs = upper.checked_mul(lower)?;
            Some((lhs, rhs))
        };
        let (lhs_cross, rhs_cross) = cross().ok_or(NotApplicableReason::Overflow)?;
        Ok(Self {
            lhs_cross,
            rhs_cross,
            satisfied: lhs_cross >= rhs_cross,
        })
    }

    pub fn is_equality(&self) -> bool {
        self.lhs_cross == self.rhs_cross
    }

    pub fn margin(&self) -> i128 {
        self.lhs_cross - self.rhs_cross
    }
}

/// Even-sum sequences with `α₁ − αₙ <= 1` and `α₁ <= n − 1` are always
/// graphic. The degree range matters: `⟨2,2⟩` is near-regular but not graphic.
pub fn near_regular_check(stats: &SequenceStats) -> BoundVerdict {
    if let Some(reason) = main_bound_gate(stats) {
        return BoundVerdict::NotApplicable(reason);
    }
    BoundVerdict::from_bool(stats.alpha1() - stats.alphan() <= 1)
}

/// The length bound `4·αₙ·n >= (α₁ + αₙ + 1)²` for positive even-sum
/// sequences.
pub fn zz_check(stats: &SequenceStats) -> BoundVerdict {
    if stats.s() % 2 == 1 {
        return BoundVerdict::NotApplicable(NotApplicableReason::OddSum);
    }
    if stats.alphan() == 0 {
        return BoundVerdict::NotApplicable(NotApplicableReason::ZeroMinDegree);
    }
    // (α₁+αₙ+1)² >= 4αₙ(α₁+1) > 4αₙ·n once α₁ >= n, so the bound cannot hold.
    if stats.alpha1() >= stats.n() {
        return BoundVerdict::Inconclusive;
    }
    let w = Wide::from(stats);
    let holds = || -> Option<bool> {
        let lhs = w.alphan.checked_mul(w.n)?.checked_mul(4)?;
        let root = w.alpha1 + w.alphan + 1;
        Some(lhs >= root.checked_mul(root)?)
    };
    match holds() {
        Some(h) => BoundVerdict::from_bool(h),
        None => BoundVerdict::NotApplicable(NotApplicableReason::Overflow),
    }
}

fn main_bound_gate(stats: &SequenceStats) -> Option<NotApplicableReason> {
    if stats.s() % 2 == 1 {
        Some(NotApplicableReason::OddSum)
    } else if stats.alpha1() >= stats.n() {
        Some(NotApplicableReason::DegreeRange)
    } else {
        None
    }
}

/// The main bound in its cross-multiplied form.
pub fn cz_check(stats: &SequenceStats) -> BoundVerdict {
    if let Some(reason) = main_bound_gate(stats) {
        return BoundVerdict::NotApplicable(reason);
    }
    match BoundComparison::evaluate(stats) {
        Ok(cmp) => BoundVerdict::from_bool(cmp.satisfied),
        Err(reason) => BoundVerdict::NotApplicable(reason),
    }
}

/// The same bound after completing the square:
///
/// ```text
/// ((1+α₁+αₙ)² − 4nαₙ)·(α₁−αₙ)²  <=  (2s − n(n−1) + (n−αₙ−1)(n−αₙ) − α₁(α₁+1))²
/// ```
///
/// Shares no arithmetic with [`cz_check`]; the two must agree wherever both
/// apply.
pub fn cz_reordered_check(stats: &SequenceStats) -> BoundVerdict {
    if let Some(reason) = main_bound_gate(stats) {
        return BoundVerdict::NotApplicable(reason);
    }
    let w = Wide::from(stats);
    match w.gaps() {
        None => return BoundVerdict::NotApplicable(NotApplicableReason::Overflow),
        Some((upper, lower)) if upper == 0 || lower == 0 => {
            return BoundVerdict::NotApplicable(NotApplicableReason::RegularDenominator)
        }
        Some(_) => {}
    }
    let holds = || -> Option<bool> {
        let spread = w.alpha1 - w.alphan;
        let spread_sq = spread.checked_mul(spread)?;
        let root = 1 + w.alpha1 + w.alphan;
        let lhs = root
            .checked_mul(root)?
            .checked_sub(w.n.checked_mul(w.alphan)?.checked_mul(4)?)?
            .checked_mul(spread_sq)?;
        let centre =
            w.s.checked_mul(2)?
                .checked_sub(w.n.checked_mul(w.n - 1)?)?
                .checked_add((w.n - w.alphan - 1).checked_mul(w.n - w.alphan)?)?
                .checked_sub(w.alpha1.checked_mul(w.alpha1 + 1)?)?;
        Some(lhs <= centre.checked_mul(centre)?)
    };
    match holds() {
        Some(h) => BoundVerdict::from_bool(h),
        None => BoundVerdict::NotApplicable(NotApplicableReason::Overflow),
    }
}
