//! Deciding whether a degree sequence is graphic.
//!
//! [`classify`] runs cheap sufficient conditions on the sequence's largest
//! and smallest degree, length and sum before falling back to a reduced
//! Erdős–Gallai test. Every verdict path uses exact integer arithmetic.
//! The [`oracle`] module holds a Havel–Hakimi realizer and an exhaustive
//! enumerator that share no code with the rest, for validation.

pub mod bounds;
pub mod eg;
mod error;
pub mod gen;
pub mod oracle;
pub mod sequence;

pub use bounds::{
    classify, cz_check, cz_reordered_check, near_regular_check, zz_check, BoundComparison,
    BoundVerdict, NotApplicableReason, PipelineTrace, Stage, StageOutcome, StageRecord, Verdict,
};
pub use eg::{eg_full, eg_reduced, reduction_indices, EgFailure, EgVerdict, IndexSet};
pub use error::{Error, Result};
pub use gen::{random_with_stats, sharpness_family, Perturbation, SharpnessInstance};
pub use oracle::{cross_check, enumerate_sequences, havel_hakimi, CrossCheckReport, Realization};
pub use sequence::{majorizes, DegreeSequence, Direction, MajorizationResult, SequenceStats};
