//! Erdős–Gallai graphicality test, full and on a reduced index set.
//!
//! Inequality `k` (1-based) reads
//!
//! ```text
//! a_1 + … + a_k  <=  k(k−1) + Σ_{i>k} min(k, a_i)
//! ```
//!
//! The min-sum splits at the crossover `c(k) = #{i : a_i >= k}`: entries
//! `k+1 ..= max(k, c)` contribute `k` each and the rest contribute
//! themselves. With prefix sums and a binary search for `c`, each
//! inequality costs `O(log n)`.

use serde::Serialize;

use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "k")]
pub enum EgFailure {
    /// Odd degree sum.
    Parity,
    /// The inequality at this 1-based index is violated.
    Inequality(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgVerdict {
    pub graphic: bool,
    pub failure: Option<EgFailure>,
    /// 1-based indices whose inequality was evaluated, in evaluation order.
    pub checked_indices: Vec<usize>,
}

impl EgVerdict {
    fn graphic(checked_indices: Vec<usize>) -> Self {
        Self {
            graphic: true,
            failure: None,
            checked_indices,
        }
    }

    fn failed(failure: EgFailure, checked_indices: Vec<usize>) -> Self {
        Self {
            graphic: false,
            failure: Some(failure),
            checked_indices,
        }
    }
}

/// Sorted 1-based indices at which the inequalities must be checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }
}

/// Prefix sums over a sorted slice, shared by every inequality evaluation.
struct Inequalities<'a> {
    degrees: &'a [u64],
    prefix: Vec<u128>,
}

impl<'a> Inequalities<'a> {
    fn new(degrees: &'a [u64]) -> Self {
        let mut prefix = Vec::with_capacity(degrees.len() + 1);
        let mut acc = 0u128;
        prefix.push(acc);
        for &d in degrees {
            acc += u128::from(d);
            prefix.push(acc);
        }
        Self { degrees, prefix }
    }

    fn total(&self) -> u128 {
        self.prefix[self.degrees.len()]
    }

    /// Whether inequality `k` (1-based) holds.
    fn holds_at(&self, k: usize) -> bool {
        let kk = k as u64;
        let crossover = self.degrees.partition_point(|&d| d >= kk);
        let split = crossover.max(k);
        let k = k as u128;
        let capped = (split as u128 - k) * k;
        let tail = self.total() - self.prefix[split];
        self.prefix[k as usize] <= k * (k - 1) + capped + tail
    }
}

/// Full Erdős–Gallai test: parity, then every `k` in `1..=n`, stopping at the
/// first violation.
///
/// Valid for any canonical sequence; a degree of `n` or more fails at `k = 1`.
pub fn eg_full(seq: &DegreeSequence) -> EgVerdict {
    full_on(seq.as_slice())
}

pub(crate) fn full_on(degrees: &[u64]) -> EgVerdict {
    let ineq = Inequalities::new(degrees);
    if ineq.total() % 2 == 1 {
        return EgVerdict::failed(EgFailure::Parity, Vec::new());
    }
    let mut checked = Vec::with_capacity(degrees.len());
    for k in 1..=degrees.len() {
        checked.push(k);
        if !ineq.holds_at(k) {
            return EgVerdict::failed(EgFailure::Inequality(k), checked);
        }
    }
    EgVerdict::graphic(checked)
}

/// Largest `k` with `a_k >= k`, clamped to at least 1. Inequalities past it
/// are implied by their predecessors, since the slack `RHS − LHS` cannot
/// decrease at any `k` with `a_k <= k − 1`.
fn durfee_cutoff(degrees: &[u64]) -> usize {
    degrees
        .iter()
        .zip(1u64..)
        .take_while(|&(&d, k)| d >= k)
        .count()
        .max(1)
}

fn reduced_on(degrees: &[u64]) -> Vec<usize> {
    if degrees.is_empty() {
        return Vec::new();
    }
    let cutoff = durfee_cutoff(degrees);
    let mut indices: Vec<usize> = degrees
        .windows(2)
        .take(cutoff - 1)
        .zip(1..)
        .filter(|(w, _)| w[0] > w[1])
        .map(|(_, i)| i)
        .collect();
    indices.push(cutoff);
    indices
}

/// Indices at the end of a run of equal degrees, up to the Durfee cutoff,
/// plus the cutoff itself. Empty only for the empty sequence.
pub fn reduction_indices(seq: &DegreeSequence) -> IndexSet {
    IndexSet(reduced_on(seq.as_slice()))
}

/// Same verdict as [`eg_full`], evaluating only [`reduction_indices`].
pub fn eg_reduced(seq: &DegreeSequence) -> EgVerdict {
    reduced_verdict_on(seq.as_slice())
}

pub(crate) fn reduced_verdict_on(degrees: &[u64]) -> EgVerdict {
    let ineq = Inequalities::new(degrees);
    if ineq.total() % 2 == 1 {
        return EgVerdict::failed(EgFailure::Parity, Vec::new());
    }
    let indices = reduced_on(degrees);
    for (pos, &k) in indices.iter().enumerate() {
        if !ineq.holds_at(k) {
            let mut checked = indices;
            checked.truncate(pos + 1);
            return EgVerdict::failed(EgFailure::Inequality(k), checked);
        }
    }
    EgVerdict::graphic(indices)
}
