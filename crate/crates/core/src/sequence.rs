//! Canonical degree sequences and the order-theoretic operations on them:
//! complement, majorization and the threshold majorant of a statistics class.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A nonincreasing list of nonnegative degrees.
///
/// The ordering invariant is established at construction and never broken:
/// every constructor sorts, and there is no mutable access to the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    /// Sorts `degrees` into canonical (nonincreasing) order.
    pub fn new(mut degrees: Vec<u64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self(degrees)
    }

    /// Validates and sorts a raw integer list.
    pub fn canonicalize(raw: &[i64]) -> Result<Self> {
        let degrees = raw
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value).map_err(|_| Error::NegativeDegree { index, value })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(degrees))
    }

    /// Wraps a vector the caller has already sorted nonincreasing.
    pub(crate) fn from_sorted(degrees: Vec<u64>) -> Self {
        debug_assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Sum of all degrees; exact for any length that fits in memory.
    pub fn sum(&self) -> u128 {
        self.0.iter().map(|&d| u128::from(d)).sum()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.0.first().copied()
    }

    /// Number of trailing zero entries.
    pub fn zero_count(&self) -> usize {
        self.0.len() - nonzero_len(&self.0)
    }

    /// Drops the trailing zeros (isolated vertices); graphicality is unchanged.
    pub fn strip_zeros(&self) -> Self {
        Self(self.0[..nonzero_len(&self.0)].to_vec())
    }

    pub fn stats(&self) -> Result<SequenceStats> {
        let (&alpha1, &alphan) = match (self.0.first(), self.0.last()) {
            (Some(first), Some(last)) => (first, last),
            _ => return Err(Error::EmptySequence),
        };
        let s = u64::try_from(self.sum()).map_err(|_| Error::SumOverflow)?;
        Ok(SequenceStats {
            alpha1,
            alphan,
            n: self.0.len() as u64,
            s,
        })
    }

    /// The degree sequence of the complement graph, `⟨n−αₙ−1, …, n−α₁−1⟩`.
    pub fn complement(&self) -> Result<Self> {
        let n = self.0.len();
        match self.0.first() {
            Some(&top) if top >= n as u64 => Err(Error::DegreeExceedsOrder {
                degree: top,
                order: n,
            }),
            None => Ok(Self::default()),
            Some(_) => {
                let last = n as u64 - 1;
                Ok(Self(self.0.iter().rev().map(|&d| last - d).collect()))
            }
        }
    }
}

/// Length of the prefix preceding the trailing zeros of a sorted slice.
pub(crate) fn nonzero_len(sorted: &[u64]) -> usize {
    sorted.partition_point(|&d| d > 0)
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a DegreeSequence {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<u64>> for DegreeSequence {
    fn from(degrees: Vec<u64>) -> Self {
        Self::new(degrees)
    }
}

/// The four numbers every sufficient condition here is stated in terms of:
/// largest degree, smallest degree, length and sum.
///
/// Construction validates `αₙ ≤ α₁` and `n·αₙ ≤ s ≤ n·α₁`, so every value of
/// this type describes a nonempty class of real-valued sequences; whether
/// an integer sequence attains both extremes is a separate question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SequenceStats {
    alpha1: u64,
    alphan: u64,
    n: u64,
    s: u64,
}

impl SequenceStats {
    pub fn new(alpha1: u64, alphan: u64, n: u64, s: u64) -> Result<Self> {
        let invalid = |why| Error::InvalidStats {
            alpha1,
            alphan,
            n,
            s,
            why,
        };
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if alphan > alpha1 {
            return Err(invalid("smallest degree exceeds largest"));
        }
        let (n_wide, s_wide) = (u128::from(n), u128::from(s));
        if s_wide < n_wide * u128::from(alphan) || s_wide > n_wide * u128::from(alpha1) {
            return Err(invalid("sum outside [n*an, n*a1]"));
        }
        Ok(Self {
            alpha1,
            alphan,
            n,
            s,
        })
    }

    pub fn alpha1(&self) -> u64 {
        self.alpha1
    }

    pub fn alphan(&self) -> u64 {
        self.alphan
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn is_regular(&self) -> bool {
        self.alpha1 == self.alphan
    }

    /// Statistics of the complement: `(n−αₙ−1, n−α₁−1, n, n(n−1)−s)`.
    pub fn complement(&self) -> Result<Self> {
        if self.alpha1 >= self.n {
            return Err(Error::DegreeExceedsOrder {
                degree: self.alpha1,
                order: self.n as usize,
            });
        }
        let pairs = u128::from(self.n) * u128::from(self.n - 1);
        let s = u64::try_from(pairs - u128::from(self.s)).map_err(|_| Error::SumOverflow)?;
        Self::new(
            self.n - self.alphan - 1,
            self.n - self.alpha1 - 1,
            self.n,
            s,
        )
    }

    /// The threshold majorant of this class: `p` copies of `α₁`, one middle
    /// value, then `αₙ` to the end, summing to `s`.
    ///
    /// With `d = α₁ − αₙ` and `r = s − n·αₙ`, `p = r div d` and the middle
    /// value is `αₙ + r mod d`. When `r = n·d` (only possible for stats no
    /// integer sequence with distinct extremes attains) the result is the
    /// all-`α₁` sequence. The output's reported extremes differ from the
    /// input's when `p = 0` or the `αₙ` block is empty.
    pub fn threshold_majorant(&self) -> Result<DegreeSequence> {
        if self.is_regular() {
            return Err(Error::RegularSequence(self.alpha1));
        }
        let n = self.n as usize;
        let gap = self.alpha1 - self.alphan;
        // Fits: validation bounds it by n·gap.
        let excess = u128::from(self.s) - u128::from(self.n) * u128::from(self.alphan);
        let p = (excess / u128::from(gap)) as usize;
        let middle = self.alphan + (excess % u128::from(gap)) as u64;

        let (p, middle) = if p == n {
            (n - 1, self.alpha1)
        } else {
            (p, middle)
        };
        let mut degrees = Vec::with_capacity(n);
        degrees.resize(p, self.alpha1);
        degrees.push(middle);
        degrees.resize(n, self.alphan);
        Ok(DegreeSequence::from_sorted(degrees))
    }
}

impl fmt::Display for SequenceStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.alpha1, self.alphan, self.n, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Majorizes,
    MajorizedBy,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MajorizationResult {
    pub comparable: bool,
    pub direction: Direction,
}

impl MajorizationResult {
    const INCOMPARABLE: Self = Self {
        comparable: false,
        direction: Direction::Incomparable,
    };

    /// True when the left operand majorizes the right (including equality).
    pub fn left_dominates(&self) -> bool {
        matches!(self.direction, Direction::Majorizes | Direction::Equal)
    }
}

/// Compares two sequences by prefix-sum dominance.
///
/// Sequences of different length or sum are reported incomparable.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> MajorizationResult {
    if a.len() != b.len() || a.sum() != b.sum() {
        return MajorizationResult::INCOMPARABLE;
    }
    let (mut ge, mut le) = (true, true);
    let (mut pa, mut pb) = (0u128, 0u128);
    for (&x, &y) in a.iter().zip(b.iter()) {
        pa += u128::from(x);
        pb += u128::from(y);
        ge &= pa >= pb;
        le &= pa <= pb;
        if !ge && !le {
            return MajorizationResult::INCOMPARABLE;
        }
    }
    let direction = match (ge, le) {
        (true, true) => Direction::Equal,
        (true, false) => Direction::Majorizes,
        (false, true) => Direction::MajorizedBy,
        (false, false) => unreachable!(),
    };
    MajorizationResult {
        comparable: true,
        direction,
    }
}
