//! Sequence generators: random members of a statistics class, and the
//! family of sequences meeting the main bound with equality together with
//! its single-parameter perturbations.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::{DegreeSequence, SequenceStats};

/// A random canonical sequence of length `n` and sum `s` whose largest
/// entry is exactly `α₁` and smallest exactly `αₙ`. Deterministic in
/// `seed`.
///
/// Needs `α₁ > αₙ`, `n >= 2` and `n·αₙ + (α₁−αₙ) <= s <= n·α₁ − (α₁−αₙ)`.
pub fn random_with_stats(stats: &SequenceStats, seed: u64) -> Result<DegreeSequence> {
    let (alpha1, alphan, n, s) = (stats.alpha1(), stats.alphan(), stats.n(), stats.s());
    let infeasible = Error::InfeasibleStats {
        alpha1,
        alphan,
        n,
        s,
    };
    if alpha1 == alphan || n < 2 {
        return Err(infeasible);
    }
    let gap = alpha1 - alphan;
    let floor = u128::from(n) * u128::from(alphan) + u128::from(gap);
    let ceiling = u128::from(n) * u128::from(alpha1) - u128::from(gap);
    let s_wide = u128::from(s);
    if s_wide < floor || s_wide > ceiling {
        return Err(infeasible);
    }

    let middle = (n - 2) as usize;
    // At most (n−2)·gap by the ceiling check.
    let mut residual = (s_wide - floor) as u64;
    let mut extra = vec![0u64; middle];
    let mut open: Vec<usize> = (0..middle).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while residual > 0 {
        let slot = rng.gen_range(0..open.len());
        let i = open[slot];
        let room = gap - extra[i];
        let step = rng.gen_range(1..=room.min(residual));
        extra[i] += step;
        residual -= step;
        if extra[i] == gap {
            open.swap_remove(slot);
        }
    }

    let mut degrees = Vec::with_capacity(n as usize);
    degrees.push(alpha1);
    degrees.extend(extra.into_iter().map(|e| alphan + e));
    degrees.push(alphan);
    Ok(DegreeSequence::new(degrees))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perturbation {
    IncreaseMax,
    DecreaseLength,
    DecreaseMin,
    IncreaseSum,
}

impl Perturbation {
    pub const ALL: [Perturbation; 4] = [
        Perturbation::IncreaseMax,
        Perturbation::DecreaseLength,
        Perturbation::DecreaseMin,
        Perturbation::IncreaseSum,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Perturbation::IncreaseMax => "increase-max",
            Perturbation::DecreaseLength => "decrease-length",
            Perturbation::DecreaseMin => "decrease-min",
            Perturbation::IncreaseSum => "increase-sum",
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The equality case `αₙ = 2, n = α₁ + 1, s = 4α₁ − 2` of the main bound,
/// and four sequences each breaking one of those parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessInstance {
    pub alpha1: u64,
    pub base: DegreeSequence,
    pub perturbations: [(Perturbation, DegreeSequence); 4],
}

impl SharpnessInstance {
    pub fn perturbation(&self, which: Perturbation) -> &DegreeSequence {
        &self.perturbations[which as usize].1
    }

    /// The base's statistics.
    pub fn stats(&self) -> SequenceStats {
        self.base.stats().expect("base is nonempty")
    }
}

fn with_twos(head: &[u64], twos: u64, tail: &[u64]) -> DegreeSequence {
    let mut v = head.to_vec();
    v.extend(std::iter::repeat_n(2, twos as usize));
    v.extend_from_slice(tail);
    DegreeSequence::new(v)
}

/// Builds the family member for `alpha1 >= 3`.
///
/// For `alpha1 = 3` the decrease-length and increase-sum shapes contain a
/// 4 and are sorted accordingly; no sequence has exactly those perturbed
/// parameters at that size.
pub fn sharpness_family(alpha1: u64) -> Result<SharpnessInstance> {
    if alpha1 < 3 {
        return Err(Error::ParameterTooSmall(alpha1));
    }
    let a = alpha1;
    let base = SequenceStats::new(a, 2, a + 1, 4 * a - 2)?.threshold_majorant()?;
    let perturbations = [
        (
            Perturbation::IncreaseMax,
            with_twos(&[a + 1, a - 1], a - 1, &[]),
        ),
        (
            Perturbation::DecreaseLength,
            with_twos(&[a, a, 4], a - 3, &[]),
        ),
        (
            Perturbation::DecreaseMin,
            with_twos(&[a, a, 3], a - 3, &[1]),
        ),
        (Perturbation::IncreaseSum, with_twos(&[a, a, 4], a - 2, &[])),
    ];
    Ok(SharpnessInstance {
        alpha1,
        base,
        perturbations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::majorizes;
    use proptest::prelude::*;

    fn seq(d: &[u64]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec())
    }

    fn stats(a1: u64, an: u64, n: u64, s: u64) -> SequenceStats {
        SequenceStats::new(a1, an, n, s).unwrap()
    }

    #[test]
    fn random_member_has_requested_stats() {
        let st = stats(4, 2, 5, 14);
        let out = random_with_stats(&st, 1).unwrap();
        assert_eq!(out.stats().unwrap(), st);
    }

    #[test]
    fn random_member_of_tiny_class() {
        let members = [seq(&[3, 3, 1, 1]), seq(&[3, 2, 2, 1])];
        for seed in 0..50 {
            let out = random_with_stats(&stats(3, 1, 4, 8), seed).unwrap();
            assert!(members.contains(&out), "{out}");
        }
    }

    #[test]
    fn random_rejects_infeasible() {
        assert!(matches!(
            random_with_stats(&stats(2, 2, 3, 6), 0),
            Err(Error::InfeasibleStats { .. })
        ));
        // s = n·an: the maximum cannot be attained.
        assert!(random_with_stats(&stats(3, 1, 4, 4), 0).is_err());
        assert!(random_with_stats(&stats(3, 1, 4, 12), 0).is_err());
        assert!(random_with_stats(&stats(3, 1, 1, 2), 0).is_err());
        // n = 2 works when s = a1 + an.
        assert_eq!(
            random_with_stats(&stats(3, 1, 2, 4), 0).unwrap(),
            seq(&[3, 1])
        );
    }

    #[test]
    fn sharpness_examples() {
        let f = sharpness_family(4).unwrap();
        assert_eq!(f.base, seq(&[4, 4, 2, 2, 2]));
        assert_eq!(
            f.perturbation(Perturbation::IncreaseMax),
            &seq(&[5, 3, 2, 2, 2])
        );
        assert_eq!(
            f.perturbation(Perturbation::DecreaseLength),
            &seq(&[4, 4, 4, 2])
        );
        assert_eq!(
            f.perturbation(Perturbation::DecreaseMin),
            &seq(&[4, 4, 3, 2, 1])
        );
        assert_eq!(
            f.perturbation(Perturbation::IncreaseSum),
            &seq(&[4, 4, 4, 2, 2])
        );

        assert_eq!(sharpness_family(3).unwrap().base, seq(&[3, 3, 2, 2]));
        assert_eq!(sharpness_family(2), Err(Error::ParameterTooSmall(2)));
    }

    #[test]
    fn perturbations_change_one_parameter() {
        for a in 4..=30u64 {
            let f = sharpness_family(a).unwrap();
            let base = f.stats();
            assert_eq!((base.alphan(), base.n(), base.s()), (2, a + 1, 4 * a - 2));
            for which in Perturbation::ALL {
                let p = f.perturbation(which).stats().unwrap();
                let expected = match which {
                    Perturbation::IncreaseMax => (a + 1, 2, a + 1, 4 * a - 2),
                    Perturbation::DecreaseLength => (a, 2, a, 4 * a - 2),
                    Perturbation::DecreaseMin => (a, 1, a + 1, 4 * a - 2),
                    Perturbation::IncreaseSum => (a, 2, a + 1, 4 * a),
                };
                assert_eq!(
                    (p.alpha1(), p.alphan(), p.n(), p.s()),
                    expected,
                    "a={a} {which}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn random_member_is_deterministic_and_dominated(
            an in 0u64..30, gap in 1u64..30, n in 2u64..80, t in 0.0f64..=1.0, seed: u64,
        ) {
            let a1 = an + gap;
            let lo = n * an + gap;
            let hi = n * a1 - gap;
            let s = lo + ((hi - lo) as f64 * t) as u64;
            let st = stats(a1, an, n, s);
            let out = random_with_stats(&st, seed).unwrap();
            prop_assert_eq!(out.stats().unwrap(), st);
            prop_assert_eq!(&random_with_stats(&st, seed).unwrap(), &out);
            let m = st.threshold_majorant().unwrap();
            prop_assert!(majorizes(&m, &out).left_dominates());
        }
    }
}
