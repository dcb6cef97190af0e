//! Exhaustive checks over every small degree sequence.

mod common;

use common::{by_sum, eq1_holds};
use degseq::{
    classify, eg_full, eg_reduced, enumerate_sequences, havel_hakimi, majorizes, reduction_indices,
    Direction, EgFailure,
};

#[test]
fn enumeration_counts_match_stars_and_bars() {
    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }
    for n in 0..=7usize {
        for max in 0..=6u64 {
            let all: Vec<_> = enumerate_sequences(n, max).collect();
            assert_eq!(
                all.len() as u64,
                binom(max + n as u64, n as u64),
                "n={n} max={max}"
            );
            assert!(all.windows(2).all(|w| w[0].as_slice() > w[1].as_slice()));
            assert!(all
                .iter()
                .all(|s| s.len() == n && s.iter().all(|&d| d <= max)));
        }
    }
}

#[test]
fn graphic_counts_per_length() {
    // Number of graphic sequences of each length, zeros allowed.
    let expected = [1usize, 1, 2, 4, 11, 31, 102, 342, 1213];
    for (n, &want) in expected.iter().enumerate() {
        let got = enumerate_sequences(n, n.saturating_sub(1) as u64)
            .filter(|s| havel_hakimi(s).is_some())
            .count();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn eg_variants_agree_with_oracle_including_oversized_degrees() {
    for n in 0..=8usize {
        for seq in enumerate_sequences(n, n as u64 + 1) {
            let truth = havel_hakimi(&seq).is_some();
            let full = eg_full(&seq);
            let reduced = eg_reduced(&seq);
            assert_eq!(full.graphic, truth, "{seq}");
            assert_eq!(reduced.graphic, truth, "{seq}");
            assert_eq!(classify(&seq).is_graphic(), truth, "{seq}");
            for verdict in [&full, &reduced] {
                if let Some(EgFailure::Inequality(k)) = verdict.failure {
                    assert!(!eq1_holds(&seq, k), "{seq} k={k}");
                }
            }
            if !seq.is_empty() {
                let idx = reduction_indices(&seq);
                assert!(!idx.is_empty());
                assert!(reduced.checked_indices.iter().all(|&k| idx.contains(k)));
            }
        }
    }
}

#[test]
fn zero_stripping_preserves_verdicts() {
    for n in 0..=8usize {
        for seq in enumerate_sequences(n, n.saturating_sub(1) as u64) {
            let stripped = seq.strip_zeros();
            assert_eq!(eg_full(&seq).graphic, eg_full(&stripped).graphic, "{seq}");
            assert_eq!(classify(&seq).verdict, classify(&stripped).verdict, "{seq}");
        }
    }
}

#[test]
fn majorization_is_a_partial_order() {
    for n in 1..=6usize {
        for class in by_sum(n, n as u64 - 1) {
            for a in &class {
                assert_eq!(majorizes(a, a).direction, Direction::Equal);
                for b in &class {
                    let ab = majorizes(a, b);
                    let ba = majorizes(b, a);
                    if ab.left_dominates() && ba.left_dominates() {
                        assert_eq!(a, b);
                    }
                    let flipped = match ab.direction {
                        Direction::Majorizes => Direction::MajorizedBy,
                        Direction::MajorizedBy => Direction::Majorizes,
                        d => d,
                    };
                    assert_eq!(ba.direction, flipped);
                    if !ab.left_dominates() {
                        continue;
                    }
                    for c in &class {
                        if majorizes(b, c).left_dominates() {
                            assert!(majorizes(a, c).left_dominates(), "{a} > {b} > {c}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn graphicality_is_downward_closed_under_majorization() {
    for n in 1..=7usize {
        for class in by_sum(n, n as u64 - 1) {
            let graphic: Vec<bool> = class.iter().map(|s| havel_hakimi(s).is_some()).collect();
            for (a, &ga) in class.iter().zip(&graphic) {
                if !ga {
                    continue;
                }
                for (b, &gb) in class.iter().zip(&graphic) {
                    if majorizes(a, b).left_dominates() {
                        assert!(gb, "{a} graphic and majorizes non-graphic {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn complement_preserves_graphicality() {
    for n in 0..=8usize {
        for seq in enumerate_sequences(n, n.saturating_sub(1) as u64) {
            let c = seq.complement().unwrap();
            assert_eq!(
                havel_hakimi(&seq).is_some(),
                havel_hakimi(&c).is_some(),
                "{seq}"
            );
        }
    }
}
