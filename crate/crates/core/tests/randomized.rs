//! Seeded random checks at sizes the exhaustive suite cannot reach.

mod common;

use common::{eq1_holds, uniform_sequence};
use degseq::{
    classify, cz_check, eg_full, eg_reduced, havel_hakimi, majorizes, random_with_stats,
    BoundComparison, DegreeSequence, EgFailure, SequenceStats,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sequence(rng: &mut ChaCha8Rng) -> DegreeSequence {
    let n = rng.gen_range(1..=1000usize);
    match rng.gen_range(0..3) {
        0 => uniform_sequence(rng, n, n as u64 - 1),
        // Dense near-threshold sequences stress the crossover search.
        1 => {
            let hi = rng.gen_range(0..n as u64);
            let lo = rng.gen_range(0..=hi);
            let mut d: Vec<u64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
            if d.iter().sum::<u64>() % 2 == 1 {
                d[0] = if d[0] > lo { d[0] - 1 } else { d[0] + 1 };
            }
            DegreeSequence::new(d)
        }
        _ => {
            let top = rng.gen_range(0..=(n as u64).min(40));
            uniform_sequence(rng, n, top)
        }
    }
}

#[test]
fn reduced_matches_full_and_witnesses_recheck() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut graphic = 0;
    for _ in 0..20_000 {
        let seq = random_sequence(&mut rng);
        let full = eg_full(&seq);
        let reduced = eg_reduced(&seq);
        assert_eq!(full.graphic, reduced.graphic, "{seq}");
        assert_eq!(classify(&seq).is_graphic(), full.graphic, "{seq}");
        graphic += usize::from(full.graphic);
        for v in [&full, &reduced] {
            match v.failure {
                Some(EgFailure::Inequality(k)) => assert!(!eq1_holds(&seq, k)),
                Some(EgFailure::Parity) => assert_eq!(seq.sum() % 2, 1),
                None => assert!(v.graphic),
            }
        }
    }
    // Both outcomes must be well represented for the check to mean anything.
    assert!(graphic > 2_000 && graphic < 18_000, "graphic={graphic}");
}

#[test]
fn oracle_agrees_at_medium_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..2_000 {
        let n = rng.gen_range(1..=60usize);
        let seq = uniform_sequence(&mut rng, n, n as u64 - 1);
        let r = havel_hakimi(&seq);
        if let Some(r) = &r {
            assert!(r.realizes(&seq));
        }
        assert_eq!(r.is_some(), eg_full(&seq).graphic, "{seq}");
    }
}

/// Whenever the main bound fires, the class's threshold majorant is graphic,
/// hence (by majorization) so is every member.
#[test]
fn main_bound_implies_graphic_majorant() {
    let mut fired = 0;
    for n in 2..=24u64 {
        for an in 0..n - 1 {
            for a1 in an + 1..n {
                for s in (n * an + 1..n * a1).filter(|s| s % 2 == 0) {
                    let st = SequenceStats::new(a1, an, n, s).unwrap();
                    if !cz_check(&st).is_graphic() {
                        continue;
                    }
                    fired += 1;
                    let m = st.threshold_majorant().unwrap();
                    assert!(havel_hakimi(&m).is_some(), "{st} majorant {m}");
                }
            }
        }
    }
    assert!(fired > 1000);
}

#[test]
fn complement_leaves_cross_products_unchanged() {
    for n in 2..=20u64 {
        for an in 0..n - 1 {
            for a1 in an + 1..n {
                for s in n * an + 1..n * a1 {
                    let st = SequenceStats::new(a1, an, n, s).unwrap();
                    let c = st.complement().unwrap();
                    assert_eq!(
                        BoundComparison::evaluate(&st).unwrap(),
                        BoundComparison::evaluate(&c).unwrap(),
                        "{st} vs {c}"
                    );
                }
            }
        }
    }
}

#[test]
fn majorant_dominates_random_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..2_000 {
        let n = rng.gen_range(2..=200u64);
        let an = rng.gen_range(0..100u64);
        let a1 = an + rng.gen_range(1..100u64);
        let gap = a1 - an;
        let s = rng.gen_range(n * an + gap..=n * a1 - gap);
        let st = SequenceStats::new(a1, an, n, s).unwrap();
        let member = random_with_stats(&st, rng.gen()).unwrap();
        assert_eq!(member.stats().unwrap(), st);
        assert!(majorizes(&st.threshold_majorant().unwrap(), &member).left_dominates());
    }
}
