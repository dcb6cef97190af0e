#![allow(dead_code)]

use degseq::DegreeSequence;
use rand::Rng;

/// Inequality `k` of the Erdős–Gallai system by direct summation.
pub fn eq1_holds(seq: &DegreeSequence, k: usize) -> bool {
    let d = seq.as_slice();
    let lhs: u128 = d[..k].iter().map(|&x| u128::from(x)).sum();
    let k64 = k as u64;
    let rhs = (k as u128) * (k as u128 - 1)
        + d[k..].iter().map(|&x| u128::from(x.min(k64))).sum::<u128>();
    lhs <= rhs
}

/// Sequences grouped by sum, for class-wise majorization checks.
pub fn by_sum(n: usize, max_degree: u64) -> Vec<Vec<DegreeSequence>> {
    let mut classes: Vec<Vec<DegreeSequence>> = Vec::new();
    for s in degseq::enumerate_sequences(n, max_degree) {
        let sum = s.sum() as usize;
        if classes.len() <= sum {
            classes.resize(sum + 1, Vec::new());
        }
        classes[sum].push(s);
    }
    classes
}

/// A random sorted sequence of length `n` with entries in `0..=top`.
pub fn uniform_sequence<R: Rng>(rng: &mut R, n: usize, top: u64) -> DegreeSequence {
    DegreeSequence::new((0..n).map(|_| rng.gen_range(0..=top)).collect())
}
