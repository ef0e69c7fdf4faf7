//! Input builders shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use findim_core::{HomogeneousDerivation, LatticeVector, RationalVector};

/// The two-parameter nilpotent family: `x1 x2 (2 x1 d1 - x2 d2)` and
/// `x1^m x2^(2m+l) (x1 d1 - x2 d2)`; closes at dimension `l + 2`.
pub fn family_pair(m: i64, l: i64) -> Vec<HomogeneousDerivation> {
    let q = LatticeVector::from_i64(&[1, 1]);
    let gamma = RationalVector::from_i64(&[2, -1]);
    let p = LatticeVector::from_i64(&[m, 2 * m + l]);
    let beta = RationalVector::from_i64(&[1, -1]);
    vec![
        HomogeneousDerivation::new(q, gamma).expect("nonzero"),
        HomogeneousDerivation::new(p, beta).expect("nonzero"),
    ]
}

/// `x2 d1` and `x1 d2`.
pub fn sl2_pair() -> Vec<HomogeneousDerivation> {
    vec![
        HomogeneousDerivation::nabla(0, &LatticeVector::from_i64(&[0, 1])).expect("valid"),
        HomogeneousDerivation::nabla(1, &LatticeVector::from_i64(&[1, 0])).expect("valid"),
    ]
}

/// A positive-weight two-cycle generating an infinite-dimensional algebra.
pub fn infinite_pair() -> Vec<HomogeneousDerivation> {
    vec![
        HomogeneousDerivation::nabla(0, &LatticeVector::from_i64(&[0, 2])).expect("valid"),
        HomogeneousDerivation::nabla(1, &LatticeVector::from_i64(&[1, 0])).expect("valid"),
    ]
}

/// Reproducible random diagonal-type sets, same distribution as the
/// consistency suites: `n <= 3`, `k <= 3`, degrees in `[0,3]`, coefficients
/// in `[-2,2]`.
pub fn random_type2_sets(seed: u64, count: usize) -> Vec<Vec<HomogeneousDerivation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=3usize);
            let k = rng.gen_range(1..=3usize);
            (0..k)
                .map(|_| loop {
                    let p: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
                    let beta: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                    if beta.iter().any(|&b| b != 0) {
                        return HomogeneousDerivation::delta(
                            &LatticeVector::from_i64(&p),
                            &RationalVector::from_i64(&beta),
                        )
                        .expect("valid");
                    }
                })
                .collect()
        })
        .collect()
}
