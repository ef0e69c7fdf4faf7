//! Large randomized consistency sweeps, ignored by default. Run with
//!
//! ```sh
//! cargo test -p findim-core --test stress -- --ignored --nocapture
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use findim_core::closure::close;
use findim_core::criteria::{decide_type1, decide_type2, verify_witness, Verdict};
use findim_core::{HomogeneousDerivation, LatticeVector, RationalVector};

fn random_type1_set(rng: &mut ChaCha8Rng) -> Vec<HomogeneousDerivation> {
    let n = rng.gen_range(1..=3usize);
    let k = rng.gen_range(1..=4usize);
    (0..k)
        .map(|_| {
            let var = rng.gen_range(0..n);
            let mut a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            a[var] = 0;
            HomogeneousDerivation::nabla(var, &LatticeVector::from_i64(&a)).unwrap()
        })
        .collect()
}

fn random_type2_set(rng: &mut ChaCha8Rng) -> Vec<HomogeneousDerivation> {
    let n = rng.gen_range(1..=3usize);
    let k = rng.gen_range(1..=4usize);
    (0..k)
        .map(|_| loop {
            let p: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let beta: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            if beta.iter().any(|&b| b != 0) {
                return HomogeneousDerivation::delta(
                    &LatticeVector::from_i64(&p),
                    &RationalVector::from_i64(&beta),
                )
                .unwrap();
            }
        })
        .collect()
}

fn sweep(
    label: &str,
    rounds: usize,
    mut make: impl FnMut(&mut ChaCha8Rng) -> Vec<HomogeneousDerivation>,
    decide: impl Fn(&[HomogeneousDerivation]) -> findim_core::criteria::DecisionReport,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x57E55);
    let (mut finite, mut infinite) = (0usize, 0usize);
    for round in 0..rounds {
        let gens = make(&mut rng);
        let report = decide(&gens);
        assert!(
            verify_witness(&gens, &report),
            "round {round}: witness failed re-validation on {gens:?}"
        );
        match report.verdict {
            Verdict::Finite => {
                finite += 1;
                let result = close(&gens, 60, 10_000).unwrap();
                assert!(
                    result.is_closed(),
                    "round {round}: decided finite, closure capped on {gens:?}"
                );
                let alg = result.closed().unwrap();
                assert!(alg.verify().unwrap(), "round {round}: saturation re-check");
                assert!(alg.basis.respects_polynomial_grading());
            }
            Verdict::Infinite => {
                infinite += 1;
                let result = close(&gens, 40, 1_500).unwrap();
                assert!(
                    !result.is_closed(),
                    "round {round}: decided infinite, closure closed on {gens:?}"
                );
            }
            Verdict::Undecided => panic!("pure sets always get a verdict"),
        }
    }
    println!(
        "stress {label}: {rounds} sets, {finite} finite / {infinite} infinite, zero contradictions"
    );
}

#[test]
#[ignore = "long-running randomized sweep"]
fn stress_type1_decider() {
    sweep("type I", 2_000, random_type1_set, |gens| {
        decide_type1(gens).unwrap()
    });
}

#[test]
#[ignore = "long-running randomized sweep"]
fn stress_type2_decider() {
    sweep("type II", 2_000, random_type2_set, |gens| {
        decide_type2(gens).unwrap()
    });
}
