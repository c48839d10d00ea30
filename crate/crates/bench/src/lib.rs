//! Fixtures shared by the benchmarks.

use lessnoisy::noise::{sample_adversarial, trial_rng};
use lessnoisy::{catalog_get, PauliErrorVector, Scheme, SyndromeTable};

/// Scheme and full-radius table for a catalog code.
pub fn fixture(name: &str) -> (Scheme, SyndromeTable) {
    let code = catalog_get(name).expect("catalog code");
    let scheme = Scheme::build(code).expect("scheme");
    let t = scheme.code().radius().expect("distance is known");
    let table = SyndromeTable::build(&scheme, t).expect("table");
    (scheme, table)
}

/// `count` errors drawn uniformly from the correctable set.
pub fn correctable_errors(scheme: &Scheme, count: usize, seed: u64) -> Vec<PauliErrorVector> {
    let t = scheme.code().radius().expect("distance is known");
    let mut rng = trial_rng(seed, 0);
    (0..count).map(|_| sample_adversarial(scheme, t, &mut rng)).collect()
}
