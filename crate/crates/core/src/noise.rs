//! Pauli error sampling and Monte Carlo estimation of failure rates.
//!
//! Ancillas only ever receive the Pauli their scheme tolerates (Z, or X for
//! the dual scheme); the other ancilla error type has probability zero.
//!
//! Randomness: trial `i` of a run with seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`. Every trial owns its
//! stream, so serial and parallel runs see the same errors.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scheme::{binomial, run_cycle, Pauli, PauliErrorVector, Scheme, SyndromeTable};

/// Error distribution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NoiseKind {
    /// Uniform over all errors of weight at most `t`.
    Adversarial { t: usize },
    /// Independent per qubit: each data qubit suffers X, Y or Z with
    /// probability `p_data` each; each ancilla suffers its tolerated Pauli
    /// with probability `p_anc`.
    Iid { p_data: f64, p_anc: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseModel {
    pub fn adversarial(t: usize, seed: u64) -> NoiseModel {
        NoiseModel {
            kind: NoiseKind::Adversarial { t },
            seed,
        }
    }

    pub fn iid(p_data: f64, p_anc: f64, seed: u64) -> Result<NoiseModel> {
        if !(0.0..=1.0 / 3.0).contains(&p_data) {
            return Err(Error::InvalidProbability {
                name: "p_data",
                value: p_data,
            });
        }
        if !(0.0..=1.0).contains(&p_anc) {
            return Err(Error::InvalidProbability {
                name: "p_anc",
                value: p_anc,
            });
        }
        Ok(NoiseModel {
            kind: NoiseKind::Iid { p_data, p_anc },
            seed,
        })
    }

    pub fn sample<R: Rng + ?Sized>(&self, scheme: &Scheme, rng: &mut R) -> PauliErrorVector {
        match self.kind {
            NoiseKind::Adversarial { t } => sample_adversarial(scheme, t, rng),
            NoiseKind::Iid { p_data, p_anc } => sample_iid(scheme, p_data, p_anc, rng),
        }
    }
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform draw from the errors of weight `≤ t` whose ancilla part is the
/// tolerated Pauli only.
pub fn sample_adversarial<R: Rng + ?Sized>(scheme: &Scheme, t: usize, rng: &mut R) -> PauliErrorVector {
    let layout = scheme.layout();
    let (m, k) = (layout.n_anc(), layout.k);
    let t = t.min(layout.n_phys());

    // (ancilla count, data count, number of errors in the class)
    let classes: Vec<(usize, usize, u128)> = (0..=t)
        .flat_map(|w| (0..=w.min(m)).map(move |a| (a, w - a)))
        .filter(|&(_, b)| b <= k)
        .map(|(a, b)| {
            (
                a,
                b,
                binomial(m as u128, a as u128) * binomial(k as u128, b as u128) * 3u128.pow(b as u32),
            )
        })
        .collect();
    let total: u128 = classes.iter().map(|c| c.2).sum();
    let mut pick = rng.random_range(0..total);
    let &(a, b, _) = classes
        .iter()
        .find(|c| {
            if pick < c.2 {
                true
            } else {
                pick -= c.2;
                false
            }
        })
        .expect("pick is below the total");

    let mut err = PauliErrorVector::identity(layout);
    let anc_pauli = scheme.tolerated_ancilla_pauli();
    if a > 0 {
        for q in index::sample(rng, m, a) {
            err.apply(q, anc_pauli);
        }
    }
    if b > 0 {
        for j in index::sample(rng, k, b) {
            err.apply(m + j, Pauli::NON_IDENTITY[rng.random_range(0..3)]);
        }
    }
    err
}

/// Independent errors on every qubit.
pub fn sample_iid<R: Rng + ?Sized>(scheme: &Scheme, p_data: f64, p_anc: f64, rng: &mut R) -> PauliErrorVector {
    let layout = scheme.layout();
    let mut err = PauliErrorVector::identity(layout);
    let anc_pauli = scheme.tolerated_ancilla_pauli();
    for q in 0..layout.n_anc() {
        if rng.random::<f64>() < p_anc {
            err.apply(q, anc_pauli);
        }
    }
    for q in layout.n_anc()..layout.n_phys() {
        let u: f64 = rng.random();
        let p = if u < p_data {
            Pauli::X
        } else if u < 2.0 * p_data {
            Pauli::Y
        } else if u < 3.0 * p_data {
            Pauli::Z
        } else {
            continue;
        };
        err.apply(q, p);
    }
    err
}

/// Outcome of a Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonteCarloReport {
    pub trials: u64,
    pub failures: u64,
    pub failure_rate: f64,
    /// Wilson score interval at 95%.
    pub ci95: [f64; 2],
}

/// Runs `trials` correction cycles on the global rayon pool.
pub fn monte_carlo(
    scheme: &Scheme,
    table: &SyndromeTable,
    model: &NoiseModel,
    trials: u64,
) -> Result<MonteCarloReport> {
    table.check_matches(scheme)?;
    let failures = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<u64> {
            let mut rng = trial_rng(model.seed, i);
            let err = model.sample(scheme, &mut rng);
            assert!(
                scheme.ancilla_assumption_holds(&err),
                "sampler produced an untolerated ancilla error"
            );
            Ok(u64::from(!run_cycle(scheme, table, &err)?.success))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(MonteCarloReport {
        trials,
        failures,
        failure_rate: if trials == 0 {
            0.0
        } else {
            failures as f64 / trials as f64
        },
        ci95: wilson_interval(failures, trials),
    })
}

/// [`monte_carlo`] on a dedicated pool of `threads` workers.
pub fn monte_carlo_with_threads(
    scheme: &Scheme,
    table: &SyndromeTable,
    model: &NoiseModel,
    trials: u64,
    threads: usize,
) -> Result<MonteCarloReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction");
    pool.install(|| monte_carlo(scheme, table, model, trials))
}

/// Wilson score interval for a binomial proportion at 95% confidence.
pub fn wilson_interval(successes: u64, trials: u64) -> [f64; 2] {
    if trials == 0 {
        return [0.0, 1.0];
    }
    const Z: f64 = 1.959_963_984_540_054;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The interval endpoints are exactly 0 and 1 at the extremes.
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    [lo, hi]
}

/// JSON report of a `simulate` run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub schema_version: u32,
    pub code: String,
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_anc: Option<f64>,
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci95: [f64; 2],
    pub seed: u64,
}

impl SimulationReport {
    pub const SCHEMA_VERSION: u32 = 1;

    pub fn new(code: &str, scheme: &Scheme, model: &NoiseModel, report: &MonteCarloReport) -> SimulationReport {
        let (t, p, p_anc) = match model.kind {
            NoiseKind::Adversarial { t } => (Some(t), None, None),
            NoiseKind::Iid { p_data, p_anc } => (None, Some(p_data), Some(p_anc)),
        };
        SimulationReport {
            schema_version: Self::SCHEMA_VERSION,
            code: code.to_string(),
            variant: scheme.name().to_string(),
            t,
            p,
            p_anc,
            trials: report.trials,
            failures: report.failures,
            rate: report.failure_rate,
            ci95: report.ci95,
            seed: model.seed,
        }
    }
}
