//! Named verification suites.
//!
//! Each suite checks one claim about a scheme and reports either success
//! with the number of cases examined, or the first counterexample. Error
//! vectors in counterexamples are printed as Pauli strings (ancillas, `|`,
//! data) together with the code column that each data qubit came from, so
//! they can be read in the code's original coordinates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::FieldOrder;
use crate::error::{Error, Result};
use crate::linalg::{F4Vector, Gf4};
use crate::oracle::{self, StateVector, MAX_QUBITS, TOLERANCE};
use crate::scheme::{
    ea_parameters, enumerate_errors, pair_syndrome, propagate_closed_form, run_cycle, singleton_slack, trace_syndrome,
    trace_syndrome_via_components, AncillaErrors, Pauli, PauliErrorVector, Scheme, SyndromeTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random vectors for the trace identity when exhaustive checking is too large.
    pub random_vectors: usize,
    /// Random multi-qubit errors for the propagation oracle.
    pub random_errors: usize,
    /// Random input states per correctable error.
    pub states_per_error: usize,
    /// Random cases for the negative control.
    pub negative_cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            random_vectors: 10_000,
            random_errors: 1000,
            states_per_error: 10,
            negative_cases: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteReport {
    fn pass(name: &'static str, statement: &'static str, cases: u64) -> Self {
        SuiteReport {
            name,
            statement,
            status: Status::Pass,
            cases,
            detail: None,
        }
    }

    fn fail(name: &'static str, statement: &'static str, cases: u64, detail: String) -> Self {
        SuiteReport {
            name,
            statement,
            status: Status::Fail,
            cases,
            detail: Some(detail),
        }
    }

    fn skipped(name: &'static str, statement: &'static str, reason: String) -> Self {
        SuiteReport {
            name,
            statement,
            status: Status::Skipped,
            cases: 0,
            detail: Some(reason),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

pub const SUITE_NAMES: [&str; 7] = [
    "trace-syndrome-identity",
    "syndrome-distinctness",
    "correction-guarantee",
    "propagation-oracle",
    "end-to-end-fidelity",
    "negative-control",
    "singleton-bound",
];

/// Runs every suite in [`SUITE_NAMES`] order. When the syndrome table cannot
/// be built the suites that need it are skipped.
pub fn run_all(scheme: &Scheme, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let distinct = syndrome_distinctness(scheme)?;
    let table_ok = !distinct.failed();
    let needs_table = |name: &'static str, statement: &'static str| {
        SuiteReport::skipped(name, statement, "the syndrome table could not be built".to_string())
    };
    Ok(vec![
        trace_syndrome_identity(scheme, config)?,
        distinct,
        if table_ok {
            correction_guarantee(scheme)?
        } else {
            needs_table(SUITE_NAMES[2], CORRECTION_STATEMENT)
        },
        propagation_oracle(scheme, config)?,
        if table_ok {
            end_to_end_fidelity(scheme, config)?
        } else {
            needs_table(SUITE_NAMES[4], END_TO_END_STATEMENT)
        },
        if table_ok {
            negative_control(scheme, config)?
        } else {
            needs_table(SUITE_NAMES[5], NEGATIVE_STATEMENT)
        },
        singleton_bound(scheme)?,
    ])
}

/// Pauli string plus the code column behind each data qubit.
pub fn describe_error(scheme: &Scheme, err: &PauliErrorVector) -> String {
    let half = scheme.n() - scheme.k();
    let cols: Vec<String> = (0..scheme.k())
        .map(|j| scheme.code().col_perm()[half + j].to_string())
        .collect();
    format!(
        "{} (e_X={}, e_Z={}; data qubits are code columns [{}])",
        err.pauli_string(),
        err.e_x(),
        err.e_z(),
        cols.join(",")
    )
}

fn f4_string(v: &F4Vector) -> String {
    v.iter().map(|x| x.token()).collect::<Vec<_>>().join(" ")
}

fn suite_rng(config: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(salt);
    rng
}

const CORRECTION_STATEMENT: &str = "every error of weight at most t with only the tolerated ancilla Pauli is corrected";
const END_TO_END_STATEMENT: &str = "the corrected output state equals the input for every correctable error";
const NEGATIVE_STATEMENT: &str =
    "with untolerated ancilla errors the simulated residual matches the predicted miscorrection";

const EXHAUSTIVE_VECTOR_CAP: u64 = 1 << 16;

/// Over GF(4): `Tr(H_Q e) = H_Z Tr(e) + H_X Tr(ωe)`.
/// Over GF(2): the pair syndrome equals `(H e0, H e1)`.
pub fn trace_syndrome_identity(scheme: &Scheme, config: &SuiteConfig) -> Result<SuiteReport> {
    const NAME: &str = "trace-syndrome-identity";
    const STATEMENT: &str = "the trace syndrome computed over GF(4) equals the one computed from the binary components";
    let n = scheme.n();
    let exhaustive = 4u64.checked_pow(n as u32).filter(|&c| c <= EXHAUSTIVE_VECTOR_CAP);
    let mut rng = suite_rng(config, 1);
    let vectors: Box<dyn Iterator<Item = F4Vector>> = match exhaustive {
        Some(count) => Box::new((0..count).map(move |mut idx| {
            let mut v = F4Vector::zeros(n);
            for i in 0..n {
                v.set(i, Gf4::ALL[(idx & 3) as usize]);
                idx >>= 2;
            }
            v
        })),
        None => Box::new((0..config.random_vectors).map(move |_| {
            let elems: Vec<Gf4> = (0..n).map(|_| Gf4::ALL[rng.random_range(0..4usize)]).collect();
            F4Vector::from_elems(&elems)
        })),
    };

    let h2 = scheme.code().parity_check_f2();
    let mut cases = 0u64;
    for e in vectors {
        cases += 1;
        let (lhs, rhs) = match scheme.code().field() {
            FieldOrder::Quaternary => (trace_syndrome(scheme, &e)?, trace_syndrome_via_components(scheme, &e)?),
            FieldOrder::Binary => {
                let h = h2.as_ref().expect("binary code");
                let (e0, e1) = (e.trace(), e.trace_omega());
                (
                    pair_syndrome(scheme, &e0, &e1)?,
                    h.mul_vec(&e0)?.concat(&h.mul_vec(&e1)?),
                )
            }
        };
        if lhs != rhs {
            return Ok(SuiteReport::fail(
                NAME,
                STATEMENT,
                cases,
                format!(
                    "e = [{}] in code coordinates: field path {lhs}, component path {rhs}",
                    f4_string(&scheme.code().to_user_order(&e))
                ),
            ));
        }
    }
    Ok(SuiteReport::pass(NAME, STATEMENT, cases))
}

/// Table construction at the full radius meets no syndrome collision.
pub fn syndrome_distinctness(scheme: &Scheme) -> Result<SuiteReport> {
    const NAME: &str = "syndrome-distinctness";
    const STATEMENT: &str = "correctable errors have pairwise distinct syndromes";
    let t = scheme.code().radius()?;
    match SyndromeTable::build(scheme, t) {
        Ok(table) => Ok(SuiteReport::pass(NAME, STATEMENT, table.len() as u64)),
        Err(Error::TableCollision { key, first, second }) => Ok(SuiteReport::fail(
            NAME,
            STATEMENT,
            0,
            format!("syndrome {key} is shared by {first} and {second}"),
        )),
        Err(e) => Err(e),
    }
}

/// Every error of weight `≤ t` with tolerated ancilla errors is corrected.
pub fn correction_guarantee(scheme: &Scheme) -> Result<SuiteReport> {
    const NAME: &str = "correction-guarantee";
    const STATEMENT: &str = CORRECTION_STATEMENT;
    let t = scheme.code().radius()?;
    let table = SyndromeTable::build(scheme, t)?;
    let anc = AncillaErrors::Only(scheme.tolerated_ancilla_pauli());
    let mut cases = 0;
    for err in enumerate_errors(scheme.layout(), t, anc) {
        cases += 1;
        let out = run_cycle(scheme, &table, &err)?;
        if !out.success {
            return Ok(SuiteReport::fail(
                NAME,
                STATEMENT,
                cases,
                format!(
                    "{}: ancilla outcome {}, residual X {} Z {}",
                    describe_error(scheme, &err),
                    out.anc_outcome,
                    out.residual_x,
                    out.residual_z
                ),
            ));
        }
    }
    Ok(SuiteReport::pass(NAME, STATEMENT, cases))
}

fn random_pauli_error<R: Rng + ?Sized>(scheme: &Scheme, min_weight: usize, rng: &mut R) -> PauliErrorVector {
    loop {
        let mut err = PauliErrorVector::identity(scheme.layout());
        for q in 0..scheme.n_phys() {
            match rng.random_range(0..4u8) {
                0 => {}
                p => err.apply(q, Pauli::NON_IDENTITY[(p - 1) as usize]),
            }
        }
        if err.weight() >= min_weight {
            return err;
        }
    }
}

fn too_large(scheme: &Scheme) -> Option<String> {
    (scheme.n_phys() > MAX_QUBITS)
        .then(|| format!("{} qubits exceeds the statevector cap of {MAX_QUBITS}", scheme.n_phys()))
}

/// Gate-level simulation agrees with the closed-form propagation, for every
/// single-qubit error and for random multi-qubit errors including ancilla
/// errors of either type.
pub fn propagation_oracle(scheme: &Scheme, config: &SuiteConfig) -> Result<SuiteReport> {
    const NAME: &str = "propagation-oracle";
    const STATEMENT: &str = "the closed-form propagation matches statevector simulation";
    if let Some(reason) = too_large(scheme) {
        return Ok(SuiteReport::skipped(NAME, STATEMENT, reason));
    }
    let mut rng = suite_rng(config, 2);
    let singles = enumerate_errors(scheme.layout(), 1, AncillaErrors::Any);
    let randoms: Vec<PauliErrorVector> = (0..config.random_errors)
        .map(|_| random_pauli_error(scheme, 2, &mut rng))
        .collect();
    let mut cases = 0;
    for err in singles.iter().chain(&randoms) {
        cases += 1;
        let psi = StateVector::random(scheme.k(), &mut rng)?;
        let detail = match oracle::check_propagation(scheme, err, &psi) {
            Ok(check) if check.passed() => continue,
            Ok(check) => format!(
                "closed form: outcome {} data X {} Z {}; simulation: outcome {} fidelity {:.3e}",
                check.expected.anc_outcome, check.expected.data_x, check.expected.data_z, check.outcome, check.fidelity
            ),
            Err(Error::NonProductState { max_probability }) => {
                let p = propagate_closed_form(scheme, err)?;
                format!(
                    "closed form: outcome {} data X {} Z {}; simulation: ancillas not in a basis state (max probability {max_probability:.3e})",
                    p.anc_outcome, p.data_x, p.data_z
                )
            }
            Err(e) => return Err(e),
        };
        return Ok(SuiteReport::fail(
            NAME,
            STATEMENT,
            cases,
            format!("{}: {detail}", describe_error(scheme, err)),
        ));
    }
    Ok(SuiteReport::pass(NAME, STATEMENT, cases))
}

/// Encode, error, decode and correct on the statevector returns the input
/// state for every correctable error.
pub fn end_to_end_fidelity(scheme: &Scheme, config: &SuiteConfig) -> Result<SuiteReport> {
    const NAME: &str = "end-to-end-fidelity";
    const STATEMENT: &str = END_TO_END_STATEMENT;
    if let Some(reason) = too_large(scheme) {
        return Ok(SuiteReport::skipped(NAME, STATEMENT, reason));
    }
    let t = scheme.code().radius()?;
    let table = SyndromeTable::build(scheme, t)?;
    let mut rng = suite_rng(config, 3);
    let anc = AncillaErrors::Only(scheme.tolerated_ancilla_pauli());
    let mut cases = 0;
    for err in enumerate_errors(scheme.layout(), t, anc) {
        for _ in 0..config.states_per_error {
            cases += 1;
            let psi = StateVector::random(scheme.k(), &mut rng)?;
            let check = oracle::check_end_to_end(scheme, &table, &err, &psi)?;
            if !check.recovered() {
                return Ok(SuiteReport::fail(
                    NAME,
                    STATEMENT,
                    cases,
                    format!(
                        "{}: outcome {}, decoding {:?}, fidelity {:.3e}",
                        describe_error(scheme, &err),
                        check.outcome,
                        check.decoding,
                        check.fidelity
                    ),
                ));
            }
        }
    }
    Ok(SuiteReport::pass(NAME, STATEMENT, cases))
}

/// Errors with the untolerated ancilla Pauli: the simulated post-correction
/// residual equals the one the closed form predicts, whether or not the
/// cycle succeeds.
pub fn negative_control(scheme: &Scheme, config: &SuiteConfig) -> Result<SuiteReport> {
    const NAME: &str = "negative-control";
    const STATEMENT: &str = NEGATIVE_STATEMENT;
    if let Some(reason) = too_large(scheme) {
        return Ok(SuiteReport::skipped(NAME, STATEMENT, reason));
    }
    let t = scheme.code().radius()?;
    let table = SyndromeTable::build(scheme, t)?;
    let mut rng = suite_rng(config, 4);
    let bad = match scheme.tolerated_ancilla_pauli() {
        Pauli::Z => Pauli::X,
        _ => Pauli::Z,
    };
    let mut miscorrected = 0;
    for case in 1..=config.negative_cases as u64 {
        let mut err = random_pauli_error(scheme, 0, &mut rng);
        let q = rng.random_range(0..scheme.n_anc());
        // force an untolerated component on at least one ancilla
        let p = err.pauli_at(q);
        let forced = Pauli::from_bits(p.has_x() || bad == Pauli::X, p.has_z() || bad == Pauli::Z);
        err.apply(q, p);
        err.apply(q, forced);

        let predicted = run_cycle(scheme, &table, &err)?;
        if !predicted.success {
            miscorrected += 1;
        }
        let psi = StateVector::random(scheme.k(), &mut rng)?;
        let check = oracle::check_end_to_end(scheme, &table, &err, &psi)?;
        let mut expected = psi.clone();
        expected.apply_pauli_masks(&predicted.residual_x, &predicted.residual_z, 0);
        let fidelity = expected.fidelity(&check.output);
        let simulated_ok = check.outcome == predicted.anc_outcome && fidelity >= 1.0 - TOLERANCE;
        if !simulated_ok {
            return Ok(SuiteReport::fail(
                NAME,
                STATEMENT,
                case,
                format!(
                    "{}: predicted outcome {} residual X {} Z {}; simulated outcome {} fidelity with prediction {:.3e}",
                    describe_error(scheme, &err),
                    predicted.anc_outcome,
                    predicted.residual_x,
                    predicted.residual_z,
                    check.outcome,
                    fidelity
                ),
            ));
        }
    }
    let mut report = SuiteReport::pass(NAME, STATEMENT, config.negative_cases as u64);
    report.detail = Some(format!(
        "{miscorrected} of {} cases miscorrected",
        config.negative_cases
    ));
    Ok(report)
}

/// MDS codes meet the entanglement-assisted Singleton bound with equality;
/// other codes have non-negative slack.
pub fn singleton_bound(scheme: &Scheme) -> Result<SuiteReport> {
    const NAME: &str = "singleton-bound";
    const STATEMENT: &str = "k_e - c <= n_e - 2d_e + 2, with equality exactly for MDS codes";
    let params = ea_parameters(scheme.code())?;
    let check = singleton_slack(&params);
    let mds = scheme.code().is_mds()?;
    let ok = check.slack >= 0 && (check.slack == 0) == mds;
    let detail = format!(
        "{params}: {} vs {}, slack {}{}",
        check.lhs,
        check.rhs,
        check.slack,
        if check.hypothesis_holds {
            ""
        } else {
            " (outside n_e >= 2(d_e - 1))"
        }
    );
    let mut report = if ok {
        SuiteReport::pass(NAME, STATEMENT, 1)
    } else {
        SuiteReport::fail(
            NAME,
            STATEMENT,
            1,
            format!("{detail}; code is {}MDS", if mds { "" } else { "not " }),
        )
    };
    if ok {
        report.detail = Some(detail);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{catalog_get, CATALOG};

    fn quick() -> SuiteConfig {
        SuiteConfig {
            seed: 3,
            random_vectors: 500,
            random_errors: 50,
            states_per_error: 2,
            negative_cases: 20,
        }
    }

    #[test]
    fn all_suites_pass_on_catalog() {
        for entry in CATALOG {
            let s = Scheme::build(entry.code()).unwrap();
            for scheme in [s.clone(), s.dualize()] {
                let reports = run_all(&scheme, &quick()).unwrap();
                assert_eq!(reports.len(), SUITE_NAMES.len());
                for (r, name) in reports.iter().zip(SUITE_NAMES) {
                    assert_eq!(r.name, name);
                    assert_eq!(
                        r.status,
                        Status::Pass,
                        "{} {}: {:?}",
                        entry.name,
                        scheme.name(),
                        r.detail
                    );
                }
            }
        }
    }

    #[test]
    fn wrong_declared_distance_is_reported_as_collision() {
        let code = catalog_get("mds4_2_q").unwrap().with_declared_distance(5);
        let s = Scheme::build(code).unwrap();
        let r = syndrome_distinctness(&s).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.detail.unwrap().contains("shared by"));
    }

    #[test]
    fn overstated_distance_breaks_correction() {
        // d = 5 claims t = 2; the table build then fails before any cycle.
        let code = catalog_get("hamming7_b").unwrap().with_declared_distance(5);
        let s = Scheme::build(code).unwrap();
        assert!(correction_guarantee(&s).is_err());
    }

    #[test]
    fn run_all_skips_table_suites_after_collision() {
        let code = catalog_get("mds4_2_q").unwrap().with_declared_distance(5);
        let s = Scheme::build(code).unwrap();
        let reports = run_all(&s, &quick()).unwrap();
        let status: Vec<&Status> = reports.iter().map(|r| &r.status).collect();
        assert_eq!(status[1], &Status::Fail);
        assert_eq!(status[2], &Status::Skipped);
        assert_eq!(status[4], &Status::Skipped);
        assert_eq!(status[5], &Status::Skipped);
        assert_eq!(status[3], &Status::Pass);
    }

    #[test]
    fn negative_control_finds_miscorrections() {
        let s = Scheme::build(catalog_get("mds4_2_q").unwrap()).unwrap();
        let r = negative_control(&s, &quick()).unwrap();
        assert_eq!(r.status, Status::Pass);
        let detail = r.detail.unwrap();
        assert!(!detail.starts_with("0 of"), "{detail}");
    }
}
