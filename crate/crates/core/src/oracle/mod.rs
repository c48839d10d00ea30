//! Dense statevector simulation of the encode, error, decode cycle.
//!
//! This is an independent check of the algebraic propagation: nothing here
//! calls into the closed form except to compare against it.

mod circuit;
mod state;

pub use circuit::{encoding_circuit, encoding_circuit_ordered, inverse, run, Gate, GateOrder};
pub use state::{StateVector, MAX_QUBITS};

use crate::error::{Error, Result};
use crate::linalg::F2Vector;
use crate::scheme::{
    decode, propagate_closed_form, AncillaBasis, Decoding, PauliErrorVector, Propagation, Scheme, SyndromeTable,
};

/// Fidelities and outcome probabilities must be within this of 1.
pub const TOLERANCE: f64 = 1e-10;

/// Ancillas in `|0⟩_X` (or `|0⟩_Z` for the dual scheme) tensored with `psi`,
/// then encoded.
pub fn prepare(scheme: &Scheme, psi: &StateVector) -> Result<StateVector> {
    if psi.num_qubits() != scheme.k() {
        return Err(Error::DimensionMismatch {
            expected: scheme.k(),
            found: psi.num_qubits(),
        });
    }
    let mut anc = StateVector::zero(scheme.n_anc())?;
    if scheme.basis() == AncillaBasis::X {
        for q in 0..scheme.n_anc() {
            anc.apply_h(q);
        }
    }
    let mut s = anc.tensor(psi)?;
    run(&encoding_circuit(scheme), &mut s);
    Ok(s)
}

/// Applies the decoding circuit and measures the ancillas in the scheme's
/// basis. Returns the outcome and the data register.
pub fn decode_and_measure(scheme: &Scheme, encoded: &StateVector) -> Result<(F2Vector, StateVector)> {
    let mut s = encoded.clone();
    run(&inverse(&encoding_circuit(scheme)), &mut s);
    if scheme.basis() == AncillaBasis::X {
        for q in 0..scheme.n_anc() {
            s.apply_h(q);
        }
    }
    s.measure_low(scheme.n_anc())
}

/// Statevector run of one error compared with the closed form.
#[derive(Clone, Debug)]
pub struct PropagationCheck {
    pub expected: Propagation,
    pub outcome: F2Vector,
    /// `|⟨X^{data_x} Z^{data_z} ψ | data⟩|²`.
    pub fidelity: f64,
}

impl PropagationCheck {
    pub fn passed(&self) -> bool {
        self.outcome == self.expected.anc_outcome && self.fidelity >= 1.0 - TOLERANCE
    }
}

pub fn check_propagation(scheme: &Scheme, err: &PauliErrorVector, psi: &StateVector) -> Result<PropagationCheck> {
    let expected = propagate_closed_form(scheme, err)?;
    let mut s = prepare(scheme, psi)?;
    s.apply_pauli(err)?;
    let (outcome, data) = decode_and_measure(scheme, &s)?;
    let mut target = psi.clone();
    target.apply_pauli_masks(&expected.data_x, &expected.data_z, 0);
    Ok(PropagationCheck {
        fidelity: target.fidelity(&data),
        expected,
        outcome,
    })
}

/// Full cycle on the statevector: encode, error, decode, look up, correct.
#[derive(Clone, Debug)]
pub struct EndToEndCheck {
    pub outcome: F2Vector,
    pub decoding: Decoding,
    /// Data register after correction.
    pub output: StateVector,
    /// `|⟨ψ|output⟩|²`.
    pub fidelity: f64,
}

impl EndToEndCheck {
    /// The output equals the input. An outcome missing from the table still
    /// counts when the error never reached the data.
    pub fn recovered(&self) -> bool {
        self.fidelity >= 1.0 - TOLERANCE
    }
}

pub fn check_end_to_end(
    scheme: &Scheme,
    table: &SyndromeTable,
    err: &PauliErrorVector,
    psi: &StateVector,
) -> Result<EndToEndCheck> {
    table.check_matches(scheme)?;
    let mut s = prepare(scheme, psi)?;
    s.apply_pauli(err)?;
    let (outcome, mut data) = decode_and_measure(scheme, &s)?;
    let decoding = decode(table, &outcome);
    if let Decoding::Corrected { data_x, data_z, .. } = &decoding {
        data.apply_pauli_masks(data_x, data_z, 0);
    }
    Ok(EndToEndCheck {
        fidelity: psi.fidelity(&data),
        output: data,
        outcome,
        decoding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{catalog_get, CATALOG};
    use crate::noise::trial_rng;
    use crate::scheme::{enumerate_errors, AncillaErrors, Pauli};
    use num_complex::Complex64;

    fn schemes() -> Vec<Scheme> {
        CATALOG
            .iter()
            .flat_map(|e| {
                let s = Scheme::build(e.code()).unwrap();
                [s.dualize(), s]
            })
            .collect()
    }

    /// `Q |μ⟩|d⟩ = |μ⟩ X^{μH_X'} Z^{μH_Z'} |d⟩`, built directly from the blocks.
    fn definitional_q(scheme: &Scheme, input: &StateVector) -> StateVector {
        let m = scheme.n_anc();
        let k = scheme.k();
        let mut out = vec![Complex64::new(0.0, 0.0); input.amplitudes().len()];
        for (idx, amp) in input.amplitudes().iter().enumerate() {
            let mu = F2Vector::from_u64((idx & ((1 << m) - 1)) as u64, m);
            let d = F2Vector::from_u64((idx >> m) as u64, k);
            let x = scheme.h_xp().vec_mul(&mu).unwrap();
            let z = scheme.h_zp().vec_mul(&mu).unwrap();
            let sign = if z.dot(&d) { -1.0 } else { 1.0 };
            let d2 = &d + &x;
            out[(idx & ((1 << m) - 1)) | ((d2.to_u64() as usize) << m)] += amp * sign;
        }
        StateVector::from_amplitudes(input.num_qubits(), out).unwrap()
    }

    #[test]
    fn gate_list_matches_definition() {
        let mut rng = trial_rng(11, 0);
        for s in schemes() {
            if s.n_phys() > 8 || s.is_dual() {
                continue;
            }
            for _ in 0..5 {
                let input = StateVector::random(s.n_phys(), &mut rng).unwrap();
                let expected = definitional_q(&s, &input);
                let mut got = input.clone();
                run(&encoding_circuit(&s), &mut got);
                assert!((got.fidelity(&expected) - 1.0).abs() < 1e-12, "{}", s.name());
                let diff: f64 = got
                    .amplitudes()
                    .iter()
                    .zip(expected.amplitudes())
                    .map(|(a, b)| (a - b).norm_sqr())
                    .sum();
                assert!(diff < 1e-20, "{} differs by more than a global phase", s.name());
            }
        }
    }

    #[test]
    fn swapped_gate_order_breaks_flip_errors() {
        // With CX before CZ the branch phase (-1)^{(μH_Z')·(μH_X')} survives
        // decoding for some ancilla X errors.
        let s = Scheme::build(catalog_get("mds4_2_q").unwrap()).unwrap();
        let mut rng = trial_rng(12, 0);
        let psi = StateVector::random(s.k(), &mut rng).unwrap();
        let mut broken = 0;
        for q in 0..s.n_anc() {
            let err = PauliErrorVector::from_paulis(s.layout(), &[(q, Pauli::X)]);
            let expected = propagate_closed_form(&s, &err).unwrap();
            let mut st = StateVector::zero(s.n_anc()).unwrap().tensor(&psi).unwrap();
            for a in 0..s.n_anc() {
                st.apply_h(a);
            }
            let circ = encoding_circuit_ordered(&s, GateOrder::CxThenCz);
            run(&circ, &mut st);
            st.apply_pauli(&err).unwrap();
            run(&inverse(&circ), &mut st);
            for a in 0..s.n_anc() {
                st.apply_h(a);
            }
            match st.measure_low(s.n_anc()) {
                Ok((outcome, data)) => {
                    let mut target = psi.clone();
                    target.apply_pauli_masks(&expected.data_x, &expected.data_z, 0);
                    if outcome != expected.anc_outcome || target.fidelity(&data) < 1.0 - TOLERANCE {
                        broken += 1;
                    }
                }
                Err(_) => broken += 1,
            }
        }
        assert!(broken > 0);
    }

    #[test]
    fn propagation_matches_closed_form_for_all_single_errors() {
        let mut rng = trial_rng(13, 0);
        for s in schemes() {
            let psi = StateVector::random(s.k(), &mut rng).unwrap();
            for err in enumerate_errors(s.layout(), 1, AncillaErrors::Any) {
                let check = check_propagation(&s, &err, &psi).unwrap();
                assert!(check.passed(), "{} {err:?}: {check:?}", s.name());
            }
        }
    }

    #[test]
    fn end_to_end_recovers_within_radius() {
        let mut rng = trial_rng(14, 0);
        for s in schemes() {
            let t = s.code().radius().unwrap();
            let table = SyndromeTable::build(&s, t).unwrap();
            let psi = StateVector::random(s.k(), &mut rng).unwrap();
            let anc = AncillaErrors::Only(s.tolerated_ancilla_pauli());
            for err in enumerate_errors(s.layout(), t, anc) {
                let check = check_end_to_end(&s, &table, &err, &psi).unwrap();
                assert!(check.recovered(), "{} {err:?}: {check:?}", s.name());
            }
        }
    }

    #[test]
    fn untolerated_ancilla_error_is_not_recovered() {
        let s = Scheme::build(catalog_get("mds4_2_q").unwrap()).unwrap();
        let table = SyndromeTable::build(&s, 1).unwrap();
        let mut rng = trial_rng(15, 0);
        let psi = StateVector::random(s.k(), &mut rng).unwrap();
        let bad = (0..s.n_anc())
            .map(|q| PauliErrorVector::from_paulis(s.layout(), &[(q, Pauli::X)]))
            .filter(|err| !check_end_to_end(&s, &table, err, &psi).unwrap().recovered())
            .count();
        assert!(bad > 0);
    }

    #[test]
    fn prepare_rejects_wrong_data_size() {
        let s = Scheme::build(catalog_get("rep3_b").unwrap()).unwrap();
        let psi = StateVector::zero(2).unwrap();
        assert!(prepare(&s, &psi).is_err());
    }
}
