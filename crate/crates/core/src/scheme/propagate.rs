//! Syndromes and the closed form of `Q† X^{e_X} Z^{e_Z} Q`.

use super::pauli::PauliErrorVector;
use super::{AncillaBasis, Scheme, Variant};
use crate::error::{Error, Result};
use crate::linalg::{reconstruct_from_traces, F2Vector, F4Vector};

/// `e = ω²(e_Z_l0, e_X_r) + (e_Z_l1, e_Z_r)`, a vector in GF(4)^n.
///
/// By construction `Tr(e) = (e_Z_l0, e_X_r)` and `Tr(ωe) = (e_Z_l1, e_Z_r)`.
/// `e_X_l` does not enter.
pub fn combined_error(err: &PauliErrorVector) -> F4Vector {
    let t0 = err.z_left0().concat(&err.x_right());
    let t1 = err.z_left1().concat(&err.z_right());
    reconstruct_from_traces(&t0, &t1).expect("segments of one layout have equal lengths")
}

/// `Tr(H_Q eᵀ)`, evaluated over GF(4).
pub fn trace_syndrome(scheme: &Scheme, e: &F4Vector) -> Result<F2Vector> {
    let h_q = quaternary_check(scheme)?;
    Ok(h_q.h_q.mul_vec(e)?.trace())
}

/// `H_Z Tr(eᵀ) + H_X Tr(ωeᵀ)`, evaluated over GF(2).
pub fn trace_syndrome_via_components(scheme: &Scheme, e: &F4Vector) -> Result<F2Vector> {
    let h_q = quaternary_check(scheme)?;
    let z = h_q.h_z.mul_vec(&e.trace())?;
    let x = h_q.h_x.mul_vec(&e.trace_omega())?;
    Ok(&z + &x)
}

fn quaternary_check(scheme: &Scheme) -> Result<&super::TraceParityCheck> {
    scheme.trace_check().ok_or(Error::WrongField {
        expected: 4,
        found: scheme.code().field().order(),
    })
}

/// Ancilla syndrome from the trace pair `(e0, e1) = (Tr(e), Tr(ωe))`:
/// `(e0_l, e1_l) + H_Z' e0_rᵀ + H_X' e1_rᵀ`.
///
/// For binary codes this is `(H e0ᵀ, H e1ᵀ)`; for quaternary codes it equals
/// `Tr(H_Q eᵀ)`.
pub fn pair_syndrome(scheme: &Scheme, e0: &F2Vector, e1: &F2Vector) -> Result<F2Vector> {
    let n = scheme.n();
    let half = n - scheme.k();
    for v in [e0, e1] {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let left = e0.slice(0, half).concat(&e1.slice(0, half));
    let z = scheme.h_zp().mul_vec(&e0.slice(half, n))?;
    let x = scheme.h_xp().mul_vec(&e1.slice(half, n))?;
    Ok(&(&left + &z) + &x)
}

/// Ancilla measurement outcome and residual data Pauli after decoding with
/// `Q†`, global phase dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Propagation {
    pub anc_outcome: F2Vector,
    pub data_x: F2Vector,
    pub data_z: F2Vector,
}

/// Closed form of `Q† X^{e_X} Z^{e_Z} Q |0⟩_X^{⊗2(n-k)} |ψ⟩`:
///
/// ```text
/// |Tr(H_Q eᵀ) + H_Z' H_X'ᵀ e_X_lᵀ⟩_X ⊗ X^{e_X_l H_X' + e_X_r} Z^{e_X_l H_Z' + e_Z_r} |ψ⟩
/// ```
///
/// Binary codes use the same expression with `Tr(H_Q eᵀ)` replaced by
/// [`pair_syndrome`]. For the dual scheme the error is first conjugated by
/// Hadamards on the ancillas, which swaps `e_X_l` and `e_Z_l`.
pub fn propagate_closed_form(scheme: &Scheme, err: &PauliErrorVector) -> Result<Propagation> {
    if err.layout() != scheme.layout() {
        return Err(Error::DimensionMismatch {
            expected: scheme.n_phys(),
            found: err.layout().n_phys(),
        });
    }
    let rotated;
    let err = match scheme.basis() {
        AncillaBasis::X => err,
        AncillaBasis::Z => {
            rotated = err.hadamard_ancillas();
            &rotated
        }
    };

    let syndrome = match scheme.variant() {
        Variant::Quaternary => trace_syndrome(scheme, &combined_error(err))?,
        Variant::Binary => {
            let e0 = err.z_left0().concat(&err.x_right());
            let e1 = err.z_left1().concat(&err.z_right());
            pair_syndrome(scheme, &e0, &e1)?
        }
    };

    let x_left = err.x_left();
    let from_x_left_x = scheme.h_xp().vec_mul(&x_left)?;
    let from_x_left_z = scheme.h_zp().vec_mul(&x_left)?;
    // H_Z' H_X'ᵀ e_X_lᵀ = H_Z' (e_X_l H_X')ᵀ
    let anc_shift = scheme.h_zp().mul_vec(&from_x_left_x)?;

    Ok(Propagation {
        anc_outcome: &syndrome + &anc_shift,
        data_x: &from_x_left_x + &err.x_right(),
        data_z: &from_x_left_z + &err.z_right(),
    })
}
