//! The quantum scheme built from a classical code.
//!
//! For a code with standard-form parity-check matrix `H = [I | A]` the scheme
//! uses `2(n-k)` ancillas and `k` data qubits. The encoder is
//!
//! ```text
//! Q = Σ_μ |μ⟩⟨μ| ⊗ X^{μ H_X'} Z^{μ H_Z'}
//! ```
//!
//! applied to ancillas in `|0⟩_X`. The binary blocks `H_Z'`, `H_X'` are the
//! right-hand `k` columns of the Z- and X-matrices of the trace parity-check
//! matrix `H_Q = [H; ωH] = H_Z + ω H_X` (quaternary codes), or `[A; 0]` and
//! `[0; A]` (binary codes).
//!
//! The dual scheme conjugates the ancillas by Hadamards: they are prepared in
//! `|0⟩`, the projectors become `|μ⟩_X⟨μ|_X` and the ancillas may suffer bit
//! flips instead of phase flips.

mod params;
mod pauli;
mod propagate;
mod table;

pub use params::{ea_parameters, singleton_slack, EaParameters, SingletonCheck};
pub(crate) use pauli::binomial;
pub use pauli::{count_errors, enumerate_errors, AncillaErrors, Layout, Pauli, PauliErrorVector};
pub use propagate::{
    combined_error, pair_syndrome, propagate_closed_form, trace_syndrome, trace_syndrome_via_components, Propagation,
};
pub use table::{decode, run_cycle, CycleOutcome, Decoding, SyndromeTable, TableEntry, DEFAULT_TABLE_CAP};

use serde::{Deserialize, Serialize};

use crate::code::{ClassicalCode, FieldOrder};
use crate::error::{Error, Result};
use crate::linalg::{F2Matrix, F4Matrix};

/// Which construction produced the primed blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Quaternary,
    Binary,
}

impl Variant {
    pub fn tag(self) -> u8 {
        match self {
            Variant::Quaternary => 0,
            Variant::Binary => 1,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Variant> {
        match tag {
            0 => Some(Variant::Quaternary),
            1 => Some(Variant::Binary),
            _ => None,
        }
    }
}

/// Basis the ancillas are prepared and measured in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AncillaBasis {
    /// `|0⟩_X` ancillas; tolerates phase errors on them.
    X,
    /// `|0⟩` ancillas (the dual scheme); tolerates bit errors on them.
    Z,
}

impl AncillaBasis {
    pub fn toggled(self) -> AncillaBasis {
        match self {
            AncillaBasis::X => AncillaBasis::Z,
            AncillaBasis::Z => AncillaBasis::X,
        }
    }
}

/// Trace parity-check matrix and its binary decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceParityCheck {
    pub h_q: F4Matrix,
    pub h_z: F2Matrix,
    pub h_x: F2Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    code: ClassicalCode,
    variant: Variant,
    basis: AncillaBasis,
    h_zp: F2Matrix,
    h_xp: F2Matrix,
    trace_check: Option<TraceParityCheck>,
}

impl Scheme {
    /// Picks the construction matching the code's field.
    pub fn build(code: ClassicalCode) -> Result<Scheme> {
        match code.field() {
            FieldOrder::Quaternary => Self::build_quaternary(code),
            FieldOrder::Binary => Self::build_binary(code),
        }
    }

    pub fn build_quaternary(code: ClassicalCode) -> Result<Scheme> {
        if code.field() != FieldOrder::Quaternary {
            return Err(Error::WrongField {
                expected: 4,
                found: code.field().order(),
            });
        }
        let h = code.parity_check();
        let h_q = h.vstack(&h.scale(crate::linalg::Gf4::OMEGA))?;
        let (h_z, h_x) = h_q.split();
        let m = code.redundancy();
        let n = code.n();
        let h_zp = h_z.columns(m, n);
        let h_xp = h_x.columns(m, n);
        Ok(Scheme {
            code,
            variant: Variant::Quaternary,
            basis: AncillaBasis::X,
            h_zp,
            h_xp,
            trace_check: Some(TraceParityCheck { h_q, h_z, h_x }),
        })
    }

    pub fn build_binary(code: ClassicalCode) -> Result<Scheme> {
        if code.field() != FieldOrder::Binary {
            return Err(Error::WrongField {
                expected: 2,
                found: code.field().order(),
            });
        }
        let a = code.a_block().to_f2().expect("binary code has a binary A block");
        let zero = F2Matrix::zeros(a.num_rows(), a.num_cols());
        Ok(Scheme {
            h_zp: a.vstack(&zero)?,
            h_xp: zero.vstack(&a)?,
            code,
            variant: Variant::Binary,
            basis: AncillaBasis::X,
            trace_check: None,
        })
    }

    /// The Hadamard-rotated scheme. Applying it twice gives back `self`.
    pub fn dualize(&self) -> Scheme {
        Scheme {
            basis: self.basis.toggled(),
            ..self.clone()
        }
    }

    pub fn code(&self) -> &ClassicalCode {
        &self.code
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn basis(&self) -> AncillaBasis {
        self.basis
    }

    pub fn is_dual(&self) -> bool {
        self.basis == AncillaBasis::Z
    }

    pub fn layout(&self) -> Layout {
        Layout::new(self.code.n(), self.code.k())
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    /// `2n - k`.
    pub fn n_phys(&self) -> usize {
        self.layout().n_phys()
    }

    /// `2(n - k)`.
    pub fn n_anc(&self) -> usize {
        self.layout().n_anc()
    }

    /// `H_Z'`, `2(n-k) × k`.
    pub fn h_zp(&self) -> &F2Matrix {
        &self.h_zp
    }

    /// `H_X'`, `2(n-k) × k`.
    pub fn h_xp(&self) -> &F2Matrix {
        &self.h_xp
    }

    pub fn trace_check(&self) -> Option<&TraceParityCheck> {
        self.trace_check.as_ref()
    }

    pub fn h_q(&self) -> Option<&F4Matrix> {
        self.trace_check.as_ref().map(|t| &t.h_q)
    }

    pub fn h_z(&self) -> Option<&F2Matrix> {
        self.trace_check.as_ref().map(|t| &t.h_z)
    }

    pub fn h_x(&self) -> Option<&F2Matrix> {
        self.trace_check.as_ref().map(|t| &t.h_x)
    }

    /// The single ancilla Pauli this scheme tolerates.
    pub fn tolerated_ancilla_pauli(&self) -> Pauli {
        match self.basis {
            AncillaBasis::X => Pauli::Z,
            AncillaBasis::Z => Pauli::X,
        }
    }

    /// Whether the ancillas carry only the tolerated error type
    /// (`e_X_l = 0`, or `e_Z_l = 0` for the dual scheme).
    pub fn ancilla_assumption_holds(&self, err: &PauliErrorVector) -> bool {
        match self.basis {
            AncillaBasis::X => err.x_left().is_zero(),
            AncillaBasis::Z => err.z_left().is_zero(),
        }
    }

    /// `q4`, `q2`, `dual-q4` or `dual-q2`.
    pub fn name(&self) -> &'static str {
        match (self.variant, self.basis) {
            (Variant::Quaternary, AncillaBasis::X) => "q4",
            (Variant::Binary, AncillaBasis::X) => "q2",
            (Variant::Quaternary, AncillaBasis::Z) => "dual-q4",
            (Variant::Binary, AncillaBasis::Z) => "dual-q2",
        }
    }
}
