//! Pauli errors on the `2(n-k)` ancilla + `k` data qubit layout.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::F2Vector;

/// Single-qubit Pauli. `Y` is X and Z on the same qubit; phases are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const NON_IDENTITY: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn has_x(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    pub fn has_z(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }
}

/// Shape of the physical register: `n_anc = 2(n-k)` ancillas followed by `k`
/// data qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    pub n: usize,
    pub k: usize,
}

impl Layout {
    pub fn new(n: usize, k: usize) -> Layout {
        assert!(k <= n);
        Layout { n, k }
    }

    /// `n - k`.
    pub fn half(&self) -> usize {
        self.n - self.k
    }

    pub fn n_anc(&self) -> usize {
        2 * (self.n - self.k)
    }

    /// `2n - k`.
    pub fn n_phys(&self) -> usize {
        2 * self.n - self.k
    }

    pub fn is_ancilla(&self, qubit: usize) -> bool {
        qubit < self.n_anc()
    }
}

/// A Pauli error `X^{e_X} Z^{e_Z}` on `2n - k` qubits.
///
/// Segments: `e_X = (e_X_l, e_X_r)` and `e_Z = (e_Z_l0, e_Z_l1, e_Z_r)` with
/// `e_X_l` covering all ancillas, `e_Z_l0`/`e_Z_l1` the two ancilla halves and
/// `*_r` the data qubits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliErrorVector {
    layout: Layout,
    e_x: F2Vector,
    e_z: F2Vector,
}

impl PauliErrorVector {
    pub fn new(layout: Layout, e_x: F2Vector, e_z: F2Vector) -> Result<Self> {
        for v in [&e_x, &e_z] {
            if v.len() != layout.n_phys() {
                return Err(Error::DimensionMismatch {
                    expected: layout.n_phys(),
                    found: v.len(),
                });
            }
        }
        Ok(Self { layout, e_x, e_z })
    }

    pub fn identity(layout: Layout) -> Self {
        Self {
            layout,
            e_x: F2Vector::zeros(layout.n_phys()),
            e_z: F2Vector::zeros(layout.n_phys()),
        }
    }

    /// Builds from `(qubit, pauli)` pairs; repeated qubits multiply.
    pub fn from_paulis(layout: Layout, paulis: &[(usize, Pauli)]) -> Self {
        let mut err = Self::identity(layout);
        for &(q, p) in paulis {
            err.apply(q, p);
        }
        err
    }

    /// Builds from segments `(e_X_l, e_X_r)` and `(e_Z_l, e_Z_r)`.
    pub fn from_segments(
        layout: Layout,
        x_left: &F2Vector,
        x_right: &F2Vector,
        z_left: &F2Vector,
        z_right: &F2Vector,
    ) -> Result<Self> {
        Self::new(layout, x_left.concat(x_right), z_left.concat(z_right))
    }

    /// Multiplies a single-qubit Pauli into the error.
    pub fn apply(&mut self, qubit: usize, p: Pauli) {
        if p.has_x() {
            self.e_x.flip(qubit);
        }
        if p.has_z() {
            self.e_z.flip(qubit);
        }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn e_x(&self) -> &F2Vector {
        &self.e_x
    }

    pub fn e_z(&self) -> &F2Vector {
        &self.e_z
    }

    pub fn pauli_at(&self, qubit: usize) -> Pauli {
        Pauli::from_bits(self.e_x.get(qubit), self.e_z.get(qubit))
    }

    pub fn x_left(&self) -> F2Vector {
        self.e_x.slice(0, self.layout.n_anc())
    }

    pub fn x_right(&self) -> F2Vector {
        self.e_x.slice(self.layout.n_anc(), self.layout.n_phys())
    }

    pub fn z_left(&self) -> F2Vector {
        self.e_z.slice(0, self.layout.n_anc())
    }

    pub fn z_left0(&self) -> F2Vector {
        self.e_z.slice(0, self.layout.half())
    }

    pub fn z_left1(&self) -> F2Vector {
        self.e_z.slice(self.layout.half(), self.layout.n_anc())
    }

    pub fn z_right(&self) -> F2Vector {
        self.e_z.slice(self.layout.n_anc(), self.layout.n_phys())
    }

    /// `|supp(e_X) ∪ supp(e_Z)|`.
    pub fn weight(&self) -> usize {
        self.e_x.or(&self.e_z).weight()
    }

    pub fn support(&self) -> Vec<usize> {
        self.e_x.or(&self.e_z).support()
    }

    pub fn is_identity(&self) -> bool {
        self.e_x.is_zero() && self.e_z.is_zero()
    }

    /// Conjugation by Hadamard on every ancilla: swaps `e_X_l` and `e_Z_l`.
    pub fn hadamard_ancillas(&self) -> PauliErrorVector {
        let e_x = self.z_left().concat(&self.x_right());
        let e_z = self.x_left().concat(&self.z_right());
        PauliErrorVector {
            layout: self.layout,
            e_x,
            e_z,
        }
    }

    /// Compact `IXZY…` string with a `|` between ancillas and data.
    pub fn pauli_string(&self) -> String {
        let mut s = String::with_capacity(self.layout.n_phys() + 1);
        for q in 0..self.layout.n_phys() {
            if q == self.layout.n_anc() {
                s.push('|');
            }
            s.push(match self.pauli_at(q) {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            });
        }
        s
    }
}

impl fmt::Debug for PauliErrorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli[{}]", self.pauli_string())
    }
}

impl fmt::Display for PauliErrorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (e_X={}, e_Z={})", self.pauli_string(), self.e_x, self.e_z)
    }
}

/// Which Paulis an enumeration may place on ancilla qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AncillaErrors {
    /// Any of X, Y, Z.
    Any,
    /// Only the given Pauli.
    Only(Pauli),
}

impl AncillaErrors {
    fn choices(self) -> Vec<Pauli> {
        match self {
            AncillaErrors::Any => Pauli::NON_IDENTITY.to_vec(),
            AncillaErrors::Only(p) => vec![p],
        }
    }
}

/// Every error of weight at most `max_weight`, ancilla Paulis restricted by
/// `ancilla`. Enumeration order is deterministic: by weight, then by qubit
/// subset in lexicographic order, then by Pauli choice.
pub fn enumerate_errors(layout: Layout, max_weight: usize, ancilla: AncillaErrors) -> Vec<PauliErrorVector> {
    let anc_choices = ancilla.choices();
    let data_choices = Pauli::NON_IDENTITY.to_vec();
    let mut out = vec![PauliErrorVector::identity(layout)];
    for w in 1..=max_weight.min(layout.n_phys()) {
        for qubits in (0..layout.n_phys()).combinations(w) {
            let options: Vec<&Vec<Pauli>> = qubits
                .iter()
                .map(|&q| {
                    if layout.is_ancilla(q) {
                        &anc_choices
                    } else {
                        &data_choices
                    }
                })
                .collect();
            for assignment in options.iter().map(|o| o.iter()).multi_cartesian_product() {
                let paulis: Vec<(usize, Pauli)> = qubits.iter().copied().zip(assignment.into_iter().copied()).collect();
                out.push(PauliErrorVector::from_paulis(layout, &paulis));
            }
        }
    }
    out
}

/// Number of errors [`enumerate_errors`] yields, without enumerating.
pub fn count_errors(layout: Layout, max_weight: usize, ancilla: AncillaErrors) -> u128 {
    let m = layout.n_anc() as u128;
    let k = layout.k as u128;
    let anc = ancilla.choices().len() as u128;
    let mut total = 0u128;
    for w in 0..=max_weight.min(layout.n_phys()) as u128 {
        for a in 0..=w.min(m) {
            let b = w - a;
            if b > k {
                continue;
            }
            total += binomial(m, a) * anc.pow(a as u32) * binomial(k, b) * 3u128.pow(b as u32);
        }
    }
    total
}

pub(crate) fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments() {
        // n = 4, k = 2: 4 ancillas, 2 data qubits
        let layout = Layout::new(4, 2);
        let err = PauliErrorVector::from_paulis(layout, &[(0, Pauli::Z), (3, Pauli::Z), (4, Pauli::Y), (5, Pauli::X)]);
        assert_eq!(err.x_left(), F2Vector::zeros(4));
        assert_eq!(err.x_right(), F2Vector::from_bits(&[1, 1]));
        assert_eq!(err.z_left0(), F2Vector::from_bits(&[1, 0]));
        assert_eq!(err.z_left1(), F2Vector::from_bits(&[0, 1]));
        assert_eq!(err.z_right(), F2Vector::from_bits(&[1, 0]));
        assert_eq!(err.z_left0().concat(&err.z_left1()).concat(&err.z_right()), *err.e_z());
        assert_eq!(err.weight(), 4);
        assert_eq!(err.pauli_string(), "ZIIZ|YX");
    }

    #[test]
    fn hadamard_swaps_left_segments() {
        let layout = Layout::new(3, 1);
        let err = PauliErrorVector::from_paulis(layout, &[(0, Pauli::X), (2, Pauli::Z), (4, Pauli::Y)]);
        let h = err.hadamard_ancillas();
        assert_eq!(h.pauli_string(), "ZIXI|Y");
        assert_eq!(h.hadamard_ancillas(), err);
    }

    #[test]
    fn enumeration_counts_match_formula() {
        for (n, k) in [(4, 2), (7, 4), (3, 1)] {
            let layout = Layout::new(n, k);
            for t in 0..=2 {
                for anc in [AncillaErrors::Any, AncillaErrors::Only(Pauli::Z)] {
                    let errs = enumerate_errors(layout, t, anc);
                    assert_eq!(errs.len() as u128, count_errors(layout, t, anc));
                    let mut dedup = errs.clone();
                    dedup.sort_by_key(|e| e.pauli_string());
                    dedup.dedup();
                    assert_eq!(dedup.len(), errs.len());
                    assert!(errs.iter().all(|e| e.weight() <= t));
                }
            }
        }
        // mds4_2_q, t = 1, ancillas Z only: 1 + 4 + 2·3
        assert_eq!(count_errors(Layout::new(4, 2), 1, AncillaErrors::Only(Pauli::Z)), 11);
    }

    #[test]
    fn rejects_wrong_lengths() {
        let layout = Layout::new(4, 2);
        assert!(PauliErrorVector::new(layout, F2Vector::zeros(5), F2Vector::zeros(6)).is_err());
    }
}
