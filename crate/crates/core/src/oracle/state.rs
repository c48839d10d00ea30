use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::F2Vector;
use crate::scheme::PauliErrorVector;

/// Largest register the dense simulator accepts.
pub const MAX_QUBITS: usize = 14;

/// Dense state of `n` qubits. Qubit `q` is bit `q` of the amplitude index.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0…0⟩`.
    pub fn zero(n: usize) -> Result<StateVector> {
        check_cap(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Takes `amps` as given; the caller is responsible for normalization.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<StateVector> {
        check_cap(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: amps.len(),
            });
        }
        Ok(StateVector { n, amps })
    }

    /// Haar-random state: normalized complex Gaussian amplitudes.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<StateVector> {
        check_cap(n)?;
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let mut s = StateVector { n, amps };
        s.normalize();
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) {
        let norm = self.norm_sqr().sqrt();
        if norm > 0.0 {
            for a in &mut self.amps {
                *a /= norm;
            }
        }
    }

    /// `self ⊗ high`: the qubits of `high` are placed above those of `self`.
    pub fn tensor(&self, high: &StateVector) -> Result<StateVector> {
        check_cap(self.n + high.n)?;
        let mut amps = Vec::with_capacity(1 << (self.n + high.n));
        for h in &high.amps {
            amps.extend(self.amps.iter().map(|l| l * h));
        }
        Ok(StateVector {
            n: self.n + high.n,
            amps,
        })
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.n, other.n, "inner product of registers of different size");
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &StateVector) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn apply_h(&mut self, q: usize) {
        let bit = self.bit(q);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a, b) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = (a + b) * s;
                self.amps[i | bit] = (a - b) * s;
            }
        }
    }

    pub fn apply_x(&mut self, q: usize) {
        let bit = self.bit(q);
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                self.amps.swap(i, i | bit);
            }
        }
    }

    pub fn apply_z(&mut self, q: usize) {
        let bit = self.bit(q);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & bit != 0 {
                *a = -*a;
            }
        }
    }

    pub fn apply_cx(&mut self, control: usize, target: usize) {
        assert_ne!(control, target);
        let (c, t) = (self.bit(control), self.bit(target));
        for i in 0..self.amps.len() {
            if i & c != 0 && i & t == 0 {
                self.amps.swap(i, i | t);
            }
        }
    }

    pub fn apply_cz(&mut self, a: usize, b: usize) {
        assert_ne!(a, b);
        let mask = self.bit(a) | self.bit(b);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp = -*amp;
            }
        }
    }

    /// `X^{x} Z^{z}` on qubits `offset..offset+len`: Z first, then X.
    pub fn apply_pauli_masks(&mut self, x: &F2Vector, z: &F2Vector, offset: usize) {
        for q in z.support() {
            self.apply_z(offset + q);
        }
        for q in x.support() {
            self.apply_x(offset + q);
        }
    }

    /// `X^{e_X} Z^{e_Z}` on the whole register.
    pub fn apply_pauli(&mut self, err: &PauliErrorVector) -> Result<()> {
        if err.layout().n_phys() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: err.layout().n_phys(),
            });
        }
        self.apply_pauli_masks(err.e_x(), err.e_z(), 0);
        Ok(())
    }

    /// Splits off the lowest `m` qubits, which must be in a computational
    /// basis state up to `1 - 1e-10` probability. Returns that basis state and
    /// the normalized remaining register.
    pub fn measure_low(&self, m: usize) -> Result<(F2Vector, StateVector)> {
        assert!(m <= self.n);
        let low = 1usize << m;
        let high = 1usize << (self.n - m);
        let mut probs = vec![0.0; low];
        for (i, a) in self.amps.iter().enumerate() {
            probs[i & (low - 1)] += a.norm_sqr();
        }
        let total: f64 = probs.iter().sum();
        let (best, &p) = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("register is non-empty");
        let max_probability = p / total;
        if max_probability < 1.0 - super::TOLERANCE {
            return Err(Error::NonProductState { max_probability });
        }
        let mut rest = StateVector {
            n: self.n - m,
            amps: (0..high).map(|h| self.amps[best | (h << m)]).collect(),
        };
        rest.normalize();
        let outcome = F2Vector::from_u64(best as u64, m);
        Ok((outcome, rest))
    }

    fn bit(&self, q: usize) -> usize {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        1 << q
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        return Err(Error::QubitCap {
            needed: n,
            cap: MAX_QUBITS,
        });
    }
    Ok(())
}
