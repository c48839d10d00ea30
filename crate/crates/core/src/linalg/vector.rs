//! Bit-packed vectors over GF(2) and GF(4).

use std::fmt;
use std::ops::{Add, AddAssign};

use super::field::Gf4;
use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 entries per word.
///
/// Bits past `len` in the last word are always zero, so derived equality and
/// hashing are value semantics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.clear_tail();
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut v = Self::zeros(0);
        for b in bits {
            v.push(b);
        }
        v
    }

    /// Builds a vector from `0`/`1` entries; any nonzero value counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_bools(bits.iter().map(|&b| b != 0))
    }

    /// Vector of length `len` whose bit `i` is bit `i` of `value`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { value } else { value & ((1 << len) - 1) };
        }
        v
    }

    /// Low 64 bits as an integer, bit `i` having weight `2^i`.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD_BITS) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, bit);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.iter().enumerate().filter_map(|(i, b)| b.then_some(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "dot product of unequal lengths");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn and(&self, other: &F2Vector) -> F2Vector {
        assert_eq!(self.len, other.len);
        F2Vector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn or(&self, other: &F2Vector) -> F2Vector {
        assert_eq!(self.len, other.len);
        F2Vector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    /// Fallible `self + other`.
    pub fn try_add(&self, other: &F2Vector) -> Result<F2Vector> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(F2Vector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// Entries `range.start..range.end`.
    pub fn slice(&self, start: usize, end: usize) -> F2Vector {
        assert!(start <= end && end <= self.len);
        F2Vector::from_bools((start..end).map(|i| self.get(i)))
    }

    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        for b in other.iter() {
            out.push(b);
        }
        out
    }

    /// Reorders entries so that `out[j] = self[perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> F2Vector {
        assert_eq!(perm.len(), self.len);
        F2Vector::from_bools(perm.iter().map(|&p| self.get(p)))
    }

    /// Inverse of [`F2Vector::permuted`]: `out[perm[j]] = self[j]`.
    pub fn unpermuted(&self, perm: &[usize]) -> F2Vector {
        assert_eq!(perm.len(), self.len);
        let mut out = F2Vector::zeros(self.len);
        for (j, &p) in perm.iter().enumerate() {
            out.set(p, self.get(j));
        }
        out
    }

    /// Little-endian byte encoding: bit `i` lands in byte `i / 8`, bit `i % 8`.
    pub fn to_le_bytes(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.len.div_ceil(8)];
        for (i, byte) in out.iter_mut().enumerate() {
            *byte = (self.words[i / 8] >> ((i % 8) * 8)) as u8;
        }
        out
    }

    pub fn from_le_bytes(bytes: &[u8], len: usize) -> Result<F2Vector> {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::DimensionMismatch {
                expected: len.div_ceil(8),
                found: bytes.len(),
            });
        }
        let mut v = F2Vector::zeros(len);
        for (i, &byte) in bytes.iter().enumerate() {
            v.words[i / 8] |= (byte as u64) << ((i % 8) * 8);
        }
        let tail_ok = {
            let mut probe = v.clone();
            probe.clear_tail();
            probe == v
        };
        if !tail_ok {
            return Err(Error::TableFormat(format!("nonzero padding bits beyond length {len}")));
        }
        Ok(v)
    }

    /// Compares as unsigned integers with bit `i` weighted `2^i`.
    pub fn cmp_le(&self, other: &F2Vector) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Add for &F2Vector {
    type Output = F2Vector;
    fn add(self, rhs: &F2Vector) -> F2Vector {
        self.try_add(rhs).expect("vector lengths must match")
    }
}

impl AddAssign<&F2Vector> for F2Vector {
    fn add_assign(&mut self, rhs: &F2Vector) {
        assert_eq!(self.len, rhs.len, "vector lengths must match");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2[{self}]")
    }
}

/// A vector over GF(4) held as two GF(2) bit planes: the coefficients of 1
/// and of ω.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F4Vector {
    ones: F2Vector,
    omegas: F2Vector,
}

impl F4Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            ones: F2Vector::zeros(len),
            omegas: F2Vector::zeros(len),
        }
    }

    pub fn from_elems(elems: &[Gf4]) -> Self {
        Self {
            ones: F2Vector::from_bools(elems.iter().map(|e| e.b1())),
            omegas: F2Vector::from_bools(elems.iter().map(|e| e.b_omega())),
        }
    }

    /// `ones + ω·omegas`.
    pub fn from_planes(ones: F2Vector, omegas: F2Vector) -> Result<Self> {
        if ones.len() != omegas.len() {
            return Err(Error::DimensionMismatch {
                expected: ones.len(),
                found: omegas.len(),
            });
        }
        Ok(Self { ones, omegas })
    }

    /// Embeds a binary vector.
    pub fn from_binary(v: &F2Vector) -> Self {
        Self {
            ones: v.clone(),
            omegas: F2Vector::zeros(v.len()),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.ones.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.ones.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        Gf4::from_bits(self.ones.get(i), self.omegas.get(i))
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: Gf4) {
        self.ones.set(i, value.b1());
        self.omegas.set(i, value.b_omega());
    }

    /// Coefficient-of-1 plane.
    pub fn ones_plane(&self) -> &F2Vector {
        &self.ones
    }

    /// Coefficient-of-ω plane.
    pub fn omega_plane(&self) -> &F2Vector {
        &self.omegas
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf4> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.ones.is_zero() && self.omegas.is_zero()
    }

    pub fn support(&self) -> Vec<usize> {
        self.ones.or(&self.omegas).support()
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.ones.or(&self.omegas).weight()
    }

    pub fn is_binary(&self) -> bool {
        self.omegas.is_zero()
    }

    /// Multiplies every entry by `scalar`.
    pub fn scale(&self, scalar: Gf4) -> F4Vector {
        match scalar {
            Gf4::ZERO => F4Vector::zeros(self.len()),
            Gf4::ONE => self.clone(),
            // ω(a + bω) = b + (a + b)ω
            Gf4::OMEGA => F4Vector {
                ones: self.omegas.clone(),
                omegas: &self.ones + &self.omegas,
            },
            // ω²(a + bω) = (a + b) + aω
            _ => F4Vector {
                ones: &self.ones + &self.omegas,
                omegas: self.ones.clone(),
            },
        }
    }

    /// Elementwise trace.
    pub fn trace(&self) -> F2Vector {
        self.omegas.clone()
    }

    /// Elementwise Tr(ω·a).
    pub fn trace_omega(&self) -> F2Vector {
        &self.ones + &self.omegas
    }

    /// Inner product Σ aᵢbᵢ.
    pub fn dot(&self, other: &F4Vector) -> Gf4 {
        assert_eq!(self.len(), other.len(), "dot product of unequal lengths");
        // (a + bω)(c + dω) = (ac + bd) + (ad + bc + bd)ω
        let ac = self.ones.dot(&other.ones);
        let bd = self.omegas.dot(&other.omegas);
        let ad = self.ones.dot(&other.omegas);
        let bc = self.omegas.dot(&other.ones);
        Gf4::from_bits(ac ^ bd, ad ^ bc ^ bd)
    }

    pub fn try_add(&self, other: &F4Vector) -> Result<F4Vector> {
        Ok(F4Vector {
            ones: self.ones.try_add(&other.ones)?,
            omegas: self.omegas.try_add(&other.omegas)?,
        })
    }

    pub fn slice(&self, start: usize, end: usize) -> F4Vector {
        F4Vector {
            ones: self.ones.slice(start, end),
            omegas: self.omegas.slice(start, end),
        }
    }

    pub fn concat(&self, other: &F4Vector) -> F4Vector {
        F4Vector {
            ones: self.ones.concat(&other.ones),
            omegas: self.omegas.concat(&other.omegas),
        }
    }

    /// `out[j] = self[perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> F4Vector {
        F4Vector {
            ones: self.ones.permuted(perm),
            omegas: self.omegas.permuted(perm),
        }
    }

    /// `out[perm[j]] = self[j]`.
    pub fn unpermuted(&self, perm: &[usize]) -> F4Vector {
        F4Vector {
            ones: self.ones.unpermuted(perm),
            omegas: self.omegas.unpermuted(perm),
        }
    }
}

impl Add for &F4Vector {
    type Output = F4Vector;
    fn add(self, rhs: &F4Vector) -> F4Vector {
        self.try_add(rhs).expect("vector lengths must match")
    }
}

impl fmt::Display for F4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4[{self}]")
    }
}

/// Rebuilds `a` from its traces: `a = ω²·t0 + t1` where `t0 = Tr(a)` and
/// `t1 = Tr(ωa)`.
pub fn reconstruct_from_traces(t0: &F2Vector, t1: &F2Vector) -> Result<F4Vector> {
    if t0.len() != t1.len() {
        return Err(Error::DimensionMismatch {
            expected: t0.len(),
            found: t1.len(),
        });
    }
    // ω² = 1 + ω, so the 1-plane is t0 + t1 and the ω-plane is t0.
    F4Vector::from_planes(t0 + t1, t0.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_vectors(n: usize) -> Vec<F4Vector> {
        (0..4usize.pow(n as u32))
            .map(|mut idx| {
                let elems: Vec<Gf4> = (0..n)
                    .map(|_| {
                        let e = Gf4::ALL[idx % 4];
                        idx /= 4;
                        e
                    })
                    .collect();
                F4Vector::from_elems(&elems)
            })
            .collect()
    }

    #[test]
    fn packing_handles_word_boundaries() {
        let mut v = F2Vector::zeros(130);
        v.set(0, true);
        v.set(63, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.support(), vec![0, 63, 64, 129]);
        assert_eq!(v.weight(), 4);
        let ones = F2Vector::ones(70);
        assert_eq!(ones.weight(), 70);
        assert_eq!(ones.slice(60, 70).weight(), 10);
    }

    #[test]
    fn trace_of_vector() {
        let a = F4Vector::from_elems(&[Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_SQ]);
        assert_eq!(a.trace(), F2Vector::from_bits(&[0, 1, 1]));
    }

    #[test]
    fn trace_planes_agree_with_scalar_trace() {
        for a in all_vectors(3) {
            let t: Vec<bool> = a.iter().map(|x| x.trace()).collect();
            let tw: Vec<bool> = a.iter().map(|x| (Gf4::OMEGA * x).trace()).collect();
            assert_eq!(a.trace(), F2Vector::from_bools(t));
            assert_eq!(a.trace_omega(), F2Vector::from_bools(tw));
        }
    }

    #[test]
    fn reconstruct_examples() {
        let one = F2Vector::from_bits(&[1]);
        let zero = F2Vector::from_bits(&[0]);
        assert_eq!(
            reconstruct_from_traces(&one, &zero).unwrap(),
            F4Vector::from_elems(&[Gf4::OMEGA_SQ])
        );
        assert_eq!(
            reconstruct_from_traces(&zero, &one).unwrap(),
            F4Vector::from_elems(&[Gf4::ONE])
        );
        assert_eq!(
            reconstruct_from_traces(&one, &one).unwrap(),
            F4Vector::from_elems(&[Gf4::OMEGA])
        );
        assert!(reconstruct_from_traces(&one, &F2Vector::zeros(2)).is_err());
    }

    #[test]
    fn reconstruct_round_trip_exhaustive() {
        for n in 0..=4 {
            for a in all_vectors(n) {
                let back = reconstruct_from_traces(&a.trace(), &a.scale(Gf4::OMEGA).trace()).unwrap();
                assert_eq!(back, a);
            }
        }
    }

    #[test]
    fn scale_matches_scalar_multiplication() {
        for a in all_vectors(2) {
            for s in Gf4::ALL {
                let expected: Vec<Gf4> = a.iter().map(|x| s * x).collect();
                assert_eq!(a.scale(s), F4Vector::from_elems(&expected));
            }
        }
    }

    #[test]
    fn dot_matches_elementwise() {
        let all = all_vectors(2);
        for a in &all {
            for b in &all {
                let expected = a.iter().zip(b.iter()).fold(Gf4::ZERO, |acc, (x, y)| acc + x * y);
                assert_eq!(a.dot(b), expected);
            }
        }
    }

    #[test]
    fn le_bytes_round_trip_and_order() {
        let v = F2Vector::from_bits(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(v.to_le_bytes(), vec![0x01, 0x03]);
        assert_eq!(F2Vector::from_le_bytes(&v.to_le_bytes(), 10).unwrap(), v);
        assert!(F2Vector::from_le_bytes(&[0, 0x04], 10).is_err());
        let small = F2Vector::from_u64(0b01, 3);
        let big = F2Vector::from_u64(0b10, 3);
        assert_eq!(small.cmp_le(&big), std::cmp::Ordering::Less);
    }

    #[test]
    fn permutation_round_trip() {
        let v = F2Vector::from_bits(&[1, 1, 0, 0, 1]);
        let perm = [4, 2, 0, 1, 3];
        assert_eq!(v.permuted(&perm).unpermuted(&perm), v);
        assert_eq!(v.permuted(&perm), F2Vector::from_bits(&[1, 0, 1, 1, 0]));
    }
}
