//! Dense row-major matrices over GF(2) and GF(4), with standard-form reduction.

use std::fmt;

use super::field::Gf4;
use super::vector::{F2Vector, F4Vector};
use crate::error::{Error, Result};

/// A binary matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self {
            cols: size,
            rows: (0..size).map(|i| F2Vector::unit(size, i)).collect(),
        }
    }

    /// Builds from rows, which must share one length. `cols` is needed to
    /// describe a matrix with zero rows.
    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Convenience constructor from nested `0`/`1` slices. Panics on ragged input.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| F2Vector::from_bits(r)).collect()).expect("ragged matrix literal")
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.rows[r].set(c, bit)
    }

    pub fn row(&self, r: usize) -> &F2Vector {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(F2Vector::is_zero)
    }

    /// `M · vᵀ`.
    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(F2Vector::from_bools(self.rows.iter().map(|r| r.dot(v))))
    }

    /// Row vector times matrix, `v · M`.
    pub fn vec_mul(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.num_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.num_rows(),
                found: v.len(),
            });
        }
        let mut out = F2Vector::zeros(self.cols);
        for i in v.support() {
            out += &self.rows[i];
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.num_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.num_rows(),
            });
        }
        let rows = self.rows.iter().map(|r| other.vec_mul(r)).collect::<Result<Vec<_>>>()?;
        F2Matrix::from_rows(other.cols, rows)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.num_rows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.support() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Stacks `self` over `below`.
    pub fn vstack(&self, below: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(below.rows.iter().cloned());
        F2Matrix::from_rows(self.cols, rows)
    }

    /// Places `right` beside `self`.
    pub fn hstack(&self, right: &F2Matrix) -> Result<F2Matrix> {
        if self.num_rows() != right.num_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.num_rows(),
                found: right.num_rows(),
            });
        }
        let rows = self.rows.iter().zip(&right.rows).map(|(a, b)| a.concat(b)).collect();
        F2Matrix::from_rows(self.cols + right.cols, rows)
    }

    /// Columns `start..end`.
    pub fn columns(&self, start: usize, end: usize) -> F2Matrix {
        F2Matrix {
            cols: end - start,
            rows: self.rows.iter().map(|r| r.slice(start, end)).collect(),
        }
    }

    pub fn to_f4(&self) -> F4Matrix {
        F4Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(F4Vector::from_binary).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_f4().rank()
    }

    /// Reduces to `[I | A]`; see [`F4Matrix::standard_form`].
    pub fn standard_form(&self) -> Result<StandardForm<F2Matrix>> {
        let sf = self.to_f4().standard_form()?;
        let matrix = sf.matrix.to_f2().expect("elimination of a binary matrix stays binary");
        Ok(StandardForm {
            matrix,
            col_perm: sf.col_perm,
        })
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, b) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if b { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix {}x{}:\n{self}", self.num_rows(), self.cols)
    }
}

/// A matrix over GF(4) stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F4Matrix {
    cols: usize,
    rows: Vec<F4Vector>,
}

/// Result of reducing a full-rank matrix to `[I | A]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm<M> {
    pub matrix: M,
    /// Column `j` of `matrix` came from column `col_perm[j]` of the input.
    pub col_perm: Vec<usize>,
}

impl F4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![F4Vector::zeros(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<F4Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Panics on ragged input.
    pub fn from_elems(rows: &[&[Gf4]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| F4Vector::from_elems(r)).collect()).expect("ragged matrix literal")
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Gf4) {
        self.rows[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &F4Vector {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[F4Vector] {
        &self.rows
    }

    pub fn is_binary(&self) -> bool {
        self.rows.iter().all(F4Vector::is_binary)
    }

    /// Projects to GF(2); `None` if some entry is ω or ω².
    pub fn to_f2(&self) -> Option<F2Matrix> {
        if !self.is_binary() {
            return None;
        }
        Some(F2Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.ones_plane().clone()).collect(),
        })
    }

    /// The unique binary pair `(Z, X)` with `self = Z + ω·X`.
    pub fn split(&self) -> (F2Matrix, F2Matrix) {
        let z = F2Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.ones_plane().clone()).collect(),
        };
        let x = F2Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.omega_plane().clone()).collect(),
        };
        (z, x)
    }

    /// `M · vᵀ`.
    pub fn mul_vec(&self, v: &F4Vector) -> Result<F4Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let elems: Vec<Gf4> = self.rows.iter().map(|r| r.dot(v)).collect();
        Ok(F4Vector::from_elems(&elems))
    }

    pub fn scale(&self, scalar: Gf4) -> F4Matrix {
        F4Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.scale(scalar)).collect(),
        }
    }

    pub fn vstack(&self, below: &F4Matrix) -> Result<F4Matrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(below.rows.iter().cloned());
        F4Matrix::from_rows(self.cols, rows)
    }

    pub fn columns(&self, start: usize, end: usize) -> F4Matrix {
        F4Matrix {
            cols: end - start,
            rows: self.rows.iter().map(|r| r.slice(start, end)).collect(),
        }
    }

    pub fn transpose(&self) -> F4Matrix {
        let mut t = F4Matrix::zeros(self.cols, self.num_rows());
        for r in 0..self.num_rows() {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Columns reordered so that output column `j` is input column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> F4Matrix {
        F4Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.permuted(perm)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut basis: Vec<(usize, F4Vector)> = Vec::new();
        self.rows
            .iter()
            .filter(|r| reduce_against(&mut basis, (*r).clone()))
            .count()
    }

    /// Index of the first row that lies in the span of the rows before it.
    pub fn first_dependent_row(&self) -> Option<usize> {
        let mut basis: Vec<(usize, F4Vector)> = Vec::new();
        self.rows.iter().position(|r| !reduce_against(&mut basis, r.clone()))
    }

    /// Gauss–Jordan reduction to `[I | A]` by row operations, permuting
    /// columns only when a leading column has no pivot.
    ///
    /// Already-standard inputs come back unchanged with the identity
    /// permutation.
    pub fn standard_form(&self) -> Result<StandardForm<F4Matrix>> {
        if let Some(row) = self.first_dependent_row() {
            return Err(Error::RankDeficient { row });
        }
        let m = self.num_rows();
        let mut rows = self.rows.clone();
        let mut col_perm: Vec<usize> = (0..self.cols).collect();

        for i in 0..m {
            let pivot = (i..self.cols).find_map(|c| (i..m).find(|&r| !rows[r].get(c).is_zero()).map(|r| (r, c)));
            let (pr, pc) = pivot.expect("full row rank guarantees a pivot");
            if pc != i {
                col_perm.swap(i, pc);
                for row in rows.iter_mut() {
                    let (a, b) = (row.get(i), row.get(pc));
                    row.set(i, b);
                    row.set(pc, a);
                }
            }
            rows.swap(i, pr);
            let inv = rows[i].get(i).inverse().expect("pivot is nonzero");
            rows[i] = rows[i].scale(inv);
            let pivot_row = rows[i].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                let factor = row.get(i);
                if r != i && !factor.is_zero() {
                    *row = &*row + &pivot_row.scale(factor);
                }
            }
        }

        Ok(StandardForm {
            matrix: F4Matrix { cols: self.cols, rows },
            col_perm,
        })
    }

    /// True when the leading square block is the identity.
    pub fn is_standard_form(&self) -> bool {
        let m = self.num_rows();
        m <= self.cols && (0..m).all(|r| (0..m).all(|c| self.get(r, c) == Gf4::from(r == c)))
    }
}

// Reduces `v` against an echelon basis; pushes it and returns true if it is
// independent.
fn reduce_against(basis: &mut Vec<(usize, F4Vector)>, mut v: F4Vector) -> bool {
    for (pivot, b) in basis.iter() {
        let factor = v.get(*pivot);
        if !factor.is_zero() {
            v = &v + &b.scale(factor);
        }
    }
    match (0..v.len()).find(|&c| !v.get(c).is_zero()) {
        Some(pivot) => {
            let inv = v.get(pivot).inverse().expect("nonzero");
            let v = v.scale(inv);
            // keep the basis fully reduced on its pivot columns
            for (_, b) in basis.iter_mut() {
                let factor = b.get(pivot);
                if !factor.is_zero() {
                    *b = &*b + &v.scale(factor);
                }
            }
            basis.push((pivot, v));
            true
        }
        None => false,
    }
}

impl fmt::Display for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4Matrix {}x{}:\n{self}", self.num_rows(), self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: Gf4 = Gf4::OMEGA;
    const O: Gf4 = Gf4::ONE;
    const Z: Gf4 = Gf4::ZERO;

    fn hamming_natural() -> F2Matrix {
        F2Matrix::from_bits(&[&[0, 0, 0, 1, 1, 1, 1], &[0, 1, 1, 0, 0, 1, 1], &[1, 0, 1, 0, 1, 0, 1]])
    }

    // Independent oracle: exhaustively list the row space over GF(2).
    fn row_space(m: &F2Matrix) -> Vec<F2Vector> {
        let mut out: Vec<F2Vector> = (0..1u64 << m.num_rows())
            .map(|mask| m.vec_mul(&F2Vector::from_u64(mask, m.num_rows())).unwrap())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn mat_vec_examples() {
        let v = F4Vector::from_elems(&[W, W]);
        let id = F4Matrix::from_elems(&[&[O, Z], &[Z, O]]);
        assert_eq!(id.mul_vec(&v).unwrap(), v);
        assert!(F4Matrix::zeros(3, 2).mul_vec(&v).unwrap().is_zero());
        let m = F4Matrix::from_elems(&[&[O, W]]);
        assert_eq!(m.mul_vec(&v).unwrap(), F4Vector::from_elems(&[O]));
        assert!(m.mul_vec(&F4Vector::zeros(3)).is_err());
        assert!(hamming_natural().mul_vec(&F2Vector::zeros(6)).is_err());
    }

    #[test]
    fn standard_form_is_identity_on_standard_input() {
        let h = F2Matrix::from_bits(&[&[1, 0, 1], &[0, 1, 1]]);
        let sf = h.standard_form().unwrap();
        assert_eq!(sf.matrix, h);
        assert_eq!(sf.col_perm, vec![0, 1, 2]);
        let again = sf.matrix.standard_form().unwrap();
        assert_eq!(again.matrix, sf.matrix);
    }

    #[test]
    fn standard_form_of_hamming_permutes_columns() {
        let h = hamming_natural();
        let sf = h.standard_form().unwrap();
        assert!(sf.matrix.to_f4().is_standard_form());
        let mut sorted = sf.col_perm.clone();
        sorted.sort();
        assert_eq!(sorted, (0..7).collect::<Vec<_>>());
        // Same row space as the column-permuted input.
        let permuted = h.to_f4().permute_columns(&sf.col_perm).to_f2().unwrap();
        assert_eq!(row_space(&permuted), row_space(&sf.matrix));
    }

    #[test]
    fn rank_deficient_input_is_rejected() {
        let h = F2Matrix::from_bits(&[&[1, 1], &[1, 1]]);
        assert_eq!(h.standard_form().unwrap_err(), Error::RankDeficient { row: 1 });
        let zero_row = F2Matrix::from_bits(&[&[0, 0, 0], &[1, 0, 1]]);
        assert_eq!(zero_row.standard_form().unwrap_err(), Error::RankDeficient { row: 0 });
    }

    #[test]
    fn quaternary_standard_form_needs_row_scaling() {
        let h = F4Matrix::from_elems(&[&[W, Z, O], &[Z, W, W]]);
        let sf = h.standard_form().unwrap();
        assert_eq!(sf.col_perm, vec![0, 1, 2]);
        assert!(sf.matrix.is_standard_form());
        assert_eq!(sf.matrix.rank(), 2);
    }

    #[test]
    fn split_reproduces_matrix() {
        let h = F4Matrix::from_elems(&[&[O, W], &[W, Gf4::OMEGA_SQ]]);
        let (z, x) = h.split();
        assert_eq!(z, F2Matrix::from_bits(&[&[1, 0], &[0, 1]]));
        assert_eq!(x, F2Matrix::from_bits(&[&[0, 1], &[1, 1]]));
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(Gf4::from(z.get(r, c)) + W * Gf4::from(x.get(r, c)), h.get(r, c));
            }
        }
    }

    #[test]
    fn mul_and_transpose() {
        let a = F2Matrix::from_bits(&[&[1, 1, 0], &[0, 1, 1]]);
        let at = a.transpose();
        assert_eq!(at.num_rows(), 3);
        let aat = a.mul(&at).unwrap();
        assert_eq!(aat, F2Matrix::from_bits(&[&[0, 1], &[1, 0]]));
        let v = F2Vector::from_bits(&[1, 1]);
        assert_eq!(a.vec_mul(&v).unwrap(), at.mul_vec(&v).unwrap());
    }
}
