//! Classical linear codes over GF(2) and GF(4).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{F2Matrix, F4Matrix, F4Vector, Gf4};

/// Default cap on the number of codewords enumerated by [`ClassicalCode::min_distance`].
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// Field order of a classical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldOrder {
    Binary,
    Quaternary,
}

impl FieldOrder {
    pub fn order(self) -> u8 {
        match self {
            FieldOrder::Binary => 2,
            FieldOrder::Quaternary => 4,
        }
    }

    pub fn from_order(q: u8) -> Option<FieldOrder> {
        match q {
            2 => Some(FieldOrder::Binary),
            4 => Some(FieldOrder::Quaternary),
            _ => None,
        }
    }

    fn elements(self) -> &'static [Gf4] {
        match self {
            FieldOrder::Binary => &Gf4::ALL[..2],
            FieldOrder::Quaternary => &Gf4::ALL,
        }
    }
}

/// Where a minimum distance came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceSource {
    Computed,
    /// Supplied by the user and trusted without checking.
    Declared,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub value: usize,
    pub source: DistanceSource,
}

/// An `[n, k, d]_q` linear code held by a standard-form parity-check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    field: FieldOrder,
    n: usize,
    k: usize,
    /// `[I | A]`, with entries in GF(2) when `field` is binary.
    h: F4Matrix,
    /// Standard column `j` is user column `col_perm[j]`.
    col_perm: Vec<usize>,
    distance: Option<Distance>,
}

impl ClassicalCode {
    /// Standardizes a full-rank parity-check matrix given in user column order.
    pub fn from_parity_check(field: FieldOrder, h: &F4Matrix) -> Result<ClassicalCode> {
        if field == FieldOrder::Binary && !h.is_binary() {
            return Err(Error::WrongField { expected: 2, found: 4 });
        }
        let n = h.num_cols();
        let rows = h.num_rows();
        if rows == 0 || rows >= n {
            return Err(Error::DegenerateCode {
                n,
                k: n.saturating_sub(rows),
            });
        }
        let sf = h.standard_form()?;
        Ok(ClassicalCode {
            field,
            n,
            k: n - rows,
            h: sf.matrix,
            col_perm: sf.col_perm,
            distance: None,
        })
    }

    pub fn from_binary_parity_check(h: &F2Matrix) -> Result<ClassicalCode> {
        Self::from_parity_check(FieldOrder::Binary, &h.to_f4())
    }

    /// Parses the text code format:
    ///
    /// ```text
    /// q n k
    /// <n-k rows of n tokens from 0 1 w W>
    /// d <int>        (optional)
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<ClassicalCode> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let parse_err = |line: usize, message: String| Error::Parse { line, message };

        let (line_no, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing `q n k` header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("`{t}` is not a number")))
            })
            .collect::<Result<_>>()?;
        let [q, n, k] = nums[..] else {
            return Err(parse_err(line_no, "header must be `q n k`".into()));
        };
        let field = u8::try_from(q)
            .ok()
            .and_then(FieldOrder::from_order)
            .ok_or_else(|| parse_err(line_no, format!("q must be 2 or 4, got {q}")))?;
        if k == 0 || k >= n {
            return Err(Error::DegenerateCode { n, k });
        }

        let mut rows = Vec::with_capacity(n - k);
        let mut declared = None;
        for (line_no, line) in lines {
            if let Some(rest) = line.strip_prefix('d').filter(|r| r.starts_with(char::is_whitespace)) {
                if declared.is_some() {
                    return Err(parse_err(line_no, "distance declared twice".into()));
                }
                let d = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("bad distance `{}`", rest.trim())))?;
                declared = Some((line_no, d));
                continue;
            }
            if declared.is_some() {
                return Err(parse_err(line_no, "content after the distance line".into()));
            }
            let elems = line
                .split_whitespace()
                .map(|t| match Gf4::from_token(t) {
                    Some(e) if field == FieldOrder::Binary && !(e == Gf4::ZERO || e == Gf4::ONE) => {
                        Err(parse_err(line_no, format!("`{t}` is not a GF(2) element")))
                    }
                    Some(e) => Ok(e),
                    None => Err(parse_err(line_no, format!("`{t}` is not one of 0 1 w W"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if elems.len() != n {
                return Err(parse_err(
                    line_no,
                    format!("expected {n} entries, found {}", elems.len()),
                ));
            }
            rows.push(F4Vector::from_elems(&elems));
        }
        if rows.len() != n - k {
            return Err(parse_err(
                line_no,
                format!("expected {} parity-check rows, found {}", n - k, rows.len()),
            ));
        }
        let code = ClassicalCode::from_parity_check(field, &F4Matrix::from_rows(n, rows)?)?;
        Ok(match declared {
            Some((line, d)) if d == 0 || d > n - k + 1 => {
                return Err(parse_err(line, format!("distance {d} violates 1 <= d <= n-k+1")));
            }
            Some((_, d)) => code.with_declared_distance(d),
            None => code,
        })
    }

    pub fn field(&self) -> FieldOrder {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of parity checks, `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// The standard-form parity-check matrix `[I | A]`.
    pub fn parity_check(&self) -> &F4Matrix {
        &self.h
    }

    /// Binary view of `[I | A]`; `None` for quaternary codes.
    pub fn parity_check_f2(&self) -> Option<F2Matrix> {
        match self.field {
            FieldOrder::Binary => self.h.to_f2(),
            FieldOrder::Quaternary => None,
        }
    }

    /// The `(n-k) × k` block `A`.
    pub fn a_block(&self) -> F4Matrix {
        self.h.columns(self.redundancy(), self.n)
    }

    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    /// Maps a vector in standard column order back to user column order.
    pub fn to_user_order(&self, v: &F4Vector) -> F4Vector {
        v.unpermuted(&self.col_perm)
    }

    /// Maps a vector in user column order to standard column order.
    pub fn to_standard_order(&self, v: &F4Vector) -> F4Vector {
        v.permuted(&self.col_perm)
    }

    /// The generator `[Aᵀ | I]` (characteristic 2, so `-Aᵀ = Aᵀ`).
    pub fn generator(&self) -> F4Matrix {
        let a_t = self.a_block().transpose();
        let rows = (0..self.k)
            .map(|i| {
                let mut unit = F4Vector::zeros(self.k);
                unit.set(i, Gf4::ONE);
                a_t.row(i).concat(&unit)
            })
            .collect();
        F4Matrix::from_rows(self.n, rows).expect("generator rows have length n")
    }

    pub fn distance(&self) -> Option<Distance> {
        self.distance
    }

    pub fn with_declared_distance(mut self, d: usize) -> ClassicalCode {
        self.distance = Some(Distance {
            value: d,
            source: DistanceSource::Declared,
        });
        self
    }

    /// Computes `d` by enumeration and records it.
    pub fn with_computed_distance(mut self) -> Result<ClassicalCode> {
        let d = self.min_distance()?;
        self.distance = Some(Distance {
            value: d,
            source: DistanceSource::Computed,
        });
        Ok(self)
    }

    /// Known distance value.
    pub fn d(&self) -> Result<usize> {
        self.distance.map(|d| d.value).ok_or(Error::DistanceUnknown)
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        (self.field.order() as u128)
            .checked_pow(self.k as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Minimum nonzero codeword weight by enumerating all `q^k` codewords.
    pub fn min_distance_with_cap(&self, cap: u128) -> Result<usize> {
        let needed = self.size();
        if needed > cap {
            return Err(Error::EnumerationCap { needed, cap });
        }
        let g = self.generator();
        let elems = self.field.elements();
        let q = elems.len() as u128;
        let mut best = self.n;
        for index in 1..needed {
            let mut word = F4Vector::zeros(self.n);
            let mut rest = index;
            for row in g.rows() {
                let coeff = elems[(rest % q) as usize];
                rest /= q;
                if !coeff.is_zero() {
                    word = &word + &row.scale(coeff);
                }
            }
            best = best.min(word.weight());
        }
        Ok(best)
    }

    /// `d = n - k + 1`.
    pub fn is_mds(&self) -> Result<bool> {
        Ok(self.d()? == self.n - self.k + 1)
    }

    /// Correction radius `floor((d-1)/2)`.
    pub fn radius(&self) -> Result<usize> {
        Ok(self.d()?.saturating_sub(1) / 2)
    }

    /// Short `[n,k,d]_q` label; `d` is `?` when unknown.
    pub fn label(&self) -> String {
        let d = self.distance.map_or_else(|| "?".to_string(), |d| d.value.to_string());
        format!("[{},{},{}]_{}", self.n, self.k, d, self.field.order())
    }
}

impl FromStr for ClassicalCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassicalCode::parse(s)
    }
}

impl fmt::Display for ClassicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.field.order(), self.n, self.k)?;
        // user column order, so the output re-parses to the same code
        for row in self.h.rows() {
            writeln!(f, "{}", self.to_user_order(row))?;
        }
        if let Some(d) = self.distance {
            writeln!(f, "d {}", d.value)?;
        }
        Ok(())
    }
}

/// A named code shipped with the library.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    field: FieldOrder,
    rows: &'static [&'static str],
    distance: usize,
}

/// Codes in the built-in catalog.
pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "rep3_b",
        description: "binary repetition code",
        field: FieldOrder::Binary,
        rows: &["1 1 0", "1 0 1"],
        distance: 3,
    },
    CatalogEntry {
        name: "hamming7_b",
        description: "binary Hamming code, columns in counting order",
        field: FieldOrder::Binary,
        rows: &["0 0 0 1 1 1 1", "0 1 1 0 0 1 1", "1 0 1 0 1 0 1"],
        distance: 3,
    },
    CatalogEntry {
        name: "mds4_2_q",
        description: "quaternary MDS code, extended Reed-Solomon",
        field: FieldOrder::Quaternary,
        rows: &["1 0 1 1", "0 1 1 w"],
        distance: 3,
    },
    CatalogEntry {
        name: "ext_rs5_2_q",
        description: "quaternary doubly-extended Reed-Solomon code",
        field: FieldOrder::Quaternary,
        rows: &["1 0 0 1 1", "0 1 0 1 w", "0 0 1 1 W"],
        distance: 4,
    },
];

impl CatalogEntry {
    /// The parity-check matrix as stored, in user column order.
    pub fn parity_check(&self) -> F4Matrix {
        let rows: Vec<F4Vector> = self
            .rows
            .iter()
            .map(|r| {
                let elems: Vec<Gf4> = r
                    .split_whitespace()
                    .map(|t| Gf4::from_token(t).expect("catalog tokens are valid"))
                    .collect();
                F4Vector::from_elems(&elems)
            })
            .collect();
        let cols = rows[0].len();
        F4Matrix::from_rows(cols, rows).expect("catalog rows are rectangular")
    }

    /// Distance recorded alongside the matrix.
    pub fn recorded_distance(&self) -> usize {
        self.distance
    }

    pub fn code(&self) -> ClassicalCode {
        let code = ClassicalCode::from_parity_check(self.field, &self.parity_check())
            .expect("catalog matrices have full rank")
            .with_computed_distance()
            .expect("catalog codes are small enough to enumerate");
        assert_eq!(code.d().ok(), Some(self.distance), "catalog distance for {}", self.name);
        code
    }
}

/// Looks up a catalog code; its distance is computed on construction and
/// checked against the recorded value.
pub fn catalog_get(name: &str) -> Result<ClassicalCode> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .map(CatalogEntry::code)
        .ok_or_else(|| Error::UnknownCode(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent distance oracle for small d: d = 1 iff some column is zero,
    // d = 2 iff two columns are scalar multiples of each other, else d >= 3.
    fn column_dependence_distance(code: &ClassicalCode) -> usize {
        let h = code.parity_check().transpose();
        let cols: Vec<&F4Vector> = h.rows().iter().collect();
        if cols.iter().any(|c| c.is_zero()) {
            return 1;
        }
        for (i, a) in cols.iter().enumerate() {
            for b in &cols[i + 1..] {
                if Gf4::NONZERO.iter().any(|&s| &a.scale(s) == *b) {
                    return 2;
                }
            }
        }
        3
    }

    #[test]
    fn repetition_code() {
        let code = ClassicalCode::from_binary_parity_check(&F2Matrix::from_bits(&[&[1, 1, 0], &[1, 0, 1]])).unwrap();
        assert_eq!((code.n(), code.k()), (3, 1));
        assert_eq!(code.min_distance().unwrap(), 3);
        assert_eq!(code.a_block().to_f2().unwrap(), F2Matrix::from_bits(&[&[1], &[1]]));
    }

    #[test]
    fn catalog_parameters() {
        let rep = catalog_get("rep3_b").unwrap();
        assert_eq!(rep.label(), "[3,1,3]_2");
        assert!(rep.is_mds().unwrap());

        let ham = catalog_get("hamming7_b").unwrap();
        assert_eq!(ham.label(), "[7,4,3]_2");
        assert!(!ham.is_mds().unwrap());

        let mds = catalog_get("mds4_2_q").unwrap();
        assert_eq!(mds.label(), "[4,2,3]_4");
        assert!(mds.is_mds().unwrap());

        let rs = catalog_get("ext_rs5_2_q").unwrap();
        assert_eq!(rs.label(), "[5,2,4]_4");
        assert!(rs.is_mds().unwrap());

        assert_eq!(catalog_get("golay").unwrap_err(), Error::UnknownCode("golay".into()));
    }

    #[test]
    fn generator_is_orthogonal_to_parity_checks() {
        for entry in CATALOG {
            let code = entry.code();
            let g = code.generator();
            for row in g.rows() {
                assert!(code.parity_check().mul_vec(row).unwrap().is_zero(), "{}", entry.name);
            }
            // and the same holds for the user-order matrix
            for row in g.rows() {
                let user = code.to_user_order(row);
                assert!(entry.parity_check().mul_vec(&user).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn distance_agrees_with_column_oracle() {
        for entry in CATALOG {
            let code = entry.code();
            assert_eq!(
                code.d().unwrap().min(3),
                column_dependence_distance(&code),
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn parse_and_print() {
        let text = "# comment\n4 4 2\n1 0 1 1\n0 1 1 w\n\nd 3\n";
        let code = ClassicalCode::parse(text).unwrap();
        assert_eq!(code.field(), FieldOrder::Quaternary);
        assert_eq!(code.distance().unwrap().source, DistanceSource::Declared);
        let reparsed: ClassicalCode = code.to_string().parse().unwrap();
        assert_eq!(reparsed, code);
    }

    #[test]
    fn printing_uses_user_column_order() {
        let ham = catalog_get("hamming7_b").unwrap();
        let reparsed = ClassicalCode::parse(&ham.to_string()).unwrap();
        assert_eq!(reparsed.parity_check(), ham.parity_check());
        assert_eq!(reparsed.col_perm(), ham.col_perm());
    }

    #[test]
    fn parse_errors() {
        let bad = [
            "",
            "3 4 2\n1 0 1 1\n0 1 1 1\n",
            "2 4 2\n1 0 1 1\n0 1 1 w\n",
            "4 4 2\n1 0 1 1\n",
            "4 4 2\n1 0 1 1\n0 1 1\n",
            "4 4 2\n1 0 1 x\n0 1 1 w\n",
            "2 3 1\n0 0 0\n1 0 1\n",
            "4 4 2\n1 0 1 1\n0 1 1 w\nd 9\n",
            "4 4 0\n",
        ];
        for text in bad {
            assert!(ClassicalCode::parse(text).is_err(), "{text:?}");
        }
        assert!(matches!(
            ClassicalCode::parse("2 3 1\n0 0 0\n1 0 1\n"),
            Err(Error::RankDeficient { row: 0 })
        ));
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let code = catalog_get("hamming7_b").unwrap();
        assert!(matches!(
            code.min_distance_with_cap(8),
            Err(Error::EnumerationCap { needed: 16, cap: 8 })
        ));
    }

    #[test]
    fn unknown_distance_is_an_error() {
        let code = ClassicalCode::parse("2 3 1\n1 1 0\n1 0 1\n").unwrap();
        assert_eq!(code.is_mds().unwrap_err(), Error::DistanceUnknown);
    }
}
