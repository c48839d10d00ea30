//! Syndrome tables, decoding and the algebraic correction cycle.

use std::collections::HashMap;
use std::io::{Read, Write};

use itertools::Itertools;

use super::pauli::{binomial, count_errors, enumerate_errors, AncillaErrors, Pauli, PauliErrorVector};
use super::propagate::{pair_syndrome, propagate_closed_form, trace_syndrome};
use super::{Scheme, Variant};
use crate::error::{Error, Result};
use crate::linalg::{reconstruct_from_traces, F2Vector, F4Vector, Gf4};

/// Default cap on the number of table entries.
pub const DEFAULT_TABLE_CAP: u128 = 1 << 24;

const MAGIC: &[u8; 4] = b"LNQT";
const FORMAT_VERSION: u8 = 1;

/// A correctable error stored as its trace pair `(Tr(e), Tr(ωe))`.
///
/// For binary codes the pair is `(e0, e1) = ((e_Z_l0, e_X_r), (e_Z_l1, e_Z_r))`,
/// which has the same shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableEntry {
    pub e0: F2Vector,
    pub e1: F2Vector,
}

impl TableEntry {
    /// `e = ω² e0 + e1`.
    pub fn as_f4(&self) -> F4Vector {
        reconstruct_from_traces(&self.e0, &self.e1).expect("entry halves share a length")
    }

    /// Data-qubit correction `(X part, Z part)`: the last `k` bits of `e0` and `e1`.
    pub fn correction(&self, k: usize) -> (F2Vector, F2Vector) {
        let n = self.e0.len();
        (self.e0.slice(n - k, n), self.e1.slice(n - k, n))
    }
}

/// Injective map from ancilla outcomes to correctable errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeTable {
    variant: Variant,
    n: usize,
    k: usize,
    t: usize,
    entries: HashMap<F2Vector, TableEntry>,
}

impl SyndromeTable {
    pub fn build(scheme: &Scheme, t: usize) -> Result<SyndromeTable> {
        Self::build_with_cap(scheme, t, DEFAULT_TABLE_CAP)
    }

    /// Enumerates every error within radius `t` and keys it by its syndrome.
    ///
    /// Quaternary codes: all `e ∈ GF(4)^n` with `|supp(e)| ≤ t`, keyed by
    /// `Tr(H_Q eᵀ)`. Binary codes: all physical errors of weight `≤ t` with
    /// phase-only ancillas, keyed by `(H e0ᵀ, H e1ᵀ)`.
    ///
    /// A key collision is reported as [`Error::TableCollision`]; it can only
    /// arise from an implementation bug or a wrong declared distance.
    pub fn build_with_cap(scheme: &Scheme, t: usize, cap: u128) -> Result<SyndromeTable> {
        let max = scheme.code().radius()?;
        if t > max {
            return Err(Error::RadiusTooLarge { t, max });
        }
        let needed = Self::size_for(scheme, t);
        if needed > cap {
            return Err(Error::TableCap { needed, cap });
        }
        let mut table = SyndromeTable {
            variant: scheme.variant(),
            n: scheme.n(),
            k: scheme.k(),
            t,
            entries: HashMap::with_capacity(needed as usize),
        };
        match scheme.variant() {
            Variant::Quaternary => {
                for e in quaternary_ball(scheme.n(), t) {
                    let key = trace_syndrome(scheme, &e)?;
                    table.insert(
                        key,
                        TableEntry {
                            e0: e.trace(),
                            e1: e.trace_omega(),
                        },
                    )?;
                }
            }
            Variant::Binary => {
                for err in enumerate_errors(scheme.layout(), t, AncillaErrors::Only(Pauli::Z)) {
                    let e0 = err.z_left0().concat(&err.x_right());
                    let e1 = err.z_left1().concat(&err.z_right());
                    let key = pair_syndrome(scheme, &e0, &e1)?;
                    table.insert(key, TableEntry { e0, e1 })?;
                }
            }
        }
        Ok(table)
    }

    /// Number of entries a radius-`t` table holds.
    pub fn size_for(scheme: &Scheme, t: usize) -> u128 {
        match scheme.variant() {
            Variant::Quaternary => (0..=t.min(scheme.n()) as u128)
                .map(|i| binomial(scheme.n() as u128, i) * 3u128.pow(i as u32))
                .sum(),
            Variant::Binary => count_errors(scheme.layout(), t, AncillaErrors::Only(Pauli::Z)),
        }
    }

    fn insert(&mut self, key: F2Vector, entry: TableEntry) -> Result<()> {
        if let Some(existing) = self.entries.get(&key) {
            return Err(Error::TableCollision {
                key: key.to_string(),
                first: existing.as_f4().to_string(),
                second: entry.as_f4().to_string(),
            });
        }
        self.entries.insert(key, entry);
        Ok(())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Correction radius.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, syndrome: &F2Vector) -> Option<&TableEntry> {
        self.entries.get(syndrome)
    }

    /// Entries sorted by key, read as an integer with bit `i` worth `2^i`.
    pub fn sorted_entries(&self) -> Vec<(&F2Vector, &TableEntry)> {
        self.entries.iter().sorted_by(|a, b| a.0.cmp_le(b.0)).collect()
    }

    /// Checks that the table was built for this scheme's code shape.
    pub fn check_matches(&self, scheme: &Scheme) -> Result<()> {
        if self.variant != scheme.variant() || self.n != scheme.n() || self.k != scheme.k() {
            return Err(Error::TableMismatch(format!(
                "table is {:?} n={} k={}, scheme is {:?} n={} k={}",
                self.variant,
                self.n,
                self.k,
                scheme.variant(),
                scheme.n(),
                scheme.k()
            )));
        }
        Ok(())
    }

    /// Recomputes every key from its entry.
    pub fn verify_against(&self, scheme: &Scheme) -> Result<()> {
        self.check_matches(scheme)?;
        for (key, entry) in &self.entries {
            let expected = match self.variant {
                Variant::Quaternary => trace_syndrome(scheme, &entry.as_f4())?,
                Variant::Binary => pair_syndrome(scheme, &entry.e0, &entry.e1)?,
            };
            if &expected != key {
                return Err(Error::TableMismatch(format!(
                    "entry {} is stored under {} but its syndrome is {}",
                    entry.as_f4(),
                    key,
                    expected
                )));
            }
        }
        Ok(())
    }

    /// Binary encoding, all integers little-endian:
    ///
    /// ```text
    /// "LNQT" | version u8 = 1 | variant u8 (0 quaternary, 1 binary)
    /// n u32 | k u32 | t u32 | entry count u32
    /// entries, ascending by key:
    ///   key  ceil(2(n-k)/8) bytes
    ///   e0   ceil(n/8) bytes
    ///   e1   ceil(n/8) bytes
    /// ```
    ///
    /// Bit strings put bit `i` in byte `i / 8` at position `i % 8`; keys sort
    /// as unsigned integers with bit `i` worth `2^i`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.push(FORMAT_VERSION);
        out.push(self.variant.tag());
        for v in [self.n, self.k, self.t, self.entries.len()] {
            out.extend_from_slice(&(v as u32).to_le_bytes());
        }
        for (key, entry) in self.sorted_entries() {
            out.extend_from_slice(&key.to_le_bytes());
            out.extend_from_slice(&entry.e0.to_le_bytes());
            out.extend_from_slice(&entry.e1.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<SyndromeTable> {
        let bad = |msg: &str| Error::TableFormat(msg.to_string());
        let mut cursor = bytes;
        let mut take = |len: usize| -> Result<&[u8]> {
            if cursor.len() < len {
                return Err(Error::TableFormat("unexpected end of data".into()));
            }
            let (head, tail) = cursor.split_at(len);
            cursor = tail;
            Ok(head)
        };
        if take(4)? != MAGIC {
            return Err(bad("bad magic"));
        }
        let version = take(1)?[0];
        if version != FORMAT_VERSION {
            return Err(Error::TableFormat(format!("unsupported version {version}")));
        }
        let variant = Variant::from_tag(take(1)?[0]).ok_or_else(|| bad("unknown variant"))?;
        let mut read_u32 = || -> Result<usize> {
            let b = take(4)?;
            Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]) as usize)
        };
        let n = read_u32()?;
        let k = read_u32()?;
        let t = read_u32()?;
        let count = read_u32()?;
        if k == 0 || k >= n {
            return Err(bad("header needs 0 < k < n"));
        }
        let key_len = 2 * (n - k);
        let mut entries = HashMap::with_capacity(count);
        let mut previous: Option<F2Vector> = None;
        for _ in 0..count {
            let key = F2Vector::from_le_bytes(take(key_len.div_ceil(8))?, key_len)?;
            let e0 = F2Vector::from_le_bytes(take(n.div_ceil(8))?, n)?;
            let e1 = F2Vector::from_le_bytes(take(n.div_ceil(8))?, n)?;
            if let Some(prev) = &previous {
                if prev.cmp_le(&key) != std::cmp::Ordering::Less {
                    return Err(bad("keys are not strictly ascending"));
                }
            }
            previous = Some(key.clone());
            entries.insert(key, TableEntry { e0, e1 });
        }
        if bytes.len() != encoded_len(n, k, count) {
            return Err(bad("trailing bytes"));
        }
        Ok(SyndromeTable {
            variant,
            n,
            k,
            t,
            entries,
        })
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(&self.to_bytes())
    }

    pub fn read_from<R: Read>(
        mut r: R,
    ) -> std::result::Result<SyndromeTable, Box<dyn std::error::Error + Send + Sync>> {
        let mut buf = Vec::new();
        r.read_to_end(&mut buf)?;
        Ok(SyndromeTable::from_bytes(&buf)?)
    }
}

// Header is 4 + 1 + 1 + 16 bytes.
fn encoded_len(n: usize, k: usize, count: usize) -> usize {
    let entry_len = (2 * (n - k)).div_ceil(8) + 2 * n.div_ceil(8);
    22 + count * entry_len
}

// All vectors in GF(4)^n of weight at most t.
fn quaternary_ball(n: usize, t: usize) -> impl Iterator<Item = F4Vector> {
    (0..=t.min(n)).flat_map(move |w| {
        (0..n).combinations(w).flat_map(move |positions| {
            let values = std::iter::repeat_n(Gf4::NONZERO.iter(), w).multi_cartesian_product();
            let values: Box<dyn Iterator<Item = Vec<&Gf4>>> = if w == 0 {
                Box::new(std::iter::once(Vec::new()))
            } else {
                Box::new(values)
            };
            let positions = positions.clone();
            values.map(move |vals| {
                let mut e = F4Vector::zeros(n);
                for (&p, &v) in positions.iter().zip(&vals) {
                    e.set(p, *v);
                }
                e
            })
        })
    })
}

/// Result of looking up an ancilla outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoding {
    /// The outcome is in the table; apply `X^{data_x} Z^{data_z}` to the data.
    Corrected {
        data_x: F2Vector,
        data_z: F2Vector,
        error: TableEntry,
    },
    /// The outcome is not in the table. No correction is guessed.
    Failure,
}

impl Decoding {
    pub fn is_failure(&self) -> bool {
        matches!(self, Decoding::Failure)
    }
}

pub fn decode(table: &SyndromeTable, anc_outcome: &F2Vector) -> Decoding {
    match table.get(anc_outcome) {
        Some(entry) => {
            let (data_x, data_z) = entry.correction(table.k);
            Decoding::Corrected {
                data_x,
                data_z,
                error: entry.clone(),
            }
        }
        None => Decoding::Failure,
    }
}

/// Outcome of one algebraic encode–error–decode–correct round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOutcome {
    /// The data residual after correction is the identity.
    pub success: bool,
    pub residual_x: F2Vector,
    pub residual_z: F2Vector,
    pub anc_outcome: F2Vector,
    pub decoding: Decoding,
    /// Ancillas carried only the tolerated Pauli. When false the correction
    /// guarantee does not apply.
    pub assumption_holds: bool,
}

pub fn run_cycle(scheme: &Scheme, table: &SyndromeTable, err: &PauliErrorVector) -> Result<CycleOutcome> {
    table.check_matches(scheme)?;
    let p = propagate_closed_form(scheme, err)?;
    let decoding = decode(table, &p.anc_outcome);
    let (residual_x, residual_z) = match &decoding {
        Decoding::Corrected { data_x, data_z, .. } => (&p.data_x + data_x, &p.data_z + data_z),
        Decoding::Failure => (p.data_x.clone(), p.data_z.clone()),
    };
    Ok(CycleOutcome {
        success: residual_x.is_zero() && residual_z.is_zero(),
        residual_x,
        residual_z,
        anc_outcome: p.anc_outcome,
        decoding,
        assumption_holds: scheme.ancilla_assumption_holds(err),
    })
}
