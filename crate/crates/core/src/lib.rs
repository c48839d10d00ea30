//! Quantum error correction with noisy ancillas built from classical
//! linear codes over GF(2) and GF(4).
//!
//! A classical `[n, k, d]` code in standard form `H = [I | A]` yields a
//! `k`-qubit data register protected by `2(n-k)` ancillas. The ancillas may
//! themselves suffer one Pauli type (Z, or X for the dual scheme) and every
//! error of weight at most `⌊(d-1)/2⌋` across ancillas and data is still
//! corrected by a lookup table.
//!
//! - [`linalg`]: GF(2)/GF(4) vectors and matrices, trace maps, standard form.
//! - [`code`]: classical codes, parsing, distance, the built-in catalog.
//! - [`scheme`]: the encoding blocks, syndromes, closed-form propagation and
//!   syndrome tables.
//! - [`noise`]: error samplers and Monte Carlo failure rates.
//! - [`oracle`]: a statevector simulator used as an independent check.
//! - [`suites`]: named verification suites used by the command line tool.

pub mod code;
pub mod error;
pub mod linalg;
pub mod noise;
pub mod oracle;
pub mod scheme;
pub mod suites;

pub use code::{catalog_get, CatalogEntry, ClassicalCode, Distance, DistanceSource, FieldOrder, CATALOG};
pub use error::{Error, Result};
pub use linalg::{F2Matrix, F2Vector, F4Matrix, F4Vector, Gf4};
pub use noise::{monte_carlo, monte_carlo_with_threads, MonteCarloReport, NoiseKind, NoiseModel, SimulationReport};
pub use scheme::{
    ea_parameters, run_cycle, singleton_slack, AncillaBasis, AncillaErrors, EaParameters, Pauli, PauliErrorVector,
    Scheme, SingletonCheck, SyndromeTable, Variant,
};
