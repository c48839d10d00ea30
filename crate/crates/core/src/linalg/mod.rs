//! Exact arithmetic over GF(2) and GF(4).
//!
//! GF(4) elements are bit pairs `(b1, bω)`. Vectors keep one packed bit plane
//! per coefficient, which makes the trace and multiplication by ω plain word
//! operations:
//!
//! * `Tr(a)` is the ω-plane,
//! * `Tr(ωa)` is the XOR of both planes,
//! * `a = ω²·Tr(a) + Tr(ωa)`.

mod field;
mod matrix;
mod vector;

pub use field::{gf4_mul, trace, Gf4};
pub use matrix::{F2Matrix, F4Matrix, StandardForm};
pub use vector::{reconstruct_from_traces, F2Vector, F4Vector};
