//! The field GF(4) = {0, 1, ω, ω² = ω + 1}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

/// An element of GF(4) stored as the bit pair `(b1, bω)` with value `b1 + bω·ω`.
///
/// Bit 0 holds the coefficient of 1 and bit 1 the coefficient of ω, so
/// `0 = 0b00`, `1 = 0b01`, `ω = 0b10`, `ω² = 0b11`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

// Generated by ω² = ω + 1.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_SQ: Gf4 = Gf4(3);

    /// All four elements in the order 0, 1, ω, ω².
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_SQ];

    /// The three nonzero elements.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_SQ];

    #[inline]
    pub const fn from_bits(b1: bool, b_omega: bool) -> Gf4 {
        Gf4((b1 as u8) | ((b_omega as u8) << 1))
    }

    /// Coefficient of 1.
    #[inline]
    pub const fn b1(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of ω.
    #[inline]
    pub const fn b_omega(self) -> bool {
        self.0 & 2 == 2
    }

    #[inline]
    pub const fn to_index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn square(self) -> Gf4 {
        Gf4(MUL[self.0 as usize][self.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub const fn inverse(self) -> Option<Gf4> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf4(INV[self.0 as usize]))
        }
    }

    /// Tr(a) = a + a², which is the ω coefficient under this encoding.
    #[inline]
    pub const fn trace(self) -> bool {
        self.b_omega()
    }

    /// Parses one of `0`, `1`, `w` (ω) or `W` (ω²).
    pub fn from_token(token: &str) -> Option<Gf4> {
        match token {
            "0" => Some(Gf4::ZERO),
            "1" => Some(Gf4::ONE),
            "w" => Some(Gf4::OMEGA),
            "W" => Some(Gf4::OMEGA_SQ),
            _ => None,
        }
    }

    pub const fn token(self) -> &'static str {
        match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "W",
        }
    }
}

/// Multiplication in GF(4).
#[inline]
pub fn gf4_mul(a: Gf4, b: Gf4) -> Gf4 {
    Gf4(MUL[a.0 as usize][b.0 as usize])
}

/// The absolute trace GF(4) → GF(2).
#[inline]
pub fn trace(a: Gf4) -> bool {
    a.trace()
}

// Characteristic 2: addition is XOR of the bit pairs.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        gf4_mul(self, rhs)
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = gf4_mul(*self, rhs);
    }
}

impl From<bool> for Gf4 {
    fn from(bit: bool) -> Gf4 {
        Gf4(bit as u8)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "ω",
            _ => "ω²",
        })
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: multiply as polynomials over GF(2) modulo x² + x + 1.
    fn poly_mul(a: Gf4, b: Gf4) -> Gf4 {
        let (a0, a1) = (a.b1() as u8, a.b_omega() as u8);
        let (b0, b1) = (b.b1() as u8, b.b_omega() as u8);
        let c0 = a0 & b0;
        let c1 = (a0 & b1) ^ (a1 & b0);
        let c2 = a1 & b1;
        // x² = x + 1
        Gf4::from_bits((c0 ^ c2) == 1, (c1 ^ c2) == 1)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA_SQ);
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA_SQ, Gf4::ONE);
        assert_eq!(Gf4::ZERO * Gf4::OMEGA_SQ, Gf4::ZERO);
        assert_eq!(Gf4::OMEGA + Gf4::ONE, Gf4::OMEGA_SQ);
    }

    #[test]
    fn table_matches_polynomial_multiplication() {
        for a in Gf4::ALL {
            for b in Gf4::ALL {
                assert_eq!(a * b, poly_mul(a, b), "{a:?} * {b:?}");
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            assert_eq!(a * Gf4::ONE, a);
            assert_eq!(a + Gf4::ZERO, a);
            assert_eq!(a + a, Gf4::ZERO);
            if let Some(inv) = a.inverse() {
                assert_eq!(a * inv, Gf4::ONE);
            } else {
                assert!(a.is_zero());
            }
            for b in Gf4::ALL {
                assert_eq!(a * b, b * a);
                assert_eq!(a + b, b + a);
                for c in Gf4::ALL {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn trace_values() {
        assert!(!trace(Gf4::ZERO));
        assert!(!trace(Gf4::ONE));
        assert!(trace(Gf4::OMEGA));
        assert!(trace(Gf4::OMEGA_SQ));
        // Tr(a) = a + a² lands in GF(2).
        for a in Gf4::ALL {
            let t = a + a.square();
            assert!(t == Gf4::ZERO || t == Gf4::ONE);
            assert_eq!(t == Gf4::ONE, trace(a));
        }
    }

    #[test]
    fn tokens_round_trip() {
        for a in Gf4::ALL {
            assert_eq!(Gf4::from_token(a.token()), Some(a));
        }
        assert_eq!(Gf4::from_token("2"), None);
    }
}
