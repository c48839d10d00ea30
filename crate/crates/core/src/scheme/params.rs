//! Entanglement-assisted parameters and the quantum Singleton bound.

use std::fmt;

use serde::Serialize;

use crate::code::ClassicalCode;
use crate::error::Result;

/// Parameters `[[n_e, k_e, d_e; c]]` of the entanglement-assisted code obtained
/// when the ancillas are noiseless. `d_e` is a lower bound on the distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EaParameters {
    pub n_e: usize,
    pub k_e: usize,
    pub d_e: usize,
    pub c: usize,
}

/// `[n, k, d]` gives `[[k, k, ≥d; 2(n-k)]]`.
pub fn ea_parameters(code: &ClassicalCode) -> Result<EaParameters> {
    Ok(EaParameters {
        n_e: code.k(),
        k_e: code.k(),
        d_e: code.d()?,
        c: 2 * code.redundancy(),
    })
}

impl fmt::Display for EaParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},≥{};{}]]", self.n_e, self.k_e, self.d_e, self.c)
    }
}

/// Both sides of `k_e - c ≤ n_e - 2d_e + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonCheck {
    /// `k_e - c`.
    pub lhs: i64,
    /// `n_e - 2d_e + 2`.
    pub rhs: i64,
    /// `rhs - lhs`; zero means the bound is met with equality.
    pub slack: i64,
    /// Whether `n_e ≥ 2(d_e - 1)`, the regime where the bound is proven.
    pub hypothesis_holds: bool,
}

impl SingletonCheck {
    pub fn saturates(&self) -> bool {
        self.slack == 0
    }
}

pub fn singleton_slack(p: &EaParameters) -> SingletonCheck {
    let (n_e, k_e, d_e, c) = (p.n_e as i64, p.k_e as i64, p.d_e as i64, p.c as i64);
    let lhs = k_e - c;
    let rhs = n_e - 2 * d_e + 2;
    SingletonCheck {
        lhs,
        rhs,
        slack: rhs - lhs,
        hypothesis_holds: n_e >= 2 * (d_e - 1),
    }
}
