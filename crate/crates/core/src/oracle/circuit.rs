use crate::scheme::{AncillaBasis, Scheme};

use super::state::StateVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    Cx { control: usize, target: usize },
    Cz { a: usize, b: usize },
    H(usize),
}

impl Gate {
    pub fn apply(&self, s: &mut StateVector) {
        match *self {
            Gate::Cx { control, target } => s.apply_cx(control, target),
            Gate::Cz { a, b } => s.apply_cz(a, b),
            Gate::H(q) => s.apply_h(q),
        }
    }
}

/// Order in which the controlled gates of one encoding circuit are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateOrder {
    /// All CZs, then all CXs. On ancilla branch `μ` the data sees
    /// `X^{μH_X'} Z^{μH_Z'}`.
    CzThenCx,
    /// All CXs, then all CZs. Gives `Z^{μH_Z'} X^{μH_X'}`, which differs from
    /// the above by the branch-dependent sign `(-1)^{(μH_Z')·(μH_X')}`.
    CxThenCz,
}

/// Encoding unitary `Q` as a gate list (first element applied first).
pub fn encoding_circuit(scheme: &Scheme) -> Vec<Gate> {
    encoding_circuit_ordered(scheme, GateOrder::CzThenCx)
}

pub fn encoding_circuit_ordered(scheme: &Scheme, order: GateOrder) -> Vec<Gate> {
    let m = scheme.n_anc();
    let mut cz = Vec::new();
    let mut cx = Vec::new();
    for i in 0..m {
        for j in 0..scheme.k() {
            if scheme.h_zp().get(i, j) {
                cz.push(Gate::Cz { a: i, b: m + j });
            }
            if scheme.h_xp().get(i, j) {
                cx.push(Gate::Cx {
                    control: i,
                    target: m + j,
                });
            }
        }
    }
    let controlled = match order {
        GateOrder::CzThenCx => [cz, cx].concat(),
        GateOrder::CxThenCz => [cx, cz].concat(),
    };
    match scheme.basis() {
        AncillaBasis::X => controlled,
        AncillaBasis::Z => {
            let layer: Vec<Gate> = (0..m).map(Gate::H).collect();
            [layer.clone(), controlled, layer].concat()
        }
    }
}

/// Inverse of a circuit made of self-inverse gates.
pub fn inverse(circuit: &[Gate]) -> Vec<Gate> {
    circuit.iter().rev().copied().collect()
}

pub fn run(circuit: &[Gate], s: &mut StateVector) {
    for g in circuit {
        g.apply(s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::catalog_get;

    #[test]
    fn gate_counts_match_blocks() {
        let s = Scheme::build(catalog_get("hamming7_b").unwrap()).unwrap();
        let c = encoding_circuit(&s);
        // [A;0] and [0;A] each contribute one gate per nonzero entry of A.
        let ones = (0..s.n_anc())
            .flat_map(|i| (0..s.k()).map(move |j| (i, j)))
            .filter(|&(i, j)| s.h_zp().get(i, j))
            .count();
        assert_eq!(c.len(), 2 * ones);
        let first_cx = c.iter().position(|g| matches!(g, Gate::Cx { .. })).unwrap();
        assert!(c[..first_cx].iter().all(|g| matches!(g, Gate::Cz { .. })));

        let d = encoding_circuit(&s.dualize());
        assert_eq!(d.len(), c.len() + 2 * s.n_anc());
        assert_eq!(d[0], Gate::H(0));
        assert_eq!(*d.last().unwrap(), Gate::H(s.n_anc() - 1));
    }

    #[test]
    fn inverse_reverses() {
        let c = vec![Gate::H(0), Gate::Cx { control: 0, target: 1 }, Gate::Cz { a: 1, b: 2 }];
        assert_eq!(
            inverse(&c),
            vec![Gate::Cz { a: 1, b: 2 }, Gate::Cx { control: 0, target: 1 }, Gate::H(0)]
        );
    }
}
