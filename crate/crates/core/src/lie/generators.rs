use std::fmt;

use serde::Serialize;

use crate::ga::{gamma5, Algebra, Multivector};
use crate::linalg::{c64, I};

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub fn metric(mu: u8, nu: u8) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (a, b) if a == b => -1.0,
        _ => 0.0,
    }
}

/// Generators of the conformal algebra of Minkowski space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    P(u8),
    K(u8),
    D,
    /// `M(μ, ν)` with `μ < ν`.
    M(u8, u8),
}

impl Generator {
    /// `P0..P3, K0..K3, D, M01, M02, M03, M12, M13, M23`.
    pub const ALL: [Generator; 15] = [
        Generator::P(0),
        Generator::P(1),
        Generator::P(2),
        Generator::P(3),
        Generator::K(0),
        Generator::K(1),
        Generator::K(2),
        Generator::K(3),
        Generator::D,
        Generator::M(0, 1),
        Generator::M(0, 2),
        Generator::M(0, 3),
        Generator::M(1, 2),
        Generator::M(1, 3),
        Generator::M(2, 3),
    ];

    pub fn index(self) -> usize {
        match self {
            Generator::P(mu) => mu as usize,
            Generator::K(mu) => 4 + mu as usize,
            Generator::D => 8,
            Generator::M(mu, nu) => {
                Generator::ALL[9..].iter().position(|&g| g == Generator::M(mu, nu)).expect("M(μ, ν) needs μ < ν") + 9
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::P(mu) => write!(f, "P{mu}"),
            Generator::K(mu) => write!(f, "K{mu}"),
            Generator::D => write!(f, "D"),
            Generator::M(mu, nu) => write!(f, "M{mu}{nu}"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Realization {
    /// Bivectors of Cl(2,4) in the `ε` basis.
    Bivector24,
    /// Elements of ℂ⊗Cl(1,3) in the `γ` basis.
    DiracCl13,
}

impl Realization {
    pub const ALL: [Realization; 2] = [Realization::Bivector24, Realization::DiracCl13];
}

pub fn generator(g: Generator, r: Realization) -> Multivector {
    match r {
        Realization::Bivector24 => {
            let eps = |labels: &[u8]| Algebra::Cl24.blade(labels);
            let half_i = c64(0.0, 0.5);
            match g {
                Generator::P(mu) => (eps(&[mu, 5]) + eps(&[mu, 4])).scale(half_i),
                Generator::K(mu) => (eps(&[mu, 5]) - eps(&[mu, 4])).scale(-half_i),
                Generator::D => eps(&[4, 5]).scale(-0.5),
                Generator::M(mu, nu) => eps(&[mu, nu]).scale(0.5),
            }
        }
        Realization::DiracCl13 => {
            let gamma = |mu: u8| Algebra::Cl13.generator(mu);
            let g5 = gamma5();
            match g {
                Generator::P(mu) => (gamma(mu) + (&gamma(mu) * &g5).scale(I)).scale(0.5),
                Generator::K(mu) => (gamma(mu) - (&gamma(mu) * &g5).scale(I)).scale(-0.5),
                Generator::D => g5.scale(c64(0.0, 0.5)),
                Generator::M(mu, nu) => gamma(mu).wedge(&gamma(nu)).expect("same algebra").scale(0.5),
            }
        }
    }
}

/// The 15 generators of a realization in [`Generator::ALL`] order.
pub fn generator_basis(r: Realization) -> Vec<Multivector> {
    Generator::ALL.iter().map(|&g| generator(g, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Signature;

    #[test]
    fn indices_follow_the_listing() {
        for (k, g) in Generator::ALL.iter().enumerate() {
            assert_eq!(g.index(), k);
        }
        assert_eq!(Generator::M(1, 3).to_string(), "M13");
    }

    #[test]
    fn listed_elements() {
        assert_eq!(generator(Generator::D, Realization::DiracCl13), gamma5().scale(c64(0.0, 0.5)));
        let p0 = (Algebra::Cl24.blade(&[0, 5]) + Algebra::Cl24.blade(&[0, 4])).scale(c64(0.0, 0.5));
        assert_eq!(generator(Generator::P(0), Realization::Bivector24), p0);
        let m01 = Algebra::Cl13.blade(&[0, 1]).scale(0.5);
        assert_eq!(generator(Generator::M(0, 1), Realization::DiracCl13), m01);
        assert_eq!(generator(Generator::M(0, 1), Realization::Bivector24).sig(), Signature::CL24);
    }
}
