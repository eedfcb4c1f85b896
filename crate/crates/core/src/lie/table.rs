use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::generators::{generator_basis, metric, Generator, Realization};
use crate::ga::Multivector;
use crate::linalg::realify;

/// Coefficients of a bracket in the [`Generator::ALL`] basis.
pub type Combination = [f64; 15];

fn add_m(out: &mut Combination, mu: u8, nu: u8, coeff: f64) {
    // antisymmetric extension of M
    match mu.cmp(&nu) {
        std::cmp::Ordering::Less => out[Generator::M(mu, nu).index()] += coeff,
        std::cmp::Ordering::Greater => out[Generator::M(nu, mu).index()] -= coeff,
        std::cmp::Ordering::Equal => {}
    }
}

/// `[M_μν, X_λ] = -(g_μλ X_ν - g_νλ X_μ)` for `X = P` or `K`.
fn m_on_vector(mu: u8, nu: u8, lambda: u8, x: fn(u8) -> Generator) -> Combination {
    let mut out = [0.0; 15];
    out[x(nu).index()] -= metric(mu, lambda);
    out[x(mu).index()] += metric(nu, lambda);
    out
}

/// The bracket `[a, b]` the conformal algebra prescribes.
pub fn expected_bracket(a: Generator, b: Generator) -> Combination {
    use Generator::*;
    let mut out = [0.0; 15];
    match (a, b) {
        (P(_), P(_)) | (K(_), K(_)) | (D, D) | (M(..), D) | (D, M(..)) => {}
        (M(mu, nu), P(l)) => out = m_on_vector(mu, nu, l, P),
        (M(mu, nu), K(l)) => out = m_on_vector(mu, nu, l, K),
        (M(mu, nu), M(s, r)) => {
            add_m(&mut out, nu, s, metric(mu, r));
            add_m(&mut out, mu, r, metric(nu, s));
            add_m(&mut out, nu, r, -metric(mu, s));
            add_m(&mut out, mu, s, -metric(nu, r));
        }
        (P(mu), K(nu)) => {
            out[D.index()] = 2.0 * metric(mu, nu);
            add_m(&mut out, mu, nu, -2.0);
        }
        (P(mu), D) => out[P(mu).index()] = 1.0,
        (K(mu), D) => out[K(mu).index()] = -1.0,
        (P(_) | K(_), M(..)) | (K(_), P(_)) | (D, P(_) | K(_)) => {
            out = expected_bracket(b, a).map(|c| -c);
        }
    }
    out
}

/// How the abstract generators are assigned to concrete elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relabeling {
    Identity,
    /// `P ↦ -K`, `K ↦ -P`, `D ↦ -D`.
    ConformalInversion,
    /// `P ↦ K`, `K ↦ P` with no signs; breaks the table.
    Unsigned,
}

fn relabel(basis: &[Multivector], relabeling: Relabeling) -> Vec<Multivector> {
    Generator::ALL
        .iter()
        .map(|&g| {
            let (source, sign) = match (relabeling, g) {
                (Relabeling::Identity, _) => (g, 1.0),
                (Relabeling::ConformalInversion, Generator::P(mu)) => (Generator::K(mu), -1.0),
                (Relabeling::ConformalInversion, Generator::K(mu)) => (Generator::P(mu), -1.0),
                (Relabeling::ConformalInversion, Generator::D) => (Generator::D, -1.0),
                (Relabeling::Unsigned, Generator::P(mu)) => (Generator::K(mu), 1.0),
                (Relabeling::Unsigned, Generator::K(mu)) => (Generator::P(mu), 1.0),
                (_, other) => (other, 1.0),
            };
            basis[source.index()].scale(sign)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub realization: Realization,
    pub relabeling: Relabeling,
    /// Largest coefficient of `[G_i, G_j] - expected`.
    pub residual: f64,
    pub worst_pair: (Generator, Generator),
    /// Pairs with a residual above `1e-12`.
    pub violations: usize,
}

fn check_basis(basis: &[Multivector], realization: Realization, relabeling: Relabeling) -> TableReport {
    let mut report =
        TableReport { realization, relabeling, residual: 0.0, worst_pair: (Generator::D, Generator::D), violations: 0 };
    for &a in &Generator::ALL {
        for &b in &Generator::ALL {
            let (x, y) = (&basis[a.index()], &basis[b.index()]);
            let mut diff = &(x * y) - &(y * x);
            for (k, c) in expected_bracket(a, b).iter().enumerate() {
                if *c != 0.0 {
                    diff -= &basis[k].scale(*c);
                }
            }
            let r = diff.max_norm();
            if r > 1e-12 {
                report.violations += 1;
            }
            if r > report.residual {
                report.residual = r;
                report.worst_pair = (a, b);
            }
        }
    }
    report
}

/// All 225 brackets against the table.
pub fn commutation_check(r: Realization) -> TableReport {
    check_basis(&generator_basis(r), r, Relabeling::Identity)
}

/// The table with the generators reassigned.
pub fn substitution_symmetry_check(r: Realization, relabeling: Relabeling) -> TableReport {
    check_basis(&relabel(&generator_basis(r), relabeling), r, relabeling)
}

/// `c[i][j][k]` with `[G_i, G_j] = Σ_k c[i][j][k] G_k`, fitted by least squares.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstants {
    pub realization: Realization,
    pub c: Vec<Vec<Combination>>,
    /// Largest component of any bracket outside the span of the generators.
    pub off_span: f64,
}

impl StructureConstants {
    pub fn max_diff(&self, other: &StructureConstants) -> f64 {
        let flat = |s: &StructureConstants| s.c.iter().flatten().flatten().copied().collect::<Vec<f64>>();
        flat(self).iter().zip(flat(other)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

pub fn structure_constants(r: Realization) -> StructureConstants {
    let basis = generator_basis(r);
    let rows = 2 * basis[0].sig().dim();
    let a = DMatrix::from_fn(rows, 15, |row, col| realify(basis[col].coeffs())[row]);
    let svd = a.clone().svd(true, true);
    let mut off_span: f64 = 0.0;
    let c = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| {
                    let bracket = &(x * y) - &(y * x);
                    let target = DVector::from_vec(realify(bracket.coeffs()));
                    let coeffs = svd.solve(&target, 1e-12).expect("SVD carries both factors");
                    off_span = off_span.max((&a * &coeffs - &target).amax());
                    std::array::from_fn(|k| coeffs[k])
                })
                .collect()
        })
        .collect();
    StructureConstants { realization: r, c, off_span }
}
