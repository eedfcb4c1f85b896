use num_complex::Complex64;

use super::multivector::Multivector;
use crate::error::{Error, Result};
use crate::linalg::{condition_number, ComplexMatrix};

/// Series terms allowed after scaling before giving up.
pub const MAX_SERIES_TERMS: usize = 200;
/// A running term below this (max coefficient) ends the series.
pub const SERIES_CUTOFF: f64 = 1e-16;
/// Condition estimate above which an element counts as singular.
pub const SINGULAR_CONDITION: f64 = 1e12;

/// Power series with scaling and squaring.
///
/// The input is halved until its l1 norm is at most 1, which bounds every
/// term by `1/k!` regardless of how many blades are populated.
pub fn exp(a: &Multivector) -> Result<Multivector> {
    let norm = a.l1_norm();
    let halvings = if norm > 1.0 { norm.log2().ceil() as i32 } else { 0 };
    let scaled = a.scale(0.5f64.powi(halvings));

    let mut sum = Multivector::one(a.sig());
    let mut term = sum.clone();
    let mut converged = false;
    for k in 1..=MAX_SERIES_TERMS {
        term = (&term * &scaled).scale(1.0 / k as f64);
        sum += &term;
        if term.max_norm() < SERIES_CUTOFF {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SERIES_TERMS));
    }
    for _ in 0..halvings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

/// Matrix of `x ↦ a x` in the blade basis (column `j` holds `a e_j`).
pub fn left_mul_matrix(a: &Multivector) -> ComplexMatrix {
    let sig = a.sig();
    let dim = sig.dim();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (x, c) in a.terms() {
        for y in 0..dim {
            m[(x ^ y, y)] += c * sig.blade_sign(x, y);
        }
    }
    m
}

/// Two-sided inverse from a dense solve of `a x = 1`.
pub fn inverse(a: &Multivector) -> Result<Multivector> {
    let l = left_mul_matrix(a);
    let cond = condition_number(&l);
    if cond.is_nan() || cond > SINGULAR_CONDITION {
        return Err(Error::Singular(cond));
    }
    let mut rhs = nalgebra::DVector::<Complex64>::zeros(a.sig().dim());
    rhs[0] = Complex64::new(1.0, 0.0);
    let x = l.lu().solve(&rhs).ok_or(Error::Singular(cond))?;
    Multivector::from_coeffs(a.sig(), x.iter().copied().collect())
}

impl Multivector {
    pub fn exp(&self) -> Result<Multivector> {
        exp(self)
    }

    pub fn inverse(&self) -> Result<Multivector> {
        inverse(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Signature;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn exp_of_zero_is_one() {
        let z = Multivector::zero(Signature::CL24);
        assert_eq!(exp(&z).unwrap(), Multivector::one(Signature::CL24));
    }

    #[test]
    fn quarter_turn_bivector() {
        let e12 = Multivector::blade(Signature::CL30, 0b11);
        let r = exp(&e12.scale(FRAC_PI_2)).unwrap();
        assert!(r.dist(&e12) < 1e-15);
    }

    #[test]
    fn large_argument_uses_squaring() {
        let e12 = Multivector::blade(Signature::CL30, 0b11);
        let r = exp(&e12.scale(40.0)).unwrap();
        let expect = Multivector::scalar(Signature::CL30, 40f64.cos()) + e12.scale(40f64.sin());
        assert!(r.dist(&expect) < 1e-12);
    }

    #[test]
    fn inverse_of_generator_and_singular_element() {
        let e1 = Multivector::generator(Signature::CL30, 0);
        assert!(inverse(&e1).unwrap().dist(&e1) < 1e-15);
        // (1 + e1) is a zero divisor: (1+e1)(1-e1) = 0
        let null = Multivector::one(Signature::CL30) + e1;
        assert!(matches!(inverse(&null), Err(Error::Singular(_))));
    }
}
