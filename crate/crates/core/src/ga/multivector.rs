use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::signature::{grade_of, Signature};
use crate::error::{Error, Result};

/// Dense multivector: one complex coefficient per canonical blade, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Complex64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, coeffs: vec![Complex64::new(0.0, 0.0); sig.dim()] }
    }

    pub fn scalar(sig: Signature, value: impl Into<Complex64>) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value.into();
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    /// The canonical blade `e_mask` (generators multiplied in ascending order).
    pub fn blade(sig: Signature, mask: usize) -> Self {
        assert!(mask < sig.dim(), "blade {mask:#b} outside {sig}");
        let mut mv = Self::zero(sig);
        mv.coeffs[mask] = Complex64::new(1.0, 0.0);
        mv
    }

    pub fn generator(sig: Signature, i: usize) -> Self {
        assert!(i < sig.n(), "generator {i} outside {sig}");
        Self::blade(sig, 1 << i)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != sig.dim() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients supplied for {sig}, which has {} blades",
                coeffs.len(),
                sig.dim()
            )));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn from_real(sig: Signature, coeffs: &[f64]) -> Result<Self> {
        Self::from_coeffs(sig, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Sum of `(mask, coefficient)` terms.
    pub fn from_terms(sig: Signature, terms: &[(usize, Complex64)]) -> Self {
        let mut mv = Self::zero(sig);
        for &(mask, c) in terms {
            mv.coeffs[mask] += c;
        }
        mv
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> Complex64 {
        self.coeffs[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, value: impl Into<Complex64>) {
        self.coeffs[mask] = value.into();
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Sum of coefficient moduli; submultiplicative under the geometric product.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max coefficient distance to `other`. Panics on signature mismatch.
    pub fn dist(&self, other: &Multivector) -> f64 {
        self.check_sig(other).expect("dist: signature mismatch");
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest imaginary part. Real-algebra elements keep this at rounding level.
    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.max_imag() <= tol
    }

    /// Real parts only.
    pub fn real_part(&self) -> Multivector {
        self.map(|_, c| Complex64::new(c.re, 0.0))
    }

    /// Entrywise complex conjugate of the coefficients.
    pub fn conj_coeffs(&self) -> Multivector {
        self.map(|_, c| c.conj())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_norm() <= tol
    }

    pub(crate) fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    pub(crate) fn map(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Multivector {
        Multivector { sig: self.sig, coeffs: self.coeffs.iter().enumerate().map(|(m, &c)| f(m, c)).collect() }
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> Multivector {
        let factor = factor.into();
        self.map(|_, c| c * factor)
    }

    /// Nonzero `(mask, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| c.re != 0.0 || c.im != 0.0).map(|(m, &c)| (m, c))
    }

    /// Keep only blades of grade `k`.
    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > self.sig.n() {
            return Err(Error::GradeOutOfRange { grade: k, n: self.sig.n() });
        }
        Ok(self.grade(k))
    }

    pub(crate) fn grade(&self, k: usize) -> Multivector {
        self.map(|m, c| if grade_of(m) == k { c } else { Complex64::new(0.0, 0.0) })
    }

    /// Keep blades whose grade satisfies `keep`.
    pub fn grades_where(&self, keep: impl Fn(usize) -> bool) -> Multivector {
        self.map(|m, c| if keep(grade_of(m)) { c } else { Complex64::new(0.0, 0.0) })
    }

    pub fn even_part(&self) -> Multivector {
        self.grades_where(|k| k % 2 == 0)
    }

    pub fn odd_part(&self) -> Multivector {
        self.grades_where(|k| k % 2 == 1)
    }

    /// Largest coefficient outside the given grades.
    pub fn residual_outside(&self, grades: &[usize]) -> f64 {
        self.terms().filter(|(m, _)| !grades.contains(&grade_of(*m))).map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }

    /// Grades that carry a coefficient above `tol`.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms().filter(|(_, c)| c.norm() > tol).map(|(m, _)| grade_of(m)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map(|_, c| -c)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map(|_, c| -c)
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        self.check_sig(rhs).expect("add: signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        self.check_sig(rhs).expect("sub: signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign:ident) => {
        impl $trait<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $trait<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(mut self, rhs: Multivector) -> Multivector {
                self.$assign(&rhs);
                self
            }
        }
        impl $trait<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(mut self, rhs: &Multivector) -> Multivector {
                self.$assign(rhs);
                self
            }
        }
        impl $trait<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

// `*` between multivectors is the geometric product; it panics on a signature
// mismatch where `geometric_product` returns an error.
impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        super::products::geometric_product(self, rhs).expect("mul: signature mismatch")
    }
}

impl Mul<Multivector> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<&Multivector> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        &self * rhs
    }
}

impl Mul<Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self * &rhs
    }
}

impl Mul<Complex64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<&Multivector> for Complex64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<Multivector> for Complex64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grade_projection_splits_sum() {
        let sig = Signature::CL30;
        let mv = Multivector::from_real(sig, &[1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.0]).unwrap();
        let total = (0..=3).fold(Multivector::zero(sig), |acc, k| acc + mv.grade_project(k).unwrap());
        assert_eq!(total, mv);
        assert_eq!(mv.grade_project(1).unwrap(), Multivector::blade(sig, 1) * 2.0);
        assert!(mv.grade_project(4).is_err());
    }

    #[test]
    fn rejects_wrong_length() {
        assert!(Multivector::from_real(Signature::CL30, &[1.0; 4]).is_err());
        assert!(Multivector::from_real(Signature::CL30, &[f64::NAN; 8]).is_err());
    }

    #[test]
    fn residual_outside_grades() {
        let sig = Signature::CL30;
        let mv = Multivector::one(sig) + Multivector::blade(sig, 0b11) * 0.5;
        assert_eq!(mv.residual_outside(&[0, 2]), 0.0);
        assert_eq!(mv.residual_outside(&[0]), 0.5);
        assert_eq!(mv.grades_present(0.0), vec![0, 2]);
    }
}
