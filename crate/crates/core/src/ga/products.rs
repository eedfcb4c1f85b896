use num_complex::Complex64;

use super::multivector::Multivector;
use super::signature::grade_of;
use crate::error::Result;

/// Clifford product. Signs come from the swap parity of the blade merge and
/// the squares of the shared generators.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_sig(b)?;
    Ok(blade_product(a, b, |_, _| true))
}

/// Outer product: only pairs of blades without common generators survive.
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_sig(b)?;
    Ok(blade_product(a, b, |x, y| x & y == 0))
}

/// Left contraction `a ⌋ b`: blade pairs with `x ⊆ y`, landing in grade `|y| - |x|`.
pub fn contract_left(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_sig(b)?;
    Ok(blade_product(a, b, |x, y| x & y == x))
}

fn blade_product(a: &Multivector, b: &Multivector, keep: impl Fn(usize, usize) -> bool) -> Multivector {
    let sig = a.sig();
    let mut out = vec![Complex64::new(0.0, 0.0); sig.dim()];
    let rhs: Vec<(usize, Complex64)> = b.terms().collect();
    for (x, ca) in a.terms() {
        for &(y, cb) in &rhs {
            if keep(x, y) {
                out[x ^ y] += ca * cb * sig.blade_sign(x, y);
            }
        }
    }
    Multivector::from_coeffs(sig, out).expect("product keeps length")
}

/// `ab - ba`.
pub fn commutator(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    Ok(geometric_product(a, b)? - geometric_product(b, a)?)
}

/// Determinant-extended metric: blades of different grade are orthogonal and a
/// blade pairs with itself to the product of its generator squares.
pub fn bilinear_form(a: &Multivector, b: &Multivector) -> Result<Complex64> {
    a.check_sig(b)?;
    let sig = a.sig();
    let neg = sig.negative_mask();
    Ok(a.terms()
        .map(|(m, c)| {
            let gram = if (m & neg).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
            c * b.coeff(m) * gram
        })
        .sum())
}

fn reversion_sign(k: usize) -> f64 {
    if (k / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn involution_sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl Multivector {
    pub fn reversion(&self) -> Multivector {
        self.map(|m, c| c * reversion_sign(grade_of(m)))
    }

    pub fn grade_involution(&self) -> Multivector {
        self.map(|m, c| c * involution_sign(grade_of(m)))
    }

    /// Reversion composed with the grade involution.
    pub fn conjugation(&self) -> Multivector {
        self.map(|m, c| {
            let k = grade_of(m);
            c * reversion_sign(k) * involution_sign(k)
        })
    }

    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        wedge(self, other)
    }

    pub fn contract_left(&self, other: &Multivector) -> Result<Multivector> {
        contract_left(self, other)
    }

    pub fn commutator(&self, other: &Multivector) -> Result<Multivector> {
        commutator(self, other)
    }

    /// `g v g̃`, the sandwich used for the pin-type groups.
    pub fn twisted_adjoint(&self, v: &Multivector) -> Result<Multivector> {
        twisted_adjoint_core(self, v)
    }
}

pub fn twisted_adjoint_core(g: &Multivector, v: &Multivector) -> Result<Multivector> {
    let gv = geometric_product(g, v)?;
    geometric_product(&gv, &g.reversion())
}

/// Product of a list of same-signature multivectors, left to right.
pub fn product_of(factors: &[&Multivector]) -> Multivector {
    let (first, rest) = factors.split_first().expect("product_of needs at least one factor");
    rest.iter().fold((*first).clone(), |acc, f| &acc * *f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Signature;

    fn e(mask: usize) -> Multivector {
        Multivector::blade(Signature::CL30, mask)
    }

    #[test]
    fn orthogonal_generators_anticommute() {
        let s = &e(0b01) * &e(0b10) + &e(0b10) * &e(0b01);
        assert!(s.is_zero(0.0));
        assert_eq!(&e(1) * &e(1), Multivector::one(Signature::CL30));
    }

    #[test]
    fn contraction_lowers_grade() {
        assert_eq!(contract_left(&e(0b01), &e(0b11)).unwrap(), e(0b10));
        assert!(wedge(&e(0b01), &e(0b01)).unwrap().is_zero(0.0));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = Multivector::one(Signature::CL30);
        let b = Multivector::one(Signature::CL13);
        assert!(geometric_product(&a, &b).is_err());
        assert!(bilinear_form(&a, &b).is_err());
    }

    #[test]
    fn involution_signs_by_grade() {
        assert_eq!(e(0b11).reversion(), -e(0b11));
        assert_eq!(e(0b01).grade_involution(), -e(0b01));
        assert_eq!(e(0b111).conjugation(), e(0b111));
        assert_eq!(e(0b11).conjugation(), -e(0b11));
    }

    #[test]
    fn gram_determinant_of_spacelike_bivector() {
        let g12 = Multivector::blade(Signature::CL13, 0b110);
        assert_eq!(bilinear_form(&g12, &g12).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(bilinear_form(&e(1), &e(0b11)).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(bilinear_form(&e(1), &e(1)).unwrap(), Complex64::new(1.0, 0.0));
    }
}
