use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ga::{Algebra, Multivector, Signature};

/// For each Cl(4,1) blade, the signed Cl(2,4) blade it maps to under
/// `E_A ↦ ε_A ε5`.
fn table() -> &'static [(usize, f64); 32] {
    static TABLE: OnceLock<[(usize, f64); 32]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let eps5 = Algebra::Cl24.generator(5);
        let gens: Vec<Multivector> = (0..5)
            .map(|bit| {
                let label = Algebra::Cl41.labels().iter().copied().find(|&l| Algebra::Cl41.bit(l) == Some(bit));
                &Algebra::Cl24.generator(label.expect("labelled bit")) * &eps5
            })
            .collect();
        let mut out = [(0, 0.0); 32];
        for (mask, slot) in out.iter_mut().enumerate() {
            let img =
                (0..5).filter(|b| mask >> b & 1 == 1).fold(Multivector::one(Signature::CL24), |acc, b| &acc * &gens[b]);
            let (m, c) = img.terms().next().expect("blade image is a signed blade");
            *slot = (m, c.re);
        }
        out
    })
}

/// Cl(4,1) → Cl(2,4)⁺, `E_A ↦ ε_A ε5`.
pub fn xi(a: &Multivector) -> Result<Multivector> {
    if a.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: a.sig() });
    }
    let mut out = Multivector::zero(Signature::CL24);
    for (mask, &(dst, sign)) in table().iter().enumerate() {
        out.set_coeff(dst, a.coeff(mask) * sign);
    }
    Ok(out)
}

/// Inverse of [`xi`] on the even subalgebra of Cl(2,4).
pub fn xi_inverse(b: &Multivector) -> Result<Multivector> {
    if b.sig() != Signature::CL24 {
        return Err(Error::WrongAlgebra { expected: Signature::CL24, found: b.sig() });
    }
    if b.odd_part().max_norm() > 1e-12 {
        return Err(Error::OddInput);
    }
    let mut out = Multivector::zero(Signature::CL41);
    for (mask, &(src, sign)) in table().iter().enumerate() {
        out.set_coeff(mask, b.coeff(src) * sign);
    }
    Ok(out)
}

/// The Cl(2,4) vector `α` with `ξ⁻¹(α ε5) = b` for a paravector `b` of Cl(4,1).
pub fn embed_cl24(b: &Multivector) -> Result<Multivector> {
    if b.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: b.sig() });
    }
    if let Some(&g) = b.grades_present(1e-12).iter().find(|&&g| g > 1) {
        return Err(Error::NotParavector(g));
    }
    let mut alpha = Algebra::Cl24.generator(5).scale(b.scalar_part());
    for &label in Algebra::Cl41.labels() {
        alpha += &Algebra::Cl24.generator(label).scale(Algebra::Cl41.coeff(b, &[label]));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::random_mv;

    #[test]
    fn xi_is_multiplicative_and_invertible() {
        let x = random_mv(4, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        let y = random_mv(5, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        let lhs = xi(&(&x * &y)).unwrap();
        let rhs = &xi(&x).unwrap() * &xi(&y).unwrap();
        assert!(lhs.dist(&rhs) < 1e-13);
        assert!(xi(&x).unwrap().odd_part().is_zero(0.0));
        assert!(xi_inverse(&xi(&x).unwrap()).unwrap().dist(&x) < 1e-15);
    }

    #[test]
    fn embedding_examples() {
        let one = Multivector::one(Signature::CL41);
        assert_eq!(embed_cl24(&one).unwrap(), Algebra::Cl24.generator(5));
        assert_eq!(embed_cl24(&Algebra::Cl41.generator(0)).unwrap(), Algebra::Cl24.generator(0));
        assert!(matches!(embed_cl24(&Algebra::Cl41.blade(&[1, 2])), Err(Error::NotParavector(2))));
    }

    #[test]
    fn alpha_times_eps5_is_xi_of_b() {
        let b = random_mv(9, Signature::CL41, &[0, 1]);
        let alpha = embed_cl24(&b).unwrap();
        let lhs = &alpha * &Algebra::Cl24.generator(5);
        assert!(lhs.dist(&xi(&b).unwrap()) < 1e-15);
        let norm = (&b * &b.conjugation()).scalar_part();
        assert!(((&alpha * &alpha).scalar_part() - norm).norm() < 1e-12);
    }
}
