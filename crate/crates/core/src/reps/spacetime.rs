use std::sync::OnceLock;

use super::quaternion::{QuatMatrix2, Quaternion};
use crate::error::{Error, Result};
use crate::ga::{gamma5, Algebra, Multivector, Signature};

/// Coefficients below this count as zero when checking evenness or reality.
const INPUT_TOL: f64 = 1e-12;

/// For each Cl(3,0) blade, the Cl(1,3) blade (mask, sign) it maps to under
/// `e_i ↦ γ_i γ_0`.
fn even_table() -> &'static [(usize, f64); 8] {
    static TABLE: OnceLock<[(usize, f64); 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let sts: Vec<Multivector> = (1..=3).map(|i| Algebra::Cl13.blade(&[i, 0])).collect();
        let mut table = [(0, 0.0); 8];
        for (mask, slot) in table.iter_mut().enumerate() {
            let img =
                (0..3).filter(|b| mask >> b & 1 == 1).fold(Multivector::one(Signature::CL13), |acc, b| &acc * &sts[b]);
            let (m, c) = img.terms().next().expect("blade image is a signed blade");
            *slot = (m, c.re);
        }
        table
    })
}

/// Cl(1,3)⁺ → Cl(3,0), `γ_i γ_0 ↦ e_i`.
pub fn even_iso(a: &Multivector) -> Result<Multivector> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongAlgebra { expected: Signature::CL13, found: a.sig() });
    }
    if a.odd_part().max_norm() > INPUT_TOL {
        return Err(Error::OddInput);
    }
    let mut out = Multivector::zero(Signature::CL30);
    for (mask, &(src, sign)) in even_table().iter().enumerate() {
        out.set_coeff(mask, a.coeff(src) * sign);
    }
    Ok(out)
}

/// Inverse of [`even_iso`].
pub fn even_iso_inverse(s: &Multivector) -> Result<Multivector> {
    if s.sig() != Signature::CL30 {
        return Err(Error::WrongAlgebra { expected: Signature::CL30, found: s.sig() });
    }
    let mut out = Multivector::zero(Signature::CL13);
    for (mask, &(dst, sign)) in even_table().iter().enumerate() {
        out.set_coeff(dst, s.coeff(mask) * sign);
    }
    Ok(out)
}

/// Reads `w f + x γ23 f + y γ31 f + z γ12 f` as `w + x i + y j + z k`.
fn quaternion_of(q: &Multivector) -> Quaternion {
    let coeff = |labels: &[u8]| 2.0 * Algebra::Cl13.coeff(q, labels).re;
    Quaternion::new(coeff(&[]), coeff(&[2, 3]), coeff(&[3, 1]), coeff(&[1, 2]))
}

/// M(2,ℍ) image of a real Cl(1,3) element.
///
/// With `f = ½(1+γ0)` the left ideal `Cl(1,3) f` is a right module over
/// `f Cl(1,3) f ≅ ℍ` (units `γ23 f`, `γ31 f`, `γ12 f`) with basis
/// `{f, γ5 f}`. Column `j` holds the coordinates of `a b_j`; the first is
/// recovered as `f v`, the second as `-f γ5 v`.
pub fn quat_rep(a: &Multivector) -> Result<QuatMatrix2> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongAlgebra { expected: Signature::CL13, found: a.sig() });
    }
    if !a.is_real(INPUT_TOL) {
        return Err(Error::NonReal(a.max_imag()));
    }
    let one = Multivector::one(Signature::CL13);
    let f = (&one + &Algebra::Cl13.generator(0)).scale(0.5);
    let g5 = gamma5();
    let basis = [f.clone(), &g5 * &f];
    let a = a.real_part();
    let mut entries = [[Quaternion::ZERO; 2]; 2];
    for (col, b) in basis.iter().enumerate() {
        let v = &a * b;
        entries[0][col] = quaternion_of(&(&f * &v));
        entries[1][col] = quaternion_of(&-(&f * &(&g5 * &v)));
    }
    Ok(QuatMatrix2 { entries })
}
