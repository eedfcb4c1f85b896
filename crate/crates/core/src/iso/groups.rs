use rand::Rng;
use serde::Serialize;

use super::cl24::xi_inverse;
use super::kinds::{iso_forward, IsoKind};
use crate::error::{Error, Result};
use crate::ga::{sample_mv, Multivector, Signature};
use crate::linalg::{c64, determinant, from_rows, max_abs_diff, ComplexMatrix, ONE, ZERO};
use crate::reps::{dirac_rep, DiracKind};

/// Tolerance for the matrix identities after series exponentials.
pub const MEMBERSHIP_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MembershipReport {
    /// `Z Z̄ - 1` in Cl(4,1).
    pub algebra: f64,
    /// `Z† J Z - J` (SU(2,2)) or `Zᵀ Ω Z - Ω` (Sp(2,ℂ)).
    pub form: f64,
    /// `|det Z - 1|`.
    pub det: f64,
    pub pass: bool,
}

fn check_cl41(z: &Multivector) -> Result<()> {
    if z.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: z.sig() });
    }
    Ok(())
}

fn algebra_residual(z: &Multivector) -> f64 {
    (z * &z.conjugation()).dist(&Multivector::one(Signature::CL41))
}

fn standard_image(z: &Multivector, kind: IsoKind) -> Result<ComplexMatrix> {
    dirac_rep(&iso_forward(z, kind)?, DiracKind::Standard)
}

fn report(algebra: f64, form: f64, det: f64) -> MembershipReport {
    MembershipReport { algebra, form, det, pass: [algebra, form, det].iter().all(|&r| r <= MEMBERSHIP_TOL) }
}

/// `J = diag(1, 1, -1, -1)`.
pub fn su22_form() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![ONE, ONE, -ONE, -ONE]))
}

/// `Ω = [[0, I], [-I, 0]]` in 2×2 blocks.
pub fn symplectic_form() -> ComplexMatrix {
    from_rows(&[[ZERO, ZERO, ONE, ZERO], [ZERO, ZERO, ZERO, ONE], [-ONE, ZERO, ZERO, ZERO], [ZERO, -ONE, ZERO, ZERO]])
}

/// SU(2,2) membership through the kind B Dirac image.
pub fn su22_check(z: &Multivector) -> Result<MembershipReport> {
    check_cl41(z)?;
    let m = standard_image(z, IsoKind::B)?;
    let j = su22_form();
    let form = max_abs_diff(&(m.adjoint() * &j * &m), &j);
    let det = (determinant(&m) - c64(1.0, 0.0)).norm();
    Ok(report(algebra_residual(z), form, det))
}

/// Sp(2,ℂ)-type identity through the kind A Dirac image.
pub fn sp2c_check(z: &Multivector) -> Result<MembershipReport> {
    check_cl41(z)?;
    let m = standard_image(z, IsoKind::A)?;
    let omega = symplectic_form();
    let form = max_abs_diff(&(m.adjoint() * &omega * &m), &omega);
    let det = (determinant(&m) - c64(1.0, 0.0)).norm();
    Ok(report(algebra_residual(z), form, det))
}

/// `exp(ξ⁻¹(B))` for a random Cl(2,4) bivector `B` with coefficients in `[-scale, scale]`.
pub fn sample_dollar_pin<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Multivector {
    let bivector = sample_mv(rng, Signature::CL24, &[2]).scale(scale);
    let generator = xi_inverse(&bivector).expect("bivectors are even");
    generator.exp().expect("series converges for bounded arguments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::rng;
    use crate::linalg::identity;

    #[test]
    fn identity_passes_with_zero_residuals() {
        let one = Multivector::one(Signature::CL41);
        for r in [su22_check(&one).unwrap(), sp2c_check(&one).unwrap()] {
            assert!(r.pass);
            assert_eq!(r.algebra + r.form + r.det, 0.0);
        }
    }

    #[test]
    fn exponential_samples_are_members() {
        let mut draw = rng(17);
        for _ in 0..10 {
            let z = sample_dollar_pin(&mut draw, 0.5);
            let su = su22_check(&z).unwrap();
            let sp = sp2c_check(&z).unwrap();
            assert!(su.pass, "{su:?}");
            assert!(sp.pass, "{sp:?}");
        }
    }

    #[test]
    fn pseudoscalar_is_a_kernel_element() {
        // E01234 squares to -1 and commutes with everything; it plays the role of i
        let z = crate::ga::Algebra::Cl41.blade(&[0, 1, 2, 3, 4]);
        let r = su22_check(&z).unwrap();
        assert!(r.algebra < 1e-15);
        assert!(max_abs_diff(&standard_image(&z, IsoKind::B).unwrap(), &(identity(4) * c64(0.0, 1.0))) < 1e-15);
    }

    #[test]
    fn doubled_element_fails() {
        let z = Multivector::scalar(Signature::CL41, 2.0);
        assert!(!su22_check(&z).unwrap().pass);
    }
}
