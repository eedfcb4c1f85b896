use serde::Serialize;

use super::kinds::{iso_forward, IsoKind};
use crate::error::{Error, Result};
use crate::ga::{Algebra, Multivector, Signature};
use crate::linalg::{adjugate2, blocks, cofactor2, conj, from_blocks, max_abs_diff, ComplexMatrix};
use crate::reps::{dirac_rep, DiracKind};

fn e4() -> Multivector {
    Algebra::Cl41.generator(4)
}

/// `E4 Z̃ E4`.
pub fn bullet(z: &Multivector) -> Result<Multivector> {
    check_cl41(z)?;
    Ok(&(&e4() * &z.reversion()) * &e4())
}

/// `E4 Z E4`, equal to the reversion of [`bullet`].
pub fn triangle(z: &Multivector) -> Result<Multivector> {
    check_cl41(z)?;
    Ok(&(&e4() * z) * &e4())
}

fn check_cl41(z: &Multivector) -> Result<()> {
    if z.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: z.sig() });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Conjugation,
    Reversion,
    Involution,
    Bullet,
    Triangle,
}

impl Which {
    pub const ALL: [Which; 5] =
        [Which::Conjugation, Which::Reversion, Which::Involution, Which::Bullet, Which::Triangle];

    pub fn apply(self, z: &Multivector) -> Result<Multivector> {
        check_cl41(z)?;
        match self {
            Which::Conjugation => Ok(z.conjugation()),
            Which::Reversion => Ok(z.reversion()),
            Which::Involution => Ok(z.grade_involution()),
            Which::Bullet => bullet(z),
            Which::Triangle => triangle(z),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct AntiautoReport {
    pub which: Which,
    pub kind: IsoKind,
    /// Max entry of `rep(op(Z)) - block formula(rep(Z))`.
    pub residual: f64,
}

fn dagger(m: &ComplexMatrix) -> ComplexMatrix {
    m.adjoint()
}

/// Block formula predicting the standard Dirac image of `op(Z)` from that of `Z`.
pub fn block_formula(which: Which, kind: IsoKind, m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let [p1, p2, p3, p4] = blocks(m);
    let adj = adjugate2;
    let cof_bar = |p: &ComplexMatrix| cofactor2(&conj(p));
    let out = match (which, kind) {
        (Which::Conjugation, IsoKind::A) => [dagger(&p4), -dagger(&p2), -dagger(&p3), dagger(&p1)],
        (Which::Conjugation, IsoKind::B) => [dagger(&p1), -dagger(&p3), -dagger(&p2), dagger(&p4)],
        (Which::Reversion, IsoKind::A) | (Which::Bullet, IsoKind::B) => [adj(&p4), adj(&p2), adj(&p3), adj(&p1)],
        (Which::Reversion, IsoKind::B) | (Which::Bullet, IsoKind::A) => [adj(&p1), adj(&p3), adj(&p2), adj(&p4)],
        (Which::Involution, IsoKind::A | IsoKind::B) => [cof_bar(&p1), -cof_bar(&p2), -cof_bar(&p3), cof_bar(&p4)],
        (Which::Triangle, IsoKind::A | IsoKind::B) => [p4, p3, p2, p1],
        (_, IsoKind::C) => {
            return Err(Error::InvalidArgument("block formulas are stated for kinds A and B only".into()))
        }
    };
    Ok(from_blocks(out))
}

/// Compares the standard Dirac image of `op(Z)` with the block formula.
pub fn antiauto_matrix_check(z: &Multivector, which: Which, kind: IsoKind) -> Result<AntiautoReport> {
    let rep = |x: &Multivector| -> Result<ComplexMatrix> { dirac_rep(&iso_forward(x, kind)?, DiracKind::Standard) };
    let expected = block_formula(which, kind, &rep(z)?)?;
    let actual = rep(&which.apply(z)?)?;
    Ok(AntiautoReport { which, kind, residual: max_abs_diff(&actual, &expected) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::random_mv;

    #[test]
    fn trivial_values() {
        let one = Multivector::one(Signature::CL41);
        assert_eq!(bullet(&one).unwrap(), one);
        assert_eq!(triangle(&e4()).unwrap(), e4());
        for which in Which::ALL {
            for kind in [IsoKind::A, IsoKind::B] {
                assert_eq!(antiauto_matrix_check(&one, which, kind).unwrap().residual, 0.0);
            }
        }
    }

    #[test]
    fn triangle_is_reversed_bullet() {
        let z = random_mv(3, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        assert!(triangle(&z).unwrap().dist(&bullet(&z).unwrap().reversion()) < 1e-15);
    }

    #[test]
    fn block_formulas_hold_on_random_elements() {
        for seed in 0..10 {
            let z = random_mv(seed, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
            for which in Which::ALL {
                for kind in [IsoKind::A, IsoKind::B] {
                    let r = antiauto_matrix_check(&z, which, kind).unwrap();
                    assert!(r.residual < 1e-12, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn kind_c_has_no_block_formula() {
        let z = Multivector::one(Signature::CL41);
        assert!(antiauto_matrix_check(&z, Which::Reversion, IsoKind::C).is_err());
    }
}
