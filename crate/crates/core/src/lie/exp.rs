use serde::Serialize;

use super::generators::{generator, generator_basis, Generator, Realization};
use crate::error::Result;
use crate::ga::{Multivector, Signature};
use crate::iso::{iso_backward, IsoKind};

#[derive(Clone, Debug, Serialize)]
pub struct ExpReport {
    pub realization: Realization,
    pub element: Multivector,
    /// `R R̃ - 1` for bivectors of Cl(2,4), `Z Z̄ - 1` in Cl(4,1) otherwise.
    pub membership: f64,
}

/// Group membership residual of an exponentiated generator.
///
/// Dirac elements are carried to Cl(4,1) through the kind A identification,
/// under which Clifford conjugation is the relevant antiautomorphism.
pub fn membership_residual(element: &Multivector, r: Realization) -> Result<f64> {
    match r {
        Realization::Bivector24 => Ok((element * &element.reversion()).dist(&Multivector::one(Signature::CL24))),
        Realization::DiracCl13 => {
            let z = iso_backward(element, IsoKind::A)?;
            Ok((&z * &z.conjugation()).dist(&Multivector::one(Signature::CL41)))
        }
    }
}

/// `exp(Σ c_i G_i)` with its membership residual.
pub fn exp_generator(coeffs: &[f64; 15], r: Realization) -> Result<ExpReport> {
    let basis = generator_basis(r);
    let sig = basis[0].sig();
    let mut sum = Multivector::zero(sig);
    for (c, g) in coeffs.iter().zip(&basis) {
        if *c != 0.0 {
            sum += &g.scale(*c);
        }
    }
    let element = sum.exp()?;
    let membership = membership_residual(&element, r)?;
    Ok(ExpReport { realization: r, element, membership })
}

/// Central difference of `t ↦ exp(tD) v exp(-tD)` at 0 against `[D, v]`.
pub fn dilation_path_residual(v: &Multivector, r: Realization, step: f64) -> Result<f64> {
    let d = generator(Generator::D, r);
    let conjugate = |t: f64| -> Result<Multivector> {
        let forward = d.scale(t).exp()?;
        let backward = d.scale(-t).exp()?;
        Ok(&(&forward * v) * &backward)
    };
    let derivative = (&conjugate(step)? - &conjugate(-step)?).scale(0.5 / step);
    let bracket = &(&d * v) - &(v * &d);
    Ok(derivative.dist(&bracket))
}
