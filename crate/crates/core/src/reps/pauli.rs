use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};

use super::images::BladeImages;
use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};
use crate::linalg::{pauli, realify, ComplexMatrix};

fn images() -> &'static BladeImages {
    static IMAGES: OnceLock<BladeImages> = OnceLock::new();
    IMAGES.get_or_init(|| BladeImages::from_generators(Signature::CL30, &[pauli(1), pauli(2), pauli(3)]))
}

/// Real 8×8 system taking the blade coefficients to the stacked real and
/// imaginary parts of the image; inverted once.
fn unrep_operator() -> &'static DMatrix<f64> {
    static INV: OnceLock<DMatrix<f64>> = OnceLock::new();
    INV.get_or_init(|| {
        let cols: Vec<DVector<f64>> =
            (0..8).map(|mask| DVector::from_vec(realify(images().image(mask).as_slice()))).collect();
        DMatrix::from_columns(&cols).try_inverse().expect("Pauli blade images are a real basis of M(2,C)")
    })
}

/// Homomorphism `Cl(3,0) → M(2,ℂ)` with `e_i ↦ σ_i`.
pub fn pauli_rep(a: &Multivector) -> Result<ComplexMatrix> {
    if a.sig() != Signature::CL30 {
        return Err(Error::WrongAlgebra { expected: Signature::CL30, found: a.sig() });
    }
    Ok(images().apply(a))
}

/// The real Cl(3,0) element whose Pauli image is `m`.
pub fn pauli_unrep(m: &ComplexMatrix) -> Result<Multivector> {
    if m.shape() != (2, 2) {
        return Err(Error::InvalidArgument(format!("expected a 2×2 matrix, got {:?}", m.shape())));
    }
    let rhs = DVector::from_vec(realify(m.as_slice()));
    let coeffs = unrep_operator() * rhs;
    Multivector::from_real(Signature::CL30, coeffs.as_slice())
}
