use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{gamma5, Algebra, Multivector, Signature};
use crate::linalg::{c64, realify, ComplexMatrix, I};

/// The three identifications of Cl(4,1) with ℂ⊗Cl(1,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IsoKind {
    /// `γ_ν = E_ν E_4`.
    A,
    /// `E_μ = -iγ_μ`.
    B,
    /// The twistor-friendly choice `E_0 = iγ_0`, `E_k = γ_k γ_0`.
    C,
}

impl IsoKind {
    pub const ALL: [IsoKind; 3] = [IsoKind::A, IsoKind::B, IsoKind::C];
}

/// Image of the Cl(4,1) generator `E_label` in ℂ⊗Cl(1,3).
pub fn generator_image(kind: IsoKind, label: u8) -> Multivector {
    let g = |labels: &[u8]| Algebra::Cl13.blade(labels);
    let minus_i = c64(0.0, -1.0);
    match (kind, label) {
        (IsoKind::A, 0) => g(&[1, 2, 3]).scale(minus_i),
        (IsoKind::A, 1) => g(&[0, 2, 3]).scale(minus_i),
        (IsoKind::A, 2) => g(&[0, 1, 3]).scale(I),
        (IsoKind::A, 3) => g(&[0, 1, 2]).scale(minus_i),
        (IsoKind::A | IsoKind::B, 4) => gamma5().scale(minus_i),
        (IsoKind::B, 0..=3) => g(&[label]).scale(minus_i),
        (IsoKind::C, 0) => g(&[0]).scale(I),
        (IsoKind::C, 1..=3) => g(&[label, 0]),
        (IsoKind::C, 4) => &gamma5() * &g(&[0]),
        _ => panic!("Cl(4,1) has no generator E{label}"),
    }
}

/// Forward operator (columns are images of the Cl(4,1) blades) and the
/// inverse of its realification.
struct Operator {
    forward: ComplexMatrix,
    backward: DMatrix<f64>,
}

fn build(kind: IsoKind) -> Operator {
    let sig = Signature::CL41;
    let gens: Vec<Multivector> = (0..sig.n())
        .map(|bit| {
            let label = Algebra::Cl41.labels().iter().copied().find(|&l| Algebra::Cl41.bit(l) == Some(bit));
            generator_image(kind, label.expect("every bit carries a label"))
        })
        .collect();
    let mut forward = ComplexMatrix::zeros(16, 32);
    for mask in 0..sig.dim() {
        let img = (0..sig.n())
            .filter(|b| mask >> b & 1 == 1)
            .fold(Multivector::one(Signature::CL13), |acc, b| &acc * &gens[b]);
        for (row, c) in img.coeffs().iter().enumerate() {
            forward[(row, mask)] = *c;
        }
    }
    let real = DMatrix::from_fn(32, 32, |r, c| if r < 16 { forward[(r, c)].re } else { forward[(r - 16, c)].im });
    let backward = real.try_inverse().expect("the identification is a real bijection");
    Operator { forward, backward }
}

fn operator(kind: IsoKind) -> &'static Operator {
    static OPS: [OnceLock<Operator>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match kind {
        IsoKind::A => 0,
        IsoKind::B => 1,
        IsoKind::C => 2,
    };
    OPS[slot].get_or_init(|| build(kind))
}

/// Cl(4,1) → ℂ⊗Cl(1,3). Complex coefficients extend complex-linearly.
pub fn iso_forward(a: &Multivector, kind: IsoKind) -> Result<Multivector> {
    if a.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: a.sig() });
    }
    let v = &operator(kind).forward * DVector::from_column_slice(a.coeffs());
    Multivector::from_coeffs(Signature::CL13, v.iter().copied().collect())
}

/// ℂ⊗Cl(1,3) → Cl(4,1); the result has real coefficients.
pub fn iso_backward(b: &Multivector, kind: IsoKind) -> Result<Multivector> {
    if b.sig() != Signature::CL13 {
        return Err(Error::WrongAlgebra { expected: Signature::CL13, found: b.sig() });
    }
    let v = &operator(kind).backward * DVector::from_vec(realify(b.coeffs()));
    Multivector::from_real(Signature::CL41, v.as_slice())
}

/// 16×32 complex matrix of [`iso_forward`].
pub fn forward_matrix(kind: IsoKind) -> &'static ComplexMatrix {
    &operator(kind).forward
}
