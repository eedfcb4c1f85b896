//! Matrix representations: Pauli, quaternionic and the two Dirac bases.

mod dirac;
mod images;
mod pauli;
mod quaternion;
mod spacetime;

use rand::Rng;
use serde::Serialize;

pub use dirac::{dirac_idempotents, dirac_rep, dirac_unrep, DiracKind, IdempotentReport, IdempotentSet};
pub use images::BladeImages;
pub use pauli::{pauli_rep, pauli_unrep};
pub use quaternion::{QuatMatrix2, Quaternion};
pub use spacetime::{even_iso, even_iso_inverse, quat_rep};

use crate::ga::{all_grades, rng, sample_complex_mv, sample_mv, Multivector, Signature};
use crate::linalg::{max_abs_diff, ComplexMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    Pauli,
    QuatCl13,
    DiracStandard,
    DiracWeyl,
}

impl RepKind {
    pub const ALL: [RepKind; 4] = [RepKind::Pauli, RepKind::QuatCl13, RepKind::DiracStandard, RepKind::DiracWeyl];

    pub fn signature(self) -> Signature {
        match self {
            RepKind::Pauli => Signature::CL30,
            _ => Signature::CL13,
        }
    }
}

/// Worst homomorphism, unit and linearity residuals over seeded samples.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RepReport {
    pub kind: RepKind,
    pub samples: usize,
    pub homomorphism: f64,
    pub identity: f64,
    pub linearity: f64,
}

impl RepReport {
    pub fn max(&self) -> f64 {
        self.homomorphism.max(self.identity).max(self.linearity)
    }
}

/// Either a complex or a quaternionic image, so one checker covers all kinds.
enum Image {
    Complex(ComplexMatrix),
    Quat(QuatMatrix2),
}

impl Image {
    fn dist(&self, other: &Image) -> f64 {
        match (self, other) {
            (Image::Complex(a), Image::Complex(b)) => max_abs_diff(a, b),
            (Image::Quat(a), Image::Quat(b)) => a.max_abs_diff(b),
            _ => unreachable!("images of one kind"),
        }
    }

    fn mul(&self, other: &Image) -> Image {
        match (self, other) {
            (Image::Complex(a), Image::Complex(b)) => Image::Complex(a * b),
            (Image::Quat(a), Image::Quat(b)) => Image::Quat(*a * *b),
            _ => unreachable!("images of one kind"),
        }
    }

    fn add(&self, other: &Image) -> Image {
        match (self, other) {
            (Image::Complex(a), Image::Complex(b)) => Image::Complex(a + b),
            (Image::Quat(a), Image::Quat(b)) => Image::Quat(*a + *b),
            _ => unreachable!("images of one kind"),
        }
    }

    fn identity(kind: RepKind) -> Image {
        match kind {
            RepKind::Pauli => Image::Complex(ComplexMatrix::identity(2, 2)),
            RepKind::QuatCl13 => Image::Quat(QuatMatrix2::identity()),
            _ => Image::Complex(ComplexMatrix::identity(4, 4)),
        }
    }
}

fn image(kind: RepKind, a: &Multivector) -> Image {
    match kind {
        RepKind::Pauli => Image::Complex(pauli_rep(a).expect("sampled in Cl(3,0)")),
        RepKind::QuatCl13 => Image::Quat(quat_rep(a).expect("sampled real Cl(1,3)")),
        RepKind::DiracStandard => Image::Complex(dirac_rep(a, DiracKind::Standard).expect("sampled in Cl(1,3)")),
        RepKind::DiracWeyl => Image::Complex(dirac_rep(a, DiracKind::Weyl).expect("sampled in Cl(1,3)")),
    }
}

/// Checks `ρ(ab) = ρ(a)ρ(b)`, `ρ(1) = I` and additivity on seeded random pairs.
pub fn verify_rep(kind: RepKind, samples: usize, seed: u64) -> RepReport {
    let sig = kind.signature();
    let grades = all_grades(sig);
    let mut gen = rng(seed);
    let draw = |gen: &mut rand_chacha::ChaCha8Rng| match kind {
        RepKind::DiracStandard | RepKind::DiracWeyl => sample_complex_mv(gen, sig, &grades),
        _ => sample_mv(gen, sig, &grades),
    };
    let mut report = RepReport {
        kind,
        samples: samples.max(1),
        homomorphism: 0.0,
        identity: image(kind, &Multivector::one(sig)).dist(&Image::identity(kind)),
        linearity: 0.0,
    };
    for _ in 0..report.samples {
        let a = draw(&mut gen);
        let b = draw(&mut gen);
        let scale: f64 = gen.gen_range(-2.0..2.0);
        let (ia, ib) = (image(kind, &a), image(kind, &b));
        report.homomorphism = report.homomorphism.max(image(kind, &(&a * &b)).dist(&ia.mul(&ib)));
        let combo = &a + &b.scale(scale);
        let scaled_b = image(kind, &b.scale(scale));
        report.linearity = report.linearity.max(image(kind, &combo).dist(&ia.add(&scaled_b)));
    }
    report
}
