//! Generator images transcribed entry by entry from the published tables.
//! These are oracles: nothing here is computed from the kernel.

use crate::linalg::{c64, from_rows, ComplexMatrix, I, ONE, ZERO};
use crate::reps::{QuatMatrix2, Quaternion};

/// `σ1, σ2, σ3`, the images of `e1, e2, e3`.
pub fn pauli() -> [ComplexMatrix; 3] {
    [
        from_rows(&[[ZERO, ONE], [ONE, ZERO]]),
        from_rows(&[[ZERO, -I], [I, ZERO]]),
        from_rows(&[[ONE, ZERO], [ZERO, -ONE]]),
    ]
}

/// Images of `γ0..γ3` in M(2,ℍ).
pub fn quaternionic() -> [QuatMatrix2; 4] {
    let (o, z) = (Quaternion::ONE, Quaternion::ZERO);
    [
        QuatMatrix2::new(o, z, z, -o),
        QuatMatrix2::new(z, Quaternion::I, Quaternion::I, z),
        QuatMatrix2::new(z, Quaternion::J, Quaternion::J, z),
        QuatMatrix2::new(z, Quaternion::K, Quaternion::K, z),
    ]
}

fn m4(rows: [[(f64, f64); 4]; 4]) -> ComplexMatrix {
    from_rows(&rows.map(|r| r.map(|(re, im)| c64(re, im))))
}

const O: (f64, f64) = (0.0, 0.0);
const P: (f64, f64) = (1.0, 0.0);
const N: (f64, f64) = (-1.0, 0.0);
const PI: (f64, f64) = (0.0, 1.0);
const NI: (f64, f64) = (0.0, -1.0);

/// Standard (Dirac) basis: `γ0 = diag(1, 1, -1, -1)`, `γk = [[0, -σk], [σk, 0]]`.
pub fn dirac_standard() -> [ComplexMatrix; 4] {
    [
        m4([[P, O, O, O], [O, P, O, O], [O, O, N, O], [O, O, O, N]]),
        m4([[O, O, O, N], [O, O, N, O], [O, P, O, O], [P, O, O, O]]),
        m4([[O, O, O, PI], [O, O, NI, O], [O, NI, O, O], [PI, O, O, O]]),
        m4([[O, O, N, O], [O, O, O, P], [P, O, O, O], [O, N, O, O]]),
    ]
}

/// Chiral (Weyl) basis: `γ0 = [[0, 1], [1, 0]]`, spatial images as in the standard basis.
pub fn dirac_weyl() -> [ComplexMatrix; 4] {
    let mut out = dirac_standard();
    out[0] = m4([[O, O, P, O], [O, O, O, P], [P, O, O, O], [O, P, O, O]]);
    out
}

/// `γ5 = diag(-i, -i, i, i)` in the chiral basis.
pub fn weyl_gamma5() -> ComplexMatrix {
    m4([[NI, O, O, O], [O, NI, O, O], [O, O, PI, O], [O, O, O, PI]])
}
