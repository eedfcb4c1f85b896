use num_complex::Complex64;
use serde::Serialize;

use super::paravector::Paravector;
use crate::error::{Error, Result};
use crate::linalg::{from_rows, ComplexMatrix, ONE};

/// Entries of a planar spin matrix `[[a, c], [b, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlaneMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl PlaneMap {
    pub const IDENTITY: PlaneMap = PlaneMap { a: ONE, b: crate::linalg::ZERO, c: crate::linalg::ZERO, d: ONE };

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }
}

/// `z' = (a z + c)(b z + d)⁻¹` with weight `ω = |b z + d|²`.
pub fn mobius_plane(m: &PlaneMap, z: Complex64) -> Result<(Complex64, f64)> {
    let den = m.b * z + m.d;
    let omega = den.norm_sqr();
    if omega == 0.0 {
        return Err(Error::Undefined);
    }
    Ok(((m.a * z + m.c) / den, omega))
}

/// `[[z, z z̄], [1, z̄]]`.
pub fn plane_chart(z: Complex64) -> ComplexMatrix {
    from_rows(&[[z, Complex64::from(z.norm_sqr())], [ONE, z.conj()]])
}

/// `[[a, c], [b, d]] · chart(z) · [[d̄, c̄], [b̄, ā]]`, which equals
/// `ω · chart(z')` for unimodular matrices.
pub fn mobius_sandwich(m: &PlaneMap, z: Complex64) -> ComplexMatrix {
    let g = from_rows(&[[m.a, m.c], [m.b, m.d]]);
    let g_rev = from_rows(&[[m.d.conj(), m.c.conj()], [m.b.conj(), m.a.conj()]]);
    g * plane_chart(z) * g_rev
}

/// Zero set of `a x·x + b·x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuasiSphere {
    pub a: f64,
    pub b: Paravector,
    pub c: f64,
}

impl QuasiSphere {
    pub fn new(a: f64, b: Paravector, c: f64) -> Result<Self> {
        if a == 0.0 && c == 0.0 && b.components().iter().all(|&v| v == 0.0) {
            return Err(Error::InvalidArgument("a quasi-sphere needs a nonzero coefficient".into()));
        }
        Ok(QuasiSphere { a, b, c })
    }

    pub fn is_plane(&self) -> bool {
        self.a == 0.0
    }
}

/// `a x·x + b·x + c` with the paravector form `x·y = x0 y0 - x⃗·y⃗`.
pub fn quasi_sphere_eval(s: &QuasiSphere, x: &Paravector) -> f64 {
    s.a * x.norm2() + s.b.dot(x) + s.c
}
