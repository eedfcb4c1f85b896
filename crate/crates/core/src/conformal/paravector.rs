use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{Algebra, Multivector, Signature};
use crate::iso::{periodicity_split, VahlenSplit};

/// Tolerance for deciding that a multivector has no grade ≥ 2 part.
pub const PARAVECTOR_TOL: f64 = 1e-9;

/// Spacetime point `x0 + x1 e1 + x2 e2 + x3 e3` in ℝ⊕ℝ³ ⊂ Cl(3,0).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Paravector {
    pub x0: f64,
    pub x: [f64; 3],
}

impl Paravector {
    pub const fn new(x0: f64, x: [f64; 3]) -> Self {
        Paravector { x0, x }
    }

    pub fn from_slice(v: &[f64]) -> Result<Self> {
        match v {
            &[x0, x1, x2, x3] => Ok(Paravector::new(x0, [x1, x2, x3])),
            _ => Err(Error::InvalidArgument(format!("a paravector has 4 components, got {}", v.len()))),
        }
    }

    pub fn components(&self) -> [f64; 4] {
        [self.x0, self.x[0], self.x[1], self.x[2]]
    }

    pub fn to_mv(&self) -> Multivector {
        let mut mv = Multivector::scalar(Signature::CL30, self.x0);
        for (i, &xi) in self.x.iter().enumerate() {
            mv.set_coeff(1 << i, xi);
        }
        mv
    }

    /// Reads grades 0 and 1; fails if anything else survives.
    pub fn from_mv(mv: &Multivector) -> Result<Self> {
        if mv.sig() != Signature::CL30 {
            return Err(Error::WrongAlgebra { expected: Signature::CL30, found: mv.sig() });
        }
        let scale = mv.max_norm().max(1.0);
        if let Some(&g) = mv.grades_present(PARAVECTOR_TOL * scale).iter().find(|&&g| g > 1) {
            return Err(Error::NotParavector(g));
        }
        if mv.max_imag() > PARAVECTOR_TOL * scale {
            return Err(Error::NonReal(mv.max_imag()));
        }
        Ok(Paravector::new(mv.coeff(0).re, [mv.coeff(1).re, mv.coeff(2).re, mv.coeff(4).re]))
    }

    /// Paravector conjugate `x̄ = x0 - x⃗`.
    pub fn conj(&self) -> Self {
        Paravector::new(self.x0, self.x.map(|c| -c))
    }

    /// Bilinear form polarizing `x·x = x x̄ = x0² - |x⃗|²`.
    pub fn dot(&self, other: &Paravector) -> f64 {
        self.x0 * other.x0 - self.x.iter().zip(&other.x).map(|(a, b)| a * b).sum::<f64>()
    }

    pub fn norm2(&self) -> f64 {
        self.dot(self)
    }

    pub fn scale(&self, s: f64) -> Self {
        Paravector::new(s * self.x0, self.x.map(|c| s * c))
    }

    /// Largest componentwise difference.
    pub fn dist(&self, other: &Paravector) -> f64 {
        self.components().iter().zip(other.components()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

impl Add for Paravector {
    type Output = Paravector;
    fn add(self, o: Paravector) -> Paravector {
        Paravector::new(self.x0 + o.x0, [self.x[0] + o.x[0], self.x[1] + o.x[1], self.x[2] + o.x[2]])
    }
}

impl Sub for Paravector {
    type Output = Paravector;
    fn sub(self, o: Paravector) -> Paravector {
        self + o.scale(-1.0)
    }
}

/// Paravector `α5 + α^A E_A` of Cl(4,1); `alpha[k]` multiplies `E_k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Paravector41 {
    pub alpha5: f64,
    pub alpha: [f64; 5],
}

impl Paravector41 {
    pub fn to_mv(&self) -> Multivector {
        let mut mv = Multivector::scalar(Signature::CL41, self.alpha5);
        for (label, &a) in self.alpha.iter().enumerate() {
            mv += &Algebra::Cl41.generator(label as u8).scale(a);
        }
        mv
    }

    pub fn from_mv(mv: &Multivector) -> Result<Self> {
        if mv.sig() != Signature::CL41 {
            return Err(Error::WrongAlgebra { expected: Signature::CL41, found: mv.sig() });
        }
        let scale = mv.max_norm().max(1.0);
        if let Some(&g) = mv.grades_present(PARAVECTOR_TOL * scale).iter().find(|&&g| g > 1) {
            return Err(Error::NotParavector(g));
        }
        let alpha = std::array::from_fn(|label| Algebra::Cl41.coeff(mv, &[label as u8]).re);
        Ok(Paravector41 { alpha5: mv.scalar_part().re, alpha })
    }

    /// Scalar part of `𝔟 𝔟̄`; zero on the Klein absolute.
    pub fn norm2(&self) -> f64 {
        let [a0, a1, a2, a3, a4] = self.alpha;
        self.alpha5 * self.alpha5 + a0 * a0 - a1 * a1 - a2 * a2 - a3 * a3 - a4 * a4
    }

    pub fn lambda(&self) -> f64 {
        self.alpha[4] - self.alpha[0]
    }

    pub fn mu(&self) -> f64 {
        self.alpha[4] + self.alpha[0]
    }

    /// The Cl(3,0) paravector `α5 + α^i e_i` on the diagonal of the split.
    pub fn chart_point(&self) -> Paravector {
        Paravector::new(self.alpha5, [self.alpha[1], self.alpha[2], self.alpha[3]])
    }
}

/// `x ↦ (x, x·x, 1)` written as a null Cl(4,1) paravector:
/// `α0 = (1 - x·x)/2`, `α4 = (1 + x·x)/2`.
pub fn kappa_lift(x: &Paravector) -> Paravector41 {
    let s = x.norm2();
    Paravector41 { alpha5: x.x0, alpha: [(1.0 - s) / 2.0, x.x[0], x.x[1], x.x[2], (1.0 + s) / 2.0] }
}

/// Point of the projective quadric `x·x - λμ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CompactPoint {
    pub x: Paravector,
    pub lambda: f64,
    pub mu: f64,
}

impl CompactPoint {
    pub fn klein_residual(&self) -> f64 {
        self.x.norm2() - self.lambda * self.mu
    }
}

pub fn compactify(x: &Paravector) -> CompactPoint {
    CompactPoint { x: *x, lambda: x.norm2(), mu: 1.0 }
}

/// Back to the affine chart; `μ = 0` is a point at infinity.
pub fn project(p: &CompactPoint) -> Result<Paravector> {
    if p.mu == 0.0 {
        return Err(Error::PointAtInfinity);
    }
    Ok(p.x.scale(1.0 / p.mu))
}

/// `[[x, λ], [μ, x̄]]`, the split of the Cl(4,1) paravector `b`.
pub fn paravector_matrix(b: &Paravector41) -> VahlenSplit {
    let x = b.chart_point();
    let s = |v: f64| Multivector::scalar(Signature::CL30, v);
    VahlenSplit { a: x.to_mv(), c: s(b.lambda()), b: s(b.mu()), d: x.conj().to_mv() }
}

/// The `μ = 1` chart `[[x, x x̄], [1, x̄]]`.
pub fn chart_matrix(x: &Paravector) -> VahlenSplit {
    paravector_matrix(&kappa_lift(x))
}

/// Same as [`paravector_matrix`], but through the algebra isomorphism.
pub fn paravector_matrix_via_split(b: &Paravector41) -> VahlenSplit {
    periodicity_split(&b.to_mv()).expect("Cl(4,1) input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compactify_examples() {
        let origin = compactify(&Paravector::default());
        assert_eq!((origin.lambda, origin.mu), (0.0, 1.0));
        let p = compactify(&Paravector::new(1.0, [2.0, 0.0, 0.0]));
        assert_eq!((p.lambda, p.mu), (-3.0, 1.0));
        assert_eq!(p.klein_residual(), 0.0);
    }

    #[test]
    fn project_examples() {
        let x = Paravector::new(0.5, [1.0, -2.0, 3.0]);
        let p = compactify(&x);
        assert_eq!(project(&p).unwrap(), x);
        let scaled = CompactPoint { x: x.scale(2.0), lambda: 4.0 * p.lambda, mu: 2.0 };
        assert_eq!(project(&scaled).unwrap(), x);
        assert!(matches!(project(&CompactPoint { mu: 0.0, ..p }), Err(Error::PointAtInfinity)));
    }

    #[test]
    fn lift_is_null_and_matches_split() {
        let x = Paravector::new(0.3, [-1.2, 0.7, 2.0]);
        let b = kappa_lift(&x);
        assert!(b.norm2().abs() < 1e-12);
        assert!((b.to_mv() * b.to_mv().conjugation()).max_norm() < 1e-12);
        assert_eq!((b.lambda(), b.mu()), (x.norm2(), 1.0));
        assert!(paravector_matrix(&b).dist(&paravector_matrix_via_split(&b)) < 1e-15);
        let m = chart_matrix(&Paravector::default());
        assert!(m.a.is_zero(0.0) && m.c.is_zero(0.0) && m.d.is_zero(0.0));
        assert_eq!(m.b, Multivector::one(Signature::CL30));
    }

    #[test]
    fn from_mv_rejects_bivectors() {
        let e12 = Multivector::blade(Signature::CL30, 0b11);
        assert!(matches!(Paravector::from_mv(&e12), Err(Error::NotParavector(2))));
    }
}
