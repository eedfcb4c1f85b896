use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{gamma5, Algebra, Multivector, Signature};
use crate::linalg::{c64, ComplexMatrix, I};

/// Which pair of commuting elements generates the idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DiracKind {
    /// `¼(1 ± γ0)(1 ± iγ12)`.
    Standard,
    /// `¼(1 ± iγ5)(1 ± iγ12)`, the chiral basis.
    Weyl,
}

/// Four primitive idempotents of ℂ⊗Cl(1,3) with the matrix-unit table built on them.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub kind: DiracKind,
    pub p: [Multivector; 4],
    /// `c_i` with `c_i P1 c_i⁻¹ = P_i`.
    pub conjugators: [Multivector; 4],
    /// Sign `s_i` attached to row `i`; `E_ij = (s_i / s_j) c_i P1 c_j⁻¹`.
    pub signs: [f64; 4],
    pub table: [[Multivector; 4]; 4],
    images: Vec<ComplexMatrix>,
}

/// Worst residual of each structural identity.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct IdempotentReport {
    pub idempotent: f64,
    pub orthogonal: f64,
    pub resolution: f64,
    pub similarity: f64,
    pub matrix_units: f64,
}

impl IdempotentReport {
    pub fn max(&self) -> f64 {
        [self.idempotent, self.orthogonal, self.resolution, self.similarity, self.matrix_units]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

fn half_plus(x: &Multivector, sign: f64) -> Multivector {
    (Multivector::one(x.sig()) + x.scale(sign)).scale(0.5)
}

fn build(kind: DiracKind) -> IdempotentSet {
    let g = |labels: &[u8]| Algebra::Cl13.blade(labels);
    let i_g12 = g(&[1, 2]).scale(I);
    let first = match kind {
        DiracKind::Standard => g(&[0]),
        DiracKind::Weyl => gamma5().scale(I),
    };
    let pattern = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let p = pattern.map(|(s1, s2)| &half_plus(&first, s1) * &half_plus(&i_g12, s2));
    let (conjugators, signs) = match kind {
        DiracKind::Standard => ([g(&[]), g(&[1, 3]), g(&[3, 0]), g(&[1, 0])], [1.0, -1.0, 1.0, 1.0]),
        DiracKind::Weyl => ([g(&[]), g(&[0, 1]), g(&[0]), g(&[1])], [1.0; 4]),
    };
    let inverses: Vec<Multivector> =
        conjugators.iter().map(|c| c.inverse().expect("conjugators are invertible blades")).collect();
    let table = std::array::from_fn(|i| {
        std::array::from_fn(|j| (&(&conjugators[i] * &p[0]) * &inverses[j]).scale(signs[i] / signs[j]))
    });
    let mut set = IdempotentSet { kind, p, conjugators, signs, table, images: Vec::new() };
    set.images = (0..16).map(|mask| set.rep_from_table(&Multivector::blade(Signature::CL13, mask))).collect();
    let report = set.verify();
    assert!(report.max() < 1e-13, "idempotent table for {kind:?} is inconsistent: {report:?}");
    set
}

/// The cached idempotent set of the given kind.
pub fn dirac_idempotents(kind: DiracKind) -> &'static IdempotentSet {
    static STANDARD: OnceLock<IdempotentSet> = OnceLock::new();
    static WEYL: OnceLock<IdempotentSet> = OnceLock::new();
    match kind {
        DiracKind::Standard => STANDARD.get_or_init(|| build(DiracKind::Standard)),
        DiracKind::Weyl => WEYL.get_or_init(|| build(DiracKind::Weyl)),
    }
}

impl IdempotentSet {
    pub fn verify(&self) -> IdempotentReport {
        let one = Multivector::one(Signature::CL13);
        let mut r = IdempotentReport::default();
        let mut sum = Multivector::zero(Signature::CL13);
        for i in 0..4 {
            sum += &self.p[i];
            r.idempotent = r.idempotent.max((&self.p[i] * &self.p[i]).dist(&self.p[i]));
            for j in 0..4 {
                if i != j {
                    r.orthogonal = r.orthogonal.max((&self.p[i] * &self.p[j]).max_norm());
                }
                for k in 0..4 {
                    let lhs = &self.table[i][j] * &self.table[j][k];
                    r.matrix_units = r.matrix_units.max(lhs.dist(&self.table[i][k]));
                }
            }
            let conj = &(&self.conjugators[i] * &self.p[0]) * &self.conjugators[i].inverse().expect("invertible");
            r.similarity = r.similarity.max(conj.dist(&self.p[i]));
        }
        r.resolution = sum.dist(&one);
        r
    }

    /// Matrix of `a`: `m_ij = ⟨E_1i a E_j1⟩₀ / ⟨P1⟩₀`.
    pub fn rep_from_table(&self, a: &Multivector) -> ComplexMatrix {
        let norm = self.p[0].scalar_part();
        ComplexMatrix::from_fn(4, 4, |i, j| (&(&self.table[0][i] * a) * &self.table[j][0]).scalar_part() / norm)
    }

    /// Same as [`Self::rep_from_table`], through the cached blade images.
    pub fn rep(&self, a: &Multivector) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(4, 4);
        for (mask, c) in a.terms() {
            out += &self.images[mask] * c;
        }
        out
    }
}

/// 4×4 complex image of an element of ℂ⊗Cl(1,3).
pub fn dirac_rep(a: &Multivector, kind: DiracKind) -> Result<ComplexMatrix> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongAlgebra { expected: Signature::CL13, found: a.sig() });
    }
    Ok(dirac_idempotents(kind).rep(a))
}

/// Element of ℂ⊗Cl(1,3) with the given Dirac image, from the matrix units.
pub fn dirac_unrep(m: &ComplexMatrix, kind: DiracKind) -> Result<Multivector> {
    if m.shape() != (4, 4) {
        return Err(Error::InvalidArgument(format!("expected a 4×4 matrix, got {:?}", m.shape())));
    }
    let set = dirac_idempotents(kind);
    let mut out = Multivector::zero(Signature::CL13);
    for i in 0..4 {
        for j in 0..4 {
            if m[(i, j)] != c64(0.0, 0.0) {
                out += &set.table[i][j].scale(m[(i, j)]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;

    #[test]
    fn both_sets_are_consistent() {
        for kind in [DiracKind::Standard, DiracKind::Weyl] {
            assert!(dirac_idempotents(kind).verify().max() < 1e-15);
        }
    }

    #[test]
    fn unrep_inverts_rep() {
        let a = crate::ga::random_mv(5, Signature::CL13, &[0, 1, 2, 3, 4]).scale(c64(0.5, 0.25));
        for kind in [DiracKind::Standard, DiracKind::Weyl] {
            let m = dirac_rep(&a, kind).unwrap();
            let back = dirac_unrep(&m, kind).unwrap();
            assert!(back.dist(&a) < 1e-14);
            assert!(max_abs_diff(&dirac_rep(&back, kind).unwrap(), &m) < 1e-14);
        }
    }
}
