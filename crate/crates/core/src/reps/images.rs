use crate::ga::{Multivector, Signature};
use crate::linalg::{max_abs, ComplexMatrix};

/// Matrix images of every canonical blade, from generator images.
pub struct BladeImages {
    sig: Signature,
    images: Vec<ComplexMatrix>,
}

impl BladeImages {
    pub fn from_generators(sig: Signature, generators: &[ComplexMatrix]) -> Self {
        assert_eq!(generators.len(), sig.n());
        let size = generators[0].nrows();
        let images = (0..sig.dim())
            .map(|mask| {
                (0..sig.n())
                    .filter(|bit| mask >> bit & 1 == 1)
                    .fold(ComplexMatrix::identity(size, size), |acc, bit| acc * &generators[bit])
            })
            .collect();
        BladeImages { sig, images }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn image(&self, mask: usize) -> &ComplexMatrix {
        &self.images[mask]
    }

    pub fn apply(&self, a: &Multivector) -> ComplexMatrix {
        let size = self.images[0].nrows();
        let mut out = ComplexMatrix::zeros(size, size);
        for (mask, c) in a.terms() {
            out += &self.images[mask] * c;
        }
        out
    }

    /// Inverse of [`Self::apply`] when the images span the full matrix algebra.
    ///
    /// Blade images square to ±1 and distinct blades are trace-orthogonal, so
    /// the coefficient of blade `A` is `tr(img(A)⁻¹ m) / size`.
    pub fn unapply(&self, m: &ComplexMatrix) -> Multivector {
        let size = self.images[0].nrows();
        debug_assert_eq!(size * size, self.sig.dim());
        let mut out = Multivector::zero(self.sig);
        for (mask, img) in self.images.iter().enumerate() {
            let square = self.sig.blade_sign(mask, mask);
            let coeff = (img * m).trace() * square / size as f64;
            out.set_coeff(mask, coeff);
        }
        out
    }

    /// Whether the images satisfy `g_i g_j + g_j g_i = 2 η_ij`, with the
    /// largest deviation.
    pub fn clifford_residual(&self) -> f64 {
        let n = self.sig.n();
        let size = self.images[0].nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let (gi, gj) = (self.image(1 << i), self.image(1 << j));
                let mut target = ComplexMatrix::zeros(size, size);
                if i == j {
                    target = ComplexMatrix::identity(size, size) * crate::linalg::c64(2.0 * self.sig.square(i), 0.0);
                }
                worst = worst.max(max_abs(&(gi * gj + gj * gi - target)));
            }
        }
        worst
    }
}
