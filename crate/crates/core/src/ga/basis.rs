use num_complex::Complex64;

use super::multivector::Multivector;
use super::products::product_of;
use super::signature::Signature;

/// Named generator conventions for the four algebras in play.
///
/// Labels are the customary indices: `e1..e3`, `γ0..γ3`, `E0..E4`, `ε0..ε5`.
/// A labelled blade is the product of its generators in the order given, so
/// `E01` means `E0 E1` even though `E0` sits on the highest bit of Cl(4,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// Pauli algebra, `e_i² = 1`.
    Cl30,
    /// Space-time algebra, `γ0² = 1`, `γ_k² = -1`.
    Cl13,
    /// `E1..E4` square to +1, `E0² = -1`.
    Cl41,
    /// `ε0² = ε5² = 1`, `ε1..ε4` square to -1.
    Cl24,
    /// Complexified Cl(1,3), same generators as `Cl13`.
    DiracComplex,
}

impl Algebra {
    pub fn signature(self) -> Signature {
        match self {
            Algebra::Cl30 => Signature::CL30,
            Algebra::Cl13 | Algebra::DiracComplex => Signature::CL13,
            Algebra::Cl41 => Signature::CL41,
            Algebra::Cl24 => Signature::CL24,
        }
    }

    /// Labels in their usual reading order.
    pub fn labels(self) -> &'static [u8] {
        match self {
            Algebra::Cl30 => &[1, 2, 3],
            Algebra::Cl13 | Algebra::DiracComplex => &[0, 1, 2, 3],
            Algebra::Cl41 => &[0, 1, 2, 3, 4],
            Algebra::Cl24 => &[0, 1, 2, 3, 4, 5],
        }
    }

    /// Bit position of a labelled generator, if the label exists.
    pub fn bit(self, label: u8) -> Option<usize> {
        let bit = match (self, label) {
            (Algebra::Cl30, 1..=3) => label - 1,
            (Algebra::Cl13 | Algebra::DiracComplex, 0..=3) => label,
            (Algebra::Cl41, 1..=4) => label - 1,
            (Algebra::Cl41, 0) => 4,
            (Algebra::Cl24, 0) => 0,
            (Algebra::Cl24, 5) => 1,
            (Algebra::Cl24, 1..=4) => label + 1,
            _ => return None,
        };
        Some(bit as usize)
    }

    pub fn square(self, label: u8) -> Option<f64> {
        self.bit(label).map(|b| self.signature().square(b))
    }

    pub fn generator(self, label: u8) -> Multivector {
        let bit = self.bit(label).unwrap_or_else(|| panic!("{self:?} has no generator labelled {label}"));
        Multivector::generator(self.signature(), bit)
    }

    /// Ordered product of labelled generators; the empty list gives 1.
    pub fn blade(self, labels: &[u8]) -> Multivector {
        if labels.is_empty() {
            return Multivector::one(self.signature());
        }
        let gens: Vec<Multivector> = labels.iter().map(|&l| self.generator(l)).collect();
        product_of(&gens.iter().collect::<Vec<_>>())
    }

    /// Canonical bitmask and sign with `blade(labels) = sign · e_mask`.
    pub fn blade_mask(self, labels: &[u8]) -> (usize, f64) {
        let b = self.blade(labels);
        let (mask, c) = b.terms().next().expect("blades are nonzero");
        (mask, c.re)
    }

    /// Coefficient of the labelled blade in `mv`.
    pub fn coeff(self, mv: &Multivector, labels: &[u8]) -> Complex64 {
        let (mask, sign) = self.blade_mask(labels);
        mv.coeff(mask) * sign
    }

    /// Generator symbol such as `γ0` or `ε5`.
    pub fn symbol(self, label: u8) -> String {
        let stem = match self {
            Algebra::Cl30 => "e",
            Algebra::Cl13 | Algebra::DiracComplex => "γ",
            Algebra::Cl41 => "E",
            Algebra::Cl24 => "ε",
        };
        format!("{stem}{label}")
    }
}

/// `γ5 = γ0γ1γ2γ3` in Cl(1,3).
pub fn gamma5() -> Multivector {
    Algebra::Cl13.blade(&[0, 1, 2, 3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_match_conventions() {
        for alg in [Algebra::Cl30, Algebra::Cl13, Algebra::Cl41, Algebra::Cl24] {
            for &l in alg.labels() {
                let g = alg.generator(l);
                let sq = (&g * &g).scalar_part().re;
                assert_eq!(sq, alg.square(l).unwrap(), "{alg:?} label {l}");
            }
        }
        assert_eq!(Algebra::Cl41.square(0), Some(-1.0));
        assert_eq!(Algebra::Cl24.square(5), Some(1.0));
        assert_eq!(Algebra::Cl24.square(3), Some(-1.0));
        assert_eq!(Algebra::Cl30.bit(0), None);
    }

    #[test]
    fn labelled_blade_order() {
        // E0 E1 = -E1 E0 and E1 E0 is the canonical blade
        let (mask, sign) = Algebra::Cl41.blade_mask(&[0, 1]);
        assert_eq!(mask, 0b10001);
        assert_eq!(sign, -1.0);
        assert_eq!(Algebra::Cl13.blade_mask(&[0, 1, 2, 3]), (0b1111, 1.0));
    }
}
