use std::ops::Mul;
use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};
use crate::linalg::{c64, ComplexMatrix};

/// A Cl(4,1) element written as the 2×2 matrix `[[a, c], [b, d]]` over Cl(3,0).
///
/// The split is the algebra isomorphism fixed by `E_i ↦ diag(e_i, -e_i)`,
/// `E4 ↦ [[0,1],[1,0]]` and `E0 ↦ [[0,-1],[1,0]]`, so that `E4 E0` is
/// `diag(1,-1)` and `E_i E4 E0` sits as `e_i` in the upper-left slot.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VahlenSplit {
    pub a: Multivector,
    pub b: Multivector,
    pub c: Multivector,
    pub d: Multivector,
}

impl VahlenSplit {
    /// From the matrix entries in reading order `[[a, c], [b, d]]`.
    pub fn from_rows(a: Multivector, c: Multivector, b: Multivector, d: Multivector) -> Result<Self> {
        for x in [&a, &b, &c, &d] {
            if x.sig() != Signature::CL30 {
                return Err(Error::WrongAlgebra { expected: Signature::CL30, found: x.sig() });
            }
        }
        Ok(VahlenSplit { a, b, c, d })
    }

    pub fn identity() -> Self {
        let one = Multivector::one(Signature::CL30);
        let zero = Multivector::zero(Signature::CL30);
        VahlenSplit { a: one.clone(), b: zero.clone(), c: zero, d: one }
    }

    pub fn scale(&self, s: f64) -> Self {
        VahlenSplit { a: self.a.scale(s), b: self.b.scale(s), c: self.c.scale(s), d: self.d.scale(s) }
    }

    pub fn dist(&self, other: &VahlenSplit) -> f64 {
        [self.a.dist(&other.a), self.b.dist(&other.b), self.c.dist(&other.c), self.d.dist(&other.d)]
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// Reversion of the Cl(4,1) element, read off the entries: `[[d̄, c̄], [b̄, ā]]`.
    pub fn reversion(&self) -> Self {
        VahlenSplit {
            a: self.d.conjugation(),
            c: self.c.conjugation(),
            b: self.b.conjugation(),
            d: self.a.conjugation(),
        }
    }

    /// Clifford conjugation of the Cl(4,1) element: `[[d̃, -c̃], [-b̃, ã]]`.
    pub fn conjugation(&self) -> Self {
        VahlenSplit { a: self.d.reversion(), c: -self.c.reversion(), b: -self.b.reversion(), d: self.a.reversion() }
    }

    fn flatten(&self) -> DVector<num_complex::Complex64> {
        DVector::from_iterator(
            32,
            [&self.a, &self.b, &self.c, &self.d].into_iter().flat_map(|x| x.coeffs().iter().copied()),
        )
    }

    fn unflatten(v: &DVector<num_complex::Complex64>) -> Self {
        let part = |k: usize| {
            Multivector::from_coeffs(Signature::CL30, v.rows(8 * k, 8).iter().copied().collect())
                .expect("eight coefficients")
        };
        VahlenSplit { a: part(0), b: part(1), c: part(2), d: part(3) }
    }
}

impl Mul for &VahlenSplit {
    type Output = VahlenSplit;
    fn mul(self, o: &VahlenSplit) -> VahlenSplit {
        // [[a, c], [b, d]] · [[a', c'], [b', d']]
        VahlenSplit {
            a: &self.a * &o.a + &self.c * &o.b,
            c: &self.a * &o.c + &self.c * &o.d,
            b: &self.b * &o.a + &self.d * &o.b,
            d: &self.b * &o.c + &self.d * &o.d,
        }
    }
}

fn generator_split(bit: usize) -> VahlenSplit {
    let one = Multivector::one(Signature::CL30);
    let zero = Multivector::zero(Signature::CL30);
    match bit {
        0..=2 => {
            let e = Multivector::generator(Signature::CL30, bit);
            VahlenSplit { a: e.clone(), b: zero.clone(), c: zero, d: -e }
        }
        3 => VahlenSplit { a: zero.clone(), b: one.clone(), c: one, d: zero },
        4 => VahlenSplit { a: zero.clone(), b: one.clone(), c: -one, d: zero },
        _ => unreachable!("Cl(4,1) has five generators"),
    }
}

struct SplitOperator {
    forward: ComplexMatrix,
    backward: ComplexMatrix,
}

fn operator() -> &'static SplitOperator {
    static OP: OnceLock<SplitOperator> = OnceLock::new();
    OP.get_or_init(|| {
        let gens: Vec<VahlenSplit> = (0..5).map(generator_split).collect();
        let mut forward = ComplexMatrix::zeros(32, 32);
        for mask in 0..32 {
            let img = (0..5).filter(|b| mask >> b & 1 == 1).fold(VahlenSplit::identity(), |acc, b| &acc * &gens[b]);
            forward.set_column(mask, &img.flatten());
        }
        let real = DMatrix::from_fn(32, 32, |r, c| forward[(r, c)].re);
        let backward = real.try_inverse().expect("the split is a bijection").map(|x| c64(x, 0.0));
        SplitOperator { forward, backward }
    })
}

pub fn periodicity_split(a: &Multivector) -> Result<VahlenSplit> {
    if a.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: a.sig() });
    }
    Ok(VahlenSplit::unflatten(&(&operator().forward * DVector::from_column_slice(a.coeffs()))))
}

pub fn periodicity_join(s: &VahlenSplit) -> Multivector {
    let v = &operator().backward * s.flatten();
    Multivector::from_coeffs(Signature::CL41, v.iter().copied().collect()).expect("32 coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::{random_mv, Algebra};

    fn split(labels: &[u8]) -> VahlenSplit {
        periodicity_split(&Algebra::Cl41.blade(labels)).unwrap()
    }

    fn mat(a: f64, c: f64, b: f64, d: f64) -> VahlenSplit {
        let s = |x: f64| Multivector::scalar(Signature::CL30, x);
        VahlenSplit { a: s(a), b: s(b), c: s(c), d: s(d) }
    }

    #[test]
    fn null_basis_and_e4() {
        let e_plus = (Algebra::Cl41.generator(4) + Algebra::Cl41.generator(0)).scale(0.5);
        let e_minus = (Algebra::Cl41.generator(4) - Algebra::Cl41.generator(0)).scale(0.5);
        assert_eq!(periodicity_split(&e_plus).unwrap(), mat(0.0, 0.0, 1.0, 0.0));
        assert_eq!(periodicity_split(&e_minus).unwrap(), mat(0.0, 1.0, 0.0, 0.0));
        assert_eq!(split(&[4, 0]), mat(1.0, 0.0, 0.0, -1.0));
        assert_eq!(split(&[4]), mat(0.0, 1.0, 1.0, 0.0));
        assert_eq!(split(&[]), VahlenSplit::identity());
    }

    #[test]
    fn vectors_sit_on_the_diagonal() {
        for i in 1..=3u8 {
            let s = split(&[i, 4, 0]);
            let e = Algebra::Cl30.generator(i);
            assert_eq!(
                s,
                VahlenSplit {
                    a: e.clone(),
                    b: Multivector::zero(Signature::CL30),
                    c: Multivector::zero(Signature::CL30),
                    d: e
                }
            );
        }
    }

    #[test]
    fn round_trip_and_homomorphism() {
        let x = random_mv(1, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        let y = random_mv(2, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        let sx = periodicity_split(&x).unwrap();
        assert!(periodicity_join(&sx).dist(&x) < 1e-12);
        let sxy = periodicity_split(&(&x * &y)).unwrap();
        assert!(sxy.dist(&(&sx * &periodicity_split(&y).unwrap())) < 1e-12);
    }

    #[test]
    fn antiautomorphisms_on_all_blades() {
        for mask in 0..32 {
            let x = Multivector::blade(Signature::CL41, mask);
            let s = periodicity_split(&x).unwrap();
            assert_eq!(s.reversion(), periodicity_split(&x.reversion()).unwrap(), "blade {mask:#b}");
            assert_eq!(s.conjugation(), periodicity_split(&x.conjugation()).unwrap(), "blade {mask:#b}");
        }
    }
}
