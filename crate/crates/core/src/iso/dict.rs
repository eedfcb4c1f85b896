use serde::Serialize;

use super::kinds::IsoKind;
use crate::error::{Error, Result};
use crate::ga::{Algebra, Multivector, Signature};
use crate::linalg::c64;

/// One signed H-coefficient, e.g. `-H^{0124}` is `(-1.0, &[0, 1, 2, 4])`.
type HTerm = (f64, &'static [u8]);

/// `B^{labels} = s_re H^{X} + i s_im H^{Y}`.
type Row = (&'static [u8], HTerm, HTerm);

const KIND_A: [Row; 16] = [
    (&[], (1.0, &[]), (1.0, &[0, 1, 2, 3, 4])),
    (&[0], (1.0, &[0, 4]), (-1.0, &[1, 2, 3])),
    (&[1], (1.0, &[1, 4]), (-1.0, &[0, 2, 3])),
    (&[2], (1.0, &[2, 4]), (1.0, &[0, 1, 3])),
    (&[3], (1.0, &[3, 4]), (-1.0, &[0, 1, 2])),
    (&[1, 2], (-1.0, &[1, 2]), (1.0, &[0, 3, 4])),
    (&[1, 3], (-1.0, &[1, 3]), (-1.0, &[0, 2, 4])),
    (&[2, 3], (-1.0, &[2, 3]), (1.0, &[0, 1, 4])),
    (&[0, 1], (-1.0, &[0, 1]), (-1.0, &[2, 3, 4])),
    (&[0, 2], (-1.0, &[0, 2]), (1.0, &[1, 3, 4])),
    (&[0, 3], (-1.0, &[0, 3]), (-1.0, &[1, 2, 4])),
    (&[0, 1, 2], (-1.0, &[0, 1, 2, 4]), (-1.0, &[3])),
    (&[0, 1, 3], (-1.0, &[0, 1, 3, 4]), (1.0, &[2])),
    (&[0, 2, 3], (-1.0, &[0, 2, 3, 4]), (-1.0, &[1])),
    (&[1, 2, 3], (-1.0, &[1, 2, 3, 4]), (-1.0, &[0])),
    (&[0, 1, 2, 3], (1.0, &[0, 1, 2, 3]), (-1.0, &[4])),
];

// B² carries -iH² here; the printed listing has +iH².
const KIND_B: [Row; 16] = [
    (&[], (1.0, &[]), (1.0, &[0, 1, 2, 3, 4])),
    (&[0], (-1.0, &[1, 2, 3, 4]), (-1.0, &[0])),
    (&[1], (-1.0, &[0, 2, 3, 4]), (-1.0, &[1])),
    (&[2], (1.0, &[0, 1, 3, 4]), (-1.0, &[2])),
    (&[3], (-1.0, &[0, 1, 2, 4]), (-1.0, &[3])),
    (&[1, 2], (-1.0, &[1, 2]), (1.0, &[0, 3, 4])),
    (&[1, 3], (-1.0, &[1, 3]), (-1.0, &[0, 2, 4])),
    (&[2, 3], (-1.0, &[2, 3]), (1.0, &[0, 1, 4])),
    (&[0, 1], (-1.0, &[0, 1]), (-1.0, &[2, 3, 4])),
    (&[0, 2], (-1.0, &[0, 2]), (1.0, &[1, 3, 4])),
    (&[0, 3], (-1.0, &[0, 3]), (-1.0, &[1, 2, 4])),
    (&[0, 1, 2], (-1.0, &[3, 4]), (1.0, &[0, 1, 2])),
    (&[0, 1, 3], (1.0, &[2, 4]), (1.0, &[0, 1, 3])),
    (&[0, 2, 3], (-1.0, &[1, 4]), (1.0, &[0, 2, 3])),
    (&[1, 2, 3], (-1.0, &[0, 4]), (1.0, &[1, 2, 3])),
    (&[0, 1, 2, 3], (1.0, &[0, 1, 2, 3]), (-1.0, &[4])),
];

// Derived from the kind C generator images; E01234 lands on -i here.
const KIND_C: [Row; 16] = [
    (&[], (1.0, &[]), (-1.0, &[0, 1, 2, 3, 4])),
    (&[0], (-1.0, &[1, 2, 3, 4]), (1.0, &[0])),
    (&[1], (-1.0, &[2, 3, 4]), (-1.0, &[0, 1])),
    (&[2], (1.0, &[1, 3, 4]), (-1.0, &[0, 2])),
    (&[3], (-1.0, &[1, 2, 4]), (-1.0, &[0, 3])),
    (&[1, 2], (-1.0, &[1, 2]), (-1.0, &[0, 3, 4])),
    (&[1, 3], (-1.0, &[1, 3]), (1.0, &[0, 2, 4])),
    (&[2, 3], (-1.0, &[2, 3]), (-1.0, &[0, 1, 4])),
    (&[0, 1], (-1.0, &[1]), (-1.0, &[0, 2, 3, 4])),
    (&[0, 2], (-1.0, &[2]), (1.0, &[0, 1, 3, 4])),
    (&[0, 3], (-1.0, &[3]), (-1.0, &[0, 1, 2, 4])),
    (&[0, 1, 2], (-1.0, &[3, 4]), (-1.0, &[0, 1, 2])),
    (&[0, 1, 3], (1.0, &[2, 4]), (-1.0, &[0, 1, 3])),
    (&[0, 2, 3], (-1.0, &[1, 4]), (-1.0, &[0, 2, 3])),
    (&[1, 2, 3], (-1.0, &[4]), (1.0, &[0, 1, 2, 3])),
    (&[0, 1, 2, 3], (1.0, &[1, 2, 3]), (-1.0, &[0, 4])),
];

/// Linear dictionary between the `H` coefficients of a Cl(4,1) element
/// (`Z = H + H^A E_A + …`) and the `B` coefficients of its image
/// (`B + B^μ γ_μ + …`).
#[derive(Clone, Debug, Serialize)]
pub struct CoeffDict {
    pub kind: IsoKind,
    rows: Vec<DictRow>,
}

#[derive(Clone, Debug, Serialize)]
struct DictRow {
    b_labels: &'static [u8],
    re: HTerm,
    im: HTerm,
}

pub fn coeff_dict(kind: IsoKind) -> CoeffDict {
    let table = match kind {
        IsoKind::A => &KIND_A,
        IsoKind::B => &KIND_B,
        IsoKind::C => &KIND_C,
    };
    CoeffDict { kind, rows: table.iter().map(|&(b_labels, re, im)| DictRow { b_labels, re, im }).collect() }
}

impl CoeffDict {
    /// B coefficients of the image of `z`, as an element of ℂ⊗Cl(1,3).
    pub fn apply(&self, z: &Multivector) -> Result<Multivector> {
        if z.sig() != Signature::CL41 {
            return Err(Error::WrongAlgebra { expected: Signature::CL41, found: z.sig() });
        }
        let h = |labels: &[u8]| Algebra::Cl41.coeff(z, labels);
        let mut out = Multivector::zero(Signature::CL13);
        for row in &self.rows {
            let value = h(row.re.1) * row.re.0 + c64(0.0, 1.0) * h(row.im.1) * row.im.0;
            let (mask, sign) = Algebra::Cl13.blade_mask(row.b_labels);
            out.set_coeff(mask, value * sign);
        }
        Ok(out)
    }

    /// The real Cl(4,1) element whose B coefficients are those of `b`.
    pub fn invert(&self, b: &Multivector) -> Result<Multivector> {
        if b.sig() != Signature::CL13 {
            return Err(Error::WrongAlgebra { expected: Signature::CL13, found: b.sig() });
        }
        let mut out = Multivector::zero(Signature::CL41);
        for row in &self.rows {
            let bc = Algebra::Cl13.coeff(b, row.b_labels);
            for (labels, value) in [(row.re.1, bc.re * row.re.0), (row.im.1, bc.im * row.im.0)] {
                let (mask, sign) = Algebra::Cl41.blade_mask(labels);
                out.set_coeff(mask, value * sign);
            }
        }
        Ok(out)
    }

    /// Every H label occurs exactly once, which makes the map a bijection.
    pub fn is_bijective(&self) -> bool {
        let mut seen = [0usize; 32];
        for row in &self.rows {
            for labels in [row.re.1, row.im.1] {
                seen[Algebra::Cl41.blade_mask(labels).0] += 1;
            }
        }
        seen.iter().all(|&n| n == 1)
    }
}
