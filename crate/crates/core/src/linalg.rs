//! Small dense complex matrices built on nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Row/column complex matrix used as a representation target.
pub type ComplexMatrix = DMatrix<Complex64>;

pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const ZERO: Complex64 = c64(0.0, 0.0);
pub const ONE: Complex64 = c64(1.0, 0.0);
pub const I: Complex64 = c64(0.0, 1.0);

pub fn identity(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n, n)
}

/// Build from nested rows. Panics on ragged input.
pub fn from_rows<const C: usize>(rows: &[[Complex64; C]]) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows.len(), C, |r, c| rows[r][c])
}

pub fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Ratio of extreme singular values; infinite for an exactly singular matrix.
pub fn condition_number(m: &ComplexMatrix) -> f64 {
    let sv = m.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

pub fn determinant(m: &ComplexMatrix) -> Complex64 {
    m.clone().lu().determinant()
}

/// Entrywise complex conjugate.
pub fn conj(m: &ComplexMatrix) -> ComplexMatrix {
    m.map(|z| z.conj())
}

/// `det(m) m⁻¹` for a 2×2 block: [[d,-b],[-c,a]].
pub fn adjugate2(m: &ComplexMatrix) -> ComplexMatrix {
    from_rows(&[[m[(1, 1)], -m[(0, 1)]], [-m[(1, 0)], m[(0, 0)]]])
}

/// Cofactor matrix of a 2×2 block: [[d,-c],[-b,a]].
pub fn cofactor2(m: &ComplexMatrix) -> ComplexMatrix {
    from_rows(&[[m[(1, 1)], -m[(1, 0)]], [-m[(0, 1)], m[(0, 0)]]])
}

/// The four 2×2 blocks `[[φ1, φ2], [φ3, φ4]]` of a 4×4 matrix.
pub fn blocks(m: &ComplexMatrix) -> [ComplexMatrix; 4] {
    assert_eq!(m.shape(), (4, 4));
    let b = |r: usize, c: usize| m.view((r, c), (2, 2)).into_owned();
    [b(0, 0), b(0, 2), b(2, 0), b(2, 2)]
}

/// Inverse of [`blocks`].
pub fn from_blocks(b: [ComplexMatrix; 4]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (k, (r, c)) in [(0, 0), (0, 2), (2, 0), (2, 2)].into_iter().enumerate() {
        m.view_mut((r, c), (2, 2)).copy_from(&b[k]);
    }
    m
}

pub fn pauli(k: usize) -> ComplexMatrix {
    match k {
        1 => from_rows(&[[ZERO, ONE], [ONE, ZERO]]),
        2 => from_rows(&[[ZERO, -I], [I, ZERO]]),
        3 => from_rows(&[[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("Pauli index {k} outside 1..=3"),
    }
}

/// Real 2n-vector `[re; im]` of a complex vector.
pub fn realify(v: &[Complex64]) -> Vec<f64> {
    v.iter().map(|z| z.re).chain(v.iter().map(|z| z.im)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjugate_is_det_times_inverse() {
        let m = from_rows(&[[c64(1.0, 2.0), c64(0.5, 0.0)], [c64(-1.0, 0.0), c64(3.0, -1.0)]]);
        let lhs = adjugate2(&m);
        let rhs = m.clone().try_inverse().unwrap() * determinant(&m);
        assert!(max_abs_diff(&lhs, &rhs) < 1e-14);
    }

    #[test]
    fn blocks_round_trip() {
        let m = ComplexMatrix::from_fn(4, 4, |r, c| c64(r as f64, c as f64));
        assert_eq!(from_blocks(blocks(&m)), m);
    }

    #[test]
    fn pauli_algebra() {
        let p = pauli(1) * pauli(2);
        assert!(max_abs_diff(&p, &(pauli(3) * I)) < 1e-15);
        assert!(condition_number(&ComplexMatrix::zeros(2, 2)).is_infinite());
    }
}
