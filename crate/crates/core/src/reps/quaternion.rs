use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// Real quaternion `q0 + q1 i + q2 j + q3 k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Quaternion { q0, q1, q2, q3 }
    }

    /// Quaternionic conjugate `q̄`.
    pub fn conj(self) -> Self {
        Quaternion::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(s * self.q0, s * self.q1, s * self.q2, s * self.q3)
    }

    pub fn norm(self) -> f64 {
        (self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3).sqrt()
    }

    /// Largest component modulus.
    pub fn max_abs(self) -> f64 {
        [self.q0, self.q1, self.q2, self.q3].iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 + o.q0, self.q1 + o.q1, self.q2 + o.q2, self.q3 + o.q3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        self + (-o)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

// i² = j² = k² = ijk = -1
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let (a, b) = (self, o);
        Quaternion::new(
            a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [(self.q0, ""), (self.q1, "i"), (self.q2, "j"), (self.q3, "k")]
            .iter()
            .filter(|(c, _)| *c != 0.0)
            .map(|(c, unit)| match (*c, *unit) {
                (c, "") => format!("{c}"),
                (1.0, u) => u.to_string(),
                (-1.0, u) => format!("-{u}"),
                (c, u) => format!("{c}{u}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}

/// 2×2 matrix over the quaternions, `[[q11, q12], [q21, q22]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct QuatMatrix2 {
    pub entries: [[Quaternion; 2]; 2],
}

impl QuatMatrix2 {
    pub const fn new(q11: Quaternion, q12: Quaternion, q21: Quaternion, q22: Quaternion) -> Self {
        QuatMatrix2 { entries: [[q11, q12], [q21, q22]] }
    }

    pub const fn identity() -> Self {
        Self::new(Quaternion::ONE, Quaternion::ZERO, Quaternion::ZERO, Quaternion::ONE)
    }

    pub fn get(&self, r: usize, c: usize) -> Quaternion {
        self.entries[r][c]
    }

    pub fn max_abs_diff(&self, other: &QuatMatrix2) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).max_abs());
            }
        }
        worst
    }

    pub fn scale(&self, s: f64) -> QuatMatrix2 {
        let e = self.entries;
        Self::new(e[0][0].scale(s), e[0][1].scale(s), e[1][0].scale(s), e[1][1].scale(s))
    }
}

impl Add for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn add(self, o: QuatMatrix2) -> QuatMatrix2 {
        let (a, b) = (self.entries, o.entries);
        Self::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl Mul for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn mul(self, o: QuatMatrix2) -> QuatMatrix2 {
        let (a, b) = (self.entries, o.entries);
        let entry = |r: usize, c: usize| a[r][0] * b[0][c] + a[r][1] * b[1][c];
        Self::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quaternion as Q;

    #[test]
    fn unit_table() {
        assert_eq!(Q::I * Q::I, -Q::ONE);
        assert_eq!(Q::J * Q::J, -Q::ONE);
        assert_eq!(Q::K * Q::K, -Q::ONE);
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::J * Q::I, -Q::K);
    }

    #[test]
    fn conjugate_reverses_products() {
        let a = Q::new(0.3, -1.0, 2.0, 0.5);
        let b = Q::new(-0.7, 0.1, 0.4, 1.5);
        assert!(((a * b).conj() - b.conj() * a.conj()).max_abs() < 1e-15);
        assert!(((a * a.conj()).q0 - a.norm().powi(2)).abs() < 1e-14);
    }

    #[test]
    fn display() {
        assert_eq!(Q::new(0.0, 0.0, -1.0, 0.0).to_string(), "-j");
        assert_eq!(Q::ZERO.to_string(), "0");
        assert_eq!(Q::new(1.0, 2.0, 0.0, -1.0).to_string(), "1+2i-k");
    }
}
