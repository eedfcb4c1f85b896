use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 6;

/// Metric signature `(p, q)`: generators `0..p` square to +1, `p..p+q` to -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub const CL30: Signature = Signature { p: 3, q: 0 };
    pub const CL13: Signature = Signature { p: 1, q: 3 };
    pub const CL41: Signature = Signature { p: 4, q: 1 };
    pub const CL24: Signature = Signature { p: 2, q: 4 };

    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_GENERATORS {
            return Err(Error::TooManyGenerators { p, q });
        }
        Ok(Signature { p: p as u8, q: q as u8 })
    }

    pub const fn p(self) -> usize {
        self.p as usize
    }

    pub const fn q(self) -> usize {
        self.q as usize
    }

    /// Number of generators.
    pub const fn n(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of blades, `2^n`.
    pub const fn dim(self) -> usize {
        1 << self.n()
    }

    /// Bitmask of the generators that square to -1.
    pub const fn negative_mask(self) -> usize {
        ((1 << self.n()) - 1) & !((1 << self.p()) - 1)
    }

    pub fn square(self, generator: usize) -> f64 {
        if generator < self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Sign `s` with `e_a e_b = s e_(a xor b)` for canonical blades `a`, `b`.
    pub fn blade_sign(self, a: usize, b: usize) -> f64 {
        let swaps = reorder_parity(a, b);
        let negatives = (a & b & self.negative_mask()).count_ones();
        if (swaps + negatives).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Number of transpositions needed to bring `e_a e_b` into ascending order.
fn reorder_parity(a: usize, b: usize) -> u32 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps
}

/// Grade of a canonical blade.
pub fn grade_of(mask: usize) -> usize {
    mask.count_ones() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_seven_generators() {
        assert!(Signature::new(4, 3).is_err());
        assert_eq!(Signature::new(2, 4).unwrap(), Signature::CL24);
    }

    #[test]
    fn generator_squares_follow_p() {
        let s = Signature::CL41;
        assert_eq!(s.blade_sign(0b1, 0b1), 1.0);
        assert_eq!(s.blade_sign(0b10000, 0b10000), -1.0);
    }

    #[test]
    fn swap_parity() {
        let s = Signature::CL30;
        // e2 e1 = -e12
        assert_eq!(s.blade_sign(0b10, 0b01), -1.0);
        assert_eq!(s.blade_sign(0b01, 0b10), 1.0);
        // e12 e12 = -1
        assert_eq!(s.blade_sign(0b11, 0b11), -1.0);
    }
}
