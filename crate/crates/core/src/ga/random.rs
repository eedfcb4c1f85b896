use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::multivector::Multivector;
use super::signature::{grade_of, Signature};

/// Deterministic multivector with coefficients uniform in [-1, 1] on `grades`.
pub fn random_mv(seed: u64, sig: Signature, grades: &[usize]) -> Multivector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_mv(&mut rng, sig, grades)
}

/// As [`random_mv`] but drawing from a caller-held generator.
pub fn sample_mv<R: Rng + ?Sized>(rng: &mut R, sig: Signature, grades: &[usize]) -> Multivector {
    let mut mv = Multivector::zero(sig);
    for mask in 0..sig.dim() {
        if grades.contains(&grade_of(mask)) {
            mv.set_coeff(mask, rng.gen_range(-1.0..=1.0));
        }
    }
    mv
}

/// Complex coefficients, real and imaginary parts each uniform in [-1, 1].
pub fn sample_complex_mv<R: Rng + ?Sized>(rng: &mut R, sig: Signature, grades: &[usize]) -> Multivector {
    let mut mv = Multivector::zero(sig);
    for mask in 0..sig.dim() {
        if grades.contains(&grade_of(mask)) {
            mv.set_coeff(mask, Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)));
        }
    }
    mv
}

/// Every grade of `sig`.
pub fn all_grades(sig: Signature) -> Vec<usize> {
    (0..=sig.n()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grade_set_gives_zero() {
        assert!(random_mv(1, Signature::CL30, &[]).is_zero(0.0));
    }

    #[test]
    fn same_seed_same_value() {
        let a = random_mv(9, Signature::CL24, &all_grades(Signature::CL24));
        let b = random_mv(9, Signature::CL24, &all_grades(Signature::CL24));
        assert_eq!(a, b);
    }

    #[test]
    fn bivector_request_stays_in_grade_two() {
        let b = random_mv(7, Signature::CL13, &[2]);
        assert_eq!(b.grades_present(0.0), vec![2]);
        assert!(b.coeffs().iter().all(|c| c.re.abs() <= 1.0 && c.im == 0.0));
    }
}
