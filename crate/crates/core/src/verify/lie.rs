use rand::Rng;

use super::{worst, Recorder, SuiteRng};
use crate::ga::{sample_mv, Signature};
use crate::lie::{
    commutation_check, dilation_path_residual, exp_generator, structure_constants, substitution_symmetry_check,
    Realization, Relabeling,
};

const SAMPLES: usize = 100;
const EXP_SAMPLES: usize = 20;
const TABLE_TOL: f64 = 1e-12;

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    for r in Realization::ALL {
        rec.at_most(format!("commutation table, {r:?}"), commutation_check(r).residual, TABLE_TOL);
    }

    let [a, b] = Realization::ALL.map(structure_constants);
    rec.at_most("brackets stay in the generator span", a.off_span.max(b.off_span), 1e-10);
    rec.at_most("structure constants agree across realizations", a.max_diff(&b), 1e-10);

    for r in Realization::ALL {
        let swapped = substitution_symmetry_check(r, Relabeling::ConformalInversion);
        rec.at_most(format!("substitution symmetry, {r:?}"), swapped.residual, TABLE_TOL);
        let unsigned = substitution_symmetry_check(r, Relabeling::Unsigned);
        rec.at_least(format!("unsigned relabeling breaks the table, {r:?}"), unsigned.residual, TABLE_TOL);
    }

    let mut bracket: f64 = 0.0;
    for _ in 0..SAMPLES {
        let b = sample_mv(draw, Signature::CL24, &[2]);
        let c = sample_mv(draw, Signature::CL24, &[2]);
        let two_grade2 = (&b * &c).grade_project(2).expect("grade 2 exists").scale(2.0);
        bracket = bracket.max(b.commutator(&c).expect("same algebra").dist(&two_grade2));
    }
    rec.at_most("bivector commutator is twice the grade-2 part", bracket, 1e-12);

    for r in Realization::ALL {
        let membership = worst((0..EXP_SAMPLES).map(|_| {
            let coeffs: [f64; 15] = std::array::from_fn(|_| draw.gen_range(-0.3..=0.3));
            Ok(exp_generator(&coeffs, r)?.membership)
        }));
        rec.at_most(format!("exponentials are group elements, {r:?}"), membership, 1e-8);

        let sig = match r {
            Realization::Bivector24 => Signature::CL24,
            Realization::DiracCl13 => Signature::CL13,
        };
        let path = worst((0..EXP_SAMPLES / 4).map(|_| dilation_path_residual(&sample_mv(draw, sig, &[1, 2]), r, 1e-5)));
        rec.at_most(format!("dilation flow derivative, {r:?}"), path, 1e-6);
    }
}
