use rand::Rng;

use super::{printed, worst, Recorder, SuiteRng};
use crate::ga::{all_grades, gamma5, sample_complex_mv, sample_mv, Algebra, Signature};
use crate::linalg::{c64, identity, max_abs_diff};
use crate::reps::{
    dirac_idempotents, dirac_rep, dirac_unrep, even_iso, even_iso_inverse, pauli_rep, quat_rep, verify_rep, DiracKind,
    RepKind,
};

const SAMPLES: usize = 100;
const LABELS: [u8; 4] = [0, 1, 2, 3];

fn kind_name(kind: DiracKind) -> &'static str {
    match kind {
        DiracKind::Standard => "standard",
        DiracKind::Weyl => "weyl",
    }
}

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    let pauli = worst(
        (1..=3u8)
            .zip(printed::pauli())
            .map(|(label, expected)| Ok(max_abs_diff(&pauli_rep(&Algebra::Cl30.generator(label))?, &expected))),
    );
    rec.exact("Pauli images match the printed table", pauli);

    let quat = worst(
        LABELS
            .into_iter()
            .zip(printed::quaternionic())
            .map(|(label, expected)| Ok(quat_rep(&Algebra::Cl13.generator(label))?.max_abs_diff(&expected))),
    );
    rec.exact("quaternionic images match the printed table", quat);

    for (kind, table) in [(DiracKind::Standard, printed::dirac_standard()), (DiracKind::Weyl, printed::dirac_weyl())] {
        let r =
            worst(LABELS.into_iter().zip(table).map(|(label, expected)| {
                Ok(max_abs_diff(&dirac_rep(&Algebra::Cl13.generator(label), kind)?, &expected))
            }));
        rec.exact(format!("Dirac {} images match the printed table", kind_name(kind)), r);
    }
    let g5 = dirac_rep(&gamma5(), DiracKind::Weyl).map(|m| max_abs_diff(&m, &printed::weyl_gamma5()));
    rec.exact("Weyl gamma5 matches the printed table", g5.unwrap_or(f64::INFINITY));

    for kind in [DiracKind::Standard, DiracKind::Weyl] {
        let r = worst(LABELS.iter().flat_map(|&mu| {
            LABELS.iter().map(move |&nu| {
                let gm = dirac_rep(&Algebra::Cl13.generator(mu), kind)?;
                let gn = dirac_rep(&Algebra::Cl13.generator(nu), kind)?;
                let eta = if mu != nu {
                    0.0
                } else if mu == 0 {
                    1.0
                } else {
                    -1.0
                };
                Ok(max_abs_diff(&(&gm * &gn + &gn * &gm), &(identity(4) * c64(2.0 * eta, 0.0))))
            })
        }));
        rec.exact(format!("Dirac {} images anticommute", kind_name(kind)), r);
    }

    for kind in RepKind::ALL {
        let report = verify_rep(kind, SAMPLES, draw.gen());
        rec.at_most(format!("homomorphism {kind:?}"), report.max(), 1e-10);
    }

    for kind in [DiracKind::Standard, DiracKind::Weyl] {
        let r = dirac_idempotents(kind).verify();
        let algebra = r.idempotent.max(r.orthogonal).max(r.resolution);
        rec.at_most(format!("idempotents {}", kind_name(kind)), algebra, 1e-13);
        rec.exact(format!("conjugator similarity {}", kind_name(kind)), r.similarity);
        rec.at_most(format!("matrix units {}", kind_name(kind)), r.matrix_units, 1e-13);
    }

    let blocks = worst((0..SAMPLES).map(|_| {
        let m = pauli_rep(&sample_mv(draw, Signature::CL30, &[0, 2]))?;
        Ok((m[(0, 0)] - m[(1, 1)].conj()).norm().max((m[(0, 1)] + m[(1, 0)].conj()).norm()))
    }));
    rec.at_most("even Pauli images have the SU(2) block form", blocks, 1e-12);

    let even = worst((0..SAMPLES).map(|_| {
        let a = sample_mv(draw, Signature::CL13, &[0, 2, 4]);
        let b = sample_mv(draw, Signature::CL13, &[0, 2, 4]);
        let hom = even_iso(&(&a * &b))?.dist(&(&even_iso(&a)? * &even_iso(&b)?));
        Ok(hom.max(even_iso_inverse(&even_iso(&a)?)?.dist(&a)))
    }));
    rec.at_most("even subalgebra map is an isomorphism", even, 1e-12);

    let round_trip = worst((0..SAMPLES).flat_map(|_| {
        let a = sample_complex_mv(draw, Signature::CL13, &all_grades(Signature::CL13));
        [DiracKind::Standard, DiracKind::Weyl].map(|kind| Ok(dirac_unrep(&dirac_rep(&a, kind)?, kind)?.dist(&a)))
    }));
    rec.at_most("Dirac representations invert", round_trip, 1e-12);
}
