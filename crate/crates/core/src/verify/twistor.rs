use rand::Rng;

use super::{worst, Recorder, SuiteRng};
use crate::conformal::{kappa_lift, Paravector, Paravector41};
use crate::linalg::{c64, determinant};
use crate::twistor::{
    incidence, keller_generator_residual, penrose_residual, projector_residual, reference_twistor, robinson_scan,
    sample_ideal_generator, twistor_from_ideal, weyl_projection_residual, x_matrix,
};

const SAMPLES: usize = 100;
const TOL: f64 = 1e-12;

fn uniform(draw: &mut SuiteRng) -> f64 {
    draw.gen_range(-1.0..=1.0)
}

fn point(draw: &mut SuiteRng) -> Paravector {
    Paravector::new(uniform(draw), std::array::from_fn(|_| uniform(draw)))
}

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    rec.exact("chiral projectors", projector_residual());
    let columns = worst((0..SAMPLES).map(|_| {
        let column = std::array::from_fn(|_| c64(uniform(draw), uniform(draw)));
        Ok(weyl_projection_residual(column))
    }));
    rec.exact("left projector keeps the lower Weyl spinor", columns);
    rec.exact("extractor image of gamma0", keller_generator_residual());

    let det = worst((0..SAMPLES).map(|_| {
        let x = point(draw);
        Ok((determinant(&x_matrix(&x)) - c64(x.norm2(), 0.0)).norm())
    }));
    rec.at_most("det of the point matrix is x.x", det, TOL);

    let (mut two_path, mut penrose, mut fern, mut e4, mut chirality, mut self_incidence) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let x = point(draw);
        let u = sample_ideal_generator(draw);
        let v = sample_ideal_generator(draw);
        let Ok((t, report)) = twistor_from_ideal(&kappa_lift(&x), &u) else {
            two_path = f64::INFINITY;
            continue;
        };
        let reference = reference_twistor(&x, &t.xi);
        two_path = two_path.max(t.element.dist(&reference.element));
        penrose = penrose.max(penrose_residual(&t));
        fern = fern.max(report.fern);
        e4 = e4.max(report.e4_on_pi);
        chirality = chirality.max(report.chirality);
        let other = twistor_from_ideal(&kappa_lift(&x), &v).map(|(t2, _)| t2);
        let j = [incidence(&t, &t), other.and_then(|t2| incidence(&t, &t2))];
        self_incidence = self_incidence.max(worst(j.map(|r| r.map(|m| m.max_norm()))));
    }
    rec.at_most("ideal twistor equals (1 + gamma5 x) Pi", two_path, TOL);
    rec.at_most("Penrose form (i x xi, xi)", penrose, TOL);
    rec.at_most("fern identity", fern, TOL);
    rec.at_most("E4 acts on Pi as -i gamma0", e4, TOL);
    rec.at_most("Pi is left-handed", chirality, TOL);
    rec.at_most("incidence vanishes at the same point", self_incidence, TOL);

    let off_chart = worst((0..SAMPLES / 4).map(|_| {
        let lift = Paravector41 { alpha5: uniform(draw), alpha: std::array::from_fn(|_| uniform(draw)) };
        Ok(twistor_from_ideal(&lift, &sample_ideal_generator(draw))?.1.fern)
    }));
    rec.at_most("fern identity off the null cone", off_chart, TOL);

    let robinson = worst((0..SAMPLES / 10).map(|_| {
        let x = point(draw);
        let u = sample_ideal_generator(draw);
        let mut xs: Vec<Paravector> = (0..5).map(|_| point(draw)).collect();
        xs.push(x);
        let scan = robinson_scan(&x, &xs, &u)?;
        let scaled = robinson_scan(&x, &xs, &u.scale(3.0))?;
        let quadratic =
            scan.iter().zip(&scaled).map(|((_, a), (_, b))| (b - 9.0 * a).abs() / b.max(1.0)).fold(0.0, f64::max);
        Ok(quadratic.max(scan.last().map_or(f64::INFINITY, |(_, j)| *j)))
    }));
    rec.at_most("incidence scan is quadratic in the ideal generator", robinson, TOL);
}
