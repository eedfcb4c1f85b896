use rand::Rng;

use super::{worst, Recorder, SuiteRng};
use crate::conformal::{rotation_element, Paravector};
use crate::ga::{
    all_grades, gamma5, group_check, sample_complex_mv, sample_mv, Algebra, Group, Multivector, Signature,
};

const SAMPLES: usize = 100;
const ALGEBRAS: [Algebra; 4] = [Algebra::Cl30, Algebra::Cl13, Algebra::Cl41, Algebra::Cl24];

fn name(a: Algebra) -> &'static str {
    match a {
        Algebra::Cl30 => "Cl30",
        Algebra::Cl13 | Algebra::DiracComplex => "Cl13",
        Algebra::Cl41 => "Cl41",
        Algebra::Cl24 => "Cl24",
    }
}

/// `g_i g_j + g_j g_i - 2 η_ij` over all label pairs.
fn generator_relations(a: Algebra) -> f64 {
    let labels = a.labels();
    let mut r: f64 = 0.0;
    for &i in labels {
        for &j in labels {
            let (gi, gj) = (a.generator(i), a.generator(j));
            let eta = if i == j { a.square(i).expect("labelled") } else { 0.0 };
            let lhs = &(&gi * &gj) + &(&gj * &gi);
            r = r.max(lhs.dist(&Multivector::scalar(a.signature(), 2.0 * eta)));
        }
    }
    r
}

/// Exponential series of `ad_B` applied to `v`.
fn exp_ad(b: &Multivector, v: &Multivector) -> Multivector {
    let mut term = v.clone();
    let mut sum = v.clone();
    for k in 1..60 {
        term = (&(b * &term) - &(&term * b)).scale(1.0 / k as f64);
        sum += &term;
        if term.max_norm() < 1e-18 {
            break;
        }
    }
    sum
}

fn invertible(draw: &mut SuiteRng, sig: Signature) -> (Multivector, Multivector) {
    loop {
        let a = sample_mv(draw, sig, &all_grades(sig));
        if let Ok(inv) = a.inverse() {
            return (a, inv);
        }
    }
}

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    for a in ALGEBRAS {
        rec.exact(format!("generator relations {}", name(a)), generator_relations(a));
    }
    let g5 = gamma5();
    rec.exact("gamma5 squares to -1", (&g5 * &g5).dist(&Multivector::scalar(Signature::CL13, -1.0)));
    let anti = (0..4u8)
        .map(|mu| {
            let g = Algebra::Cl13.generator(mu);
            (&(&g5 * &g) + &(&g * &g5)).max_norm()
        })
        .fold(0.0, f64::max);
    rec.exact("gamma5 anticommutes with gamma_mu", anti);

    for a in ALGEBRAS {
        let sig = a.signature();
        let grades = all_grades(sig);
        let (mut assoc, mut involutions): (f64, f64) = (0.0, 0.0);
        for _ in 0..SAMPLES {
            let x = sample_complex_mv(draw, sig, &grades);
            let y = sample_complex_mv(draw, sig, &grades);
            let z = sample_complex_mv(draw, sig, &grades);
            assoc = assoc.max((&(&x * &y) * &z).dist(&(&x * &(&y * &z))));
            let xy = &x * &y;
            involutions = involutions
                .max(xy.reversion().dist(&(&y.reversion() * &x.reversion())))
                .max(xy.grade_involution().dist(&(&x.grade_involution() * &y.grade_involution())))
                .max(x.conjugation().dist(&x.grade_involution().reversion()));
        }
        rec.at_most(format!("associativity {}", name(a)), assoc, 1e-12);
        rec.at_most(format!("involution laws {}", name(a)), involutions, 1e-12);
    }

    let mut imag: f64 = 0.0;
    for a in ALGEBRAS {
        let sig = a.signature();
        for _ in 0..SAMPLES / 4 {
            let x = sample_mv(draw, sig, &all_grades(sig));
            let y = sample_mv(draw, sig, &all_grades(sig));
            imag = imag.max((&x * &y).max_imag()).max(x.reversion().conjugation().max_imag());
        }
    }
    rec.at_most("real closure", imag, 1e-12);

    let mut split: f64 = 0.0;
    for a in ALGEBRAS {
        let sig = a.signature();
        for _ in 0..SAMPLES / 4 {
            let v = sample_complex_mv(draw, sig, &[1]);
            let b = sample_complex_mv(draw, sig, &all_grades(sig));
            let parts = &v.wedge(&b).expect("same algebra") + &v.contract_left(&b).expect("same algebra");
            split = split.max((&v * &b).dist(&parts));
        }
    }
    // the two sides add the same products in a different order
    rec.at_most("vector product splits into wedge and contraction", split, 1e-14);

    let (mut grades_bc, mut bracket): (f64, f64) = (0.0, 0.0);
    for _ in 0..SAMPLES {
        let b = sample_mv(draw, Signature::CL13, &[2]);
        let c = sample_mv(draw, Signature::CL13, &[2]);
        let bc = &b * &c;
        grades_bc = grades_bc.max(bc.residual_outside(&[0, 2, 4]));
        let two_grade2 = bc.grade_project(2).expect("grade 2 exists").scale(2.0);
        bracket = bracket.max(b.commutator(&c).expect("same algebra").dist(&two_grade2));
    }
    rec.at_most("bivector products have grades 0, 2, 4", grades_bc, 1e-12);
    rec.at_most("bivector commutator is twice the grade-2 part", bracket, 1e-12);

    let rotors = worst((0..SAMPLES).map(|_| {
        let r = sample_mv(draw, Signature::CL13, &[2]).exp()?;
        Ok((&r * &r.reversion()).dist(&Multivector::one(Signature::CL13)))
    }));
    rec.at_most("rotors satisfy R R~ = 1", rotors, 1e-9);

    let mut inverse: f64 = 0.0;
    for a in ALGEBRAS {
        let sig = a.signature();
        for _ in 0..SAMPLES / 4 {
            let (x, inv) = invertible(draw, sig);
            let one = Multivector::one(sig);
            inverse = inverse.max((&x * &inv).dist(&one)).max((&inv * &x).dist(&one));
        }
    }
    rec.at_most("inverse", inverse, 1e-10);

    let adjoint = worst((0..SAMPLES / 2).map(|_| {
        let b = sample_mv(draw, Signature::CL13, &[2]);
        let v = sample_mv(draw, Signature::CL13, &[1]);
        let r = b.exp()?;
        let ad = &(&r * &v) * &r.inverse()?;
        Ok(ad.dist(&exp_ad(&b, &v)))
    }));
    rec.at_most("Ad exp B equals exp ad B on vectors", adjoint, 1e-8);

    let twisted = worst((0..SAMPLES).map(|_| {
        let param: Vec<f64> = (0..6).map(|_| draw.gen_range(-1.0..=1.0)).collect();
        let g = rotation_element(&param)?;
        let x = Paravector::new(draw.gen_range(-1.0..=1.0), std::array::from_fn(|_| draw.gen_range(-1.0..=1.0)));
        Ok(g.twisted_adjoint(&x.to_mv())?.residual_outside(&[0, 1]))
    }));
    rec.at_most("twisted adjoint keeps paravectors", twisted, 1e-10);

    let spin = worst((0..SAMPLES / 4).map(|_| {
        let r = group_check(&sample_mv(draw, Signature::CL13, &[2]).exp()?, Group::SpinPlus);
        Ok(if r.member { r.residual.max(r.odd_residual) } else { f64::INFINITY })
    }));
    rec.at_most("exponentials of bivectors are in Spin+", spin, 1e-9);
    let doubled = group_check(&Multivector::scalar(Signature::CL13, 2.0), Group::SpinPlus);
    rec.exact("doubled identity misses by 3", (doubled.residual - 3.0).abs());

    let json = worst((0..SAMPLES).map(|k| {
        let sig = ALGEBRAS[k % ALGEBRAS.len()].signature();
        let x = sample_complex_mv(draw, sig, &all_grades(sig));
        Ok(Multivector::from_json(&x.to_json())?.dist(&x))
    }));
    rec.at_most("JSON round trip", json, 1e-14);
}
