//! Worked examples for each module, exercised through the public API.

use std::f64::consts::FRAC_PI_2;

use paravec::conformal::{
    act, chart_matrix, compactify, compose, kernel_elements, make_map, mobius_plane, project, quasi_sphere_eval,
    vahlen_conditions, CompactPoint, ConformalMap, Paravector, PlaneMap, QuasiSphere,
};
use paravec::ga::{bilinear_form, gamma5, group_check, Algebra, Group};
use paravec::iso::{coeff_dict, embed_cl24, generator_image, periodicity_split, su22_check, IsoKind, VahlenSplit};
use paravec::lie::{
    commutation_check, exp_generator, expected_bracket, generator, substitution_symmetry_check, Generator, Realization,
    Relabeling,
};
use paravec::linalg::{c64, from_rows, max_abs_diff, I, ONE, ZERO};
use paravec::reps::{dirac_idempotents, dirac_rep, even_iso, pauli_rep, pauli_unrep, verify_rep, DiracKind, RepKind};
use paravec::twistor::{reference_twistor, WeylSpinor};
use paravec::verify::printed;
use paravec::{Multivector, Signature};

fn e(labels: &[u8]) -> Multivector {
    Algebra::Cl30.blade(labels)
}

fn gamma(labels: &[u8]) -> Multivector {
    Algebra::Cl13.blade(labels)
}

#[test]
fn products_and_grades() {
    assert_eq!(&e(&[1]) * &e(&[1]), Multivector::one(Signature::CL30));
    assert!((&(&e(&[1]) * &e(&[2])) + &(&e(&[2]) * &e(&[1]))).is_zero(0.0));
    assert!(e(&[1]).wedge(&e(&[1])).unwrap().is_zero(0.0));
    assert_eq!(e(&[1]).contract_left(&e(&[1, 2])).unwrap(), e(&[2]));
    let mixed = &(&Multivector::one(Signature::CL30) + &e(&[1])) + &e(&[1, 2]);
    assert_eq!(mixed.grade_project(1).unwrap(), e(&[1]));
    assert_eq!(e(&[1, 2]).reversion(), -&e(&[1, 2]));
    assert_eq!(e(&[1]).grade_involution(), -&e(&[1]));
    // [γ01, γ12] = 2⟨γ01 γ12⟩₂ = -2 γ02
    let bracket = gamma(&[0, 1]).commutator(&gamma(&[1, 2])).unwrap();
    assert_eq!(bracket, gamma(&[0, 2]).scale(-2.0));
}

#[test]
fn bilinear_form_and_exponential() {
    assert_eq!(bilinear_form(&e(&[1]), &e(&[1])).unwrap(), ONE);
    assert_eq!(bilinear_form(&e(&[1]), &e(&[1, 2])).unwrap(), ZERO);
    assert_eq!(bilinear_form(&gamma(&[1, 2]), &gamma(&[1, 2])).unwrap(), ONE);
    let rotor = e(&[1, 2]).scale(FRAC_PI_2).exp().unwrap();
    assert!(rotor.dist(&e(&[1, 2])) < 1e-15);
    assert_eq!(e(&[1]).inverse().unwrap(), e(&[1]));
    let doubled = group_check(&Multivector::scalar(Signature::CL13, 2.0), Group::SpinPlus);
    assert!(!doubled.member);
    assert_eq!(doubled.residual, 3.0);
}

#[test]
fn representation_images() {
    assert_eq!(pauli_rep(&e(&[1])).unwrap(), printed::pauli()[0]);
    assert_eq!(pauli_rep(&e(&[1, 2])).unwrap(), from_rows(&[[I, ZERO], [ZERO, -I]]));
    assert!(pauli_unrep(&printed::pauli()[0]).unwrap().dist(&e(&[1])) < 1e-15);
    assert_eq!(even_iso(&gamma(&[1, 0])).unwrap(), e(&[1]));
    assert_eq!(dirac_rep(&gamma(&[0]), DiracKind::Standard).unwrap(), printed::dirac_standard()[0]);
    assert_eq!(dirac_rep(&gamma(&[0]), DiracKind::Weyl).unwrap(), printed::dirac_weyl()[0]);
    assert_eq!(dirac_rep(&gamma5(), DiracKind::Weyl).unwrap(), printed::weyl_gamma5());
    for kind in [RepKind::Pauli, RepKind::DiracStandard, RepKind::QuatCl13] {
        assert!(verify_rep(kind, 100, 42).max() <= 1e-10);
    }
}

#[test]
fn idempotents() {
    let set = dirac_idempotents(DiracKind::Standard);
    let p1 = (&(&Multivector::one(Signature::CL13) + &gamma(&[0]))
        * &(&Multivector::one(Signature::CL13) + &gamma(&[1, 2]).scale(I)))
        .scale(0.25);
    assert_eq!(set.p[0], p1);
    let e13 = gamma(&[1, 3]);
    assert_eq!(&(&e13 * &set.p[0]) * &e13.inverse().unwrap(), set.p[1]);
    let sum = set.p.iter().fold(Multivector::zero(Signature::CL13), |acc, p| &acc + p);
    assert_eq!(sum, Multivector::one(Signature::CL13));
}

#[test]
fn identifications() {
    assert_eq!(generator_image(IsoKind::A, 4), gamma(&[0, 1, 2, 3]).scale(-I));
    assert_eq!(generator_image(IsoKind::C, 1), gamma(&[1, 0]));
    let mut z = Multivector::zero(Signature::CL41);
    z.set_coeff(Algebra::Cl41.blade_mask(&[0, 4]).0, Algebra::Cl41.blade_mask(&[0, 4]).1);
    // B^0 is the γ0 coefficient
    let b = coeff_dict(IsoKind::A).apply(&z).unwrap();
    assert_eq!(b, gamma(&[0]));
    assert!(coeff_dict(IsoKind::A).apply(&Multivector::zero(Signature::CL41)).unwrap().is_zero(0.0));

    let split = periodicity_split(&Algebra::Cl41.generator(4)).unwrap();
    let zero = Multivector::zero(Signature::CL30);
    let one = Multivector::one(Signature::CL30);
    assert_eq!(split, VahlenSplit { a: zero.clone(), c: one.clone(), b: one, d: zero });

    assert_eq!(embed_cl24(&Multivector::one(Signature::CL41)).unwrap(), Algebra::Cl24.generator(5));
    assert_eq!(embed_cl24(&Algebra::Cl41.generator(0)).unwrap(), Algebra::Cl24.generator(0));
    assert!(su22_check(&Multivector::one(Signature::CL41)).unwrap().pass);
}

#[test]
fn compactification() {
    let x = Paravector::new(1.0, [2.0, 0.0, 0.0]);
    let p = compactify(&x);
    assert_eq!((p.lambda, p.mu), (-3.0, 1.0));
    let doubled = CompactPoint { x: x.scale(2.0), lambda: 4.0 * p.lambda, mu: 2.0 };
    assert_eq!(project(&doubled).unwrap(), x);
    assert!(project(&CompactPoint { mu: 0.0, ..p }).is_err());
    let origin = chart_matrix(&Paravector::default());
    assert_eq!(origin.b, Multivector::one(Signature::CL30));
    assert!(origin.a.is_zero(0.0) && origin.c.is_zero(0.0) && origin.d.is_zero(0.0));
}

#[test]
fn conformal_maps() {
    let h = Paravector::new(0.0, [1.0, 0.0, 0.0]);
    let translation = make_map(&ConformalMap::Translation(h)).unwrap();
    assert!(vahlen_conditions(&translation).all_pass());
    assert_eq!(act(&translation, &Paravector::default()).unwrap(), (h, 1.0));

    let dilation = make_map(&ConformalMap::Dilation(4.0)).unwrap();
    let (image, delta) = act(&dilation, &Paravector::new(1.0, [0.5, 0.0, 0.0])).unwrap();
    assert_eq!(image, Paravector::new(4.0, [2.0, 0.0, 0.0]));
    assert!((delta - 0.25).abs() < 1e-15);
    assert_eq!(make_map(&ConformalMap::Dilation(1.0)).unwrap(), VahlenSplit::identity());
    assert!(make_map(&ConformalMap::Dilation(0.0)).is_err());

    let inversion = make_map(&ConformalMap::Inversion).unwrap();
    assert_eq!(act(&inversion, &Paravector::new(1.0, [0.0; 3])).unwrap().0, Paravector::new(-1.0, [0.0; 3]));
    let square = compose(&inversion, &inversion);
    let x = Paravector::new(0.3, [0.1, -0.7, 0.2]);
    assert!(act(&square, &x).unwrap().0.dist(&x) < 1e-15);

    let k = Paravector::new(0.5, [0.0, 2.0, -1.0]);
    let sum = compose(&translation, &make_map(&ConformalMap::Translation(k)).unwrap());
    assert!(sum.dist(&make_map(&ConformalMap::Translation(h + k)).unwrap()) < 1e-12);

    for element in kernel_elements() {
        assert!(act(&element, &x).unwrap().0.dist(&x) < 1e-15);
    }
}

#[test]
fn counterexample_is_rejected() {
    let zero = Multivector::zero(Signature::CL30);
    let g = VahlenSplit { a: e(&[1, 2]), b: zero.clone(), c: zero, d: Multivector::one(Signature::CL30) };
    let report = vahlen_conditions(&g);
    assert!(!report.all_pass());
    assert!(!report.passed()[3] && !report.passed()[5]);
}

#[test]
fn planar_maps_and_quasi_spheres() {
    let z = c64(0.3, 0.4);
    assert_eq!(mobius_plane(&PlaneMap::IDENTITY, z).unwrap(), (z, 1.0));
    let shift = PlaneMap { c: c64(1.0, -2.0), ..PlaneMap::IDENTITY };
    assert_eq!(mobius_plane(&shift, z).unwrap().0, z + c64(1.0, -2.0));

    let plane = QuasiSphere::new(0.0, Paravector::new(1.0, [0.0, 2.0, 0.0]), 3.0).unwrap();
    assert!(plane.is_plane());
    let x = Paravector::new(2.0, [0.0, 1.0, 0.0]);
    assert_eq!(quasi_sphere_eval(&plane, &x), 2.0 - 2.0 + 3.0);
    assert_eq!(quasi_sphere_eval(&plane, &Paravector::default()), 3.0);
    assert!(QuasiSphere::new(0.0, Paravector::default(), 0.0).is_err());
}

#[test]
fn conformal_generators() {
    use Generator::*;
    assert_eq!(generator(D, Realization::DiracCl13), gamma5().scale(c64(0.0, 0.5)));
    let p0 = (&Algebra::Cl24.blade(&[0, 5]) + &Algebra::Cl24.blade(&[0, 4])).scale(c64(0.0, 0.5));
    assert_eq!(generator(P(0), Realization::Bivector24), p0);
    assert!(expected_bracket(P(0), P(1)).iter().all(|&c| c == 0.0));
    assert_eq!(expected_bracket(P(0), D)[P(0).index()], 1.0);
    assert_eq!(expected_bracket(P(0), K(0))[D.index()], 2.0);
    for r in Realization::ALL {
        assert!(commutation_check(r).residual <= 1e-12);
        assert!(substitution_symmetry_check(r, Relabeling::ConformalInversion).residual <= 1e-12);
        assert!(substitution_symmetry_check(r, Relabeling::Unsigned).violations > 0);
        let unit = exp_generator(&[0.0; 15], r).unwrap();
        assert_eq!(unit.membership, 0.0);
    }
}

#[test]
fn reference_twistors() {
    let xi = WeylSpinor::new(c64(0.6, -0.2), c64(1.5, 0.0));
    let at_origin = reference_twistor(&Paravector::default(), &xi);
    assert_eq!(at_origin.components[..2], [ZERO, ZERO]);
    assert_eq!(at_origin.components[2..], xi.xi);
    let unit = WeylSpinor::new(ONE, ZERO);
    let t = reference_twistor(&Paravector::new(1.0, [0.0; 3]), &unit);
    let upper = from_rows(&[[t.components[0]], [t.components[1]]]);
    assert!(max_abs_diff(&upper, &from_rows(&[[I], [ZERO]])) < 1e-15);
}
