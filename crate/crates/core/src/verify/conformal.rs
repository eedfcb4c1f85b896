use num_complex::Complex64;
use rand::Rng;

use super::{worst, Recorder, SuiteRng};
use crate::conformal::{
    act, chart_residual, compactify, compose, kappa_lift, kernel_elements, make_map, mobius_plane, mobius_sandwich,
    paravector_matrix, paravector_matrix_via_split, plane_chart, project, rotation_element, vahlen_conditions,
    ConformalMap, Paravector, Paravector41, VAHLEN_TOL,
};
use crate::error::Result;
use crate::ga::{Multivector, Signature};
use crate::iso::{periodicity_join, VahlenSplit};
use crate::linalg::{c64, max_abs, max_abs_diff};

const SAMPLES: usize = 100;
const KERNEL_POINTS: usize = 20;
/// Points closer than this to the light cone of the singular set are redrawn.
const NEAR_SINGULAR: f64 = 0.1;

fn uniform(draw: &mut SuiteRng) -> f64 {
    draw.gen_range(-1.0..=1.0)
}

fn point(draw: &mut SuiteRng) -> Paravector {
    Paravector::new(uniform(draw), std::array::from_fn(|_| uniform(draw)))
}

fn small_point(draw: &mut SuiteRng) -> Paravector {
    point(draw).scale(0.5)
}

fn random_map(draw: &mut SuiteRng, which: usize) -> ConformalMap {
    match which % 5 {
        0 => ConformalMap::Translation(point(draw)),
        1 => ConformalMap::Dilation(draw.gen_range(0.25..4.0)),
        2 => {
            let param: Vec<f64> = (0..6).map(|_| uniform(draw)).collect();
            ConformalMap::Rotation(rotation_element(&param).expect("six parameters"))
        }
        3 => ConformalMap::Inversion,
        _ => ConformalMap::Transvection(small_point(draw)),
    }
}

/// Largest component difference relative to the size of the expected point.
fn relative(got: &Paravector, expected: &Paravector) -> f64 {
    let size = expected.components().iter().fold(1.0f64, |m, c| m.max(c.abs()));
    got.dist(expected) / size
}

/// The explicit-map column: what each named map does to a point.
fn explicit(map: &ConformalMap, x: &Paravector) -> Result<Paravector> {
    let xv = x.to_mv();
    match map {
        ConformalMap::Translation(h) => Ok(*x + *h),
        ConformalMap::Dilation(rho) => Ok(x.scale(*rho)),
        ConformalMap::Rotation(g) => Paravector::from_mv(&(&(g * &xv) * &g.grade_involution().inverse()?)),
        ConformalMap::Inversion => Ok(x.conj().scale(-1.0 / x.norm2())),
        ConformalMap::Transvection(h) => {
            let den = &(&h.to_mv() * &xv) + &Multivector::one(Signature::CL30);
            Paravector::from_mv(&(&xv * &den.inverse()?))
        }
    }
}

/// Whether the denominator of the map is far enough from singular at `x`.
fn well_defined(map: &ConformalMap, x: &Paravector) -> bool {
    match map {
        ConformalMap::Inversion => x.norm2().abs() > NEAR_SINGULAR,
        ConformalMap::Transvection(h) => {
            let den = &(&h.to_mv() * &x.to_mv()) + &Multivector::one(Signature::CL30);
            (&den * &den.conjugation()).scalar_part().re.abs() > NEAR_SINGULAR
        }
        _ => true,
    }
}

fn defined_point(draw: &mut SuiteRng, map: &ConformalMap) -> Paravector {
    loop {
        let x = point(draw);
        if well_defined(map, &x) {
            return x;
        }
    }
}

fn map_name(map: &ConformalMap) -> &'static str {
    ConformalMap::NAMES[match map {
        ConformalMap::Translation(_) => 0,
        ConformalMap::Dilation(_) => 1,
        ConformalMap::Rotation(_) => 2,
        ConformalMap::Inversion => 3,
        ConformalMap::Transvection(_) => 4,
    }]
}

/// `(G 𝔟 G̃)(G 𝔟 G̃)‾` for the κ lift of `x`, relative to the size of the image.
fn klein_residual(g: &VahlenSplit, x: &Paravector) -> f64 {
    let big = periodicity_join(g);
    let image = &(&big * &kappa_lift(x).to_mv()) * &big.reversion();
    let size = image.max_norm().max(1.0);
    (&image * &image.conjugation()).max_norm() / (size * size)
}

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    let maps: Vec<ConformalMap> = (0..5).map(|k| random_map(draw, k)).collect();
    for map in &maps {
        let r = make_map(map).map(|g| vahlen_conditions(&g).residuals().into_iter().fold(0.0, f64::max));
        rec.try_at_most(format!("Vahlen conditions, {}", map_name(map)), r, VAHLEN_TOL);
    }

    let zero = Multivector::zero(Signature::CL30);
    let e12 = Multivector::blade(Signature::CL30, 0b011);
    let counter =
        vahlen_conditions(&VahlenSplit { a: e12, b: zero.clone(), c: zero, d: Multivector::one(Signature::CL30) });
    rec.at_least("bivector entry breaks the mixed sandwich condition", counter.sandwich_paravector, VAHLEN_TOL);
    rec.at_least("bivector entry breaks the pseudo-determinant", counter.pseudo_determinant, VAHLEN_TOL);

    for map in &maps {
        let g = make_map(map).expect("constructed above");
        let r = worst((0..SAMPLES).map(|_| {
            let x = defined_point(draw, map);
            Ok(relative(&act(&g, &x)?.0, &explicit(map, &x)?))
        }));
        rec.at_most(format!("explicit map, {}", map_name(map)), r, 1e-10);
    }
    let inversion = make_map(&ConformalMap::Inversion).expect("no parameters");
    let unit = worst((0..SAMPLES).map(|_| {
        // unit-norm points: x0² - |x|² = 1
        let v: [f64; 3] = std::array::from_fn(|_| uniform(draw));
        let x = Paravector::new((1.0 + v.iter().map(|c| c * c).sum::<f64>()).sqrt(), v);
        Ok(relative(&act(&inversion, &x)?.0, &x.conj().scale(-1.0)))
    }));
    rec.at_most("inversion is x -> -conj(x) on unit-norm points", unit, 1e-10);

    let (mut klein, mut chart): (f64, f64) = (0.0, 0.0);
    for k in 0..SAMPLES {
        let map = random_map(draw, k);
        let g = make_map(&map).expect("valid parameters");
        let x = defined_point(draw, &map);
        klein = klein.max(klein_residual(&g, &x));
        let scale = act(&g, &x)
            .map(|(xp, d)| xp.components().iter().fold(1.0f64, |m, c| m.max(c.abs())).powi(2) * d.abs().max(1.0));
        chart = chart.max(match (chart_residual(&g, &x), scale) {
            (Ok(r), Ok(s)) => r / s,
            _ => f64::INFINITY,
        });
    }
    rec.at_most("Klein absolute preserved", klein, 1e-9);
    rec.at_most("fraction formula agrees with the chart sandwich", chart, 1e-9);

    let kernel = worst(kernel_elements().iter().flat_map(|k| {
        let big = periodicity_join(k);
        let member = (&big * &big.conjugation()).dist(&Multivector::one(Signature::CL41));
        let points: Vec<Paravector> = (0..KERNEL_POINTS).map(|_| point(draw)).collect();
        points
            .into_iter()
            .map(move |x| Ok(act(k, &x)?.0.dist(&x)))
            .chain(std::iter::once(Ok(member)))
            .collect::<Vec<_>>()
    }));
    rec.at_most("kernel elements act as the identity", kernel, 1e-10);

    let (mut closure, mut composite): (f64, f64) = (0.0, 0.0);
    for k in 0..SAMPLES / 5 {
        let (m1, m2) = (random_map(draw, k), random_map(draw, k + 2));
        let (g1, g2) = (make_map(&m1).expect("valid"), make_map(&m2).expect("valid"));
        let g = compose(&g1, &g2);
        closure = closure.max(vahlen_conditions(&g).residuals().into_iter().fold(0.0, f64::max));
        let x = loop {
            let x = point(draw);
            if let Ok((mid, _)) = act(&g2, &x) {
                if well_defined(&m2, &x) && well_defined(&m1, &mid) {
                    break x;
                }
            }
        };
        let step = act(&g2, &x).and_then(|(mid, _)| act(&g1, &mid));
        composite = composite.max(match (act(&g, &x), step) {
            (Ok((a, _)), Ok((b, _))) => relative(&a, &b),
            _ => f64::INFINITY,
        });
    }
    rec.at_most("composition stays in the Vahlen group", closure, 1e-8);
    rec.at_most("composition acts as consecutive maps", composite, 1e-9);

    let plane = worst((0..SAMPLES).map(|_| {
        let mut c = || c64(uniform(draw), uniform(draw));
        let (a, b, cc) = (c() + c64(2.0, 0.0), c(), c());
        let m = crate::conformal::PlaneMap { a, b, c: cc, d: (Complex64::from(1.0) + b * cc) / a };
        let z = c();
        let (zp, omega) = mobius_plane(&m, z)?;
        let sandwich = mobius_sandwich(&m, z);
        let expected = plane_chart(zp) * c64(omega, 0.0);
        Ok(max_abs_diff(&sandwich, &expected) / max_abs(&expected).max(1.0))
    }));
    rec.at_most("planar sandwich matches the fraction", plane, 1e-10);

    let compact = worst((0..SAMPLES).map(|_| {
        let x = point(draw);
        let p = compactify(&x);
        Ok(p.klein_residual().abs().max(project(&p)?.dist(&x)))
    }));
    rec.exact("compactify then project", compact);

    let matrices = worst((0..SAMPLES).map(|_| {
        let b = Paravector41 { alpha5: uniform(draw), alpha: std::array::from_fn(|_| uniform(draw)) };
        Ok(paravector_matrix(&b).dist(&paravector_matrix_via_split(&b)))
    }));
    rec.at_most("paravector matrix agrees with the algebra split", matrices, 1e-12);
}
