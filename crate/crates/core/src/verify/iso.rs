use rand::Rng;

use super::{worst, Recorder, SuiteRng};
use crate::conformal::{kappa_lift, Paravector};
use crate::ga::{all_grades, sample_complex_mv, sample_mv, Algebra, Multivector, Signature};
use crate::iso::{
    antiauto_matrix_check, coeff_dict, embed_cl24, generator_image, iso_backward, iso_forward, periodicity_join,
    periodicity_split, sample_dollar_pin, sp2c_check, su22_check, xi, xi_inverse, IsoKind, Which,
};

const SAMPLES: usize = 100;
const GROUP_SAMPLES: usize = 50;

fn real41(draw: &mut SuiteRng) -> Multivector {
    sample_mv(draw, Signature::CL41, &all_grades(Signature::CL41))
}

fn generator_relations(kind: IsoKind) -> f64 {
    let labels = Algebra::Cl41.labels();
    let mut r: f64 = 0.0;
    for &i in labels {
        for &j in labels {
            let (gi, gj) = (generator_image(kind, i), generator_image(kind, j));
            let eta = if i == j { Algebra::Cl41.square(i).expect("labelled") } else { 0.0 };
            r = r.max((&(&gi * &gj) + &(&gj * &gi)).dist(&Multivector::scalar(Signature::CL13, 2.0 * eta)));
        }
    }
    r
}

pub(super) fn run(rec: &mut Recorder, draw: &mut SuiteRng) {
    for kind in IsoKind::ALL {
        rec.exact(format!("generator images obey Cl41 relations, kind {kind:?}"), generator_relations(kind));

        let hom = worst((0..SAMPLES).map(|_| {
            let (a, b) = (real41(draw), real41(draw));
            Ok(iso_forward(&(&a * &b), kind)?.dist(&(&iso_forward(&a, kind)? * &iso_forward(&b, kind)?)))
        }));
        rec.at_most(format!("product preserving, kind {kind:?}"), hom, 1e-10);

        let bijection = worst((0..SAMPLES).map(|_| {
            let z = real41(draw);
            let b = sample_complex_mv(draw, Signature::CL13, &all_grades(Signature::CL13));
            let back = iso_backward(&iso_forward(&z, kind)?, kind)?.dist(&z);
            Ok(back.max(iso_forward(&iso_backward(&b, kind)?, kind)?.dist(&b)))
        }));
        rec.at_most(format!("bijective, kind {kind:?}"), bijection, 1e-12);

        let dict = coeff_dict(kind);
        rec.exact(
            format!("dictionary covers every blade once, kind {kind:?}"),
            if dict.is_bijective() { 0.0 } else { 1.0 },
        );
        let oracle = worst((0..SAMPLES).map(|_| {
            let z = real41(draw);
            let image = dict.apply(&z)?;
            Ok(image.dist(&iso_forward(&z, kind)?).max(dict.invert(&image)?.dist(&z)))
        }));
        rec.at_most(format!("dictionary matches the multivector map, kind {kind:?}"), oracle, 1e-12);
    }

    let samples: Vec<Multivector> = (0..SAMPLES).map(|_| real41(draw)).collect();
    for kind in [IsoKind::A, IsoKind::B] {
        for which in Which::ALL {
            let r = worst(samples.iter().map(|z| Ok(antiauto_matrix_check(z, which, kind)?.residual)));
            rec.at_most(format!("block formula {which:?}, kind {kind:?}"), r, 1e-10);
        }
    }

    let (mut sp, mut su): (f64, f64) = (0.0, 0.0);
    for _ in 0..GROUP_SAMPLES {
        let z = sample_dollar_pin(draw, 0.5);
        let worst_of = |r: crate::Result<crate::iso::MembershipReport>| {
            r.map(|m| m.algebra.max(m.form).max(m.det)).unwrap_or(f64::INFINITY)
        };
        sp = sp.max(worst_of(sp2c_check(&z)));
        su = su.max(worst_of(su22_check(&z)));
    }
    rec.at_most("kind A images satisfy the Sp(2,C) identity", sp, 1e-8);
    rec.at_most("kind B images lie in SU(2,2)", su, 1e-8);

    let split = worst((0..SAMPLES).map(|_| {
        let (a, b) = (real41(draw), real41(draw));
        let (sa, sb) = (periodicity_split(&a)?, periodicity_split(&b)?);
        let round = periodicity_join(&sa).dist(&a);
        let hom = periodicity_split(&(&a * &b))?.dist(&(&sa * &sb));
        let rev = periodicity_split(&a.reversion())?.dist(&sa.reversion());
        let conj = periodicity_split(&a.conjugation())?.dist(&sa.conjugation());
        Ok(round.max(hom).max(rev).max(conj))
    }));
    rec.at_most("2x2 split over Cl30 is an isomorphism", split, 1e-10);

    let xi_check = worst((0..SAMPLES).map(|_| {
        let (a, b) = (real41(draw), real41(draw));
        let hom = xi(&(&a * &b))?.dist(&(&xi(&a)? * &xi(&b)?));
        let back = xi_inverse(&xi(&a)?)?.dist(&a);
        Ok(hom.max(back).max(xi(&a)?.odd_part().max_norm()))
    }));
    rec.at_most("xi onto the even part of Cl24", xi_check, 1e-10);

    let null = worst((0..SAMPLES).map(|_| {
        let x = Paravector::new(draw.gen_range(-1.0..=1.0), std::array::from_fn(|_| draw.gen_range(-1.0..=1.0)));
        let lift = kappa_lift(&x).to_mv();
        let alpha = embed_cl24(&lift)?;
        let eps5 = Algebra::Cl24.generator(5);
        let back = xi_inverse(&(&alpha * &eps5))?.dist(&lift);
        Ok(back.max((&alpha * &alpha).max_norm()))
    }));
    rec.at_most("null lifts embed as null Cl24 vectors", null, 1e-12);
}
