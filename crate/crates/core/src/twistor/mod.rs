//! Twistors as elements of a minimal left ideal of ℂ⊗Cl(1,3), reached from
//! Cl(4,1) paravectors through the kind C identification.

use std::sync::OnceLock;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::conformal::{kappa_lift, Paravector, Paravector41};
use crate::error::{Error, Result};
use crate::ga::{gamma5, sample_mv, Algebra, Multivector, Signature};
use crate::iso::{iso_forward, IsoKind};
use crate::linalg::{c64, from_rows, max_abs_diff, pauli, ComplexMatrix, I, ONE, ZERO};
use crate::reps::{dirac_idempotents, BladeImages, DiracKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chirality {
    L,
    R,
}

/// `P_L = ½(1 - iγ5)`, `P_R = ½(1 + iγ5)`.
pub fn projector(chi: Chirality) -> Multivector {
    let sign = match chi {
        Chirality::L => -1.0,
        Chirality::R => 1.0,
    };
    (Multivector::one(Signature::CL13) + gamma5().scale(c64(0.0, sign))).scale(0.5)
}

/// `[[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]]`.
pub fn x_matrix(x: &Paravector) -> ComplexMatrix {
    let [x0, x1, x2, x3] = x.components();
    from_rows(&[[c64(x0 + x3, 0.0), c64(x1, x2)], [c64(x1, -x2), c64(x0 - x3, 0.0)]])
}

/// Chiral representation with reflected space components,
/// `γ0 = [[0, 1], [1, 0]]`, `γk = [[0, A_k], [-A_k, 0]]`, `A = (σ1, -σ2, σ3)`.
fn keller_images() -> &'static BladeImages {
    static IMAGES: OnceLock<BladeImages> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let block = |upper: &ComplexMatrix, lower: &ComplexMatrix| {
            let mut m = ComplexMatrix::zeros(4, 4);
            m.view_mut((0, 2), (2, 2)).copy_from(upper);
            m.view_mut((2, 0), (2, 2)).copy_from(lower);
            m
        };
        let id = ComplexMatrix::identity(2, 2);
        let a = [pauli(1), -pauli(2), pauli(3)];
        let mut gens = vec![block(&id, &id)];
        gens.extend(a.iter().map(|ak| block(ak, &-ak)));
        BladeImages::from_generators(Signature::CL13, &gens)
    })
}

/// The extractor used to read twistor components: the reflected chiral
/// representation applied after the grade involution.
pub fn keller_rep(a: &Multivector) -> Result<ComplexMatrix> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongAlgebra { expected: Signature::CL13, found: a.sig() });
    }
    Ok(keller_images().apply(&a.grade_involution()))
}

pub fn keller_unrep(m: &ComplexMatrix) -> Multivector {
    keller_images().unapply(m).grade_involution()
}

/// Column of the extractor image that carries the ideal.
const IDEAL_COLUMN: usize = 1;

fn column(m: &ComplexMatrix) -> [Complex64; 4] {
    std::array::from_fn(|r| m[(r, IDEAL_COLUMN)])
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WeylSpinor {
    pub xi: [Complex64; 2],
}

impl WeylSpinor {
    pub fn new(xi1: Complex64, xi2: Complex64) -> Self {
        WeylSpinor { xi: [xi1, xi2] }
    }

    /// From `re1,im1,re2,im2`.
    pub fn from_slice(v: &[f64]) -> Result<Self> {
        match v {
            &[r1, i1, r2, i2] => Ok(WeylSpinor::new(c64(r1, i1), c64(r2, i2))),
            _ => Err(Error::InvalidArgument(format!("a Weyl spinor has 4 real components, got {}", v.len()))),
        }
    }
}

/// Where an ideal twistor came from; needed for incidence.
#[derive(Clone, Debug, Serialize)]
pub struct IdealSource {
    pub lift: Paravector41,
    pub u: Multivector,
}

#[derive(Clone, Debug, Serialize)]
pub struct Twistor {
    pub components: [Complex64; 4],
    pub x: Paravector,
    pub xi: WeylSpinor,
    /// The ideal element in ℂ⊗Cl(1,3).
    #[serde(skip)]
    pub element: Multivector,
    #[serde(skip)]
    pub source: Option<IdealSource>,
}

/// `(i x ξ, ξ)` with `x` the Hermitian matrix of the point.
pub fn penrose_form(x: &Paravector, xi: &WeylSpinor) -> [Complex64; 4] {
    let upper = x_matrix(x) * nalgebra::DVector::from_column_slice(&xi.xi) * I;
    [upper[0], upper[1], xi.xi[0], xi.xi[1]]
}

pub fn penrose_residual(t: &Twistor) -> f64 {
    let expect = penrose_form(&t.x, &t.xi);
    t.components.iter().zip(expect).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// `x^μ γ_μ`.
pub fn spacetime_vector(x: &Paravector) -> Multivector {
    let mut v = Multivector::zero(Signature::CL13);
    for (mu, c) in x.components().into_iter().enumerate() {
        v += &Algebra::Cl13.generator(mu as u8).scale(c);
    }
    v
}

/// `Π` whose extractor image has `(0, 0, ξ1, ξ2)` in the ideal column and zeros elsewhere.
pub fn chiral_spinor(xi: &WeylSpinor) -> Multivector {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(2, IDEAL_COLUMN)] = xi.xi[0];
    m[(3, IDEAL_COLUMN)] = xi.xi[1];
    keller_unrep(&m)
}

/// `η = (1 + γ5 x) Π`.
pub fn reference_twistor(x: &Paravector, xi: &WeylSpinor) -> Twistor {
    let pi = chiral_spinor(xi);
    let factor = Multivector::one(Signature::CL13) + &gamma5() * &spacetime_vector(x);
    let element = &factor * &pi;
    let components = column(&keller_images().apply(&element.grade_involution()));
    Twistor { components, x: *x, xi: *xi, element, source: None }
}

/// Residuals of the relations along the ideal construction.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct IdealReport {
    /// `χ P_L - (μ + γ5 x) P_L`.
    pub fern: f64,
    /// `E4 Π + i γ0 Π`.
    pub e4_on_pi: f64,
    /// `P_L Π - Π`.
    pub chirality: f64,
}

/// `T = χ P_L U f` with `χ = X E4`, all carried over by the kind C identification,
/// and `f` the first chiral primitive idempotent.
pub fn twistor_from_ideal(lift: &Paravector41, u: &Multivector) -> Result<(Twistor, IdealReport)> {
    if u.sig() != Signature::CL41 {
        return Err(Error::WrongAlgebra { expected: Signature::CL41, found: u.sig() });
    }
    let e4 = Algebra::Cl41.generator(4);
    let chi = iso_forward(&(&lift.to_mv() * &e4), IsoKind::C)?;
    let u_d = iso_forward(u, IsoKind::C)?;
    let f = &dirac_idempotents(DiracKind::Weyl).p[0];
    let p_l = projector(Chirality::L);
    let pi = &(&p_l * &u_d) * f;
    let element = &chi * &pi;

    let x = lift.chart_point();
    let fern_rhs = &(Multivector::scalar(Signature::CL13, lift.mu()) + &gamma5() * &spacetime_vector(&x)) * &p_l;
    let e4_d = iso_forward(&e4, IsoKind::C)?;
    let report = IdealReport {
        fern: (&chi * &p_l).dist(&fern_rhs),
        e4_on_pi: (&(&e4_d * &pi) + &(&Algebra::Cl13.generator(0) * &pi).scale(I)).max_norm(),
        chirality: (&p_l * &pi).dist(&pi),
    };

    let pi_column = column(&keller_images().apply(&pi.grade_involution()));
    let xi = WeylSpinor::new(pi_column[2], pi_column[3]);
    let components = column(&keller_images().apply(&element.grade_involution()));
    let source = IdealSource { lift: *lift, u: u.clone() };
    Ok((Twistor { components, x, xi, element, source: Some(source) }, report))
}

/// `J = conj(X E4 U) · X' E4 U'` in Cl(4,1).
pub fn incidence(t1: &Twistor, t2: &Twistor) -> Result<Multivector> {
    let (s1, s2) = match (&t1.source, &t2.source) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::MissingProvenance),
    };
    let e4 = Algebra::Cl41.generator(4);
    let left = &(&s1.lift.to_mv() * &e4) * &s1.u;
    let right = &(&s2.lift.to_mv() * &e4) * &s2.u;
    Ok(&left.conjugation() * &right)
}

/// Incidence norms of the fixed twistor at `x` against twistors at each of `xs`.
pub fn robinson_scan(x: &Paravector, xs: &[Paravector], u: &Multivector) -> Result<Vec<(Paravector, f64)>> {
    let (fixed, _) = twistor_from_ideal(&kappa_lift(x), u)?;
    xs.iter()
        .map(|xp| {
            let (moving, _) = twistor_from_ideal(&kappa_lift(xp), u)?;
            Ok((*xp, incidence(&fixed, &moving)?.max_norm()))
        })
        .collect()
}

/// Random real Cl(4,1) element whose ideal spinor is nonzero.
pub fn sample_ideal_generator<R: Rng + ?Sized>(rng: &mut R) -> Multivector {
    loop {
        let u = sample_mv(rng, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        let pi = &(&projector(Chirality::L) * &iso_forward(&u, IsoKind::C).expect("Cl(4,1)"))
            * &dirac_idempotents(DiracKind::Weyl).p[0];
        if pi.max_norm() > 1e-3 {
            return u;
        }
    }
}

/// Largest residual of `P² = P`, `P_L + P_R = 1`, `P_L P_R = 0`.
pub fn projector_residual() -> f64 {
    let (l, r) = (projector(Chirality::L), projector(Chirality::R));
    let one = Multivector::one(Signature::CL13);
    [(&l * &l).dist(&l), (&r * &r).dist(&r), (&l + &r).dist(&one), (&l * &r).max_norm()].into_iter().fold(0.0, f64::max)
}

/// In the Weyl representation, `P_L` keeps the lower two-spinor of a Dirac column.
pub fn weyl_projection_residual(column: [Complex64; 4]) -> f64 {
    let p = crate::reps::dirac_rep(&projector(Chirality::L), DiracKind::Weyl).expect("Cl(1,3) input");
    let out = p * nalgebra::DVector::from_column_slice(&column);
    let expect = [ZERO, ZERO, column[2], column[3]];
    out.iter().zip(expect).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// The extractor sends `γ0` to `-[[0, 1], [1, 0]]` because of the grade involution.
pub fn keller_generator_residual() -> f64 {
    let swap = from_rows(&[
        [ZERO, ZERO, ONE, ZERO],
        [ZERO, ZERO, ZERO, ONE],
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ONE, ZERO, ZERO],
    ]);
    let got = keller_rep(&Algebra::Cl13.generator(0)).expect("Cl(1,3) input");
    max_abs_diff(&got, &-swap)
}
