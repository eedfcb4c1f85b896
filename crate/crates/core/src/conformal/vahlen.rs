use rand::Rng;
use serde::Serialize;

use super::paravector::{chart_matrix, Paravector};
use crate::error::{Error, Result};
use crate::ga::{group_check, rng, Group, Multivector, Signature};
use crate::iso::VahlenSplit;

/// Pass threshold for each Vahlen condition.
pub const VAHLEN_TOL: f64 = 1e-9;
/// Paravectors drawn for the sandwich conditions.
pub const VAHLEN_SAMPLES: usize = 20;
const VAHLEN_SEED: u64 = 0x5ee_d0f7_a41e;

/// Residual of each Vahlen condition and whether it is within [`VAHLEN_TOL`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct VahlenReport {
    /// `a ā`, `b b̄`, `c c̄`, `d d̄` scalar.
    pub norms_real: f64,
    /// `a b̄`, `c d̄` paravectors.
    pub products_paravector: f64,
    /// `a v c̄ + c v̄ ā` and `b v d̄ + d v̄ b̄` scalar.
    pub sandwiches_real: f64,
    /// `a v d̄ + c v̄ b̄` paravector.
    pub sandwich_paravector: f64,
    /// `a c̃ = c ã`, `b d̃ = d b̃`.
    pub reversions_commute: f64,
    /// `a d̃ - c b̃ = 1`.
    pub pseudo_determinant: f64,
}

impl VahlenReport {
    pub fn residuals(&self) -> [f64; 6] {
        [
            self.norms_real,
            self.products_paravector,
            self.sandwiches_real,
            self.sandwich_paravector,
            self.reversions_commute,
            self.pseudo_determinant,
        ]
    }

    pub fn passed(&self) -> [bool; 6] {
        self.residuals().map(|r| r <= VAHLEN_TOL)
    }

    pub fn all_pass(&self) -> bool {
        self.passed().iter().all(|&p| p)
    }
}

fn random_paravector<R: Rng + ?Sized>(draw: &mut R) -> Multivector {
    Paravector::new(draw.gen_range(-1.0..=1.0), std::array::from_fn(|_| draw.gen_range(-1.0..=1.0))).to_mv()
}

pub fn vahlen_conditions(g: &VahlenSplit) -> VahlenReport {
    let VahlenSplit { a, b, c, d } = g;
    let bar = |x: &Multivector| x.conjugation();
    let rev = |x: &Multivector| x.reversion();
    let outside = |x: &Multivector, grades: &[usize]| x.residual_outside(grades);

    let norms_real = [a, b, c, d].iter().map(|x| outside(&(*x * &bar(x)), &[0])).fold(0.0, f64::max);
    let products_paravector = outside(&(a * &bar(b)), &[0, 1]).max(outside(&(c * &bar(d)), &[0, 1]));

    let mut draw = rng(VAHLEN_SEED);
    let (mut sandwiches_real, mut sandwich_paravector) = (0.0f64, 0.0f64);
    for _ in 0..VAHLEN_SAMPLES {
        let v = random_paravector(&mut draw);
        let vb = bar(&v);
        let first = &(&(a * &v) * &bar(c)) + &(&(c * &vb) * &bar(a));
        let second = &(&(b * &v) * &bar(d)) + &(&(d * &vb) * &bar(b));
        let mixed = &(&(a * &v) * &bar(d)) + &(&(c * &vb) * &bar(b));
        sandwiches_real = sandwiches_real.max(outside(&first, &[0])).max(outside(&second, &[0]));
        sandwich_paravector = sandwich_paravector.max(outside(&mixed, &[0, 1]));
    }

    let reversions_commute = (a * &rev(c)).dist(&(c * &rev(a))).max((b * &rev(d)).dist(&(d * &rev(b))));
    let det = &(a * &rev(d)) - &(c * &rev(b));
    let pseudo_determinant = det.dist(&Multivector::one(Signature::CL30));
    VahlenReport {
        norms_real,
        products_paravector,
        sandwiches_real,
        sandwich_paravector,
        reversions_commute,
        pseudo_determinant,
    }
}

/// `x' = (a x + c)(b x + d)⁻¹` with the weight `Δ = ⟨(b x + d)(b x + d)‾⟩₀`.
pub fn act(g: &VahlenSplit, x: &Paravector) -> Result<(Paravector, f64)> {
    let xv = x.to_mv();
    let num = &(&g.a * &xv) + &g.c;
    let den = &(&g.b * &xv) + &g.d;
    let norm = &den * &den.conjugation();
    let delta = norm.scalar_part().re;
    let scale = den.max_norm().max(1.0);
    let inv = if norm.residual_outside(&[0]) <= 1e-12 * scale * scale && delta.abs() > 1e-12 * scale * scale {
        den.conjugation().scale(1.0 / delta)
    } else {
        den.inverse().map_err(|_| Error::Undefined)?
    };
    Ok((Paravector::from_mv(&(&num * &inv))?, delta))
}

/// Residual of `g · chart(x) · g̃ = Δ · chart(x')`.
pub fn chart_residual(g: &VahlenSplit, x: &Paravector) -> Result<f64> {
    let (image, delta) = act(g, x)?;
    let lhs = &(g * &chart_matrix(x)) * &g.reversion();
    Ok(lhs.dist(&chart_matrix(&image).scale(delta)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "map", content = "param", rename_all = "lowercase")]
pub enum ConformalMap {
    Translation(Paravector),
    Dilation(f64),
    /// `g` in Cl(3,0) with `g ḡ = 1`.
    Rotation(Multivector),
    Inversion,
    Transvection(Paravector),
}

impl ConformalMap {
    pub const NAMES: [&'static str; 5] = ["translation", "dilation", "rotation", "inversion", "transvection"];

    /// Builds a map from its CLI name and numeric parameters.
    ///
    /// Rotations take `b1,b2,b3,r12,r13,r23` and exponentiate
    /// `b^i e_i + r^{ij} e_ij`.
    pub fn parse(name: &str, param: &[f64]) -> Result<Self> {
        match name {
            "translation" => Ok(ConformalMap::Translation(Paravector::from_slice(param)?)),
            "transvection" => Ok(ConformalMap::Transvection(Paravector::from_slice(param)?)),
            "dilation" => match param {
                &[rho] => Ok(ConformalMap::Dilation(rho)),
                _ => Err(Error::InvalidArgument("dilation takes one parameter".into())),
            },
            "inversion" if param.is_empty() => Ok(ConformalMap::Inversion),
            "inversion" => Err(Error::InvalidArgument("inversion takes no parameters".into())),
            "rotation" => Ok(ConformalMap::Rotation(rotation_element(param)?)),
            other => Err(Error::InvalidArgument(format!("unknown map `{other}`"))),
        }
    }
}

/// `exp(b^i e_i + r^{ij} e_ij)` from `[b1, b2, b3, r12, r13, r23]`.
pub fn rotation_element(param: &[f64]) -> Result<Multivector> {
    let &[b1, b2, b3, r12, r13, r23] = param else {
        return Err(Error::InvalidArgument(format!("rotation takes 6 parameters, got {}", param.len())));
    };
    let terms = [(0b001, b1), (0b010, b2), (0b100, b3), (0b011, r12), (0b101, r13), (0b110, r23)];
    let mut generator = Multivector::zero(Signature::CL30);
    for (mask, value) in terms {
        generator.set_coeff(mask, value);
    }
    generator.exp()
}

pub fn make_map(map: &ConformalMap) -> Result<VahlenSplit> {
    let one = Multivector::one(Signature::CL30);
    let zero = Multivector::zero(Signature::CL30);
    let g = match map {
        ConformalMap::Translation(h) => VahlenSplit { a: one.clone(), c: h.to_mv(), b: zero, d: one },
        ConformalMap::Dilation(rho) => {
            if rho.is_nan() || *rho <= 0.0 {
                return Err(Error::InvalidArgument(format!("dilation factor must be positive, got {rho}")));
            }
            let r = rho.sqrt();
            VahlenSplit { a: one.scale(r), c: zero.clone(), b: zero, d: one.scale(1.0 / r) }
        }
        ConformalMap::Rotation(g) => {
            if g.sig() != Signature::CL30 {
                return Err(Error::WrongAlgebra { expected: Signature::CL30, found: g.sig() });
            }
            let report = group_check(g, Group::PinPlus);
            if !report.member {
                return Err(Error::InvalidArgument(format!("rotation element has g ḡ - 1 = {:e}", report.residual)));
            }
            VahlenSplit { a: g.clone(), c: zero.clone(), b: zero, d: g.grade_involution() }
        }
        ConformalMap::Inversion => VahlenSplit { a: zero.clone(), c: -&one, b: one, d: zero },
        ConformalMap::Transvection(h) => VahlenSplit { a: one.clone(), c: zero, b: h.to_mv(), d: one },
    };
    Ok(g)
}

/// Matrix product; acting with the result is acting with `g2` then `g1`.
pub fn compose(g1: &VahlenSplit, g2: &VahlenSplit) -> VahlenSplit {
    g1 * g2
}

/// `diag(±1, ±1)` and `diag(±e123, ±e123)`, the split forms of `±1` and `±E01234`.
pub fn kernel_elements() -> [VahlenSplit; 4] {
    let zero = Multivector::zero(Signature::CL30);
    let diag = |x: Multivector| VahlenSplit { a: x.clone(), b: zero.clone(), c: zero.clone(), d: x };
    let one = Multivector::one(Signature::CL30);
    let e123 = Multivector::blade(Signature::CL30, 0b111);
    [diag(one.clone()), diag(-&one), diag(e123.clone()), diag(-&e123)]
}
