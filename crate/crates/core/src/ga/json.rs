use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};

/// Coefficients at or below this modulus are omitted from the JSON form.
pub const JSON_DROP: f64 = 1e-14;

#[derive(Serialize, Deserialize)]
struct MvJson {
    sig: [usize; 2],
    coeffs: Vec<(usize, f64, f64)>,
}

impl MvJson {
    fn of(mv: &Multivector) -> Self {
        MvJson {
            sig: [mv.sig().p(), mv.sig().q()],
            coeffs: mv.terms().filter(|(_, c)| c.norm() > JSON_DROP).map(|(m, c)| (m, c.re, c.im)).collect(),
        }
    }
}

impl Serialize for Multivector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MvJson::of(self).serialize(serializer)
    }
}

impl Multivector {
    /// `{"sig":[p,q],"coeffs":[[mask,re,im],...]}` with ascending masks.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MvJson::of(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Multivector> {
        let doc: MvJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let sig = Signature::new(doc.sig[0], doc.sig[1]).map_err(|e| Error::Json(e.to_string()))?;
        let mut mv = Multivector::zero(sig);
        for (mask, re, im) in doc.coeffs {
            if mask >= sig.dim() {
                return Err(Error::Json(format!("mask {mask} outside {sig}")));
            }
            if !re.is_finite() || !im.is_finite() {
                return Err(Error::Json(format!("non-finite coefficient at mask {mask}")));
            }
            mv.set_coeff(mask, mv.coeff(mask) + Complex64::new(re, im));
        }
        Ok(mv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::random::random_mv;

    #[test]
    fn documented_shape() {
        let mv = Multivector::scalar(Signature::CL30, 2.0)
            + Multivector::blade(Signature::CL30, 0b101).scale(Complex64::new(0.0, -1.0));
        assert_eq!(mv.to_json(), r#"{"sig":[3,0],"coeffs":[[0,2.0,0.0],[5,0.0,-1.0]]}"#);
    }

    #[test]
    fn round_trip() {
        let mv = random_mv(3, Signature::CL41, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(Multivector::from_json(&mv.to_json()).unwrap(), mv);
    }

    #[test]
    fn bad_documents() {
        assert!(Multivector::from_json(r#"{"sig":[3,0],"coeffs":[[8,1.0,0.0]]}"#).is_err());
        assert!(Multivector::from_json(r#"{"sig":[5,3],"coeffs":[]}"#).is_err());
        assert!(Multivector::from_json("[]").is_err());
    }
}
