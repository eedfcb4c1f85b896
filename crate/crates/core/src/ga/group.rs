use serde::Serialize;

use super::multivector::Multivector;

/// Membership tolerance for the group predicates.
pub const GROUP_TOL: f64 = 1e-9;

/// Which defining relation to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Group {
    /// Even elements with `R R̃ = 1`.
    SpinPlus,
    /// `ψ ψ̄ = 1` in Cl(3,0): the Lorentz double cover.
    PinPlus,
    /// `D D̄ = 1` in Cl(4,1): the conformal double cover.
    DollarPin,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupReport {
    pub group: Group,
    /// Max coefficient of the defining product minus 1.
    pub residual: f64,
    /// Max odd coefficient (only constrained for `SpinPlus`).
    pub odd_residual: f64,
    pub member: bool,
}

pub fn group_check(a: &Multivector, group: Group) -> GroupReport {
    let one = Multivector::one(a.sig());
    let (product, odd_residual) = match group {
        Group::SpinPlus => (a * &a.reversion(), a.odd_part().max_norm()),
        Group::PinPlus | Group::DollarPin => (a * &a.conjugation(), 0.0),
    };
    let residual = product.dist(&one);
    GroupReport { group, residual, odd_residual, member: residual <= GROUP_TOL && odd_residual <= GROUP_TOL }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Signature;

    #[test]
    fn one_belongs_everywhere() {
        for g in [Group::SpinPlus, Group::PinPlus, Group::DollarPin] {
            let r = group_check(&Multivector::one(Signature::CL41), g);
            assert!(r.member);
            assert_eq!(r.residual, 0.0);
        }
    }

    #[test]
    fn doubled_identity_misses_by_three() {
        let r = group_check(&Multivector::scalar(Signature::CL13, 2.0), Group::SpinPlus);
        assert!(!r.member);
        assert_eq!(r.residual, 3.0);
    }

    #[test]
    fn odd_element_is_not_spin() {
        let e1 = Multivector::generator(Signature::CL30, 0);
        assert!(!group_check(&e1, Group::SpinPlus).member);
        assert!(!group_check(&e1, Group::PinPlus).member);
    }
}
