//! The identifications of Cl(4,1) with ℂ⊗Cl(1,3), the coefficient
//! dictionaries, the extra antiautomorphisms, the 2×2 split over Cl(3,0) and
//! the passage to Cl(2,4).

mod anti;
mod cl24;
mod dict;
mod groups;
mod kinds;
mod split;

pub use anti::{antiauto_matrix_check, block_formula, bullet, triangle, AntiautoReport, Which};
pub use cl24::{embed_cl24, xi, xi_inverse};
pub use dict::{coeff_dict, CoeffDict};
pub use groups::{
    sample_dollar_pin, sp2c_check, su22_check, su22_form, symplectic_form, MembershipReport, MEMBERSHIP_TOL,
};
pub use kinds::{forward_matrix, generator_image, iso_backward, iso_forward, IsoKind};
pub use split::{periodicity_join, periodicity_split, VahlenSplit};
