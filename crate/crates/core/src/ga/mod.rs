//! Signature-generic multivector arithmetic.

mod basis;
mod exp;
mod group;
mod json;
mod multivector;
mod products;
mod random;
mod signature;

pub use basis::{gamma5, Algebra};
pub use exp::{exp, inverse, left_mul_matrix, MAX_SERIES_TERMS, SERIES_CUTOFF, SINGULAR_CONDITION};
pub use group::{group_check, Group, GroupReport, GROUP_TOL};
pub use json::JSON_DROP;
pub use multivector::Multivector;
pub use products::{
    bilinear_form, commutator, contract_left, geometric_product, product_of, twisted_adjoint_core, wedge,
};
pub use random::{all_grades, random_mv, rng, sample_complex_mv, sample_mv};
pub use signature::{grade_of, Signature, MAX_GENERATORS};
