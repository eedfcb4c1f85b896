//! Paravector model of compactified Minkowski space: the Klein absolute,
//! Vahlen matrices over Cl(3,0) and their fractional action, and planar
//! Möbius maps.

mod paravector;
mod plane;
mod vahlen;

pub use paravector::{
    chart_matrix, compactify, kappa_lift, paravector_matrix, paravector_matrix_via_split, project, CompactPoint,
    Paravector, Paravector41, PARAVECTOR_TOL,
};
pub use plane::{mobius_plane, mobius_sandwich, plane_chart, quasi_sphere_eval, PlaneMap, QuasiSphere};
pub use vahlen::{
    act, chart_residual, compose, kernel_elements, make_map, rotation_element, vahlen_conditions, ConformalMap,
    VahlenReport, VAHLEN_SAMPLES, VAHLEN_TOL,
};
