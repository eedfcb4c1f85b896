//! The 15-dimensional conformal algebra of Minkowski space, realized both by
//! bivectors of Cl(2,4) and inside ℂ⊗Cl(1,3).

mod exp;
mod generators;
mod table;

pub use exp::{dilation_path_residual, exp_generator, membership_residual, ExpReport};
pub use generators::{generator, generator_basis, metric, Generator, Realization};
pub use table::{
    commutation_check, expected_bracket, structure_constants, substitution_symmetry_check, Combination, Relabeling,
    StructureConstants, TableReport,
};
