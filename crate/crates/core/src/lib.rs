//! Clifford algebra kernel for Cl(3,0), Cl(1,3), Cl(4,1) ≃ ℂ⊗Cl(1,3) and Cl(2,4).
//!
//! Multivectors are dense complex coefficient vectors over bitmask-indexed
//! blades. On top of that sit the Pauli, quaternionic and Dirac matrix
//! representations, the three Cl(4,1) ≃ ℂ⊗Cl(1,3) identifications, Vahlen
//! matrices acting on paravectors, the conformal Lie algebra and twistors as
//! elements of a minimal left ideal.

pub mod conformal;
pub mod error;
pub mod ga;
pub mod iso;
pub mod lie;
pub mod linalg;
pub mod reps;
pub mod twistor;
pub mod verify;

pub use error::{Error, Result};
pub use ga::{Algebra, Multivector, Signature};
pub use linalg::ComplexMatrix;
pub use num_complex::Complex64;
