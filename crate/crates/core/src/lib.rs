//! Exact computations of non-abelian tensor squares, exterior squares and
//! Schur multipliers for finite-dimensional nilpotent Lie superalgebras over ℚ.

pub mod catalog;
pub mod formulas;
pub mod linalg;
pub mod superalgebra;
pub mod tensor;
pub mod verify;

pub use catalog::{CatalogError, CatalogKey, Rank2Kind};
pub use linalg::{LinalgError, Matrix, Scalar, Subspace};
pub use superalgebra::{AlgebraError, GradedDim, LieSuperAlgebra, Parity};
