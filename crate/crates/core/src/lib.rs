//! Jordan-Lie inner ideals of finite-dimensional associative algebras.
//!
//! Algebras are given by structure constants over `Q` or a prime field
//! `F_p` with `p > max(3, dim)`. Everything is exact: subspaces are kept in
//! reduced row-echelon form, so equal subspaces have equal bases.

pub mod algebra;
pub mod cli;
pub mod conformance;
pub mod corpus;
pub mod error;
pub mod field;
pub mod format;
pub mod inner_ideal;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod reduction;

pub use algebra::{Algebra, LeviDecomposition, MatrixUnitSystem, QuotientMap, Side};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use inner_ideal::{IdempotentPair, InnerIdealCandidate, RegularWitness};
pub use lie::LieView;
pub use linalg::{BasisCoords, Matrix, Subspace, Vector};
pub use reduction::{ReductionResult, SplitWitness};
