//! Exact tools for the invariant-subspace structure of the Cohen-Wales
//! representation of the CGW algebra of type `D_n`.

pub mod analysis;
pub mod arith;
pub mod checks;
pub mod classify;
pub mod corpus;
pub mod field;
pub mod matrix;
pub mod specht;

pub use analysis::{CoxeterGraphD, RelationReport, SubspaceBasis};
pub use arith::{LaurentPolynomial, Rational, RationalFunction, Sign, SignedMonomial};
pub use classify::{ClassificationReport, RConstraint, ReducibilityCondition};
pub use corpus::{BasisVectorFormula, KTableEntry, MatrixRep};
pub use matrix::Matrix;
pub use specht::{BranchingMultiset, Partition, SpechtLabel};
