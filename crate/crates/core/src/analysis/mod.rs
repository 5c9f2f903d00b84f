//! Exact module analysis: relation checks, commutants, Hom spaces,
//! spinning and a meataxe-style decomposition over specialised `r`.

mod forced_l;
mod graph;
mod linear;
mod meataxe;
mod relations;

use thiserror::Error;

use crate::arith::ArithError;
use crate::corpus::RepError;

pub use forced_l::{forced_l, forced_l_lhs, forced_l_with};
pub use graph::CoxeterGraphD;
pub use linear::{commutant_basis, hom_space_dim, spin, SubspaceBasis};
pub use meataxe::{
    decompose, default_r0, invariant_subspaces, Certificate, Constituent, Decomposition,
};
pub use relations::{verify_representation, verify_with, RelationFailure, RelationReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("representation has {found} generators but the graph has {expected} nodes")]
    NodeMismatch { expected: usize, found: usize },
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot spin the zero vector")]
    ZeroVector,
    #[error("D_{0} needs at least 3 nodes")]
    GraphTooSmall(usize),
    #[error("r0 = {0} is excluded: specialise at a rational other than 0, 1, -1")]
    ForbiddenPoint(String),
    #[error("the commutant ({commutant_dim}-dimensional) is not commutative, so the module is not multiplicity-free; only dimension data are available")]
    NotMultiplicityFree { commutant_dim: usize },
    #[error("no splitting element with rational eigenvalues found after {attempts} attempts")]
    NotSplit { attempts: usize },
    #[error("constituent of dimension {dim} could not be certified irreducible")]
    Uncertified { dim: usize },
    #[error("the equation for l has no solution")]
    NoSolution,
}
