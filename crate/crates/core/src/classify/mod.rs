//! Reducibility values of `l`, their coincidences, and the predicted
//! lattice of invariant subspaces of the Cohen-Wales representation.

mod coincide;
mod constraint;
mod james;
mod report;
mod table;
mod testsets;

use thiserror::Error;

pub use coincide::{agreement, coincidences, Agreement, Coincidence};
pub use constraint::{
    holds_at, monomials_equal_at, order_violation, semisimplicity_check, RConstraint,
    SemisimplicityReport, Violation,
};
pub use james::{james_screen, JamesScreen, ScreenEntry, ScreenStatus};
pub use report::{classify, CaseTag, ClassificationReport, PredictedSubspace};
pub use table::{reducibility_table, ReducibilityCondition, RowKind};
pub use testsets::{branching_testset, final_stage_candidates, BranchingCase, Candidate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("rank n = {0} is below 4")]
    RankTooSmall(u32),
    #[error("{0}")]
    BadConstraint(String),
}
