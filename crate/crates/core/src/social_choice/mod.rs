//! Social welfare functions over small profile spaces, brute-force fairness
//! audits, and the restriction of a function to a triple of alternatives.

mod audit;
mod psi;
mod space;
mod swf;

pub use audit::{
    check_iia, check_unanimity, fairness_report, find_dictator, AuditOutcome, DictatorReport, FairnessReport,
    IiaViolation, UnanimityViolation,
};
pub use psi::{image_of_psi, psi_restriction, CommutationReport, IllDefined, PsiImage, PsiRestriction, PsiValue};
pub use space::{Domain, ProfileSpace, DEFAULT_CAP};
pub use swf::{LookupTable, SocialWelfareFunction, SwfKind, TableEntry, TableJson};

use serde_json::Value;
use thiserror::Error;

use crate::preferences::PreferenceError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SocialChoiceError {
    #[error(transparent)]
    Preference(#[from] PreferenceError),
    #[error("profile has {got_individuals} individuals over {got_set}; the function expects {individuals} over {set}")]
    ProfileShape { got_individuals: usize, got_set: String, individuals: usize, set: String },
    #[error("profile {0} lies outside the function's domain")]
    OutsideDomain(String),
    #[error("profile space has {size} profiles, over the cap of {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("individual index {index} out of range for {individuals} individuals")]
    NoSuchIndividual { index: usize, individuals: usize },
    #[error("{audit} audit failed, so the construction is undefined; certificate: {certificate}")]
    PreconditionFailed { audit: &'static str, certificate: Value },
    #[error("restricted function is ill-defined: {0}")]
    IllDefined(Box<IllDefined>),
    #[error("lookup table: {0}")]
    Table(String),
    #[error("unknown social welfare function {0:?}; expected pairwise-majority, dictator:<i> or table:<path>")]
    BadSpec(String),
}
