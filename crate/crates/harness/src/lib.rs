//! Seeded instance generation, verification sweeps and reports.

pub mod checks;
pub mod config;
pub mod family;
pub mod h1cmd;
pub mod instance;
pub mod report;
pub mod rng;

use involut_core::action::ActionError;
use involut_core::group::GroupError;
use involut_core::groupoid::GroupoidError;
use involut_core::h1::H1Error;
use involut_core::involution::InvolutionError;
use involut_core::poincare::PoincareError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("bad involution {0:?}: expected trivial, inner:<element> or index:<k>")]
    BadInvolution(String),
    #[error("involution index {index} out of range ({count} involutive automorphisms)")]
    InvolutionIndex { index: usize, count: usize },
    #[error("skipped: {0}")]
    Skip(String),
    #[error("cannot write {path}: {reason}")]
    Io { path: String, reason: String },
    /// A construction that is correct by design failed.
    #[error("internal error: {0}")]
    Bug(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Poincare(#[from] PoincareError),
    #[error(transparent)]
    H1(#[from] H1Error),
    #[error(transparent)]
    Action(#[from] ActionError),
}
