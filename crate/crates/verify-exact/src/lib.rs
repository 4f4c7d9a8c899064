//! Conflict-free coloring verifiers and exact chromatic-number oracles.

pub mod exact;
pub mod verify;

pub use exact::{
    cap_from_env, exact, exact_chi_cn, exact_chi_on, exact_chi_on_partial, feasible, DEFAULT_CAP,
};
pub use verify::{
    verify, verify_cfcn, verify_cfon, verify_partial_cfon, verify_witness, Variant, Verdict,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("coloring has unassigned vertices; use the partial verifier")]
    PartialColoring,
    #[error("graph has {graph} vertices but coloring covers {coloring}")]
    SizeMismatch { graph: usize, coloring: usize },
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("vertex {0} is isolated, so no conflict-free coloring exists")]
    NoColoring(usize),
}
