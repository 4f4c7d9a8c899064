//! Library side of the `cfon` command: method dispatch, reports, audits and
//! instance generation. The binary only parses flags, reads files and maps
//! errors to exit codes.

pub mod audit;
pub mod color;
pub mod generate;
pub mod report;

pub use audit::{audit, dc_reserved_audit, nd_bad_set_audit, outerplanar_exempt_audit, AuditReport};
pub use color::{color, ColorInput, Method};
pub use generate::{generate, parse_family, Generated};
pub use report::Report;

use cfon_fvs::FvsError;
use cfon_outerplanar::OuterplanarError;
use cfon_pathwidth::PathwidthError;
use cfon_planar::PlanarError;
use cfon_structural::StructuralError;
use decomposition::DecompError;
use graph_core::GraphError;
use verify_exact::VerifyError;

/// Largest FVS or cluster modulator the exact searches look for.
pub const CERT_K_MAX: usize = 8;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        if e.is_parse() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Precondition(e.to_string())
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::Graph(g) => g.into(),
            DecompError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            DecompError::Internal(_) => CliError::Internal(e.to_string()),
            DecompError::Invalid(_) | DecompError::NotNice(_) => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<PathwidthError> for CliError {
    fn from(e: PathwidthError) -> Self {
        match e {
            PathwidthError::Graph(g) => g.into(),
            PathwidthError::Uncolored(_) | PathwidthError::Invariant(_) => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<FvsError> for CliError {
    fn from(e: FvsError) -> Self {
        match e {
            FvsError::Graph(g) => g.into(),
            FvsError::Internal(_) => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<StructuralError> for CliError {
    fn from(e: StructuralError) -> Self {
        match e {
            StructuralError::Graph(g) => g.into(),
            StructuralError::Oracle(v) => v.into(),
            StructuralError::BadModulator => CliError::Precondition(e.to_string()),
            StructuralError::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<PlanarError> for CliError {
    fn from(e: PlanarError) -> Self {
        match e {
            PlanarError::Graph(g) => g.into(),
            PlanarError::ProperColoring { .. } => CliError::Precondition(e.to_string()),
            PlanarError::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OuterplanarError> for CliError {
    fn from(e: OuterplanarError) -> Self {
        match e {
            OuterplanarError::Graph(g) => g.into(),
            OuterplanarError::NotOuterplanar(_) => CliError::Precondition(e.to_string()),
            OuterplanarError::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}
