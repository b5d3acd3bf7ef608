use thiserror::Error;

use crate::fusion::axioms::AxiomReport;

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("fusion ring violates {} axiom check(s); first: {}", .0.violations.len(), .0.first_summary())]
    AxiomViolations(AxiomReport),

    #[error("malformed fusion ring: {0}")]
    MalformedRing(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unsupported provider for this analysis: {0}")]
    UnsupportedProvider(String),

    #[error("ring is not finite")]
    NotFinite,

    #[error("subcategory is not saturated")]
    NotSaturated,

    #[error("saturated closure failed re-verification: {0}")]
    ClosureCheck(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("ill-conditioned linear system: {0}")]
    IllConditioned(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl FusionError {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        FusionError::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = FusionError> = std::result::Result<T, E>;
