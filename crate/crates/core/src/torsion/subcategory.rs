use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::fusion::{Budget, IrrLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubcategoryKind {
    TensorGenerated,
    CentralClosure,
    NormalForcingClosure,
    TorsionSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    /// A full round added nothing: the set is closed.
    Saturated,
    /// Truncated; `frontier` holds labels that were produced but not admitted
    /// or not yet processed.
    BudgetExceeded { frontier: BTreeSet<IrrLabel> },
}

impl ClosureStatus {
    pub fn is_saturated(&self) -> bool {
        matches!(self, ClosureStatus::Saturated)
    }
}

/// A finite set of irreducibles together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcategory {
    pub kind: SubcategoryKind,
    pub labels: BTreeSet<IrrLabel>,
    pub status: ClosureStatus,
    pub budget: Budget,
    /// Rounds of saturation performed.
    pub rounds: usize,
}

impl Subcategory {
    pub fn contains(&self, u: &IrrLabel) -> bool {
        self.labels.contains(u)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_saturated(&self) -> bool {
        self.status.is_saturated()
    }

    pub fn ids(&self) -> Vec<String> {
        self.labels.iter().map(|l| l.id().to_string()).collect()
    }

    pub fn frontier(&self) -> Option<&BTreeSet<IrrLabel>> {
        match &self.status {
            ClosureStatus::Saturated => None,
            ClosureStatus::BudgetExceeded { frontier } => Some(frontier),
        }
    }

    /// An explicit set with no closure claim beyond what the caller asserts.
    pub fn from_labels(kind: SubcategoryKind, labels: impl IntoIterator<Item = IrrLabel>, status: ClosureStatus, budget: Budget) -> Self {
        Subcategory {
            kind,
            labels: labels.into_iter().collect(),
            status,
            budget,
            rounds: 0,
        }
    }
}

impl Serialize for Subcategory {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Subcategory", 6)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("labels", &self.labels)?;
        match &self.status {
            ClosureStatus::Saturated => {
                s.serialize_field("status", "saturated")?;
                s.serialize_field("frontier", &[] as &[IrrLabel])?;
            }
            ClosureStatus::BudgetExceeded { frontier } => {
                s.serialize_field("status", "budget_exceeded")?;
                s.serialize_field("frontier", frontier)?;
            }
        }
        s.serialize_field("budget", &self.budget)?;
        s.serialize_field("rounds", &self.rounds)?;
        s.end()
    }
}
