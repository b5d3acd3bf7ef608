use serde::Serialize;

use crate::error::Result;
use crate::fusion::{Budget, FusionProvider, IrrLabel};
use crate::torsion::{is_torsion, TorsionVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Connectedness {
    /// No nontrivial label was certified torsion. One-sided when
    /// `unknowns` is nonempty.
    NoTorsionFound,
    TorsionFound { label: IrrLabel },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectednessProbe {
    pub provider: String,
    pub bound: usize,
    #[serde(flatten)]
    pub outcome: Connectedness,
    /// Labels certified to have infinite order.
    pub certified_non_torsion: usize,
    /// Labels neither certificate could decide.
    pub unknowns: Vec<IrrLabel>,
}

impl ConnectednessProbe {
    /// Every scanned nontrivial label was certified non-torsion.
    pub fn fully_certified(&self) -> bool {
        self.outcome == Connectedness::NoTorsionFound && self.unknowns.is_empty()
    }
}

/// Scans `enumerate(bound)` for a nontrivial torsion irreducible.
pub fn connectedness_probe(ring: &dyn FusionProvider, bound: usize, budget: &Budget) -> Result<ConnectednessProbe> {
    let unit = ring.unit();
    let mut unknowns = Vec::new();
    let mut certified_non_torsion = 0;
    let mut outcome = Connectedness::NoTorsionFound;
    for u in ring.enumerate(bound) {
        if u == unit {
            continue;
        }
        match is_torsion(ring, &u, budget)? {
            TorsionVerdict::Torsion { .. } => {
                outcome = Connectedness::TorsionFound { label: u };
                break;
            }
            TorsionVerdict::NonTorsion { .. } => certified_non_torsion += 1,
            TorsionVerdict::Unknown { .. } => unknowns.push(u),
        }
    }
    Ok(ConnectednessProbe {
        provider: ring.name(),
        bound,
        outcome,
        certified_non_torsion,
        unknowns,
    })
}
