use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::closure::generated_subring;
use super::subcategory::{ClosureStatus, Subcategory, SubcategoryKind};
use crate::error::Result;
use crate::fusion::{Budget, FusionProvider, IrrLabel, Order};

/// Whether an irreducible generates a finite tensor subcategory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TorsionVerdict {
    /// `⟨u⟩` saturated within the budget.
    Torsion { closure: Subcategory },
    /// The order oracle certifies infinite order.
    NonTorsion { order: Order },
    /// Neither certificate was obtained within the budget.
    Unknown { budget: Budget },
}

impl TorsionVerdict {
    pub fn is_torsion(&self) -> bool {
        matches!(self, TorsionVerdict::Torsion { .. })
    }

    pub fn is_non_torsion(&self) -> bool {
        matches!(self, TorsionVerdict::NonTorsion { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TorsionVerdict::Unknown { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            TorsionVerdict::Torsion { .. } => "torsion",
            TorsionVerdict::NonTorsion { .. } => "non_torsion",
            TorsionVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// Torsion test for one irreducible: an infinite-order certificate from the
/// order oracle, or saturation of `⟨u⟩` within `budget`.
pub fn is_torsion(ring: &dyn FusionProvider, u: &IrrLabel, budget: &Budget) -> Result<TorsionVerdict> {
    ring.validate(u)?;
    if let Some(Order::Infinite) = ring.order_oracle(u)? {
        return Ok(TorsionVerdict::NonTorsion { order: Order::Infinite });
    }
    let closure = generated_subring(ring, std::slice::from_ref(u), budget)?;
    Ok(if closure.is_saturated() {
        TorsionVerdict::Torsion { closure }
    } else {
        TorsionVerdict::Unknown { budget: *budget }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelVerdict {
    pub label: IrrLabel,
    pub verdict: &'static str,
}

/// Certified torsion labels among `enumerate(max_irreducibles)`, with the
/// labels that could not be decided listed separately.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    pub provider: String,
    /// The certified torsion labels; `status` is that of `⟨torsion set⟩`.
    pub torsion_set: Subcategory,
    /// Whether the certified set is closed under tensor products (within budget).
    pub tensorial: bool,
    pub unknowns: Vec<IrrLabel>,
    pub non_torsion: Vec<IrrLabel>,
    pub verdicts: Vec<LabelVerdict>,
}

pub fn torsion_subcategory(ring: &dyn FusionProvider, budget: &Budget) -> Result<TorsionReport> {
    let labels = ring.enumerate(budget.max_irreducibles);
    let verdicts: Vec<Result<TorsionVerdict>> = labels.par_iter().map(|u| is_torsion(ring, u, budget)).collect();
    let mut torsion = BTreeSet::new();
    let mut unknowns = Vec::new();
    let mut non_torsion = Vec::new();
    let mut listed = Vec::with_capacity(labels.len());
    for (u, v) in labels.iter().zip(verdicts) {
        let v = v?;
        match &v {
            TorsionVerdict::Torsion { .. } => {
                torsion.insert(u.clone());
            }
            TorsionVerdict::NonTorsion { .. } => non_torsion.push(u.clone()),
            TorsionVerdict::Unknown { .. } => unknowns.push(u.clone()),
        }
        listed.push(LabelVerdict {
            label: u.clone(),
            verdict: v.tag(),
        });
    }
    let generated = generated_subring(ring, &torsion.iter().cloned().collect::<Vec<_>>(), budget)?;
    let tensorial = generated.is_saturated() && generated.labels == torsion;
    let status = match generated.status {
        ClosureStatus::Saturated => ClosureStatus::Saturated,
        ClosureStatus::BudgetExceeded { frontier } => ClosureStatus::BudgetExceeded { frontier },
    };
    Ok(TorsionReport {
        provider: ring.name(),
        torsion_set: Subcategory {
            kind: SubcategoryKind::TorsionSet,
            labels: torsion,
            status,
            budget: *budget,
            rounds: generated.rounds,
        },
        tensorial,
        unknowns,
        non_torsion,
        verdicts: listed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::providers::{parse_provider, SuQ2, UqSu11};

    #[test]
    fn verdict_examples() {
        let b = Budget::default();
        assert!(is_torsion(&SuQ2, &SuQ2::label(0), &b).unwrap().is_torsion());
        assert!(is_torsion(&SuQ2, &SuQ2::label(1), &b).unwrap().is_unknown());
        let dih = parse_provider("word:Z2*Z2").unwrap();
        let ab = dih.parse_label("ab").unwrap();
        assert!(is_torsion(dih.as_ref(), &ab, &b).unwrap().is_non_torsion());
    }

    #[test]
    fn uqsu11_torsion_set() {
        let b = Budget {
            max_irreducibles: 20,
            ..Budget::default()
        };
        let r = torsion_subcategory(&UqSu11, &b).unwrap();
        assert_eq!(r.torsion_set.ids(), ["iota", "iota-1"]);
        assert!(r.tensorial);
        assert_eq!(r.unknowns.len(), 18);
    }

    #[test]
    fn free_product_torsion_set() {
        let ring = parse_provider("free(so3,word:Z2)").unwrap();
        let r = torsion_subcategory(ring.as_ref(), &Budget::default()).unwrap();
        assert_eq!(r.torsion_set.ids(), ["1", "a"]);
    }
}
