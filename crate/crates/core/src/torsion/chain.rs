//! Bounded probes of ascending chains `⟨X₁⟩ ⊆ ⟨X₂⟩ ⊆ …` of
//! sub-representation rings. A probe never proves strictness: it reports
//! whether each new generator was found in the truncated previous closure.

use serde::Serialize;

use super::closure::generated_subring;
use crate::error::Result;
use crate::fusion::{Budget, FusionProvider, IrrLabel};
use crate::providers::AuRing;

/// A nondecreasing family of generator sets `d ↦ X_d`, `d ≥ 1`.
pub trait GeneratorSequence: Sync {
    fn generators(&self, d: usize) -> Vec<IrrLabel>;

    /// Label-size cap used for the closure of `X_d`.
    fn label_cap(&self, d: usize, budget: &Budget) -> usize {
        let _ = d;
        budget.max_label_size
    }
}

/// `X_d = {ū^r u^r : 1 ≤ r ≤ d}` in A_u, closed with words of at most
/// `d + 3` letters of each kind.
pub struct BalancedPowers(pub AuRing);

impl GeneratorSequence for BalancedPowers {
    fn generators(&self, d: usize) -> Vec<IrrLabel> {
        (1..=d).map(|r| self.0.balanced_power(r)).collect()
    }

    fn label_cap(&self, d: usize, _budget: &Budget) -> usize {
        d + 3
    }
}

/// The same generators at every step.
pub struct Constant(pub Vec<IrrLabel>);

impl GeneratorSequence for Constant {
    fn generators(&self, _d: usize) -> Vec<IrrLabel> {
        self.0.clone()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub d: usize,
    pub generators: Vec<IrrLabel>,
    pub label_cap: usize,
    pub closure_size: usize,
    pub saturated: bool,
    /// First element of `X_{d+1} \ X_d`, if any.
    pub witness: Option<IrrLabel>,
    /// Whether the witness was found in the truncated `⟨X_d⟩`.
    pub witness_in_closure: Option<bool>,
    /// For A_u: every closure label has as many `u` as `ū` letters.
    pub balanced: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub provider: String,
    pub d_max: usize,
    pub steps: Vec<ChainStep>,
    /// Largest `D ≤ d_max` such that for every `d ≤ D` a new generator exists
    /// and is absent from the truncated `⟨X_d⟩`.
    pub strictly_increasing_up_to: usize,
    /// First `d` at which `⟨X_{d+1}⟩` was not seen to grow.
    pub stabilized_at: Option<usize>,
    /// Always true: a finite probe is a bounded verification, not a proof.
    pub bounded_verification: bool,
}

pub fn ascending_chain_probe(ring: &dyn FusionProvider, sequence: &dyn GeneratorSequence, d_max: usize, budget: &Budget) -> Result<ChainReport> {
    let is_au = ring.as_any().downcast_ref::<AuRing>().is_some();
    let mut steps = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let generators = sequence.generators(d);
        let cap = sequence.label_cap(d, budget);
        let b = Budget {
            max_label_size: cap,
            ..*budget
        };
        let closure = generated_subring(ring, &generators, &b)?;
        let witness = sequence
            .generators(d + 1)
            .into_iter()
            .find(|g| !generators.contains(g));
        let witness_in_closure = witness.as_ref().map(|w| closure.contains(w));
        let balanced = if is_au {
            Some(closure.labels.iter().all(|l| AuRing::is_balanced(l).unwrap_or(false)))
        } else {
            None
        };
        steps.push(ChainStep {
            d,
            generators,
            label_cap: cap,
            closure_size: closure.len(),
            saturated: closure.is_saturated(),
            witness,
            witness_in_closure,
            balanced,
        });
    }
    let strictly_increasing_up_to = steps
        .iter()
        .take_while(|s| s.witness_in_closure == Some(false))
        .count();
    let stabilized_at = steps
        .iter()
        .find(|s| s.witness_in_closure != Some(false))
        .map(|s| s.d);
    Ok(ChainReport {
        provider: ring.name(),
        d_max,
        steps,
        strictly_increasing_up_to,
        stabilized_at,
        bounded_verification: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::providers::SuQ2;

    #[test]
    fn su2_constant_chain_stabilizes_immediately() {
        let r = ascending_chain_probe(&SuQ2, &Constant(vec![SuQ2::label(1)]), 3, &Budget::default()).unwrap();
        assert_eq!(r.strictly_increasing_up_to, 0);
        assert_eq!(r.stabilized_at, Some(1));
    }

    #[test]
    fn au_chain_small() {
        let ring = AuRing::default();
        let budget = Budget {
            max_irreducibles: 4096,
            ..Budget::default()
        };
        let r = ascending_chain_probe(&ring, &BalancedPowers(ring), 2, &budget).unwrap();
        assert_eq!(r.strictly_increasing_up_to, 2);
        assert!(r.steps.iter().all(|s| s.balanced == Some(true)));
    }
}
