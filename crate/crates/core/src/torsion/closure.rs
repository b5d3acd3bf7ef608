//! Saturation of label sets under tensor products, conjugation and the
//! conjugation-type rules `v ↦ ū ⊗ v ⊗ u`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::subcategory::{ClosureStatus, Subcategory, SubcategoryKind};
use crate::error::{FusionError, Result};
use crate::fusion::{Budget, Decomposition, FusionProvider, IrrLabel};

type Rule<'a> = dyn Fn(&IrrLabel) -> Result<Vec<IrrLabel>> + Sync + 'a;

/// Constituents of `ū ⊗ v ⊗ u` with multiplicities.
pub fn conjugate_action(ring: &dyn FusionProvider, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
    let ubar = ring.conj(u)?;
    let mut out = Decomposition::new();
    for (c, n) in ring.decompose(&ubar, v)?.iter() {
        out.add_scaled(&ring.decompose(c, u)?, n);
    }
    Ok(out)
}

/// `ū ⊗ v ⊗ u` when it is a single irreducible.
fn irreducible_conjugate(ring: &dyn FusionProvider, u: &IrrLabel, v: &IrrLabel) -> Result<Option<IrrLabel>> {
    let ubar = ring.conj(u)?;
    let first = ring.decompose(&ubar, v)?;
    let Some(c) = first.as_irreducible() else {
        return Ok(None);
    };
    Ok(ring.decompose(c, u)?.as_irreducible().cloned())
}

struct Saturator<'a> {
    ring: &'a dyn FusionProvider,
    budget: Budget,
    set: BTreeSet<IrrLabel>,
    members: Vec<IrrLabel>,
    overflow: BTreeSet<IrrLabel>,
}

impl Saturator<'_> {
    fn admit(&mut self, c: IrrLabel, next: &mut Vec<IrrLabel>) {
        if self.set.contains(&c) || self.overflow.contains(&c) {
            return;
        }
        if self.ring.label_size(&c) > self.budget.max_label_size || self.set.len() >= self.budget.max_irreducibles {
            self.overflow.insert(c);
            return;
        }
        self.set.insert(c.clone());
        self.members.push(c.clone());
        next.push(c);
    }
}

fn saturate(
    ring: &dyn FusionProvider,
    seeds: &[IrrLabel],
    budget: &Budget,
    kind: SubcategoryKind,
    rule: Option<&Rule<'_>>,
) -> Result<Subcategory> {
    budget.validate()?;
    let mut st = Saturator {
        ring,
        budget: *budget,
        set: BTreeSet::new(),
        members: Vec::new(),
        overflow: BTreeSet::new(),
    };
    // generators are admitted regardless of the caps
    let unit = ring.unit();
    let mut initial = vec![unit];
    for s in seeds {
        ring.validate(s)?;
        initial.push(s.clone());
        initial.push(ring.conj(s)?);
    }
    let mut frontier = Vec::new();
    for s in initial {
        if st.set.insert(s.clone()) {
            st.members.push(s.clone());
            frontier.push(s);
        }
    }

    let mut rounds = 0;
    let mut unprocessed = Vec::new();
    while !frontier.is_empty() {
        if rounds == budget.max_rounds {
            unprocessed = frontier;
            break;
        }
        rounds += 1;
        let snapshot = st.members.clone();
        let produced: Vec<Result<Vec<IrrLabel>>> = frontier
            .par_iter()
            .map(|n| {
                let mut out = vec![ring.conj(n)?];
                for m in &snapshot {
                    out.extend(ring.decompose(n, m)?.labels().cloned());
                    out.extend(ring.decompose(m, n)?.labels().cloned());
                }
                if let Some(rule) = rule {
                    out.extend(rule(n)?);
                }
                Ok(out)
            })
            .collect();
        let mut next = Vec::new();
        for batch in produced {
            for c in batch? {
                let cbar = ring.conj(&c)?;
                st.admit(c, &mut next);
                st.admit(cbar, &mut next);
            }
        }
        frontier = next;
    }

    let status = if unprocessed.is_empty() && st.overflow.is_empty() {
        ClosureStatus::Saturated
    } else {
        let mut frontier = st.overflow;
        frontier.extend(unprocessed);
        ClosureStatus::BudgetExceeded { frontier }
    };
    let sub = Subcategory {
        kind,
        labels: st.set,
        status,
        budget: *budget,
        rounds,
    };
    if sub.is_saturated() {
        verify_closed(ring, &sub)?;
    }
    Ok(sub)
}

/// Final pass over a saturated result: every product of members and every
/// conjugate must be inside.
fn verify_closed(ring: &dyn FusionProvider, sub: &Subcategory) -> Result<()> {
    let labels: Vec<&IrrLabel> = sub.labels.iter().collect();
    let failure = labels.par_iter().find_map_any(|u| {
        let check = || -> Result<Option<String>> {
            if !sub.contains(&ring.conj(u)?) {
                return Ok(Some(format!("conj({u}) escapes")));
            }
            for v in &labels {
                if let Some(w) = ring.decompose(u, v)?.labels().find(|w| !sub.contains(w)) {
                    return Ok(Some(format!("{w} ≤ {u} ⊗ {v} escapes")));
                }
            }
            Ok(None)
        };
        match check() {
            Ok(None) => None,
            Ok(Some(msg)) => Some(Ok(msg)),
            Err(e) => Some(Err(e)),
        }
    });
    match failure {
        None => Ok(()),
        Some(Ok(msg)) => Err(FusionError::ClosureCheck(msg)),
        Some(Err(e)) => Err(e),
    }
}

/// ⟨X⟩: closure of `X ∪ {ι}` under tensor products, constituents and conjugation.
pub fn generated_subring(ring: &dyn FusionProvider, generators: &[IrrLabel], budget: &Budget) -> Result<Subcategory> {
    saturate(ring, generators, budget, SubcategoryKind::TensorGenerated, None)
}

/// Tensor- and conj-closed set containing `X` that also contains every
/// constituent of `ū ⊗ v ⊗ u` for members `v` and probes
/// `u ∈ enumerate(max_irreducibles)`.
pub fn central_closure(ring: &dyn FusionProvider, generators: &[IrrLabel], budget: &Budget) -> Result<Subcategory> {
    let probes = ring.enumerate(budget.max_irreducibles);
    let rule = |v: &IrrLabel| -> Result<Vec<IrrLabel>> {
        let mut out = Vec::new();
        for u in &probes {
            out.extend(conjugate_action(ring, u, v)?.labels().cloned());
        }
        Ok(out)
    };
    saturate(ring, generators, budget, SubcategoryKind::CentralClosure, Some(&rule))
}

/// Like [`central_closure`], but `ū ⊗ v ⊗ u` is adjoined only when it is a
/// single irreducible: a lower bound for every normal subcategory containing `X`.
pub fn normal_forcing_closure(ring: &dyn FusionProvider, generators: &[IrrLabel], budget: &Budget) -> Result<Subcategory> {
    let probes = ring.enumerate(budget.max_irreducibles);
    let rule = |v: &IrrLabel| -> Result<Vec<IrrLabel>> {
        let mut out = Vec::new();
        for u in &probes {
            out.extend(irreducible_conjugate(ring, u, v)?);
        }
        Ok(out)
    };
    saturate(ring, generators, budget, SubcategoryKind::NormalForcingClosure, Some(&rule))
}

/// A pair `(u, v)` with `v ∈ S` such that no constituent of `ū ⊗ v ⊗ u` lies in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityViolation {
    pub u: IrrLabel,
    pub v: IrrLabel,
    pub constituents: Decomposition,
}

/// The fusion-level necessary condition for normality of `S`, tested over
/// `v ∈ S` and `u ∈ enumerate(bound)`. Empty means `S` passes.
pub fn normality_consistency(ring: &dyn FusionProvider, labels: &BTreeSet<IrrLabel>, bound: usize) -> Result<Vec<NormalityViolation>> {
    let probes = ring.enumerate(bound);
    let mut out = Vec::new();
    for u in &probes {
        for v in labels {
            let d = conjugate_action(ring, u, v)?;
            if !d.labels().any(|w| labels.contains(w)) {
                out.push(NormalityViolation {
                    u: u.clone(),
                    v: v.clone(),
                    constituents: d,
                });
            }
        }
    }
    Ok(out)
}
