//! The consolidated identity-component analysis: is the torsion part
//! tensorial, finite and normal (at fusion level, up to a probe bound), or
//! is there a concrete witness against normality?

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::connectedness::{connectedness_probe, Connectedness};
use super::restriction::{factor_restriction, restriction_hom_dim};
use crate::error::Result;
use crate::fusion::{Budget, FusionProvider, IrrLabel, VirtualElement};
use crate::providers::FreeProduct;
use crate::torsion::{conjugate_action, normality_consistency, torsion_subcategory, NormalityViolation, Subcategory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentBounds {
    /// Labels `u` tried in the normality condition and connectedness probes.
    pub probe_bound: usize,
    /// Labels covered by the quotient hom-dimension table.
    pub table_bound: usize,
}

impl Default for ComponentBounds {
    fn default() -> Self {
        ComponentBounds {
            probe_bound: 20,
            table_bound: 14,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Unknown,
}

impl Serialize for Finiteness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Finiteness::Finite => s.serialize_bool(true),
            Finiteness::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// Restriction of a normal-forcing label to the connected free factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionEvidence {
    pub connected_factor: usize,
    pub factor_provider: String,
    pub restriction: VirtualElement,
    /// Coefficient of the unit in the restriction.
    #[serde(serialize_with = "crate::report::big_int")]
    pub invariant_multiplicity: BigInt,
    #[serde(serialize_with = "crate::report::big_uint")]
    pub dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ComponentVerdict {
    /// Every fusion-level necessary condition passed at the probe bound.
    NormalWithFiniteComponentGroup,
    /// `label` is forced into every normal subcategory containing the
    /// torsion set, yet it does not restrict trivially to the identity
    /// component.
    NonNormalWitness { label: IrrLabel, evidence: RestrictionEvidence },
    Inconclusive { reasons: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionDegreeNote {
    AtMostOne,
    One,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomDimEntry {
    pub u: IrrLabel,
    pub v: IrrLabel,
    #[serde(serialize_with = "crate::report::big_uint")]
    pub dim: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub provider: String,
    pub bounds: ComponentBounds,
    pub torsion_set: Subcategory,
    pub tensorial: bool,
    pub commutative: bool,
    pub finite: Finiteness,
    /// Labels whose torsion status could not be decided.
    pub unknowns: Vec<IrrLabel>,
    pub normality_violations: Vec<NormalityViolation>,
    #[serde(flatten)]
    pub verdict: ComponentVerdict,
    /// `Σ dim(w)²` over the torsion set, when it is finite.
    #[serde(serialize_with = "crate::report::opt_big_uint")]
    pub component_group_order: Option<BigUint>,
    /// `dim Hom(u↾, v↾)` for the first `table_bound` labels.
    pub quotient_hom_dims: Vec<HomDimEntry>,
    pub torsion_degree: Option<TorsionDegreeNote>,
    pub notes: Vec<String>,
}

impl ComponentReport {
    pub fn is_normal(&self) -> bool {
        self.verdict == ComponentVerdict::NormalWithFiniteComponentGroup
    }
}

/// Whether `v = dim(v)·ι` in `ring`.
fn is_trivial_multiple(ring: &dyn FusionProvider, v: &VirtualElement) -> bool {
    let unit = ring.unit();
    v.support().all(|l| *l == unit)
}

/// Every label of `enumerate(bound)` occurs in some `ū ⊗ u` with `u` in the
/// same range.
pub fn adjoint_at_bound(ring: &dyn FusionProvider, bound: usize) -> Result<bool> {
    let labels = ring.enumerate(bound);
    let mut seen = BTreeSet::new();
    for u in &labels {
        seen.extend(ring.decompose(&ring.conj(u)?, u)?.labels().cloned());
    }
    Ok(labels.iter().all(|l| seen.contains(l)))
}

pub fn identity_component_report(ring: &dyn FusionProvider, bounds: &ComponentBounds, budget: &Budget) -> Result<ComponentReport> {
    let torsion = torsion_subcategory(ring, budget)?;
    let set = &torsion.torsion_set.labels;
    let members: Vec<&IrrLabel> = set.iter().collect();
    let commutative = members
        .par_iter()
        .map(|u| -> Result<bool> {
            for v in &members {
                if ring.decompose(u, v)? != ring.decompose(v, u)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let finite = if torsion.torsion_set.is_saturated() {
        Finiteness::Finite
    } else {
        Finiteness::Unknown
    };
    let violations = normality_consistency(ring, set, bounds.probe_bound)?;

    let mut notes = Vec::new();
    let mut quotient_hom_dims = Vec::new();
    let mut component_group_order = None;
    let mut torsion_degree = None;
    let verdict = if torsion.tensorial && finite == Finiteness::Finite && violations.is_empty() {
        component_group_order = Some(set.iter().map(|w| w.dim() * w.dim()).sum());
        let labels = ring.enumerate(bounds.table_bound);
        for u in &labels {
            for v in &labels {
                quotient_hom_dims.push(HomDimEntry {
                    u: u.clone(),
                    v: v.clone(),
                    dim: restriction_hom_dim(ring, set, u, v)?,
                });
            }
        }
        torsion_degree = Some(TorsionDegreeNote::AtMostOne);
        notes.push(format!(
            "torsion set passes all fusion-level necessary conditions for normality at bound {}",
            bounds.probe_bound
        ));
        ComponentVerdict::NormalWithFiniteComponentGroup
    } else {
        let mut reasons = Vec::new();
        if !torsion.tensorial {
            reasons.push("torsion set is not tensor-closed within the budget".to_string());
        }
        if finite != Finiteness::Finite {
            reasons.push("torsion set did not saturate within the budget".to_string());
        }
        if !violations.is_empty() {
            reasons.push(format!("{} normality violations at bound {}", violations.len(), bounds.probe_bound));
        }
        match ring.as_any().downcast_ref::<FreeProduct>() {
            Some(fp) => match free_product_witness(fp, set, bounds, budget, &mut reasons)? {
                Some((label, evidence)) => {
                    if adjoint_at_bound(fp.factor(evidence.connected_factor).as_ref(), bounds.probe_bound)? {
                        torsion_degree = Some(TorsionDegreeNote::One);
                        notes.push(format!(
                            "connected factor {} is adjoint at bound {}: torsion degree 1",
                            evidence.factor_provider, bounds.probe_bound
                        ));
                    }
                    notes.extend(reasons);
                    ComponentVerdict::NonNormalWitness { label, evidence }
                }
                None => ComponentVerdict::Inconclusive { reasons },
            },
            None => ComponentVerdict::Inconclusive { reasons },
        }
    };
    Ok(ComponentReport {
        provider: ring.name(),
        bounds: *bounds,
        tensorial: torsion.tensorial,
        commutative,
        finite,
        unknowns: torsion.unknowns,
        normality_violations: violations,
        verdict,
        component_group_order,
        quotient_hom_dims,
        torsion_degree,
        notes,
        torsion_set: torsion.torsion_set,
    })
}

/// In `A ∗ B` with `A` connected, the identity component restricts through
/// `A`. An irreducible `ū ⊗ t ⊗ u` (t torsion) lies in every normal
/// subcategory containing the torsion set; if its restriction to `A` is
/// not a multiple of ι, the torsion set is not normal.
fn free_product_witness(
    fp: &FreeProduct,
    torsion: &BTreeSet<IrrLabel>,
    bounds: &ComponentBounds,
    budget: &Budget,
    reasons: &mut Vec<String>,
) -> Result<Option<(IrrLabel, RestrictionEvidence)>> {
    let mut connected = None;
    for i in 0..2 {
        let probe = connectedness_probe(fp.factor(i).as_ref(), bounds.probe_bound, budget)?;
        if probe.outcome == Connectedness::NoTorsionFound {
            connected = Some(i);
            break;
        }
    }
    let Some(c) = connected else {
        reasons.push("both free factors contain torsion".into());
        return Ok(None);
    };
    let factor = fp.factor(c).as_ref();
    for t in torsion {
        if !is_trivial_multiple(factor, &factor_restriction(fp, t, c)?) {
            reasons.push(format!("torsion label {} restricts nontrivially to factor {}", t.id(), factor.name()));
            return Ok(None);
        }
    }
    // first-generation forced labels: irreducible ū ⊗ t ⊗ u with t torsion
    let mut candidates = BTreeSet::new();
    for u in fp.enumerate(bounds.probe_bound) {
        for t in torsion {
            if let Some(w) = conjugate_action(fp, &u, t)?.as_irreducible() {
                if !torsion.contains(w) {
                    candidates.insert((fp.label_size(w), w.clone()));
                }
            }
        }
    }
    for (_, w) in &candidates {
        let restriction = factor_restriction(fp, w, c)?;
        if !is_trivial_multiple(factor, &restriction) {
            let invariant_multiplicity = restriction.coeff(&factor.unit());
            return Ok(Some((
                w.clone(),
                RestrictionEvidence {
                    connected_factor: c,
                    factor_provider: factor.name(),
                    invariant_multiplicity,
                    dim: w.dim().clone(),
                    restriction,
                },
            )));
        }
    }
    reasons.push("every normal-forcing label restricts trivially to the connected factor".into());
    Ok(None)
}
