//! Recovering a sub-representation ring `A` from its dimension ideal
//! `J_A = R · ker(dim|_A)`: an irreducible `u` lies in `A` exactly when
//! `u − dim(u)·ι ∈ J_A`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use super::lattice::Lattice;
use super::subcategory::Subcategory;
use crate::error::{FusionError, Result};
use crate::fusion::{FusionProvider, IrrLabel};

#[derive(Clone, Debug, Serialize)]
pub struct DimensionIdealReport {
    pub provider: String,
    pub subring: Vec<IrrLabel>,
    /// Rank of `I_A = {a ∈ ℤA : dim a = 0}`.
    pub kernel_rank: usize,
    /// Rank of `J_A` as a sublattice of the representation ring.
    pub ideal_rank: usize,
    pub recovered: Vec<IrrLabel>,
    /// `recovered == Irr(A)`.
    pub matches: bool,
}

/// Computes `J_A` as an integer lattice and returns the irreducibles `u`
/// with `u − dim(u)·ι ∈ J_A`.
pub fn dimension_ideal_recover(ring: &dyn FusionProvider, subring: &Subcategory) -> Result<DimensionIdealReport> {
    let labels = ring.all_labels().ok_or(FusionError::NotFinite)?;
    if !subring.is_saturated() {
        return Err(FusionError::NotSaturated);
    }
    let index: HashMap<&IrrLabel, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let n = labels.len();
    let unit = ring.unit();
    let unit_at = index[&unit];
    let position = |l: &IrrLabel| index.get(l).copied().ok_or_else(|| FusionError::UnknownLabel(l.id().to_string()));

    // I_A has basis a − dim(a)·ι for a ∈ A \ {ι}
    let kernel: Vec<&IrrLabel> = subring.labels.iter().filter(|a| **a != unit).collect();
    for a in &kernel {
        position(a)?;
    }
    let mut generators = Vec::with_capacity(n * kernel.len());
    for r in &labels {
        for a in &kernel {
            // r · (a − dim a) = r⊗a − dim(a)·r
            let mut g = vec![BigInt::from(0); n];
            for (w, m) in ring.decompose(r, a)?.iter() {
                g[position(w)?] += BigInt::from(m.clone());
            }
            g[position(r)?] -= BigInt::from(a.dim().clone());
            generators.push(g);
        }
    }
    let ideal = Lattice::from_generators(n, generators);

    let recovered: Vec<IrrLabel> = labels
        .iter()
        .filter(|u| {
            let mut t = vec![BigInt::from(0); n];
            t[index[u]] += 1;
            t[unit_at] -= BigInt::from(u.dim().clone());
            ideal.contains(&t)
        })
        .cloned()
        .collect();
    let recovered_set: BTreeSet<IrrLabel> = recovered.iter().cloned().collect();
    Ok(DimensionIdealReport {
        provider: ring.name(),
        subring: subring.labels.iter().cloned().collect(),
        kernel_rank: kernel.len(),
        ideal_rank: ideal.rank(),
        matches: recovered_set == subring.labels,
        recovered,
    })
}

/// Every sub-representation ring (subset containing ι, closed under
/// conjugation and constituents of products) of a finite ring with at most
/// `max_labels` irreducibles, by exhaustive search over subsets.
pub fn all_subrings(ring: &dyn FusionProvider, max_labels: usize) -> Result<Vec<BTreeSet<IrrLabel>>> {
    let labels = ring.all_labels().ok_or(FusionError::NotFinite)?;
    if labels.len() > max_labels || labels.len() > 20 {
        return Err(FusionError::BadParameter(format!(
            "{} has {} irreducibles; exhaustive search is capped at {}",
            ring.name(),
            labels.len(),
            max_labels.min(20)
        )));
    }
    let unit = ring.unit();
    let others: Vec<&IrrLabel> = labels.iter().filter(|l| **l != unit).collect();
    let mut products = HashMap::new();
    for u in &labels {
        for v in &labels {
            products.insert((u.clone(), v.clone()), ring.decompose(u, v)?);
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << others.len() {
        let set: BTreeSet<IrrLabel> = std::iter::once(unit.clone())
            .chain(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| (*l).clone()))
            .collect();
        let mut closed = true;
        'outer: for u in &set {
            if !set.contains(&ring.conj(u)?) {
                closed = false;
                break;
            }
            for v in &set {
                if products[&(u.clone(), v.clone())].labels().any(|w| !set.contains(w)) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        if closed {
            out.push(set);
        }
    }
    Ok(out)
}
