//! Restriction data at fusion level: the part of a decomposition lying in a
//! subcategory, hom-dimensions after restriction to the quantum subgroup it
//! determines, and restriction of free-product words to one factor.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::Result;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, VirtualElement};
use crate::providers::FreeProduct;

/// Constituents of `d` that lie in `s`, with their multiplicities.
pub fn s_part(ring: &dyn FusionProvider, d: &Decomposition, s: &BTreeSet<IrrLabel>) -> Result<Decomposition> {
    for w in d.labels() {
        ring.validate(w)?;
    }
    Ok(d.filter(|w| s.contains(w)))
}

/// `s_part` of a single irreducible: `{u:1}` or empty.
pub fn s_part_of(ring: &dyn FusionProvider, u: &IrrLabel, s: &BTreeSet<IrrLabel>) -> Result<Decomposition> {
    s_part(ring, &Decomposition::single(u.clone()), s)
}

/// `dim Hom(u↾, v↾) = Σ_{w ∈ S} N^w_{ū v} · dim(w)` for the quantum
/// subgroup whose quotient has representation category `S`.
pub fn restriction_hom_dim(ring: &dyn FusionProvider, s: &BTreeSet<IrrLabel>, u: &IrrLabel, v: &IrrLabel) -> Result<BigUint> {
    ring.validate(u)?;
    ring.validate(v)?;
    let ubar = ring.conj(u)?;
    Ok(ring
        .decompose(&ubar, v)?
        .iter()
        .filter(|(w, _)| s.contains(*w))
        .map(|(w, n)| n * w.dim())
        .sum())
}

/// Restriction of a free-product irreducible along the retraction onto
/// factor `factor`: letters of that factor are multiplied in order, every
/// other letter contributes its dimension as a scalar.
pub fn factor_restriction(ring: &FreeProduct, u: &IrrLabel, factor: usize) -> Result<VirtualElement> {
    ring.validate(u)?;
    let target = ring.factor(factor).as_ref();
    let mut scalar = BigUint::one();
    let mut acc = VirtualElement::from_label(target.unit());
    for letter in FreeProduct::word(u)? {
        if letter.factor as usize == factor {
            acc = acc.multiply(&VirtualElement::from_label(letter.label.clone()), target)?;
        } else {
            scalar *= letter.label.dim();
        }
    }
    Ok(acc.scaled(&BigInt::from(scalar)))
}
