use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::label::IrrLabel;
use super::provider::FusionProvider;
use crate::error::Result;

/// Finite multiset of irreducibles with positive multiplicities, kept in
/// canonical label order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    entries: BTreeMap<IrrLabel, BigUint>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: IrrLabel) -> Self {
        let mut d = Self::new();
        d.add(label, BigUint::one());
        d
    }

    /// Adds `mult` copies of `label`; zero multiplicities are ignored.
    pub fn add(&mut self, label: IrrLabel, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(label).or_default() += mult;
    }

    pub fn add_scaled(&mut self, other: &Decomposition, factor: &BigUint) {
        for (label, mult) in &other.entries {
            self.add(label.clone(), mult * factor);
        }
    }

    pub fn multiplicity(&self, label: &IrrLabel) -> BigUint {
        self.entries.get(label).cloned().unwrap_or_default()
    }

    pub fn contains(&self, label: &IrrLabel) -> bool {
        self.entries.contains_key(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrLabel, &BigUint)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &IrrLabel> {
        self.entries.keys()
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ N^w · dim(w).
    pub fn total_dim(&self) -> BigUint {
        self.entries.iter().map(|(w, n)| n * w.dim()).sum()
    }

    /// The constituent when this is a single irreducible with multiplicity one.
    pub fn as_irreducible(&self) -> Option<&IrrLabel> {
        match self.entries.iter().next() {
            Some((label, mult)) if self.entries.len() == 1 && mult.is_one() => Some(label),
            _ => None,
        }
    }

    /// Keeps the constituents satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&IrrLabel) -> bool) -> Decomposition {
        Decomposition {
            entries: self
                .entries
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, m)| (l.clone(), m.clone()))
                .collect(),
        }
    }

    /// `self ⊇ other` as multisets.
    pub fn contains_multiset(&self, other: &Decomposition) -> bool {
        other
            .entries
            .iter()
            .all(|(l, m)| self.multiplicity(l) >= *m)
    }
}

impl FromIterator<(IrrLabel, BigUint)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (IrrLabel, BigUint)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (l, m) in iter {
            d.add(l, m);
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (label, mult) in &self.entries {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if mult.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mult}·{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    label: &'a IrrLabel,
    #[serde(serialize_with = "crate::report::big_uint")]
    mult: &'a BigUint,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (label, mult) in &self.entries {
            seq.serialize_element(&Entry { label, mult })?;
        }
        seq.end()
    }
}

/// Integer combination of irreducibles: an element of the representation ring.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct VirtualElement {
    coeffs: BTreeMap<IrrLabel, BigInt>,
}

impl VirtualElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_label(label: IrrLabel) -> Self {
        Self::from_term(label, BigInt::one())
    }

    pub fn from_term(label: IrrLabel, coeff: BigInt) -> Self {
        let mut v = Self::zero();
        v.add_term(label, coeff);
        v
    }

    pub fn add_term(&mut self, label: IrrLabel, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(label.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn coeff(&self, label: &IrrLabel) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrLabel, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &IrrLabel> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    /// The ring homomorphism `dim: R → ℤ`.
    pub fn dim(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(l, c)| c * BigInt::from(l.dim().clone()))
            .sum()
    }

    pub fn scaled(&self, factor: &BigInt) -> VirtualElement {
        let mut out = VirtualElement::zero();
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), c * factor);
        }
        out
    }

    pub fn add(&self, other: &VirtualElement) -> VirtualElement {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &VirtualElement) -> VirtualElement {
        self.add(&other.scaled(&-BigInt::one()))
    }

    /// Bilinear extension of `decompose`.
    pub fn multiply(&self, other: &VirtualElement, ring: &dyn FusionProvider) -> Result<VirtualElement> {
        let mut out = VirtualElement::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let coeff = ca * cb;
                for (w, n) in ring.decompose(a, b)?.iter() {
                    out.add_term(w.clone(), &coeff * BigInt::from(n.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Label-wise conjugation; coefficients are unchanged.
    pub fn conj(&self, ring: &dyn FusionProvider) -> Result<VirtualElement> {
        let mut out = VirtualElement::zero();
        for (l, c) in &self.coeffs {
            out.add_term(ring.conj(l)?, c.clone());
        }
        Ok(out)
    }

    /// Back to a multiset; `None` if some coefficient is negative.
    pub fn to_decomposition(&self) -> Option<Decomposition> {
        if !self.is_effective() {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .map(|(l, c)| (l.clone(), c.magnitude().clone()))
                .collect(),
        )
    }
}

impl From<&Decomposition> for VirtualElement {
    fn from(d: &Decomposition) -> Self {
        let mut v = VirtualElement::zero();
        for (l, m) in d.iter() {
            v.add_term(l.clone(), BigInt::from(m.clone()));
        }
        v
    }
}

impl fmt::Display for VirtualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (label, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.magnitude();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}·{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for VirtualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[derive(Serialize)]
struct Term<'a> {
    label: &'a IrrLabel,
    #[serde(serialize_with = "crate::report::big_int")]
    coeff: &'a BigInt,
}

impl Serialize for VirtualElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (label, coeff) in &self.coeffs {
            seq.serialize_element(&Term { label, coeff })?;
        }
        seq.end()
    }
}
