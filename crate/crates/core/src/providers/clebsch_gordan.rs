use std::any::Any;

use num_bigint::BigUint;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, Key};

fn level_of(u: &IrrLabel) -> Result<u32> {
    match u.key() {
        Key::Level(n) => Ok(*n),
        _ => Err(unknown(u)),
    }
}

fn parse_level(text: &str, prefix: char) -> Result<u32> {
    let text = text.trim();
    text.strip_prefix(prefix)
        .and_then(|rest| rest.parse::<u32>().ok())
        .ok_or_else(|| FusionError::UnknownLabel(text.to_string()))
}

/// SU_q(2) for generic q: irreducibles `u_n` of dimension n+1, all
/// self-conjugate, with Clebsch–Gordan fusion
/// `u_m ⊗ u_n = u_{|m−n|} ⊕ u_{|m−n|+2} ⊕ … ⊕ u_{m+n}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuQ2;

impl SuQ2 {
    pub fn label(n: u32) -> IrrLabel {
        IrrLabel::new(Key::Level(n), format!("u{n}"), BigUint::from(n) + 1u32)
    }
}

impl FusionProvider for SuQ2 {
    fn name(&self) -> String {
        "suq2".into()
    }

    fn unit(&self) -> IrrLabel {
        Self::label(0)
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        self.validate(u)?;
        Ok(u.clone())
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (m, n) = (level_of(u)?, level_of(v)?);
        Ok((m.abs_diff(n)..=m + n)
            .step_by(2)
            .map(|k| (Self::label(k), BigUint::from(1u32)))
            .collect())
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        (0..n as u32).map(Self::label).collect()
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        level_of(u).map_or(usize::MAX, |n| n as usize)
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        level_of(u).map(|_| ())
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        parse_level(text, 'u').map(Self::label)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Even part of SU_q(2): `v_k = u_{2k}` of dimension 2k+1, with
/// `v_a ⊗ v_b = v_{|a−b|} ⊕ v_{|a−b|+1} ⊕ … ⊕ v_{a+b}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct So3;

impl So3 {
    pub fn label(k: u32) -> IrrLabel {
        IrrLabel::new(Key::Level(k), format!("v{k}"), BigUint::from(2 * k + 1))
    }
}

impl FusionProvider for So3 {
    fn name(&self) -> String {
        "so3".into()
    }

    fn unit(&self) -> IrrLabel {
        Self::label(0)
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        self.validate(u)?;
        Ok(u.clone())
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (a, b) = (level_of(u)?, level_of(v)?);
        Ok((a.abs_diff(b)..=a + b)
            .map(|k| (Self::label(k), BigUint::from(1u32)))
            .collect())
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        (0..n as u32).map(Self::label).collect()
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        level_of(u).map_or(usize::MAX, |k| k as usize)
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        level_of(u).map(|_| ())
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        parse_level(text, 'v').map(Self::label)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
