use std::any::Any;

use num_bigint::BigUint;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, Key};

/// Representation ring of the negative-q real form of U_q(sl₂): two
/// irreducibles `u_{+n}`, `u_{−n}` of dimension n+1 per level, with `u_{+0}`
/// the unit and `u_{−0}` the one-dimensional ι₋₁.
///
/// Products follow Clebsch–Gordan in the level; the sign of every
/// constituent is fixed by a ℤ/4 grading: `(+, even) ↦ 0`, `(+, odd) ↦ 1`,
/// `(−, even) ↦ 2`, `(−, odd) ↦ 3`, and the grade of a product is the sum
/// of the grades. Conjugation negates the grade, so it flips the sign
/// exactly on odd levels.
#[derive(Debug, Clone, Copy, Default)]
pub struct UqSu11;

impl UqSu11 {
    pub fn label(minus: bool, level: u32) -> IrrLabel {
        let id = match (minus, level) {
            (false, 0) => "iota".to_string(),
            (true, 0) => "iota-1".to_string(),
            (false, n) => format!("u+{n}"),
            (true, n) => format!("u-{n}"),
        };
        IrrLabel::new(Key::Signed { minus, level }, id, BigUint::from(level) + 1u32)
    }

    /// ι₋₁.
    pub fn iota_minus() -> IrrLabel {
        Self::label(true, 0)
    }

    pub fn grade(minus: bool, level: u32) -> u8 {
        (u8::from(minus) * 2 + (level % 2) as u8) % 4
    }

    /// Sign (`true` = minus) of the level-k constituents of `(ε,n) ⊗ (δ,m)`.
    pub fn product_sign(eps_minus: bool, n: u32, delta_minus: bool, m: u32) -> bool {
        let g = (Self::grade(eps_minus, n) + Self::grade(delta_minus, m)) % 4;
        g >= 2
    }

    pub fn parts(u: &IrrLabel) -> Result<(bool, u32)> {
        match u.key() {
            Key::Signed { minus, level } => Ok((*minus, *level)),
            _ => Err(unknown(u)),
        }
    }
}

impl FusionProvider for UqSu11 {
    fn name(&self) -> String {
        "uqsu11".into()
    }

    fn unit(&self) -> IrrLabel {
        Self::label(false, 0)
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        let (minus, level) = Self::parts(u)?;
        Ok(Self::label(minus ^ (level % 2 == 1), level))
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (e, n) = Self::parts(u)?;
        let (d, m) = Self::parts(v)?;
        let sign = Self::product_sign(e, n, d, m);
        Ok((n.abs_diff(m)..=n + m)
            .step_by(2)
            .map(|k| (Self::label(sign, k), BigUint::from(1u32)))
            .collect())
    }

    /// `ι, ι₋₁, u₊₁, u₋₁, u₊₂, u₋₂, …`
    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        (0..n)
            .map(|i| Self::label(i % 2 == 1, (i / 2) as u32))
            .collect()
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        Self::parts(u).map_or(usize::MAX, |(_, n)| n as usize)
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        Self::parts(u).map(|_| ())
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let t = text.trim();
        match t {
            "iota" | "ι" | "1" => return Ok(self.unit()),
            "iota-1" | "ι-1" | "ι₋₁" => return Ok(Self::iota_minus()),
            _ => {}
        }
        let bad = || FusionError::UnknownLabel(t.to_string());
        let rest = t.strip_prefix('u').ok_or_else(bad)?;
        let (minus, digits) = match rest.chars().next() {
            Some('+') => (false, &rest[1..]),
            Some('-') => (true, &rest[1..]),
            _ => (false, rest),
        };
        let level = digits.parse::<u32>().map_err(|_| bad())?;
        Ok(Self::label(minus, level))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(d: &Decomposition) -> Vec<String> {
        d.labels().map(|l| l.id().to_string()).collect()
    }

    #[test]
    fn quoted_products() {
        let r = UqSu11;
        let up = UqSu11::label(false, 1);
        let um = UqSu11::label(true, 1);
        assert_eq!(ids(&r.decompose(&um, &up).unwrap()), ["iota", "u+2"]);
        assert_eq!(ids(&r.decompose(&um, &um).unwrap()), ["iota-1", "u-2"]);
        assert_eq!(ids(&r.decompose(&up, &up).unwrap()), ["iota-1", "u-2"]);
        for n in 0..6 {
            assert_eq!(
                r.decompose(&UqSu11::iota_minus(), &UqSu11::label(false, n)).unwrap(),
                Decomposition::single(UqSu11::label(true, n))
            );
        }
        let two_plus = UqSu11::label(false, 2);
        let two_minus = UqSu11::label(true, 2);
        assert_eq!(ids(&r.decompose(&two_plus, &two_minus).unwrap()), ["iota-1", "u-2", "u-4"]);
    }

    #[test]
    fn u_plus_one_is_not_self_conjugate() {
        let up = UqSu11::label(false, 1);
        assert_eq!(r_mult(&UqSu11.unit(), &up, &up), 0);
        assert_eq!(UqSu11.conj(&up).unwrap(), UqSu11::label(true, 1));
        assert_eq!(UqSu11.conj(&UqSu11::label(true, 2)).unwrap(), UqSu11::label(true, 2));
    }

    fn r_mult(w: &IrrLabel, u: &IrrLabel, v: &IrrLabel) -> u32 {
        u32::try_from(UqSu11.multiplicity(w, u, v).unwrap()).unwrap()
    }

    #[test]
    fn sign_depends_only_on_sign_and_parity() {
        for e in [false, true] {
            for d in [false, true] {
                for n in 0..=8u32 {
                    for m in 0..=8u32 {
                        let signs: Vec<bool> = UqSu11
                            .decompose(&UqSu11::label(e, n), &UqSu11::label(d, m))
                            .unwrap()
                            .labels()
                            .map(|l| UqSu11::parts(l).unwrap().0)
                            .collect();
                        let reference = UqSu11::product_sign(e, n % 2, d, m % 2);
                        assert!(signs.iter().all(|&s| s == reference), "({e},{n})⊗({d},{m})");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_accepts_aliases() {
        assert_eq!(UqSu11.parse_label("ι₋₁").unwrap(), UqSu11::iota_minus());
        assert_eq!(UqSu11.parse_label("u-0").unwrap(), UqSu11::iota_minus());
        assert_eq!(UqSu11.parse_label("u3").unwrap(), UqSu11::label(false, 3));
        assert!(UqSu11.parse_label("v3").is_err());
    }
}
