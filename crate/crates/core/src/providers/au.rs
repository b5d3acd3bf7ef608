use std::any::Any;

use num_bigint::BigUint;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{AuLetter, Decomposition, FusionProvider, IrrLabel, Key};

/// Fusion ring of the free unitary quantum group A_u(F): irreducibles are
/// words in `u` and `ū`, with
///
/// ```text
/// xu ⊗ ūy = xuūy + x ⊗ y      xu ⊗ uy = xu²y
/// ```
///
/// and the same with `u` and `ū` exchanged. The fusion rules do not depend
/// on F; only the dimensions do, through `dim u = dim ū = generator_dim`.
#[derive(Debug, Clone, Copy)]
pub struct AuRing {
    generator_dim: u32,
}

impl Default for AuRing {
    fn default() -> Self {
        AuRing { generator_dim: 2 }
    }
}

impl AuRing {
    pub fn new(generator_dim: u32) -> Result<Self> {
        if generator_dim < 2 {
            return Err(FusionError::BadParameter(format!(
                "A_u generator dimension must be at least 2, got {generator_dim}"
            )));
        }
        Ok(AuRing { generator_dim })
    }

    pub fn generator_dim(&self) -> u32 {
        self.generator_dim
    }

    /// Label for `word`; the dimension follows from peeling off the last
    /// letter: `dim(xab) = d·dim(xa) − [a ≠ b]·dim(x)`.
    pub fn label(&self, word: Vec<AuLetter>) -> IrrLabel {
        let d = BigUint::from(self.generator_dim);
        let mut prev = BigUint::from(1u32);
        let mut cur = BigUint::from(1u32);
        for (i, letter) in word.iter().enumerate() {
            let next = if i > 0 && word[i - 1] != *letter {
                &d * &cur - &prev
            } else {
                &d * &cur
            };
            prev = std::mem::replace(&mut cur, next);
        }
        let id = if word.is_empty() {
            "1".to_string()
        } else {
            word.iter()
                .map(|l| match l {
                    AuLetter::U => 'u',
                    AuLetter::UBar => 'ū',
                })
                .collect()
        };
        IrrLabel::new(Key::AuWord(word), id, cur)
    }

    pub fn u(&self) -> IrrLabel {
        self.label(vec![AuLetter::U])
    }

    pub fn ubar(&self) -> IrrLabel {
        self.label(vec![AuLetter::UBar])
    }

    /// `ū^r u^r`.
    pub fn balanced_power(&self, r: usize) -> IrrLabel {
        let mut w = vec![AuLetter::UBar; r];
        w.extend(std::iter::repeat(AuLetter::U).take(r));
        self.label(w)
    }

    pub fn word(u: &IrrLabel) -> Result<&[AuLetter]> {
        match u.key() {
            Key::AuWord(w) => Ok(w),
            _ => Err(unknown(u)),
        }
    }

    /// Whether `u` has as many `u` letters as `ū` letters.
    pub fn is_balanced(u: &IrrLabel) -> Result<bool> {
        let w = Self::word(u)?;
        let ups = w.iter().filter(|&&l| l == AuLetter::U).count();
        Ok(2 * ups == w.len())
    }

    fn words_of_length(len: usize) -> impl Iterator<Item = Vec<AuLetter>> {
        (0u64..1 << len).map(move |bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        AuLetter::U
                    } else {
                        AuLetter::UBar
                    }
                })
                .collect()
        })
    }
}

impl FusionProvider for AuRing {
    fn name(&self) -> String {
        if self.generator_dim == 2 {
            "au".into()
        } else {
            format!("au:{}", self.generator_dim)
        }
    }

    fn unit(&self) -> IrrLabel {
        self.label(Vec::new())
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        let w = Self::word(u)?;
        Ok(self.label(w.iter().rev().map(|l| l.swapped()).collect()))
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let left = Self::word(u)?;
        let right = Self::word(v)?;
        let mut out = Decomposition::new();
        let (mut l, mut r) = (left.len(), 0);
        loop {
            let mut w = left[..l].to_vec();
            w.extend_from_slice(&right[r..]);
            out.add(self.label(w), BigUint::from(1u32));
            // the remainder x ⊗ y appears only across a u|ū junction
            if l == 0 || r == right.len() || left[l - 1] == right[r] {
                break;
            }
            l -= 1;
            r += 1;
        }
        Ok(out)
    }

    /// Words by length, then lexicographically with `u < ū`.
    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        let mut out = Vec::with_capacity(n);
        for len in 0.. {
            for w in Self::words_of_length(len) {
                if out.len() == n {
                    return out;
                }
                out.push(self.label(w));
            }
        }
        out
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    /// `max(#u, #ū)`.
    fn label_size(&self, u: &IrrLabel) -> usize {
        Self::word(u).map_or(usize::MAX, |w| {
            let ups = w.iter().filter(|&&l| l == AuLetter::U).count();
            ups.max(w.len() - ups)
        })
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        Self::word(u).map(|_| ())
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let t = text.trim();
        if matches!(t, "1" | "ι" | "iota") {
            return Ok(self.unit());
        }
        let word = t
            .chars()
            .map(|c| match c {
                'u' => Ok(AuLetter::U),
                'U' | 'ū' => Ok(AuLetter::UBar),
                _ => Err(FusionError::UnknownLabel(t.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if word.is_empty() {
            return Err(FusionError::UnknownLabel(t.to_string()));
        }
        Ok(self.label(word))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
