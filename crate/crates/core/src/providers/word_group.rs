use std::any::Any;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, Key, Order, Syllable};

/// Order of one cyclic factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cyclic {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Cyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cyclic::Finite(m) => write!(f, "Z{m}"),
            Cyclic::Infinite => f.write_str("Z"),
        }
    }
}

/// A free product of cyclic groups, `ℤ_{m₁} ∗ ℤ_{m₂} ∗ … ` (ℤ allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordGroupSpec {
    pub factors: Vec<Cyclic>,
}

impl WordGroupSpec {
    pub fn new(factors: Vec<Cyclic>) -> Result<Self> {
        if factors.is_empty() {
            return Err(FusionError::BadParameter("word group needs at least one factor".into()));
        }
        if factors.len() > 26 {
            return Err(FusionError::BadParameter("at most 26 factors are supported".into()));
        }
        if let Some(Cyclic::Finite(m)) = factors.iter().find(|f| matches!(f, Cyclic::Finite(m) if *m < 2)) {
            return Err(FusionError::BadParameter(format!("cyclic factor of order {m}")));
        }
        Ok(WordGroupSpec { factors })
    }

    /// Parses `Z2*Z2`, `Z2*Z`, `Z3*Z4*Z`; `offset` positions parse errors.
    pub fn parse(text: &str, offset: usize) -> Result<Self> {
        let mut factors = Vec::new();
        let mut pos = offset;
        for part in text.split('*') {
            let p = part.trim();
            let digits = p
                .strip_prefix('Z')
                .ok_or_else(|| FusionError::parse(pos, format!("expected `Z<m>` or `Z`, found `{p}`")))?;
            if digits.is_empty() {
                factors.push(Cyclic::Infinite);
            } else {
                let m: u32 = digits
                    .parse()
                    .map_err(|_| FusionError::parse(pos + 1, format!("bad cyclic order `{digits}`")))?;
                if m < 2 {
                    return Err(FusionError::parse(pos + 1, format!("cyclic order must be at least 2, got {m}")));
                }
                factors.push(Cyclic::Finite(m));
            }
            pos += part.len() + 1;
        }
        Self::new(factors)
    }
}

impl fmt::Display for WordGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Group ring of a free product of cyclic groups; irreducibles are reduced
/// words, written with letter `a` for the first factor, `b` for the second, …
///
/// Enumeration is by word length (a syllable `g^e` of ℤ_m has length
/// `min(e, m−e)`, of ℤ length `|e|`), then lexicographically by factor,
/// syllable length and sign.
#[derive(Clone, Debug)]
pub struct WordGroup {
    spec: WordGroupSpec,
}

impl WordGroup {
    pub fn new(spec: WordGroupSpec) -> Self {
        WordGroup { spec }
    }

    pub fn spec(&self) -> &WordGroupSpec {
        &self.spec
    }

    pub fn factor(&self, i: u16) -> Cyclic {
        self.spec.factors[i as usize]
    }

    /// Reduces `exp` into the canonical range of factor `i`; `None` for the identity.
    pub fn normalize(&self, factor: u16, exp: i64) -> Option<Syllable> {
        let exp = match self.factor(factor) {
            Cyclic::Finite(m) => exp.rem_euclid(m as i64),
            Cyclic::Infinite => exp,
        };
        (exp != 0).then_some(Syllable { factor, exp })
    }

    pub fn syllable_length(&self, s: Syllable) -> usize {
        match self.factor(s.factor) {
            Cyclic::Finite(m) => s.exp.min(m as i64 - s.exp) as usize,
            Cyclic::Infinite => s.exp.unsigned_abs() as usize,
        }
    }

    pub fn word_length(&self, w: &[Syllable]) -> usize {
        w.iter().map(|&s| self.syllable_length(s)).sum()
    }

    pub fn label(&self, word: Vec<Syllable>) -> IrrLabel {
        let id = if word.is_empty() {
            "1".to_string()
        } else {
            word.iter()
                .map(|s| {
                    let letter = (b'a' + s.factor as u8) as char;
                    if s.exp == 1 {
                        letter.to_string()
                    } else {
                        format!("{letter}^{}", s.exp)
                    }
                })
                .collect()
        };
        IrrLabel::new(Key::Word(word), id, BigUint::from(1u32))
    }

    /// Generator of factor `i`.
    pub fn generator(&self, i: u16) -> IrrLabel {
        self.label(vec![Syllable { factor: i, exp: 1 }])
    }

    pub fn word(u: &IrrLabel) -> Result<&[Syllable]> {
        match u.key() {
            Key::Word(w) => Ok(w),
            _ => Err(unknown(u)),
        }
    }

    pub fn multiply_words(&self, a: &[Syllable], b: &[Syllable]) -> Vec<Syllable> {
        let mut out = a.to_vec();
        for &s in b {
            match out.last().copied() {
                Some(top) if top.factor == s.factor => {
                    out.pop();
                    if let Some(merged) = self.normalize(s.factor, top.exp + s.exp) {
                        out.push(merged);
                    }
                }
                _ => out.push(s),
            }
        }
        out
    }

    pub fn inverse_word(&self, w: &[Syllable]) -> Vec<Syllable> {
        w.iter()
            .rev()
            .filter_map(|s| self.normalize(s.factor, -s.exp))
            .collect()
    }

    pub fn power_word(&self, w: &[Syllable], k: u64) -> Vec<Syllable> {
        let mut acc = Vec::new();
        for _ in 0..k {
            acc = self.multiply_words(&acc, w);
        }
        acc
    }

    /// Cyclic reduction: a conjugate of `w` whose first and last syllables
    /// lie in different factors (or of length ≤ 1).
    pub fn cyclically_reduce(&self, w: &[Syllable]) -> Vec<Syllable> {
        let mut w = w.to_vec();
        while w.len() >= 2 && w[0].factor == w[w.len() - 1].factor {
            let last = w.pop().expect("len ≥ 2");
            let first = w.remove(0);
            if let Some(merged) = self.normalize(first.factor, first.exp + last.exp) {
                w.insert(0, merged);
            }
        }
        w
    }

    fn validate_word(&self, w: &[Syllable]) -> bool {
        w.iter().all(|s| {
            (s.factor as usize) < self.spec.factors.len() && self.normalize(s.factor, s.exp) == Some(*s)
        }) && w.windows(2).all(|p| p[0].factor != p[1].factor)
    }

    /// Syllables of factor `f` with length exactly `len`, in enumeration order.
    fn syllables_of_length(&self, f: u16, len: usize) -> Vec<Syllable> {
        if len == 0 {
            return Vec::new();
        }
        let l = len as i64;
        match self.factor(f) {
            Cyclic::Finite(m) => {
                let m = m as i64;
                if 2 * l > m {
                    Vec::new()
                } else if 2 * l == m {
                    vec![Syllable { factor: f, exp: l }]
                } else {
                    vec![Syllable { factor: f, exp: l }, Syllable { factor: f, exp: m - l }]
                }
            }
            Cyclic::Infinite => vec![Syllable { factor: f, exp: l }, Syllable { factor: f, exp: -l }],
        }
    }

    fn words_of_length(&self, len: usize, prev: Option<u16>, out: &mut Vec<Vec<Syllable>>, prefix: &mut Vec<Syllable>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        for f in 0..self.spec.factors.len() as u16 {
            if Some(f) == prev {
                continue;
            }
            for l in 1..=len {
                for s in self.syllables_of_length(f, l) {
                    prefix.push(s);
                    self.words_of_length(len - l, Some(f), out, prefix, cap);
                    prefix.pop();
                }
            }
        }
    }
}

impl FusionProvider for WordGroup {
    fn name(&self) -> String {
        format!("word:{}", self.spec)
    }

    fn unit(&self) -> IrrLabel {
        self.label(Vec::new())
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        self.validate(u)?;
        Ok(self.label(self.inverse_word(Self::word(u)?)))
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        self.validate(u)?;
        self.validate(v)?;
        let w = self.multiply_words(Self::word(u)?, Self::word(v)?);
        Ok(Decomposition::single(self.label(w)))
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        let mut out = Vec::with_capacity(n);
        for len in 0.. {
            if out.len() >= n {
                break;
            }
            let mut words = Vec::new();
            self.words_of_length(len, None, &mut words, &mut Vec::new(), n - out.len());
            if words.is_empty() && len > 0 {
                // only a single finite factor can run out of words
                break;
            }
            out.extend(words.into_iter().map(|w| self.label(w)));
        }
        out.truncate(n);
        out
    }

    fn cardinality(&self) -> Option<usize> {
        match self.spec.factors.as_slice() {
            [Cyclic::Finite(m)] => Some(*m as usize),
            _ => None,
        }
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        Self::word(u).map_or(usize::MAX, |w| self.word_length(w))
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        if self.validate_word(Self::word(u)?) {
            Ok(())
        } else {
            Err(unknown(u))
        }
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let t = text.trim();
        if matches!(t, "1" | "e" | "ι" | "iota") {
            return Ok(self.unit());
        }
        let bad = || FusionError::UnknownLabel(t.to_string());
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0;
        let mut word = Vec::new();
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_lowercase() {
                return Err(bad());
            }
            let factor = (c as u8 - b'a') as u16;
            if factor as usize >= self.spec.factors.len() {
                return Err(bad());
            }
            i += 1;
            let mut exp = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                exp = s.parse().map_err(|_| bad())?;
            }
            let syl: Vec<Syllable> = self.normalize(factor, exp).into_iter().collect();
            word = self.multiply_words(&word, &syl);
        }
        if chars.is_empty() {
            return Err(bad());
        }
        Ok(self.label(word))
    }

    /// Identity ↦ 1; a cyclically reduced single syllable of ℤ_m ↦ its order
    /// in ℤ_m; everything else has infinite order.
    fn order_oracle(&self, u: &IrrLabel) -> Result<Option<Order>> {
        self.validate(u)?;
        let w = self.cyclically_reduce(Self::word(u)?);
        Ok(Some(match w.as_slice() {
            [] => Order::Finite(1),
            [s] => match self.factor(s.factor) {
                Cyclic::Finite(m) => Order::Finite(m as u64 / (s.exp as u64).gcd(&(m as u64))),
                Cyclic::Infinite => Order::Infinite,
            },
            _ => Order::Infinite,
        }))
    }

    fn is_group_like(&self) -> bool {
        true
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(spec: &str) -> WordGroup {
        WordGroup::new(WordGroupSpec::parse(spec, 0).unwrap())
    }

    #[test]
    fn dihedral_orders() {
        let g = group("Z2*Z2");
        let a = g.parse_label("a").unwrap();
        let ab = g.parse_label("ab").unwrap();
        assert_eq!(g.order_oracle(&a).unwrap(), Some(Order::Finite(2)));
        assert_eq!(g.order_oracle(&ab).unwrap(), Some(Order::Infinite));
        // (ab)^k never returns to the identity
        let w = WordGroup::word(&ab).unwrap();
        for k in 1..=64 {
            assert!(!g.power_word(w, k).is_empty());
        }
        assert_eq!(g.order_oracle(&g.parse_label("bab").unwrap()).unwrap(), Some(Order::Finite(2)));
    }

    #[test]
    fn enumeration_by_length() {
        let g = group("Z2*Z2");
        let ids: Vec<String> = g.enumerate(7).iter().map(|l| l.id().to_string()).collect();
        assert_eq!(ids, ["1", "a", "b", "ab", "ba", "aba", "bab"]);
        let h = group("Z2*Z");
        let ids: Vec<String> = h.enumerate(6).iter().map(|l| l.id().to_string()).collect();
        assert_eq!(ids, ["1", "a", "b", "b^-1", "ab", "ab^-1"]);
        assert_eq!(group("Z5").enumerate(100).len(), 5);
    }

    #[test]
    fn multiplication_reduces() {
        let g = group("Z3*Z");
        let x = g.parse_label("a^2b").unwrap();
        let y = g.parse_label("b^-1a").unwrap();
        assert_eq!(g.decompose(&x, &y).unwrap(), Decomposition::single(g.unit()));
        assert_eq!(g.conj(&x).unwrap().id(), "b^-1a");
        assert_eq!(g.parse_label("aa").unwrap().id(), "a^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match WordGroupSpec::parse("Z2*Q3", 5) {
            Err(FusionError::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("{other:?}"),
        }
        assert!(WordGroupSpec::parse("Z1", 0).is_err());
    }
}
