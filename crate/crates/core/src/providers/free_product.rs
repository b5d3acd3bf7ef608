use std::any::Any;
use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FreeLetter, FusionProvider, IrrLabel, Key, Order};

/// How many labels of each factor are sampled to decide whether letter ids
/// need a factor prefix.
const COLLISION_PROBE: usize = 64;

/// Free product of two fusion rings. Irreducibles are alternating words of
/// nontrivial irreducibles of the factors; at a junction of two letters
/// `a`, `b` from the same factor,
///
/// ```text
/// w·a ⊗ b·w′ = Σ_{c ≠ ι} N^c_{ab} · w·c·w′  +  N^ι_{ab} · (w ⊗ w′)
/// ```
///
/// Letters are joined with `·`; when the factors' label ids could collide,
/// every letter is written `1:x` or `2:y`.
///
/// Enumeration is by weight (sum over letters of their position in the
/// factor's enumeration), then word length, then lexicographically.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    factors: [Arc<dyn FusionProvider>; 2],
    prefixed: bool,
}

impl FreeProduct {
    pub fn new(left: Arc<dyn FusionProvider>, right: Arc<dyn FusionProvider>) -> Self {
        let a: HashSet<String> = left
            .enumerate(COLLISION_PROBE)
            .iter()
            .map(|l| l.id().to_string())
            .collect();
        let prefixed = right.enumerate(COLLISION_PROBE).iter().any(|l| a.contains(l.id()));
        FreeProduct {
            factors: [left, right],
            prefixed,
        }
    }

    pub fn factor(&self, i: usize) -> &Arc<dyn FusionProvider> {
        &self.factors[i]
    }

    pub fn word(u: &IrrLabel) -> Result<&[FreeLetter]> {
        match u.key() {
            Key::Free(w) => Ok(w),
            _ => Err(unknown(u)),
        }
    }

    fn letter_text(&self, l: &FreeLetter) -> String {
        let id = l.label.id();
        let body = if id.contains(['·', '(', ')', ',', ':']) {
            format!("({id})")
        } else {
            id.to_string()
        };
        if self.prefixed {
            format!("{}:{body}", l.factor + 1)
        } else {
            body
        }
    }

    pub fn label(&self, word: Vec<FreeLetter>) -> IrrLabel {
        let id = if word.is_empty() {
            "1".to_string()
        } else {
            word.iter().map(|l| self.letter_text(l)).collect::<Vec<_>>().join("·")
        };
        let dim = word.iter().map(|l| l.label.dim().clone()).product::<BigUint>();
        IrrLabel::new(Key::Free(word), id, dim)
    }

    /// The one-letter word for an irreducible of factor `i` (ι maps to ι).
    pub fn embed(&self, i: usize, x: &IrrLabel) -> Result<IrrLabel> {
        self.factors[i].validate(x)?;
        if *x == self.factors[i].unit() {
            return Ok(self.unit());
        }
        Ok(self.label(vec![FreeLetter {
            factor: i as u8,
            label: x.clone(),
        }]))
    }

    fn is_unit_of(&self, l: &FreeLetter) -> bool {
        l.label == self.factors[l.factor as usize].unit()
    }

    fn check_word(&self, w: &[FreeLetter]) -> Result<()> {
        for l in w {
            if l.factor > 1 || self.is_unit_of(l) {
                return Err(FusionError::UnknownLabel(l.label.id().to_string()));
            }
            self.factors[l.factor as usize].validate(&l.label)?;
        }
        if w.windows(2).any(|p| p[0].factor == p[1].factor) {
            return Err(FusionError::UnknownLabel("non-alternating free-product word".into()));
        }
        Ok(())
    }

    fn accumulate(&self, left: &[FreeLetter], right: &[FreeLetter], coeff: &BigUint, out: &mut Decomposition) -> Result<()> {
        let (Some(a), Some(b)) = (left.last(), right.first()) else {
            let mut w = left.to_vec();
            w.extend_from_slice(right);
            out.add(self.label(w), coeff.clone());
            return Ok(());
        };
        if a.factor != b.factor {
            let mut w = left.to_vec();
            w.extend_from_slice(right);
            out.add(self.label(w), coeff.clone());
            return Ok(());
        }
        let ring = &self.factors[a.factor as usize];
        let head = &left[..left.len() - 1];
        let tail = &right[1..];
        for (c, n) in ring.decompose(&a.label, &b.label)?.iter() {
            let scaled = coeff * n;
            if *c == ring.unit() {
                self.accumulate(head, tail, &scaled, out)?;
            } else {
                let mut w = head.to_vec();
                w.push(FreeLetter {
                    factor: a.factor,
                    label: c.clone(),
                });
                w.extend_from_slice(tail);
                out.add(self.label(w), scaled);
            }
        }
        Ok(())
    }

    /// All words of exact `weight`, where letter `k` of a factor's
    /// enumeration weighs `k`.
    fn words_of_weight(&self, weight: usize, prev: Option<u8>, pools: &[Vec<IrrLabel>; 2], prefix: &mut Vec<FreeLetter>, out: &mut Vec<Vec<FreeLetter>>) {
        if weight == 0 {
            out.push(prefix.clone());
            return;
        }
        for f in 0..2u8 {
            if Some(f) == prev {
                continue;
            }
            for (k, label) in pools[f as usize].iter().enumerate().skip(1).take(weight) {
                prefix.push(FreeLetter {
                    factor: f,
                    label: label.clone(),
                });
                self.words_of_weight(weight - k, Some(f), pools, prefix, out);
                prefix.pop();
            }
        }
    }

    fn letter_order(&self, l: &FreeLetter) -> Result<Option<Order>> {
        self.factors[l.factor as usize].order_oracle(&l.label)
    }
}

impl FusionProvider for FreeProduct {
    fn name(&self) -> String {
        format!("free({},{})", self.factors[0].name(), self.factors[1].name())
    }

    fn unit(&self) -> IrrLabel {
        self.label(Vec::new())
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        let w = Self::word(u)?;
        self.check_word(w)?;
        let rev = w
            .iter()
            .rev()
            .map(|l| {
                Ok(FreeLetter {
                    factor: l.factor,
                    label: self.factors[l.factor as usize].conj(&l.label)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.label(rev))
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (a, b) = (Self::word(u)?, Self::word(v)?);
        self.check_word(a)?;
        self.check_word(b)?;
        let mut out = Decomposition::new();
        self.accumulate(a, b, &BigUint::one(), &mut out)?;
        Ok(out)
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        let mut out = Vec::with_capacity(n);
        let finite = self.cardinality();
        for weight in 0.. {
            if out.len() >= n || finite.is_some_and(|c| out.len() >= c) {
                break;
            }
            let pools = [self.factors[0].enumerate(weight + 1), self.factors[1].enumerate(weight + 1)];
            let mut words = Vec::new();
            self.words_of_weight(weight, None, &pools, &mut Vec::new(), &mut words);
            words.sort_by(|x, y| {
                x.len().cmp(&y.len()).then_with(|| {
                    let key = |w: &Vec<FreeLetter>| -> Vec<(u8, usize)> {
                        w.iter()
                            .map(|l| {
                                let pos = pools[l.factor as usize].iter().position(|p| *p == l.label).unwrap_or(usize::MAX);
                                (l.factor, pos)
                            })
                            .collect()
                    };
                    key(x).cmp(&key(y))
                })
            });
            out.extend(words.into_iter().map(|w| self.label(w)));
            if weight > 0 && finite == Some(out.len()) {
                break;
            }
        }
        out.truncate(n);
        out
    }

    fn cardinality(&self) -> Option<usize> {
        match (self.factors[0].cardinality(), self.factors[1].cardinality()) {
            (Some(1), other) | (other, Some(1)) => other,
            _ => None,
        }
    }

    /// Sum over letters of `max(1, factor size)`.
    fn label_size(&self, u: &IrrLabel) -> usize {
        Self::word(u).map_or(usize::MAX, |w| {
            w.iter()
                .map(|l| self.factors[l.factor as usize].label_size(&l.label).max(1))
                .fold(0usize, usize::saturating_add)
        })
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        self.check_word(Self::word(u)?)
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let t = text.trim();
        if matches!(t, "1" | "ι" | "iota") {
            return Ok(self.unit());
        }
        let mut acc = Decomposition::single(self.unit());
        for token in split_letters(t)? {
            let (forced, body) = match token.split_once(':') {
                Some(("1", rest)) => (Some(0), rest),
                Some(("2", rest)) => (Some(1), rest),
                _ => (None, token.as_str()),
            };
            let body = strip_parens(body);
            let candidates: Vec<(usize, IrrLabel)> = (0..2)
                .filter(|i| forced.is_none_or(|f| f == *i))
                .filter_map(|i| self.factors[i].parse_label(body).ok().map(|l| (i, l)))
                .collect();
            let (i, x) = match candidates.as_slice() {
                [one] => one.clone(),
                [] => return Err(FusionError::UnknownLabel(t.to_string())),
                _ => {
                    return Err(FusionError::UnknownLabel(format!(
                        "`{body}` is ambiguous in {}; prefix it with 1: or 2:",
                        self.name()
                    )))
                }
            };
            let letter = self.embed(i, &x)?;
            let next = acc.as_irreducible().cloned().ok_or_else(|| FusionError::UnknownLabel(t.to_string()))?;
            acc = self.decompose(&next, &letter)?;
        }
        acc.as_irreducible()
            .cloned()
            .ok_or_else(|| FusionError::UnknownLabel(format!("`{t}` is not a reduced word")))
    }

    /// Defined when both factors are group-like: a cyclically reduced word
    /// of length ≥ 2 has infinite order; a single letter inherits its order.
    fn order_oracle(&self, u: &IrrLabel) -> Result<Option<Order>> {
        if !self.is_group_like() {
            return Ok(None);
        }
        let mut w = Self::word(u)?.to_vec();
        self.check_word(&w)?;
        while w.len() >= 2 && w[0].factor == w[w.len() - 1].factor {
            let last = w.pop().expect("len ≥ 2");
            let first = w.remove(0);
            let ring = &self.factors[first.factor as usize];
            let product = ring.decompose(&last.label, &first.label)?;
            let p = product
                .as_irreducible()
                .ok_or_else(|| FusionError::UnsupportedProvider(format!("{} is not group-like", ring.name())))?
                .clone();
            if p != ring.unit() {
                w.insert(
                    0,
                    FreeLetter {
                        factor: first.factor,
                        label: p,
                    },
                );
            }
        }
        match w.as_slice() {
            [] => Ok(Some(Order::Finite(1))),
            [l] => self.letter_order(l),
            _ => Ok(Some(Order::Infinite)),
        }
    }

    fn is_group_like(&self) -> bool {
        self.factors.iter().all(|f| f.is_group_like())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Splits at top-level `·`, `.` and `*` separators.
fn split_letters(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(FusionError::UnknownLabel(text.to_string()));
                }
                cur.push(c);
            }
            '·' | '.' | '*' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(FusionError::UnknownLabel(text.to_string()));
    }
    out.push(cur);
    let out: Vec<String> = out.into_iter().map(|s| s.trim().to_string()).collect();
    if out.iter().any(String::is_empty) {
        return Err(FusionError::UnknownLabel(text.to_string()));
    }
    Ok(out)
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        // only strip when the outer pair matches
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::providers::{So3, WordGroup, WordGroupSpec};

    fn so3_z2() -> FreeProduct {
        let z2 = WordGroup::new(WordGroupSpec::parse("Z2", 0).unwrap());
        FreeProduct::new(Arc::new(So3), Arc::new(z2))
    }

    #[test]
    fn conjugated_reflection_is_irreducible() {
        let r = so3_z2();
        let w = r.parse_label("v1·a·v1").unwrap();
        assert_eq!(w.dim(), &BigUint::from(9u32));
        assert_eq!(w.id(), "v1·a·v1");
        let v1 = r.parse_label("v1").unwrap();
        let g = r.parse_label("a").unwrap();
        let left = r.decompose(&v1, &g).unwrap();
        assert_eq!(left.as_irreducible().unwrap().id(), "v1·a");
    }

    #[test]
    fn junction_recursion() {
        let r = so3_z2();
        let x = r.parse_label("v1·a").unwrap();
        let y = r.parse_label("a·v1").unwrap();
        let ids: Vec<String> = r.decompose(&x, &y).unwrap().labels().map(|l| l.id().to_string()).collect();
        assert_eq!(ids, ["1", "v1", "v2"]);
    }

    #[test]
    fn enumeration_starts_with_letters() {
        let r = so3_z2();
        let ids: Vec<String> = r.enumerate(6).iter().map(|l| l.id().to_string()).collect();
        assert_eq!(ids, ["1", "v1", "a", "v2", "v1·a", "a·v1"]);
    }

    #[test]
    fn colliding_factor_ids_are_prefixed() {
        let z2 = || Arc::new(WordGroup::new(WordGroupSpec::parse("Z2", 0).unwrap())) as Arc<dyn FusionProvider>;
        let r = FreeProduct::new(z2(), z2());
        let w = r.parse_label("1:a·2:a").unwrap();
        assert_eq!(w.id(), "1:a·2:a");
        assert!(r.parse_label("a").is_err());
        assert_eq!(r.order_oracle(&w).unwrap(), Some(Order::Infinite));
    }
}
