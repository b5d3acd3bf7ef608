use std::any::Any;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, Key, Order};

/// Direct product: irreducibles are pairs `(x,y)` with componentwise fusion.
/// Enumeration walks the diagonals `i + j = s` of the two factor
/// enumerations, `i` ascending.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    factors: [Arc<dyn FusionProvider>; 2],
}

impl DirectProduct {
    pub fn new(left: Arc<dyn FusionProvider>, right: Arc<dyn FusionProvider>) -> Self {
        DirectProduct {
            factors: [left, right],
        }
    }

    pub fn factor(&self, i: usize) -> &Arc<dyn FusionProvider> {
        &self.factors[i]
    }

    pub fn pair(&self, x: IrrLabel, y: IrrLabel) -> IrrLabel {
        let id = format!("({},{})", x.id(), y.id());
        let dim = x.dim() * y.dim();
        IrrLabel::new(Key::Pair(x, y), id, dim)
    }

    pub fn parts(u: &IrrLabel) -> Result<(&IrrLabel, &IrrLabel)> {
        match u.key() {
            Key::Pair(x, y) => Ok((x, y)),
            _ => Err(unknown(u)),
        }
    }
}

impl FusionProvider for DirectProduct {
    fn name(&self) -> String {
        format!("prod({},{})", self.factors[0].name(), self.factors[1].name())
    }

    fn unit(&self) -> IrrLabel {
        self.pair(self.factors[0].unit(), self.factors[1].unit())
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        let (x, y) = Self::parts(u)?;
        Ok(self.pair(self.factors[0].conj(x)?, self.factors[1].conj(y)?))
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (x1, y1) = Self::parts(u)?;
        let (x2, y2) = Self::parts(v)?;
        let dx = self.factors[0].decompose(x1, x2)?;
        let dy = self.factors[1].decompose(y1, y2)?;
        let mut out = Decomposition::new();
        for (a, m) in dx.iter() {
            for (b, n) in dy.iter() {
                out.add(self.pair(a.clone(), b.clone()), m * n);
            }
        }
        Ok(out)
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        let mut out = Vec::with_capacity(n);
        let caps = [self.factors[0].cardinality(), self.factors[1].cardinality()];
        let last_diagonal = match caps {
            [Some(a), Some(b)] => Some(a + b - 2),
            _ => None,
        };
        let mut s = 0;
        while out.len() < n && last_diagonal.is_none_or(|d| s <= d) {
            let left = self.factors[0].enumerate(s + 1);
            let right = self.factors[1].enumerate(s + 1);
            for i in 0..=s {
                let j = s - i;
                if let (Some(x), Some(y)) = (left.get(i), right.get(j)) {
                    out.push(self.pair(x.clone(), y.clone()));
                    if out.len() == n {
                        break;
                    }
                }
            }
            s += 1;
        }
        out
    }

    fn cardinality(&self) -> Option<usize> {
        Some(self.factors[0].cardinality()? * self.factors[1].cardinality()?)
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        Self::parts(u).map_or(usize::MAX, |(x, y)| {
            self.factors[0].label_size(x).max(self.factors[1].label_size(y))
        })
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        let (x, y) = Self::parts(u)?;
        self.factors[0].validate(x)?;
        self.factors[1].validate(y)
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let t = text.trim();
        let bad = || FusionError::UnknownLabel(t.to_string());
        if matches!(t, "1" | "ι" | "iota") {
            return Ok(self.unit());
        }
        let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
        let mut depth = 0i32;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    if split.replace(i).is_some() {
                        return Err(bad());
                    }
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(bad)?;
        let x = self.factors[0].parse_label(&inner[..i])?;
        let y = self.factors[1].parse_label(&inner[i + 1..])?;
        Ok(self.pair(x, y))
    }

    fn order_oracle(&self, u: &IrrLabel) -> Result<Option<Order>> {
        let (x, y) = Self::parts(u)?;
        let (Some(a), Some(b)) = (self.factors[0].order_oracle(x)?, self.factors[1].order_oracle(y)?) else {
            return Ok(None);
        };
        Ok(Some(match (a, b) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a.lcm(&b)),
            _ => Order::Infinite,
        }))
    }

    fn is_group_like(&self) -> bool {
        self.factors.iter().all(|f| f.is_group_like())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
