use std::any::Any;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::element::Decomposition;
use super::label::IrrLabel;
use crate::error::{FusionError, Result};

/// Order of a group-like irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("∞"),
        }
    }
}

/// Truncation limits for computations over infinite fusion rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_irreducibles: usize,
    pub max_rounds: usize,
    pub max_label_size: usize,
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_irreducibles={},max_rounds={},max_label_size={}",
            self.max_irreducibles, self.max_rounds, self.max_label_size
        )
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_irreducibles: 64,
            max_rounds: 32,
            max_label_size: 8,
        }
    }
}

impl Budget {
    pub fn new(max_irreducibles: usize, max_rounds: usize, max_label_size: usize) -> Result<Self> {
        let b = Budget {
            max_irreducibles,
            max_rounds,
            max_label_size,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_irreducibles == 0 || self.max_rounds == 0 || self.max_label_size == 0 {
            return Err(FusionError::BadParameter(format!(
                "budget fields must be positive: {self:?}"
            )));
        }
        Ok(())
    }

    /// Applies `key=value,...` overrides.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| FusionError::BadParameter(format!("budget entry `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| FusionError::BadParameter(format!("budget value `{value}` is not a positive integer")))?;
            match key.trim() {
                "max_irreducibles" | "irreducibles" => self.max_irreducibles = value,
                "max_rounds" | "rounds" => self.max_rounds = value,
                "max_label_size" | "label_size" => self.max_label_size = value,
                other => return Err(FusionError::BadParameter(format!("unknown budget key `{other}`"))),
            }
        }
        self.validate()?;
        Ok(self)
    }
}

/// A based ring with duality: irreducibles, dimensions, conjugation and
/// tensor-product decomposition.
///
/// Implementations are immutable after construction. `enumerate(n)` lists
/// irreducibles in a fixed order, always starting with the unit, and
/// `enumerate(n)` is a prefix of `enumerate(n + 1)`.
pub trait FusionProvider: Send + Sync + fmt::Debug {
    /// Construction string that rebuilds this provider.
    fn name(&self) -> String;

    fn unit(&self) -> IrrLabel;

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel>;

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition>;

    fn enumerate(&self, n: usize) -> Vec<IrrLabel>;

    /// Number of irreducibles, when finite.
    fn cardinality(&self) -> Option<usize>;

    /// Provider-specific size (word length, highest weight) used by budgets.
    fn label_size(&self, u: &IrrLabel) -> usize;

    /// Checks that `u` is one of this provider's irreducibles.
    fn validate(&self, u: &IrrLabel) -> Result<()>;

    /// Parses a label written the way `IrrLabel::id` prints it.
    fn parse_label(&self, text: &str) -> Result<IrrLabel>;

    /// Order of `u` for group-like rings (all dimensions one, products
    /// irreducible); `None` when the ring is not group-like.
    fn order_oracle(&self, _u: &IrrLabel) -> Result<Option<Order>> {
        Ok(None)
    }

    fn is_group_like(&self) -> bool {
        false
    }

    fn as_any(&self) -> &dyn Any;

    /// `N^w_{uv}`.
    fn multiplicity(&self, w: &IrrLabel, u: &IrrLabel, v: &IrrLabel) -> Result<BigUint> {
        self.validate(w)?;
        Ok(self.decompose(u, v)?.multiplicity(w))
    }

    /// Every irreducible when the ring is finite.
    fn all_labels(&self) -> Option<Vec<IrrLabel>> {
        self.cardinality().map(|n| self.enumerate(n))
    }
}

pub(crate) fn unknown(u: &IrrLabel) -> FusionError {
    FusionError::UnknownLabel(u.id().to_string())
}
