use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

/// Structured identity of an irreducible. Each provider owns one variant
/// (two for composite providers) and guarantees that keys are canonical:
/// two labels denote the same irreducible iff their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    /// Position in an explicitly listed finite ring (group elements, JSON rings).
    Index(u32),
    /// Highest-weight level: `u_n` of SU_q(2) or `v_k` of SO(3).
    Level(u32),
    /// `u_{±n}` of the negative-q real form; `(+,0)` is the unit, `(−,0)` is ι₋₁.
    Signed { minus: bool, level: u32 },
    /// Reduced word in a free product of cyclic groups.
    Word(Vec<Syllable>),
    /// Word in the free monoid on `u` and `ū`.
    AuWord(Vec<AuLetter>),
    /// Alternating word of nontrivial irreducibles of the two factors of a free product.
    Free(Vec<FreeLetter>),
    /// Irreducible of a direct product.
    Pair(IrrLabel, IrrLabel),
}

/// One letter `g_factor^exp` of a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub factor: u16,
    pub exp: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuLetter {
    U,
    UBar,
}

impl AuLetter {
    pub fn swapped(self) -> Self {
        match self {
            AuLetter::U => AuLetter::UBar,
            AuLetter::UBar => AuLetter::U,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub factor: u8,
    pub label: IrrLabel,
}

struct Inner {
    key: Key,
    id: String,
    dim: BigUint,
}

/// An irreducible object: canonical key, printable id and dimension.
///
/// Equality, hashing and ordering look at the key only.
#[derive(Clone)]
pub struct IrrLabel(Arc<Inner>);

impl IrrLabel {
    pub fn new(key: Key, id: impl Into<String>, dim: BigUint) -> Self {
        debug_assert!(dim >= BigUint::one(), "irreducible of dimension zero");
        IrrLabel(Arc::new(Inner {
            key,
            id: id.into(),
            dim,
        }))
    }

    pub fn key(&self) -> &Key {
        &self.0.key
    }

    pub fn id(&self) -> &str {
        &self.0.id
    }

    pub fn dim(&self) -> &BigUint {
        &self.0.dim
    }
}

impl PartialEq for IrrLabel {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.key == other.0.key
    }
}

impl Eq for IrrLabel {}

impl Hash for IrrLabel {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.key.hash(state)
    }
}

impl PartialOrd for IrrLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrrLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.key.cmp(&other.0.key)
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.id)
    }
}

impl fmt::Debug for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.id, self.0.dim)
    }
}

impl Serialize for IrrLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.id)
    }
}
