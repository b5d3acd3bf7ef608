//! Ready-made finite rings: character rings of small groups and group rings.

use crate::error::{FusionError, Result};
use crate::providers::{FiniteGroup, JsonRing};

const S3_CHARACTERS: &str = include_str!("../../fixtures/s3_characters.json");
const S4_CHARACTERS: &str = include_str!("../../fixtures/s4_characters.json");
const A4_CHARACTERS: &str = include_str!("../../fixtures/a4_characters.json");
const D4_CHARACTERS: &str = include_str!("../../fixtures/d4_characters.json");
const Z2_CHARACTERS: &str = include_str!("../../fixtures/z2_characters.json");

/// Names accepted by [`character_ring`].
pub const CHARACTER_RINGS: [&str; 5] = ["S3", "S4", "A4", "D4", "Z2"];

/// Names accepted by [`group_ring`] besides `Z<m>`.
pub const GROUP_RINGS: [&str; 2] = ["S3", "D4"];

/// Character ring of a small finite group, tabulated from character inner
/// products. S₃: `{1, sgn, V}`; S₄: `{1, e, 2, 3, 3'}`; A₄: `{1, w, w2, 3}`;
/// D₄: `{1, a, b, c, E}`; ℤ₂: `{1, s}`.
pub fn character_ring(name: &str) -> Result<JsonRing> {
    let text = match name {
        "S3" => S3_CHARACTERS,
        "S4" => S4_CHARACTERS,
        "A4" => A4_CHARACTERS,
        "D4" => D4_CHARACTERS,
        "Z2" => Z2_CHARACTERS,
        other => {
            return Err(FusionError::BadParameter(format!(
                "no builtin character ring `{other}` (known: {})",
                CHARACTER_RINGS.join(", ")
            )))
        }
    };
    JsonRing::from_json_str(format!("chars:{name}"), text)
}

/// Group ring of `S3`, `D4` (order 8) or `Z<m>`.
pub fn group_ring(name: &str) -> Result<FiniteGroup> {
    match name {
        "S3" => Ok(FiniteGroup::symmetric3()),
        "D4" => Ok(dihedral8()),
        _ => {
            let m = name
                .strip_prefix('Z')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&m| m >= 1)
                .ok_or_else(|| {
                    FusionError::BadParameter(format!(
                        "no builtin group `{name}` (known: {}, Z<m>)",
                        GROUP_RINGS.join(", ")
                    ))
                })?;
            FiniteGroup::cyclic(m)
        }
    }
}

/// Symmetries of a square acting on its corners 0..4.
fn dihedral8() -> FiniteGroup {
    let r = |k: usize| (0..4).map(|x| (x + k) % 4).collect::<Vec<_>>();
    let s = |k: usize| (0..4).map(|x| (k + 4 - x) % 4).collect::<Vec<_>>();
    let names = ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"]
        .iter()
        .map(|n| n.to_string())
        .collect();
    let perms = vec![r(0), r(1), r(2), r(3), s(0), s(1), s(2), s(3)];
    FiniteGroup::from_permutations("group:D4", names, perms).expect("D4 is a group")
}
