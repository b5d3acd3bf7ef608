//! The normal-subgroup sequence `N₁ ⊂ N₂ ⊂ …` of a discrete group:
//! `N₁` is the normal closure of the torsion elements and `N_{r+1}` the
//! normal closure of `{g : gⁿ ∈ N_r for some n}`. Its stabilization index
//! is the torsion degree.
//!
//! Membership in `N_r` is decided by a homomorphism onto an explicit
//! quotient: for a free product of cyclic groups, killing the finite
//! factors. Each stage is also computed as a truncated normal closure and
//! the two descriptions are cross-checked label by label.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use super::closure::normal_forcing_closure;
use super::subcategory::Subcategory;
use crate::error::{FusionError, Result};
use crate::fusion::{Budget, FusionProvider, IrrLabel, Order, Syllable};
use crate::providers::{Cyclic, FiniteGroup, WordGroup, WordGroupSpec};

pub const DEFAULT_EXPONENT_BOUND: u64 = 64;
pub const DEFAULT_MAX_STAGE: usize = 8;

/// Image of the group under the current quotient map.
#[derive(Clone, Debug)]
enum Quotient {
    /// The finite group itself (identity map), with its order.
    Finite(usize),
    /// Word group on a subset of the original factors; `map[i]` is the
    /// target factor of original factor `i`, or `None` if it is killed.
    Word { target: WordGroup, map: Vec<Option<u16>> },
    Trivial,
}

impl Quotient {
    fn describe(&self) -> String {
        match self {
            Quotient::Finite(n) => format!("finite group of order {n}"),
            Quotient::Word { target, .. } => target.spec().to_string(),
            Quotient::Trivial => "trivial".into(),
        }
    }

    fn has_finite_factors(&self) -> bool {
        match self {
            Quotient::Finite(n) => *n > 1,
            Quotient::Word { target, .. } => target.spec().factors.iter().any(|f| matches!(f, Cyclic::Finite(_))),
            Quotient::Trivial => false,
        }
    }

    /// Kills the normal closure of the quotient's torsion.
    fn kill_torsion(&self) -> Result<Quotient> {
        match self {
            Quotient::Finite(_) | Quotient::Trivial => Ok(Quotient::Trivial),
            Quotient::Word { target, map } => {
                let mut kept = Vec::new();
                let mut renumber = Vec::new();
                for f in &target.spec().factors {
                    if *f == Cyclic::Infinite {
                        renumber.push(Some(kept.len() as u16));
                        kept.push(*f);
                    } else {
                        renumber.push(None);
                    }
                }
                if kept.is_empty() {
                    return Ok(Quotient::Trivial);
                }
                let map = map.iter().map(|m| m.and_then(|t| renumber[t as usize])).collect();
                Ok(Quotient::Word {
                    target: WordGroup::new(WordGroupSpec::new(kept)?),
                    map,
                })
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Image {
    Index(usize),
    Word(Vec<Syllable>),
    Trivial,
}

struct Group<'a> {
    finite: Option<&'a FiniteGroup>,
}

impl Group<'_> {
    fn image(&self, q: &Quotient, u: &IrrLabel) -> Result<Image> {
        Ok(match q {
            Quotient::Trivial => Image::Trivial,
            Quotient::Finite(_) => Image::Index(self.finite.expect("finite quotient of a finite group").index(u)?),
            Quotient::Word { target, map } => {
                let w = WordGroup::word(u)?;
                let mapped: Vec<Syllable> = w
                    .iter()
                    .filter_map(|s| {
                        map[s.factor as usize].and_then(|f| target.normalize(f, s.exp))
                    })
                    .collect();
                // killed syllables can make neighbours collide; re-reduce
                Image::Word(target.multiply_words(&[], &mapped))
            }
        })
    }

    fn is_identity(&self, img: &Image) -> bool {
        match img {
            Image::Trivial => true,
            Image::Index(i) => *i == self.finite.expect("finite").identity_index(),
            Image::Word(w) => w.is_empty(),
        }
    }

    /// Smallest `n ≤ bound` with `imgⁿ = 1`, by repeated multiplication.
    fn power_order(&self, q: &Quotient, img: &Image, bound: u64) -> Option<u64> {
        match (q, img) {
            (_, Image::Trivial) => Some(1),
            (_, Image::Index(i)) => {
                let g = self.finite.expect("finite");
                let mut p = *i;
                for n in 1..=bound {
                    if p == g.identity_index() {
                        return Some(n);
                    }
                    p = g.product_index(p, *i);
                }
                None
            }
            (Quotient::Word { target, .. }, Image::Word(w)) => {
                let mut p = w.clone();
                for n in 1..=bound {
                    if p.is_empty() {
                        return Some(n);
                    }
                    p = target.multiply_words(&p, w);
                }
                None
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub index: usize,
    /// Labels with a power (exponent ≤ bound) in the previous stage.
    pub generators: Vec<IrrLabel>,
    pub closure: Subcategory,
    /// Quotient `G / N_index` used as the membership oracle.
    pub quotient: String,
    /// Closure members the oracle maps to a nontrivial element.
    pub oracle_rejects: Vec<IrrLabel>,
    /// Enumerated labels (within the size cap) in the oracle kernel but
    /// missing from the truncated closure.
    pub closure_misses: Vec<IrrLabel>,
}

impl Stage {
    pub fn oracle_consistent(&self) -> bool {
        self.oracle_rejects.is_empty() && self.closure_misses.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionDegree {
    Finite(usize),
    NotStabilized,
}

impl Serialize for TorsionDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TorsionDegree::Finite(d) => s.serialize_u64(*d as u64),
            TorsionDegree::NotStabilized => s.serialize_str("not_stabilized"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NSequenceReport {
    pub provider: String,
    pub exponent_bound: u64,
    pub stages: Vec<Stage>,
    pub degree: TorsionDegree,
    /// Final quotient `G / N_∞`.
    pub quotient: String,
    /// Every enumerated nonidentity element of the final quotient has
    /// infinite order (checked, not assumed).
    pub quotient_torsion_free: bool,
    /// `N_∞` is everything: trivial identity component.
    pub totally_disconnected: bool,
    /// No torsion at all: `N₁` is trivial.
    pub connected: bool,
}

/// Runs the sequence for a finite group ring or a word group.
pub fn n_sequence_cocommutative(ring: &dyn FusionProvider, max_stage: usize, exponent_bound: u64, budget: &Budget) -> Result<NSequenceReport> {
    budget.validate()?;
    let finite = ring.as_any().downcast_ref::<FiniteGroup>();
    let word = ring.as_any().downcast_ref::<WordGroup>();
    let mut quotient = match (finite, word) {
        (Some(g), _) => Quotient::Finite(g.len()),
        (_, Some(w)) => Quotient::Word {
            target: w.clone(),
            map: (0..w.spec().factors.len() as u16).map(Some).collect(),
        },
        _ => {
            return Err(FusionError::UnsupportedProvider(format!(
                "{}: the N-sequence needs a finite group ring or a word group",
                ring.name()
            )))
        }
    };
    let group = Group { finite };
    let labels = ring.enumerate(budget.max_irreducibles);
    let unit = ring.unit();

    let mut previous: BTreeSet<IrrLabel> = BTreeSet::from([unit.clone()]);
    let mut stages = Vec::new();
    let mut degree = TorsionDegree::NotStabilized;
    for r in 1..=max_stage {
        let mut generators = Vec::new();
        for u in &labels {
            let img = group.image(&quotient, u)?;
            if group.power_order(&quotient, &img, exponent_bound).is_some() {
                generators.push(u.clone());
            }
        }
        // generators past the size cap would be admitted as seeds and drag
        // every product with them into the saturation
        let seeds: Vec<IrrLabel> = previous
            .iter()
            .chain(generators.iter().filter(|u| ring.label_size(u) <= budget.max_label_size))
            .cloned()
            .collect();
        let closure = normal_forcing_closure(ring, &seeds, budget)?;
        let next_quotient = quotient.kill_torsion()?;

        let mut oracle_rejects = Vec::new();
        for u in &closure.labels {
            if !group.is_identity(&group.image(&next_quotient, u)?) {
                oracle_rejects.push(u.clone());
            }
        }
        let mut closure_misses = Vec::new();
        for u in &labels {
            if ring.label_size(u) <= budget.max_label_size
                && !closure.contains(u)
                && group.is_identity(&group.image(&next_quotient, u)?)
            {
                closure_misses.push(u.clone());
            }
        }
        // the quotient decides membership exactly; truncated closures can
        // keep growing after the true sequence has stabilized
        let stabilized = !quotient.has_finite_factors();
        previous = closure.labels.clone();
        stages.push(Stage {
            index: r,
            generators,
            closure,
            quotient: next_quotient.describe(),
            oracle_rejects,
            closure_misses,
        });
        if stabilized {
            degree = TorsionDegree::Finite(r - 1);
            break;
        }
        quotient = next_quotient;
    }

    let quotient_torsion_free = match &quotient {
        Quotient::Trivial => true,
        Quotient::Finite(n) => *n == 1,
        Quotient::Word { target, .. } => target
            .enumerate(budget.max_irreducibles)
            .iter()
            .skip(1)
            .all(|g| matches!(target.order_oracle(g), Ok(Some(Order::Infinite)))),
    };
    let first = stages.first().map(|s| &s.closure.labels);
    let connected = first.is_some_and(|n1| n1.len() == 1);
    let totally_disconnected = matches!(quotient, Quotient::Trivial) && !matches!(degree, TorsionDegree::NotStabilized);
    Ok(NSequenceReport {
        provider: ring.name(),
        exponent_bound,
        degree,
        quotient: quotient.describe(),
        quotient_torsion_free,
        totally_disconnected,
        connected,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::providers::parse_provider;

    fn run(spec: &str) -> NSequenceReport {
        let ring = parse_provider(spec).unwrap();
        n_sequence_cocommutative(ring.as_ref(), DEFAULT_MAX_STAGE, DEFAULT_EXPONENT_BOUND, &Budget::default()).unwrap()
    }

    #[test]
    fn dihedral_is_totally_disconnected() {
        let r = run("word:Z2*Z2");
        assert_eq!(r.degree, TorsionDegree::Finite(1));
        assert!(r.totally_disconnected);
        assert!(r.stages.iter().all(Stage::oracle_consistent));
    }

    #[test]
    fn z2_free_z_has_degree_one() {
        let r = run("word:Z2*Z");
        assert_eq!(r.degree, TorsionDegree::Finite(1));
        assert_eq!(r.quotient, "Z");
        assert!(r.quotient_torsion_free);
        assert!(!r.totally_disconnected && !r.connected);
    }

    #[test]
    fn torsion_free_group_is_connected() {
        let r = run("word:Z*Z");
        assert_eq!(r.degree, TorsionDegree::Finite(0));
        assert!(r.connected);
    }

    #[test]
    fn finite_groups_have_degree_one() {
        let r = run("group:S3");
        assert_eq!(r.degree, TorsionDegree::Finite(1));
        assert!(r.totally_disconnected);
    }

    #[test]
    fn non_group_rings_are_rejected() {
        let ring = parse_provider("suq2").unwrap();
        assert!(matches!(
            n_sequence_cocommutative(ring.as_ref(), 4, 64, &Budget::default()),
            Err(FusionError::UnsupportedProvider(_))
        ));
    }
}
