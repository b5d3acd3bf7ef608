//! Property harness for the based-ring identities every provider must satisfy.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::element::{Decomposition, VirtualElement};
use super::label::IrrLabel;
use super::provider::{Budget, FusionProvider};

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;
pub const DEFAULT_TRIPLES: usize = 200;

/// Finite rings with at most this many ordered triples get an exhaustive
/// associativity check instead of a random sample.
const EXHAUSTIVE_TRIPLES: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    InvalidLabel,
    DimensionIdentity,
    UnitLaw,
    ConjugateInvolution,
    ConjugatePairing,
    Frobenius,
    ConjugateReversal,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::InvalidLabel => "invalid label",
            Axiom::DimensionIdentity => "dimension identity",
            Axiom::UnitLaw => "unit law",
            Axiom::ConjugateInvolution => "conjugate involution",
            Axiom::ConjugatePairing => "conjugate pairing N^ι_{uv} = [v = ū]",
            Axiom::Frobenius => "Frobenius reciprocity",
            Axiom::ConjugateReversal => "N^w_{uv} = N^w̄_{v̄ū}",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub labels: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}): {}", self.axiom, self.labels.join(", "), self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub provider: String,
    pub labels_checked: usize,
    pub triples_checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn first_summary(&self) -> String {
        self.violations
            .first()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "none".to_string())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    pub seed: u64,
    pub triples: usize,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            seed: DEFAULT_SEED,
            triples: DEFAULT_TRIPLES,
        }
    }
}

struct Checker<'a> {
    ring: &'a dyn FusionProvider,
    cache: HashMap<(IrrLabel, IrrLabel), Option<Decomposition>>,
    violations: Vec<Violation>,
}

impl<'a> Checker<'a> {
    fn flag(&mut self, axiom: Axiom, labels: &[&IrrLabel], detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom,
            labels: labels.iter().map(|l| l.id().to_string()).collect(),
            detail: detail.into(),
        });
    }

    fn decompose(&mut self, u: &IrrLabel, v: &IrrLabel) -> Option<Decomposition> {
        if let Some(d) = self.cache.get(&(u.clone(), v.clone())) {
            return d.clone();
        }
        let d = match self.ring.decompose(u, v) {
            Ok(d) => Some(d),
            Err(e) => {
                self.flag(Axiom::InvalidLabel, &[u, v], format!("decompose failed: {e}"));
                None
            }
        };
        self.cache.insert((u.clone(), v.clone()), d.clone());
        d
    }

    fn conj(&mut self, u: &IrrLabel) -> Option<IrrLabel> {
        match self.ring.conj(u) {
            Ok(c) => Some(c),
            Err(e) => {
                self.flag(Axiom::InvalidLabel, &[u], format!("conj failed: {e}"));
                None
            }
        }
    }

    fn mult(&mut self, w: &IrrLabel, u: &IrrLabel, v: &IrrLabel) -> Option<BigUint> {
        self.decompose(u, v).map(|d| d.multiplicity(w))
    }

    fn product(&mut self, a: &VirtualElement, b: &VirtualElement) -> Option<VirtualElement> {
        let mut out = VirtualElement::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let d = self.decompose(x, y)?;
                let c = cx * cy;
                for (w, n) in d.iter() {
                    out.add_term(w.clone(), &c * num_bigint::BigInt::from(n.clone()));
                }
            }
        }
        Some(out)
    }
}

/// Runs every axiom check over `enumerate(budget.max_irreducibles)` and
/// returns the violations found; an empty list means the ring passed.
pub fn check_axioms(ring: &dyn FusionProvider, budget: &Budget, options: AxiomOptions) -> AxiomReport {
    let labels = ring.enumerate(budget.max_irreducibles);
    let mut ck = Checker {
        ring,
        cache: HashMap::new(),
        violations: Vec::new(),
    };
    let unit = ring.unit();

    if !unit.dim().is_one() {
        ck.flag(Axiom::UnitLaw, &[&unit], format!("unit has dimension {}", unit.dim()));
    }
    if let Some(c) = ck.conj(&unit) {
        if c != unit {
            ck.flag(Axiom::ConjugateInvolution, &[&unit], format!("conj(ι) = {c}"));
        }
    }

    let mut conjugates = Vec::with_capacity(labels.len());
    for u in &labels {
        if let Err(e) = ring.validate(u) {
            ck.flag(Axiom::InvalidLabel, &[u], e.to_string());
        }
        if u.dim().is_zero() {
            ck.flag(Axiom::DimensionIdentity, &[u], "irreducible of dimension zero");
        }
        let c = ck.conj(u);
        if let Some(c) = &c {
            if c.dim() != u.dim() {
                ck.flag(Axiom::ConjugateInvolution, &[u, c], "conjugate has a different dimension");
            }
            if let Some(cc) = ck.conj(c) {
                if &cc != u {
                    ck.flag(Axiom::ConjugateInvolution, &[u], format!("conj(conj(u)) = {cc}"));
                }
            }
        }
        for (left, right) in [(&unit, u), (u, &unit)] {
            if let Some(d) = ck.decompose(left, right) {
                if d != Decomposition::single(u.clone()) {
                    ck.flag(Axiom::UnitLaw, &[left, right], format!("got {d}"));
                }
            }
        }
        conjugates.push(c);
    }

    for (i, u) in labels.iter().enumerate() {
        for (j, v) in labels.iter().enumerate() {
            let Some(d) = ck.decompose(u, v) else { continue };
            for w in d.labels() {
                if let Err(e) = ring.validate(w) {
                    ck.flag(Axiom::InvalidLabel, &[u, v, w], e.to_string());
                }
            }
            let lhs = d.total_dim();
            let rhs = u.dim() * v.dim();
            if lhs != rhs {
                ck.flag(
                    Axiom::DimensionIdentity,
                    &[u, v],
                    format!("Σ N^w dim w = {lhs} but dim u · dim v = {rhs}"),
                );
            }
            let expected: BigUint = match &conjugates[i] {
                Some(ubar) if ubar == v => BigUint::one(),
                _ => BigUint::zero(),
            };
            let found = d.multiplicity(&unit);
            if found != expected {
                ck.flag(
                    Axiom::ConjugatePairing,
                    &[u, v],
                    format!("N^ι = {found}, expected {expected}"),
                );
            }
            let (Some(ubar), Some(vbar)) = (conjugates[i].clone(), conjugates[j].clone()) else {
                continue;
            };
            for w in &labels {
                let n = d.multiplicity(w);
                let Some(via_left) = ck.mult(v, &ubar, w) else { continue };
                let Some(via_right) = ck.mult(u, w, &vbar) else { continue };
                if n != via_left || n != via_right {
                    ck.flag(
                        Axiom::Frobenius,
                        &[w, u, v],
                        format!("N^w_uv = {n}, N^v_ūw = {via_left}, N^u_wv̄ = {via_right}"),
                    );
                }
                let Some(wbar) = ck.conj(w) else { continue };
                let Some(reversed) = ck.mult(&wbar, &vbar, &ubar) else { continue };
                if n != reversed {
                    ck.flag(
                        Axiom::ConjugateReversal,
                        &[w, u, v],
                        format!("N^w_uv = {n}, N^w̄_v̄ū = {reversed}"),
                    );
                }
            }
        }
    }

    let triples = sample_triples(labels.len(), ring.cardinality().is_some(), options);
    for &(a, b, c) in &triples {
        let (u, v, w) = (&labels[a], &labels[b], &labels[c]);
        let eu = VirtualElement::from_label(u.clone());
        let ev = VirtualElement::from_label(v.clone());
        let ew = VirtualElement::from_label(w.clone());
        let left = ck.product(&eu, &ev).and_then(|uv| ck.product(&uv, &ew));
        let right = ck.product(&ev, &ew).and_then(|vw| ck.product(&eu, &vw));
        if let (Some(left), Some(right)) = (left, right) {
            if left != right {
                ck.flag(
                    Axiom::Associativity,
                    &[u, v, w],
                    format!("(uv)w = {left} but u(vw) = {right}"),
                );
            }
        }
    }

    AxiomReport {
        provider: ring.name(),
        labels_checked: labels.len(),
        triples_checked: triples.len(),
        violations: ck.violations,
    }
}

fn sample_triples(n: usize, finite: bool, options: AxiomOptions) -> Vec<(usize, usize, usize)> {
    if n == 0 {
        return Vec::new();
    }
    if finite && n * n * n <= EXHAUSTIVE_TRIPLES {
        let mut out = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    out.push((a, b, c));
                }
            }
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    (0..options.triples)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect()
}
