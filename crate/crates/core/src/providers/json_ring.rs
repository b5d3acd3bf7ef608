use std::any::Any;
use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{check_axioms, AxiomOptions, Budget, Decomposition, FusionProvider, IrrLabel, Key};

/// On-disk form of a finite fusion ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub unit: String,
    pub irreducibles: Vec<IrreducibleEntry>,
    pub fusion: Vec<FusionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrreducibleEntry {
    pub id: String,
    pub dim: u64,
    pub conj: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, u64>,
}

/// A finite fusion ring given by an explicit table, e.g. the character ring
/// of a finite group. Enumeration order: unit first, then file order.
#[derive(Debug, Clone)]
pub struct JsonRing {
    name: String,
    labels: Vec<IrrLabel>,
    conj: Vec<usize>,
    unit: usize,
    table: Vec<Vec<Decomposition>>,
    order: Vec<usize>,
}

impl JsonRing {
    /// Builds the ring and rejects it unless every axiom check passes.
    pub fn from_file(name: impl Into<String>, file: &RingFile) -> Result<Self> {
        let ring = Self::from_file_unchecked(name, file)?;
        let budget = Budget {
            max_irreducibles: ring.labels.len(),
            ..Budget::default()
        };
        let report = check_axioms(&ring, &budget, AxiomOptions::default());
        if !report.passed() {
            return Err(FusionError::AxiomViolations(report));
        }
        Ok(ring)
    }

    /// Structural validation only (ids resolve, every pair listed once);
    /// the fusion identities are not checked.
    pub fn from_file_unchecked(name: impl Into<String>, file: &RingFile) -> Result<Self> {
        let n = file.irreducibles.len();
        if n == 0 {
            return Err(FusionError::MalformedRing("no irreducibles".into()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, irr) in file.irreducibles.iter().enumerate() {
            if irr.id.is_empty() {
                return Err(FusionError::MalformedRing(format!("irreducible #{i} has an empty id")));
            }
            if irr.dim == 0 {
                return Err(FusionError::MalformedRing(format!("`{}` has dimension 0", irr.id)));
            }
            if index.insert(irr.id.as_str(), i).is_some() {
                return Err(FusionError::MalformedRing(format!("duplicate id `{}`", irr.id)));
            }
        }
        let lookup = |id: &str, what: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| FusionError::MalformedRing(format!("{what} refers to unknown id `{id}`")))
        };
        let unit = lookup(&file.unit, "unit")?;
        let labels: Vec<IrrLabel> = file
            .irreducibles
            .iter()
            .enumerate()
            .map(|(i, irr)| IrrLabel::new(Key::Index(i as u32), irr.id.clone(), BigUint::from(irr.dim)))
            .collect();
        let conj = file
            .irreducibles
            .iter()
            .map(|irr| lookup(&irr.conj, &format!("conj of `{}`", irr.id)))
            .collect::<Result<Vec<_>>>()?;

        let mut table: Vec<Vec<Option<Decomposition>>> = vec![vec![None; n]; n];
        for entry in &file.fusion {
            let l = lookup(&entry.left, "fusion entry")?;
            let r = lookup(&entry.right, "fusion entry")?;
            let mut d = Decomposition::new();
            for (id, &mult) in &entry.result {
                let w = lookup(id, &format!("result of {} ⊗ {}", entry.left, entry.right))?;
                d.add(labels[w].clone(), BigUint::from(mult));
            }
            if table[l][r].replace(d).is_some() {
                return Err(FusionError::MalformedRing(format!(
                    "pair ({}, {}) listed twice",
                    entry.left, entry.right
                )));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, d)| {
                        d.ok_or_else(|| {
                            FusionError::MalformedRing(format!(
                                "pair ({}, {}) missing from fusion",
                                labels[i].id(),
                                labels[j].id()
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let order = std::iter::once(unit).chain((0..n).filter(|&i| i != unit)).collect();
        Ok(JsonRing {
            name: name.into(),
            labels,
            conj,
            unit,
            table,
            order,
        })
    }

    pub fn from_json_str(name: impl Into<String>, text: &str) -> Result<Self> {
        let file: RingFile = serde_json::from_str(text)?;
        Self::from_file(name, &file)
    }

    /// Loads `path`; the provider is named `json:<path>`.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(format!("json:{}", path.display()), &text)
    }

    /// Serializes any finite provider to the file format.
    pub fn export(ring: &dyn FusionProvider) -> Result<RingFile> {
        let labels = ring.all_labels().ok_or(FusionError::NotFinite)?;
        let small = |d: &BigUint| {
            u64::try_from(d.clone()).map_err(|_| FusionError::BadParameter(format!("value {d} exceeds u64")))
        };
        let irreducibles = labels
            .iter()
            .map(|u| {
                Ok(IrreducibleEntry {
                    id: u.id().to_string(),
                    dim: small(u.dim())?,
                    conj: ring.conj(u)?.id().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut fusion = Vec::with_capacity(labels.len() * labels.len());
        for u in &labels {
            for v in &labels {
                let result = ring
                    .decompose(u, v)?
                    .iter()
                    .map(|(w, m)| Ok((w.id().to_string(), small(m)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                fusion.push(FusionEntry {
                    left: u.id().to_string(),
                    right: v.id().to_string(),
                    result,
                });
            }
        }
        Ok(RingFile {
            unit: ring.unit().id().to_string(),
            irreducibles,
            fusion,
        })
    }

    fn index(&self, u: &IrrLabel) -> Result<usize> {
        match u.key() {
            Key::Index(i) if (*i as usize) < self.labels.len() && self.labels[*i as usize].id() == u.id() => {
                Ok(*i as usize)
            }
            _ => Err(unknown(u)),
        }
    }
}

impl FusionProvider for JsonRing {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn unit(&self) -> IrrLabel {
        self.labels[self.unit].clone()
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        Ok(self.labels[self.conj[self.index(u)?]].clone())
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        Ok(self.table[self.index(u)?][self.index(v)?].clone())
    }

    fn enumerate(&self, n: usize) -> Vec<IrrLabel> {
        self.order.iter().take(n).map(|&i| self.labels[i].clone()).collect()
    }

    fn cardinality(&self) -> Option<usize> {
        Some(self.labels.len())
    }

    fn label_size(&self, u: &IrrLabel) -> usize {
        usize::from(*u != self.unit())
    }

    fn validate(&self, u: &IrrLabel) -> Result<()> {
        self.index(u).map(|_| ())
    }

    fn parse_label(&self, text: &str) -> Result<IrrLabel> {
        let text = text.trim();
        self.labels
            .iter()
            .find(|l| l.id() == text)
            .cloned()
            .ok_or_else(|| FusionError::UnknownLabel(text.to_string()))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = r#"{
        "unit": "1",
        "irreducibles": [{"id": "1", "dim": 1, "conj": "1"}, {"id": "s", "dim": 1, "conj": "s"}],
        "fusion": [
            {"left": "1", "right": "1", "result": {"1": 1}},
            {"left": "1", "right": "s", "result": {"s": 1}},
            {"left": "s", "right": "1", "result": {"s": 1}},
            {"left": "s", "right": "s", "result": {"1": 1}}
        ]
    }"#;

    #[test]
    fn loads_z2() {
        let ring = JsonRing::from_json_str("z2", Z2).unwrap();
        let s = ring.parse_label("s").unwrap();
        assert_eq!(ring.decompose(&s, &s).unwrap(), Decomposition::single(ring.unit()));
    }

    #[test]
    fn missing_pair_is_malformed() {
        let mut file: RingFile = serde_json::from_str(Z2).unwrap();
        file.fusion.pop();
        let err = JsonRing::from_file("z2", &file).unwrap_err();
        assert!(matches!(err, FusionError::MalformedRing(ref m) if m.contains("missing")), "{err}");
    }

    #[test]
    fn wrong_unit_column_is_rejected_by_axioms() {
        let text = Z2.replace(r#""right": "s", "result": {"1": 1}"#, r#""right": "s", "result": {"s": 1}"#);
        match JsonRing::from_json_str("z2", &text).unwrap_err() {
            FusionError::AxiomViolations(report) => assert!(!report.passed()),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn export_round_trips() {
        let ring = JsonRing::from_json_str("z2", Z2).unwrap();
        let file = JsonRing::export(&ring).unwrap();
        let again = JsonRing::from_file("z2", &file).unwrap();
        assert_eq!(JsonRing::export(&again).unwrap(), file);
    }
}
