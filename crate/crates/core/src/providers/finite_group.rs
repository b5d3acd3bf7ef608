use std::any::Any;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::fusion::provider::unknown;
use crate::fusion::{Decomposition, FusionProvider, IrrLabel, Key, Order};

/// Group algebra of a finite group given by its multiplication table:
/// irreducibles are the group elements, all of dimension one.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    labels: Vec<IrrLabel>,
    /// Enumeration order: identity first, then table order.
    order: Vec<usize>,
}

impl FiniteGroup {
    /// Validates `table` (closure, associativity, identity, inverses) and builds the ring.
    pub fn from_table(name: impl Into<String>, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(FusionError::NotAGroup("empty table".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(FusionError::NotAGroup(format!("table is not {n}×{n}")));
        }
        if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| table[i][j] >= n)
        {
            return Err(FusionError::NotAGroup(format!(
                "closure: {}·{} is out of range",
                names[i], names[j]
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(FusionError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| FusionError::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| FusionError::NotAGroup(format!("{} has no inverse", names[x])))?;
            inverses.push(inv);
        }
        let orders = (0..n)
            .map(|x| {
                let mut k = 1u64;
                let mut p = x;
                while p != identity {
                    p = table[p][x];
                    k += 1;
                }
                k
            })
            .collect();
        let labels = names
            .iter()
            .enumerate()
            .map(|(i, id)| IrrLabel::new(Key::Index(i as u32), id.clone(), BigUint::one()))
            .collect();
        let order = std::iter::once(identity)
            .chain((0..n).filter(|&i| i != identity))
            .collect();
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverses,
            orders,
            labels,
            order,
        })
    }

    /// Group generated by composing permutations of `0..degree`; element `i`
    /// acts as `perms[i]` and products compose right to left.
    pub fn from_permutations(name: impl Into<String>, names: Vec<String>, perms: Vec<Vec<usize>>) -> Result<Self> {
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(perms.len());
        for a in &perms {
            let mut row = Vec::with_capacity(perms.len());
            for b in &perms {
                let composed: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                let idx = index_of(&composed)
                    .ok_or_else(|| FusionError::NotAGroup("permutations are not closed under composition".into()))?;
                row.push(idx);
            }
            table.push(row);
        }
        Self::from_table(name, names, table)
    }

    /// ℤ_m with elements named `0..m`.
    pub fn cyclic(m: usize) -> Result<Self> {
        let names = (0..m).map(|i| i.to_string()).collect();
        let table = (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect();
        Self::from_table(format!("group:Z{m}"), names, table)
    }

    /// S₃ acting on {0,1,2}.
    pub fn symmetric3() -> Self {
        let names = ["e", "(01)", "(02)", "(12)", "(012)", "(021)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let perms = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        Self::from_permutations("group:S3", names, perms).expect("S3 is a group")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub(crate) fn index(&self, u: &IrrLabel) -> Result<usize> {
        match u.key() {
            Key::Index(i) if (*i as usize) < self.labels.len() => Ok(*i as usize),
            _ => Err(unknown(u)),
        }
    }

    pub fn product_index(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn label_at(&self, i: usize) -> &IrrLabel {
        &self.labels[i]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }
}

impl FusionProvider for FiniteGroup {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn unit(&self) -> IrrLabel {
        self.labels[self.identity].clone()
    }

    fn conj(&self, u: &IrrLabel) -> Result<IrrLabel> {
        Ok(self.labels[self.inverses[self.index(u)?]].clone())
    }

    fn decompose(&self, u: &IrrLabel, v: &IrrLabel) -> Result<Decomposition> {
        let (a, b) = (self.index(u)?, self.index(v)?);
        Ok(Decomposition::single(self.labels[self.table[a][b]].clone()))
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

    fn order_oracle(&self, u: &IrrLabel) -> Result<Option<Order>> {
        Ok(Some(Order::Finite(self.orders[self.index(u)?])))
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

    #[test]
    fn z2_squares_to_identity() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.len(), 2);
        let a = z2.parse_label("1").unwrap();
        assert_eq!(z2.decompose(&a, &a).unwrap(), Decomposition::single(z2.unit()));
        assert_eq!(z2.order_oracle(&a).unwrap(), Some(Order::Finite(2)));
    }

    #[test]
    fn s3_has_six_one_dimensional_labels() {
        let s3 = FiniteGroup::symmetric3();
        let labels = s3.enumerate(100);
        assert_eq!(labels.len(), 6);
        assert!(labels.iter().all(|l| l.dim().is_one()));
        let orders: Vec<_> = labels
            .iter()
            .map(|l| s3.order_oracle(l).unwrap().unwrap())
            .collect();
        assert_eq!(
            orders,
            [1, 2, 2, 2, 3, 3].map(Order::Finite).to_vec()
        );
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // a Latin square with identity 0 that is not associative
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::from_table("bad", names, table).unwrap_err();
        assert!(matches!(err, FusionError::NotAGroup(ref m) if m.contains("associativity")), "{err}");
    }

    #[test]
    fn missing_inverse_is_rejected() {
        let table = vec![vec![0, 1], vec![1, 1]];
        let err = FiniteGroup::from_table("bad", vec!["e".into(), "x".into()], table).unwrap_err();
        assert!(matches!(err, FusionError::NotAGroup(_)));
    }
}
