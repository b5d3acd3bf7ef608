//! Integer lattices in ℤⁿ via row-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sublattice of ℤⁿ stored as rows in Hermite normal form: pivots strictly
/// increase, pivot entries are positive, entries above a pivot are reduced
/// into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

fn pivot(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

impl Lattice {
    /// ℤ-span of `generators` (each of length `dim`).
    pub fn from_generators(dim: usize, generators: impl IntoIterator<Item = Vec<BigInt>>) -> Self {
        let mut basis: Vec<Vec<BigInt>> = Vec::new();
        for g in generators {
            assert_eq!(g.len(), dim, "generator of the wrong length");
            insert(&mut basis, g);
        }
        basis.sort_by_key(|r| pivot(r));
        reduce_above(&mut basis);
        Lattice { dim, rows: basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Exact membership test: reduce `v` by the Hermite rows.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = pivot(row).expect("basis rows are nonzero");
            if v[p].is_zero() {
                continue;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Adds `g` to an echelon basis (rows with distinct pivots), combining rows
/// with the extended Euclidean algorithm whenever pivots collide.
fn insert(basis: &mut Vec<Vec<BigInt>>, mut g: Vec<BigInt>) {
    loop {
        let Some(p) = pivot(&g) else { return };
        let Some(i) = basis.iter().position(|r| pivot(r) == Some(p)) else {
            if g[p].is_negative() {
                g.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push(g);
            return;
        };
        let row = basis[i].clone();
        let (a, b) = (&row[p], &g[p]);
        let e = a.extended_gcd(b);
        let (ga, gb) = (a / &e.gcd, b / &e.gcd);
        // new pivot row: x·row + y·g has pivot entry gcd; the leftover
        // (b/g)·row − (a/g)·g has a zero in column p
        let mut combined: Vec<BigInt> = row.iter().zip(&g).map(|(r, s)| &e.x * r + &e.y * s).collect();
        let leftover: Vec<BigInt> = row.iter().zip(&g).map(|(r, s)| &gb * r - &ga * s).collect();
        if combined[p].is_negative() {
            combined.iter_mut().for_each(|x| *x = -x.clone());
        }
        basis[i] = combined;
        g = leftover;
    }
}

fn reduce_above(rows: &mut [Vec<BigInt>]) {
    for i in 0..rows.len() {
        let p = pivot(&rows[i]).expect("basis rows are nonzero");
        let pivot_row = rows[i].clone();
        for row in rows.iter_mut().take(i) {
            let q = row[p].div_floor(&pivot_row[p]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_lattice() {
        let l = Lattice::from_generators(2, [v(&[4, 0]), v(&[6, 0]), v(&[0, 3])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&v(&[2, 3])));
        assert!(!l.contains(&v(&[1, 0])));
        assert!(!l.contains(&v(&[0, 1])));
        assert!(l.contains(&v(&[-10, 9])));
    }

    #[test]
    fn zero_lattice() {
        let l = Lattice::from_generators(3, [v(&[0, 0, 0])]);
        assert_eq!(l.rank(), 0);
        assert!(l.contains(&v(&[0, 0, 0])));
        assert!(!l.contains(&v(&[0, 1, 0])));
    }

    proptest! {
        #[test]
        fn combinations_are_members(
            gens in prop::collection::vec(prop::collection::vec(-6i64..6, 3), 1..4),
            coeffs in prop::collection::vec(-4i64..4, 4),
        ) {
            let l = Lattice::from_generators(3, gens.iter().map(|g| v(g)));
            let mut target = vec![0i64; 3];
            for (g, c) in gens.iter().zip(&coeffs) {
                for k in 0..3 { target[k] += c * g[k]; }
            }
            prop_assert!(l.contains(&v(&target)));
            for g in &gens {
                prop_assert!(l.contains(&v(g)));
            }
        }

        #[test]
        fn membership_matches_brute_force_in_one_dimension(a in -12i64..12, b in -12i64..12, t in -40i64..40) {
            let l = Lattice::from_generators(1, [v(&[a]), v(&[b])]);
            let g = a.gcd(&b);
            let expected = if g == 0 { t == 0 } else { t % g == 0 };
            prop_assert_eq!(l.contains(&v(&[t])), expected);
        }
    }
}
