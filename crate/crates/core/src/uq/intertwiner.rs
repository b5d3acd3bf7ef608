//! Intertwiner spaces as numerical null spaces.

use serde::Serialize;

use super::rep::{Mat, RepMatrices};
use crate::error::{FusionError, Result};

/// Default relative threshold below which a singular value counts as zero.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Required ratio between the smallest kept and largest discarded singular value.
pub const MIN_GAP: f64 = 1e3;

#[derive(Clone, Debug)]
pub struct IntertwinerSpace {
    pub dim: usize,
    /// Matrices `T` (target × source) with `T·a(X) = b(X)·T`.
    pub basis: Vec<Mat>,
    /// Singular values of the constraint system relative to the largest, descending.
    pub relative_singular_values: Vec<f64>,
    /// Ratio across the rank cut; infinite when there is nothing to separate.
    pub gap: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IntertwinerSummary {
    pub dim: usize,
    pub gap: f64,
}

impl IntertwinerSpace {
    pub fn summary(&self) -> IntertwinerSummary {
        IntertwinerSummary {
            dim: self.dim,
            gap: self.gap,
        }
    }
}

/// Solves `T·a(X) − b(X)·T = 0` for `X ∈ {E, F, K}` by singular-value
/// decomposition of the stacked system in `vec(T)`.
pub fn intertwiner_space(a: &RepMatrices, b: &RepMatrices, tol: f64) -> Result<IntertwinerSpace> {
    if !(tol > 0.0 && tol < 1e-2) {
        return Err(FusionError::BadParameter(format!("tolerance {tol} outside (0, 1e-2)")));
    }
    if (a.q - b.q).abs() > 1e-15 * a.q.abs() {
        return Err(FusionError::BadParameter(format!("intertwiners between q = {} and q = {}", a.q, b.q)));
    }
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let id_a = Mat::identity(da, da);
    let id_b = Mat::identity(db, db);
    let mut system = Mat::zeros(3 * n, n);
    for (i, (x, y)) in [(&a.e, &b.e), (&a.f, &b.f), (&a.k, &b.k)].into_iter().enumerate() {
        // vec(T·A) = (Aᵀ ⊗ I)·vec(T), vec(B·T) = (I ⊗ B)·vec(T)
        let block = x.transpose().kronecker(&id_b) - id_a.kronecker(y);
        system.view_mut((i * n, 0), (n, n)).copy_from(&block);
    }
    let svd = system.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let top = svd.singular_values[order[0]];
    let relative: Vec<f64> = order
        .iter()
        .map(|&i| if top > 0.0 { svd.singular_values[i] / top } else { 0.0 })
        .collect();
    let nullity = |t: f64| relative.iter().filter(|&&s| s <= t).count();
    let dim = nullity(tol);
    if nullity(tol * 10.0) != dim || nullity(tol / 10.0) != dim {
        return Err(FusionError::IllConditioned(format!(
            "null-space dimension changes within one decade of tolerance {tol}"
        )));
    }
    let rank = n - dim;
    let gap = if rank == 0 || dim == 0 {
        f64::INFINITY
    } else if relative[rank] == 0.0 {
        f64::INFINITY
    } else {
        relative[rank - 1] / relative[rank]
    };
    if gap < MIN_GAP {
        return Err(FusionError::IllConditioned(format!(
            "singular-value gap {gap:.3e} below {MIN_GAP:e} at rank {rank}"
        )));
    }
    let basis = order[rank..]
        .iter()
        .map(|&i| {
            let v = v_t.row(i).adjoint();
            Mat::from_column_slice(db, da, v.as_slice())
        })
        .collect();
    Ok(IntertwinerSpace {
        dim,
        basis,
        relative_singular_values: relative,
        gap,
    })
}
