//! Verdicts and cross-checks built on the explicit matrices.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::intertwiner::{intertwiner_space, DEFAULT_TOL};
use super::qint::qint;
use super::rep::{
    build_pi, build_u, check_negative_q, check_star, max_abs, tensor_rep, Branch, Form, Mat, RepMatrices, Twist, TAU,
};
use crate::error::{FusionError, Result};
use crate::fusion::{FusionProvider, IrrLabel};
use crate::providers::UqSu11;

fn complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// The real form a unitarization is attempted for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarForm {
    Su2,
    Su11,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    /// `K` must be self-adjoint, so its spectrum must be real.
    NonRealK,
    /// `EF = EE*` (su2) must be positive, `EF = −EE*` (su11) negative,
    /// semidefinite.
    EfSign,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Unitarizability {
    /// Conjugating by `diag(t)` gives a *-representation.
    Unitarizable { t: Vec<f64>, star_residual: f64 },
    /// A similarity-invariant quantity contradicting any *-structure.
    Obstruction {
        kind: ObstructionKind,
        basis_index: usize,
        #[serde(serialize_with = "complex")]
        eigenvalue: Complex64,
    },
}

impl Unitarizability {
    pub fn is_unitarizable(&self) -> bool {
        matches!(self, Unitarizability::Unitarizable { .. })
    }
}

fn find_nonreal_k(pi: &RepMatrices) -> Option<(usize, Complex64)> {
    (0..pi.dim()).map(|r| (r, pi.k[(r, r)])).find(|(_, z)| z.im.abs() > TAU * z.norm().max(1.0))
}

fn find_bad_ef(pi: &RepMatrices, form: StarForm) -> Option<(usize, Complex64)> {
    let ef = &pi.e * &pi.f;
    let sign = match form {
        StarForm::Su2 => 1.0,
        StarForm::Su11 => -1.0,
    };
    // EF is diagonal on the weight basis
    (0..pi.dim())
        .map(|r| (r, ef[(r, r)]))
        .find(|(_, z)| z.im.abs() > TAU * z.norm().max(1.0) || sign * z.re < -TAU)
}

/// Decides whether `ι_w ⊗ π_n` is a *-representation for `form` after a
/// change of basis. Either builds the diagonal `T` by the recursion
/// `t_0 = 1`, `t_r² = t_{r−1}² · σ(w̄/w)[n−r+1]/[r]` (σ = +1 for su2, −1
/// for su11) and verifies the star structure, or reports an obstruction.
pub fn unitarizability_witness(w: Twist, n: usize, q: f64, form: StarForm, branch: Branch) -> Result<Unitarizability> {
    check_negative_q(q)?;
    if n == 0 {
        return Err(FusionError::BadParameter("unitarizability needs n ≥ 1".into()));
    }
    let pi = build_pi(w, n, q, branch)?;
    let checks: [fn(&RepMatrices, StarForm) -> Option<(usize, Complex64)>; 2] = match form {
        StarForm::Su2 => [find_bad_ef, |p, _| find_nonreal_k(p)],
        StarForm::Su11 => [|p, _| find_nonreal_k(p), find_bad_ef],
    };
    let kinds = match form {
        StarForm::Su2 => [ObstructionKind::EfSign, ObstructionKind::NonRealK],
        StarForm::Su11 => [ObstructionKind::NonRealK, ObstructionKind::EfSign],
    };
    for (check, kind) in checks.iter().zip(kinds) {
        if let Some((basis_index, eigenvalue)) = check(&pi, form) {
            return Ok(Unitarizability::Obstruction {
                kind,
                basis_index,
                eigenvalue,
            });
        }
    }
    let sigma = match form {
        StarForm::Su2 => 1.0,
        StarForm::Su11 => -1.0,
    };
    let wv = w.value();
    let phase = (wv.conj() / wv).re;
    let ni = n as i32;
    let mut t = vec![1.0f64];
    for r in 1..=n {
        let ri = r as i32;
        let ratio_sq = sigma * phase * qint(ni - ri + 1, q) / qint(ri, q);
        if !(ratio_sq > 0.0) {
            return Ok(Unitarizability::Obstruction {
                kind: ObstructionKind::EfSign,
                basis_index: r,
                eigenvalue: Complex64::new(ratio_sq, 0.0),
            });
        }
        t.push(t[r - 1] * ratio_sq.sqrt());
    }
    let scale = |m: &Mat| Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * (t[i] / t[j]));
    let conjugated = RepMatrices {
        e: scale(&pi.e),
        f: scale(&pi.f),
        form: match form {
            StarForm::Su2 => Form::Su2,
            StarForm::Su11 => Form::Su11,
        },
        ..pi
    };
    let star = check_star(&conjugated)?;
    let star_residual = star.e_residual.max(star.k_residual);
    if !star.pass || !conjugated.relations().pass() {
        return Err(FusionError::IllConditioned(format!(
            "constructed unitarization has star residual {star_residual:e}"
        )));
    }
    Ok(Unitarizability::Unitarizable { t, star_residual })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugateEquations {
    pub q: f64,
    /// `(R̄†⊗1_u)(1_u⊗R) = c·1_u`.
    #[serde(serialize_with = "complex")]
    pub c_left: Complex64,
    /// `(R†⊗1_ū)(1_ū⊗R̄) = c·1_ū`.
    #[serde(serialize_with = "complex")]
    pub c_right: Complex64,
    pub r_norm_sq: f64,
    /// Max over `E, F, K` of the invariance residuals of `R` and `R̄`.
    pub invariance_residual: f64,
    /// Deviation of the two contractions from scalar matrices.
    pub scalar_residual: f64,
    pub pass: bool,
}

/// `R = ψ₀⊗ψ₁ − |q|ψ₁⊗ψ₀`, taken both in `ū⊗u` and (as `R̄`) in `u⊗ū`,
/// with `u = u₊₁`, `ū = u₋₁`.
pub fn verify_conjugate_equations(q: f64, branch: Branch) -> Result<ConjugateEquations> {
    check_negative_q(q)?;
    let u = build_u(false, 1, q, branch)?;
    let ubar = build_u(true, 1, q, branch)?;
    let zero = Complex64::new(0.0, 0.0);
    let r = Mat::from_column_slice(4, 1, &[zero, Complex64::new(1.0, 0.0), Complex64::new(-q.abs(), 0.0), zero]);
    let rbar = r.clone();
    let invariant = |rep: &RepMatrices, v: &Mat| -> f64 {
        max_abs(&(&rep.e * v))
            .max(max_abs(&(&rep.f * v)))
            .max(max_abs(&(&rep.k * v - v)))
    };
    let invariance_residual = invariant(&tensor_rep(&ubar, &u)?, &r).max(invariant(&tensor_rep(&u, &ubar)?, &rbar));
    let id = Mat::identity(2, 2);
    let left = rbar.adjoint().kronecker(&id) * id.kronecker(&r);
    let right = r.adjoint().kronecker(&id) * id.kronecker(&rbar);
    let (c_left, c_right) = (left[(0, 0)], right[(0, 0)]);
    let scalar_residual = max_abs(&(&left - &id * c_left)).max(max_abs(&(&right - &id * c_right)));
    let pass = invariance_residual <= TAU && scalar_residual <= TAU && (c_left - c_right).norm() <= TAU;
    Ok(ConjugateEquations {
        q,
        c_left,
        c_right,
        r_norm_sq: r.norm_squared(),
        invariance_residual,
        scalar_residual,
        pass,
    })
}

/// The flip `x⊗y ↦ y⊗x` from `C^{da}⊗C^{db}` to `C^{db}⊗C^{da}`.
pub fn flip(da: usize, db: usize) -> Mat {
    let mut p = Mat::zeros(da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            p[(j * da + i, i * db + j)] = Complex64::new(1.0, 0.0);
        }
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct PermutationCheck {
    pub n: usize,
    /// Residual for `u₊ₙ` and `u₋ₙ`.
    pub residuals: [f64; 2],
    pub pass: bool,
}

/// The flip is an arrow `ι₋₁⊗u_{±n} → u_{±n}⊗ι₋₁`.
pub fn verify_permutation_intertwiner(n: usize, q: f64, branch: Branch) -> Result<PermutationCheck> {
    let iota_minus = build_u(true, 0, q, branch)?;
    let mut residuals = [0.0; 2];
    for (slot, minus) in residuals.iter_mut().zip([false, true]) {
        let u = build_u(minus, n, q, branch)?;
        let left = tensor_rep(&iota_minus, &u)?;
        let right = tensor_rep(&u, &iota_minus)?;
        let p = flip(1, u.dim());
        *slot = [(&left.e, &right.e), (&left.f, &right.f), (&left.k, &right.k)]
            .into_iter()
            .map(|(x, y)| max_abs(&(&p * x - y * &p)))
            .fold(0.0, f64::max);
    }
    Ok(PermutationCheck {
        n,
        pass: residuals.iter().all(|r| *r <= TAU),
        residuals,
    })
}

fn level_label(minus: bool, level: usize) -> IrrLabel {
    UqSu11::label(minus, level as u32)
}

#[derive(Clone, Debug, Serialize)]
pub struct FusionEntry {
    pub u: IrrLabel,
    pub v: IrrLabel,
    /// Multiplicities from intertwiner dimensions.
    pub numeric: BTreeMap<String, usize>,
    pub symbolic: BTreeMap<String, usize>,
    /// `Σ mult·dim` equals `dim u · dim v`.
    pub complete: bool,
}

impl FusionEntry {
    pub fn agrees(&self) -> bool {
        self.numeric == self.symbolic && self.complete
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FusionCrosscheck {
    pub q: f64,
    pub n_max: usize,
    pub entries: Vec<FusionEntry>,
    pub mismatches: Vec<FusionEntry>,
}

/// Numeric multiplicities `dim Hom(u_{σk}, u_{εn}⊗u_{δm})` against the
/// symbolic fusion rules, for all signs and `n, m ≤ n_max`.
pub fn fusion_crosscheck(n_max: usize, q: f64, branch: Branch) -> Result<FusionCrosscheck> {
    check_negative_q(q)?;
    let mut pairs = Vec::new();
    for n in 0..=n_max {
        for m in 0..=n_max {
            for eps in [false, true] {
                for delta in [false, true] {
                    pairs.push((eps, n, delta, m));
                }
            }
        }
    }
    let entries = pairs
        .par_iter()
        .map(|&(eps, n, delta, m)| -> Result<FusionEntry> {
            let product = tensor_rep(&build_u(eps, n, q, branch)?, &build_u(delta, m, q, branch)?)?;
            let mut numeric = BTreeMap::new();
            let mut total = 0;
            for k in 0..=n + m {
                for sigma in [false, true] {
                    let dim = intertwiner_space(&build_u(sigma, k, q, branch)?, &product, DEFAULT_TOL)?.dim;
                    if dim > 0 {
                        numeric.insert(level_label(sigma, k).id().to_string(), dim);
                        total += dim * (k + 1);
                    }
                }
            }
            let (u, v) = (level_label(eps, n), level_label(delta, m));
            let symbolic = UqSu11
                .decompose(&u, &v)?
                .iter()
                .map(|(w, mult)| (w.id().to_string(), usize::try_from(mult).unwrap_or(usize::MAX)))
                .collect();
            Ok(FusionEntry {
                u,
                v,
                numeric,
                symbolic,
                complete: total == (n + 1) * (m + 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = entries.iter().filter(|e| !e.agrees()).cloned().collect();
    Ok(FusionCrosscheck {
        q,
        n_max,
        entries,
        mismatches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RepCheck {
    pub label: IrrLabel,
    pub relation_residual: f64,
    pub star_residual: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitarizabilityCheck {
    pub w: Twist,
    pub n: usize,
    pub form: StarForm,
    #[serde(flatten)]
    pub result: Unitarizability,
}

/// Full numeric report for one `q`.
#[derive(Clone, Debug, Serialize)]
pub struct UqVerifyReport {
    pub q: f64,
    pub branch: Branch,
    pub n_max: usize,
    pub fusion_n_max: usize,
    pub representations: Vec<RepCheck>,
    pub unitarizability: Vec<UnitarizabilityCheck>,
    /// Every su2 attempt was obstructed and exactly the admissible su11
    /// twists were unitarizable.
    pub unitarizability_as_expected: bool,
    pub conjugate_equations: ConjugateEquations,
    pub permutation: Vec<PermutationCheck>,
    pub fusion: FusionCrosscheck,
    pub pass: bool,
}

pub fn uq_verify(q: f64, n_max: usize, fusion_n_max: usize, branch: Branch) -> Result<UqVerifyReport> {
    check_negative_q(q)?;
    let mut representations = Vec::new();
    for n in 0..=n_max {
        for minus in [false, true] {
            let u = build_u(minus, n, q, branch)?;
            let star = check_star(&u)?;
            let relation_residual = u.relations().max();
            representations.push(RepCheck {
                label: level_label(minus, n),
                relation_residual,
                star_residual: star.e_residual.max(star.k_residual),
                pass: star.pass && relation_residual <= TAU,
            });
        }
    }
    let mut unitarizability = Vec::new();
    let mut as_expected = true;
    for n in 1..=n_max {
        for w in Twist::ALL {
            for form in [StarForm::Su2, StarForm::Su11] {
                let result = unitarizability_witness(w, n, q, form, branch)?;
                let admissible = form == StarForm::Su11 && (Twist::of_unitary(false, n) == w || Twist::of_unitary(true, n) == w);
                as_expected &= result.is_unitarizable() == admissible;
                unitarizability.push(UnitarizabilityCheck { w, n, form, result });
            }
        }
    }
    let conjugate_equations = verify_conjugate_equations(q, branch)?;
    let permutation = (0..=n_max)
        .map(|n| verify_permutation_intertwiner(n, q, branch))
        .collect::<Result<Vec<_>>>()?;
    let fusion = fusion_crosscheck(fusion_n_max, q, branch)?;
    let pass = representations.iter().all(|r| r.pass)
        && as_expected
        && conjugate_equations.pass
        && (conjugate_equations.c_left.re + q.abs()).abs() <= TAU
        && permutation.iter().all(|p| p.pass)
        && fusion.mismatches.is_empty();
    Ok(UqVerifyReport {
        q,
        branch,
        n_max,
        fusion_n_max,
        representations,
        unitarizability,
        unitarizability_as_expected: as_expected,
        conjugate_equations,
        permutation,
        fusion,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Branch = Branch::Positive;

    #[test]
    fn unitarizability_examples() {
        match unitarizability_witness(Twist::I, 1, -0.5, StarForm::Su11, B).unwrap() {
            Unitarizability::Unitarizable { t, star_residual } => {
                assert_eq!(t.len(), 2);
                assert!((t[1] - 1.0).abs() < 1e-12);
                assert!(star_residual <= TAU);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            unitarizability_witness(Twist::One, 1, -0.5, StarForm::Su11, B).unwrap(),
            Unitarizability::Obstruction { kind: ObstructionKind::NonRealK, .. }
        ));
        assert!(!unitarizability_witness(Twist::One, 1, -0.5, StarForm::Su2, B).unwrap().is_unitarizable());
        assert!(unitarizability_witness(Twist::I, 1, 0.5, StarForm::Su11, B).is_err());
    }

    #[test]
    fn su2_form_is_always_obstructed_for_negative_q() {
        for q in [-0.5, -2.0 / 3.0, -0.75] {
            for n in 1..=6 {
                for w in Twist::ALL {
                    assert!(!unitarizability_witness(w, n, q, StarForm::Su2, B).unwrap().is_unitarizable());
                    let admissible = w == Twist::of_unitary(false, n) || w == Twist::of_unitary(true, n);
                    assert_eq!(
                        unitarizability_witness(w, n, q, StarForm::Su11, B).unwrap().is_unitarizable(),
                        admissible,
                        "w={w:?} n={n} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugate_equations_give_minus_abs_q() {
        for q in [-0.5, -2.0 / 3.0, -0.75] {
            let r = verify_conjugate_equations(q, B).unwrap();
            assert!(r.pass, "{r:?}");
            assert!((r.c_left - Complex64::new(-q.abs(), 0.0)).norm() < 1e-9);
            assert!((r.r_norm_sq - (1.0 + q * q)).abs() < 1e-12);
        }
    }

    #[test]
    fn permutation_intertwiner() {
        assert!(verify_permutation_intertwiner(0, -0.5, B).unwrap().pass);
        assert!(verify_permutation_intertwiner(1, -0.5, B).unwrap().pass);
        assert!(verify_permutation_intertwiner(2, -2.0 / 3.0, B).unwrap().pass);
    }

    #[test]
    fn flip_is_an_involution() {
        let p = flip(2, 3);
        let back = flip(3, 2);
        assert_eq!(&back * &p, Mat::identity(6, 6));
    }

    #[test]
    fn fusion_examples() {
        let r = fusion_crosscheck(2, -0.5, B).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        let find = |u: &str, v: &str| r.entries.iter().find(|e| e.u.id() == u && e.v.id() == v).unwrap();
        let e = find("u-1", "u+1");
        assert_eq!(e.numeric.keys().collect::<Vec<_>>(), ["iota", "u+2"]);
        let e = find("u+2", "u-2");
        assert_eq!(e.numeric.keys().collect::<Vec<_>>(), ["iota-1", "u-2", "u-4"]);
    }
}
