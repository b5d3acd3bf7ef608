//! Finite-dimensional representations of U_q(sl₂) for real q, the twists
//! by one-dimensional characters, and the unitary representations of the
//! negative-q real form.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::qint::qint;
use crate::error::{FusionError, Result};

pub type Mat = DMatrix<Complex64>;

/// Residual tolerance for relations and star structures.
pub const TAU: f64 = 1e-9;

/// The one-dimensional character `K ↦ w`, `E, F ↦ 0` (`w⁴ = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Twist {
    pub const ALL: [Twist; 4] = [Twist::One, Twist::MinusOne, Twist::I, Twist::MinusI];

    pub fn value(self) -> Complex64 {
        match self {
            Twist::One => Complex64::new(1.0, 0.0),
            Twist::MinusOne => Complex64::new(-1.0, 0.0),
            Twist::I => Complex64::new(0.0, 1.0),
            Twist::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    /// The twist carried by the unitary representation `u_{±n}`.
    pub fn of_unitary(minus: bool, n: usize) -> Twist {
        match (n % 2 == 1, minus) {
            (false, false) => Twist::One,
            (false, true) => Twist::MinusOne,
            (true, false) => Twist::I,
            (true, true) => Twist::MinusI,
        }
    }
}

/// Which real form a set of matrices is meant to be a *-representation of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Form {
    /// Plain `ι_w ⊗ π_n`, no star structure claimed.
    Sl2 { w: Twist },
    /// `E* = F`, `K* = K`.
    Su2,
    /// `E* = −F`, `K* = K`.
    Su11,
    /// Tensor product of representations with different tags.
    Mixed,
}

/// Choice of the square root `t` of `q`; verdicts must not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `t = i√|q|` for `q < 0`, `t = √q` for `q > 0`.
    #[default]
    Positive,
    Negative,
}

impl Branch {
    pub fn t(self, q: f64) -> Complex64 {
        let root = if q < 0.0 {
            Complex64::new(0.0, (-q).sqrt())
        } else {
            Complex64::new(q.sqrt(), 0.0)
        };
        match self {
            Branch::Positive => root,
            Branch::Negative => -root,
        }
    }
}

pub(crate) fn check_q(q: f64) -> Result<()> {
    if !q.is_finite() || q == 0.0 || (q.abs() - 1.0).abs() < 1e-12 {
        return Err(FusionError::BadParameter(format!("q = {q}: need a real q with |q| ∉ {{0, 1}}")));
    }
    Ok(())
}

pub(crate) fn check_negative_q(q: f64) -> Result<()> {
    check_q(q)?;
    if q >= 0.0 {
        return Err(FusionError::BadParameter(format!("q = {q}: the su(1,1) form needs q < 0")));
    }
    Ok(())
}

/// Images of `E`, `F`, `K`, `K⁻¹` on a basis `v_0 … v_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrices {
    pub n: usize,
    pub e: Mat,
    pub f: Mat,
    pub k: Mat,
    pub k_inv: Mat,
    pub q: f64,
    pub form: Form,
}

/// Max-entry residuals of the defining relations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RelationResiduals {
    pub kek: f64,
    pub kfk: f64,
    pub commutator: f64,
    pub k_inverse: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        self.kek.max(self.kfk).max(self.commutator).max(self.k_inverse)
    }

    pub fn pass(&self) -> bool {
        self.max() <= TAU
    }
}

pub(crate) fn max_abs(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn trivial(q: f64) -> Self {
        let one = Mat::from_element(1, 1, c(1.0));
        RepMatrices {
            n: 0,
            e: Mat::zeros(1, 1),
            f: Mat::zeros(1, 1),
            k: one.clone(),
            k_inv: one,
            q,
            form: Form::Sl2 { w: Twist::One },
        }
    }

    /// The same matrices, claimed to represent another real form.
    pub fn with_form(mut self, form: Form) -> Self {
        self.form = form;
        self
    }

    pub fn relations(&self) -> RelationResiduals {
        let q = self.q;
        let d = self.dim();
        let k2 = &self.k * &self.k;
        let kinv2 = &self.k_inv * &self.k_inv;
        let cartan = (k2 - kinv2) / c(q - q.recip());
        RelationResiduals {
            kek: max_abs(&(&self.k * &self.e * &self.k_inv - &self.e * c(q))),
            kfk: max_abs(&(&self.k * &self.f * &self.k_inv - &self.f * c(q.recip()))),
            commutator: max_abs(&(&self.e * &self.f - &self.f * &self.e - cartan)),
            k_inverse: max_abs(&(&self.k * &self.k_inv - Mat::identity(d, d))),
        }
    }

    fn from_diag_k(n: usize, e: Mat, f: Mat, k_diag: Vec<Complex64>, q: f64, form: Form) -> Self {
        let k_inv: Vec<Complex64> = k_diag.iter().map(|z| z.inv()).collect();
        RepMatrices {
            n,
            e,
            f,
            k: Mat::from_diagonal(&nalgebra::DVector::from_vec(k_diag)),
            k_inv: Mat::from_diagonal(&nalgebra::DVector::from_vec(k_inv)),
            q,
            form,
        }
    }
}

/// `ι_w ⊗ π_n`: `E v_r = w[n−r+1] v_{r−1}`, `F v_r = w[r+1] v_{r+1}`,
/// `K v_r = w t^{n−2r} v_r`.
pub fn build_pi(w: Twist, n: usize, q: f64, branch: Branch) -> Result<RepMatrices> {
    check_q(q)?;
    let d = n + 1;
    let wv = w.value();
    let t = branch.t(q);
    let ni = n as i32;
    let mut e = Mat::zeros(d, d);
    let mut f = Mat::zeros(d, d);
    for r in 1..d {
        let ri = r as i32;
        e[(r - 1, r)] = wv * qint(ni - ri + 1, q);
        f[(r, r - 1)] = wv * qint(ri, q);
    }
    let k = (0..d).map(|r| wv * t.powi(ni - 2 * r as i32)).collect();
    Ok(RepMatrices::from_diag_k(n, e, f, k, q, Form::Sl2 { w }))
}

/// The unitary representation `u_{±n}` of the su(1,1) form (`q < 0`):
/// for odd `n`, `E ψ_r = ±i√([n−r+1][r]) ψ_{r−1}`; for even `n`,
/// `E ψ_r = ±√(−[n−r+1][r]) ψ_{r−1}`; `F = −E†` and `K = ι_w ⊗ π_n(K)`
/// with `w = ±i` (odd) or `±1` (even).
pub fn build_u(minus: bool, n: usize, q: f64, branch: Branch) -> Result<RepMatrices> {
    check_negative_q(q)?;
    let d = n + 1;
    let s = if minus { -1.0 } else { 1.0 };
    let odd = n % 2 == 1;
    let ni = n as i32;
    let mut e = Mat::zeros(d, d);
    for r in 1..d {
        let p = qint(ni - r as i32 + 1, q) * qint(r as i32, q);
        e[(r - 1, r)] = if odd {
            Complex64::new(0.0, s * p.sqrt())
        } else {
            c(s * (-p).sqrt())
        };
    }
    let f = -e.adjoint();
    let w = Twist::of_unitary(minus, n).value();
    let t = branch.t(q);
    let k = (0..d).map(|r| w * t.powi(ni - 2 * r as i32)).collect();
    Ok(RepMatrices::from_diag_k(n, e, f, k, q, Form::Su11))
}

/// Coproduct `Δ(E) = E⊗K⁻¹ + K⊗E`, `Δ(F) = F⊗K⁻¹ + K⊗F`, `Δ(K) = K⊗K`.
pub fn tensor_rep(a: &RepMatrices, b: &RepMatrices) -> Result<RepMatrices> {
    if (a.q - b.q).abs() > 1e-15 * a.q.abs() {
        return Err(FusionError::BadParameter(format!("tensor product of reps at q = {} and q = {}", a.q, b.q)));
    }
    let form = if a.form == b.form { a.form } else { Form::Mixed };
    Ok(RepMatrices {
        n: a.dim() * b.dim() - 1,
        e: a.e.kronecker(&b.k_inv) + a.k.kronecker(&b.e),
        f: a.f.kronecker(&b.k_inv) + a.k.kronecker(&b.f),
        k: a.k.kronecker(&b.k),
        k_inv: a.k_inv.kronecker(&b.k_inv),
        q: a.q,
        form,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StarCheck {
    pub form: Form,
    /// `‖E† − F‖` (su2) or `‖E† + F‖` (su11).
    pub e_residual: f64,
    /// `‖K† − K‖`.
    pub k_residual: f64,
    pub pass: bool,
}

pub fn check_star(rep: &RepMatrices) -> Result<StarCheck> {
    let e_adj = rep.e.adjoint();
    let e_residual = match rep.form {
        Form::Su2 => max_abs(&(e_adj - &rep.f)),
        Form::Su11 => max_abs(&(e_adj + &rep.f)),
        other => {
            return Err(FusionError::BadParameter(format!("no star structure for {other:?}")));
        }
    };
    let k_residual = max_abs(&(rep.k.adjoint() - &rep.k));
    Ok(StarCheck {
        form: rep.form,
        e_residual,
        k_residual,
        pass: e_residual <= TAU && k_residual <= TAU,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const QS: [f64; 3] = [-0.5, -2.0 / 3.0, -0.75];

    #[test]
    fn small_examples() {
        let p = build_pi(Twist::One, 0, -0.5, Branch::Positive).unwrap();
        assert_eq!(p.e, Mat::zeros(1, 1));
        assert_eq!(p.k, Mat::identity(1, 1));

        let p = build_pi(Twist::One, 1, -0.5, Branch::Positive).unwrap();
        let t = Complex64::new(0.0, 0.5f64.sqrt());
        assert!((p.k[(0, 0)] - t).norm() < 1e-15);
        assert!((p.k[(1, 1)] - t.inv()).norm() < 1e-15);

        let u = build_u(false, 1, -0.5, Branch::Positive).unwrap();
        assert!((u.e[(0, 1)] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((u.k[(0, 0)] - c(-(0.5f64.sqrt()))).norm() < 1e-15);
        assert!((u.k[(1, 1)] - c(2f64.sqrt())).norm() < 1e-15);

        let m = build_u(true, 1, -0.5, Branch::Positive).unwrap();
        assert_eq!(m.e, -&u.e);
        assert_eq!(m.f, -&u.f);
        assert_eq!(m.k, -&u.k);

        assert_eq!(build_u(false, 0, -0.5, Branch::Positive).unwrap(), RepMatrices::trivial(-0.5).with_form(Form::Su11));
        assert!(build_u(false, 2, 0.5, Branch::Positive).is_err());
        assert!(build_pi(Twist::One, 2, 1.0, Branch::Positive).is_err());
    }

    #[test]
    fn relations_and_star_hold() {
        for q in QS {
            for n in 0..=8 {
                for w in Twist::ALL {
                    let p = build_pi(w, n, q, Branch::Positive).unwrap();
                    assert!(p.relations().pass(), "pi w={w:?} n={n} q={q}: {:?}", p.relations());
                }
                for minus in [false, true] {
                    let u = build_u(minus, n, q, Branch::Positive).unwrap();
                    assert!(u.relations().pass(), "u n={n} q={q}: {:?}", u.relations());
                    assert!(check_star(&u).unwrap().pass);
                }
            }
        }
    }

    #[test]
    fn plain_pi_is_not_a_star_rep_of_su2() {
        let p = build_pi(Twist::One, 1, -0.5, Branch::Positive).unwrap().with_form(Form::Su2);
        assert!(!check_star(&p).unwrap().pass);
    }

    #[test]
    fn tensor_products() {
        let u = build_u(false, 1, -0.5, Branch::Positive).unwrap();
        let m = build_u(true, 1, -0.5, Branch::Positive).unwrap();
        let triv = RepMatrices::trivial(-0.5);
        let ut = tensor_rep(&u, &triv).unwrap();
        assert!(max_abs(&(&ut.e - &u.e)) < 1e-15 && max_abs(&(&ut.k - &u.k)) < 1e-15);
        let um = tensor_rep(&u, &m).unwrap();
        assert_eq!(um.dim(), 4);
        assert!(um.relations().pass());
        assert!(check_star(&um).unwrap().pass);
        for i in 0..2 {
            for j in 0..2 {
                assert!((um.k[(2 * i + j, 2 * i + j)] - u.k[(i, i)] * m.k[(j, j)]).norm() < 1e-15);
            }
        }
        assert!(tensor_rep(&u, &build_u(false, 1, -0.25, Branch::Positive).unwrap()).is_err());
    }
}
