//! The Lie algebra of ω-Hamiltonian matrices `{L : LᵀΩ + ΩL = 0}`.

use nalgebra::DMatrix;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::form::{standard_matrix, DarbouxTransform, SymplecticForm};
use crate::ratmat::{to_f64, RationalMatrix};

pub const DEFAULT_EXP_TOL: f64 = 1e-8;
pub const DEFAULT_EXP_SAMPLES: [f64; 3] = [0.1, 0.5, 1.0];

/// A matrix verified to satisfy `LᵀΩ + ΩL = 0` for its form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianMatrix {
    l: RationalMatrix,
    form: SymplecticForm,
}

impl HamiltonianMatrix {
    /// Validates membership; fails with [`Error::NotHamiltonianMatrix`].
    pub fn new(form: &SymplecticForm, l: RationalMatrix) -> Result<Self> {
        if !is_hamiltonian_matrix(form, &l)? {
            return Err(Error::NotHamiltonianMatrix);
        }
        Ok(HamiltonianMatrix { l, form: form.clone() })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.l
    }

    pub fn form(&self) -> &SymplecticForm {
        &self.form
    }
}

fn residual(form: &SymplecticForm, l: &RationalMatrix) -> Result<RationalMatrix> {
    let omega = form.omega();
    l.transpose().mul(omega)?.add(&omega.mul(l)?)
}

pub fn is_hamiltonian_matrix(form: &SymplecticForm, l: &RationalMatrix) -> Result<bool> {
    if l.rows() != form.dim() || l.cols() != form.dim() {
        return Err(Error::dims(
            format!("{0}x{0}", form.dim()),
            format!("{}x{}", l.rows(), l.cols()),
        ));
    }
    // members are traceless, so a nonzero trace rejects without the product
    if !l.trace()?.is_zero() {
        return Ok(false);
    }
    Ok(residual(form, l)?.is_zero())
}

/// `L = (Ω⁻¹)ᵀ B` for symmetric `B`.
pub fn from_symmetric(form: &SymplecticForm, b: &RationalMatrix) -> Result<HamiltonianMatrix> {
    if b.rows() != form.dim() || b.cols() != form.dim() {
        return Err(Error::dims(form.dim(), format!("{}x{}", b.rows(), b.cols())));
    }
    if !b.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let l = form.inverse_transpose().mul(b)?;
    debug_assert!(residual(form, &l)?.is_zero());
    Ok(HamiltonianMatrix { l, form: form.clone() })
}

/// `B = ΩᵀL`, the symmetric matrix with `from_symmetric(B) = L`.
pub fn to_symmetric(h: &HamiltonianMatrix) -> RationalMatrix {
    let b = h.form.omega().transpose().mul(&h.l).expect("dimensions checked at construction");
    debug_assert!(b.is_symmetric().unwrap_or(false));
    b
}

/// `P⁻¹ L P`, an element of the standard algebra for `J`.
pub fn conjugate_to_standard(h: &HamiltonianMatrix, d: &DarbouxTransform) -> Result<RationalMatrix> {
    if d.p().rows() != h.form.dim() || !d.belongs_to(&h.form) {
        return Err(Error::dims("a Darboux transform of the matrix's form", "a foreign transform"));
    }
    let p = d.p();
    p.inverse()?.mul(&h.l)?.mul(p)
}

/// `[A, B] = AB - BA`
pub fn commutator(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Floating-point sanity check that `exp(tL)` preserves `Ω` at each sample
/// `t`, i.e. `‖exp(tL)ᵀ Ω exp(tL) - Ω‖∞ ≤ tol`.
pub fn exp_check(h: &HamiltonianMatrix, t_samples: &[f64], tol: f64) -> bool {
    exp_check_raw(&h.form, &h.l, t_samples, tol)
}

/// Same as [`exp_check`] for an arbitrary square matrix; non-members are
/// expected to fail.
pub fn exp_check_raw(form: &SymplecticForm, l: &RationalMatrix, t_samples: &[f64], tol: f64) -> bool {
    let n = form.dim();
    let to_dense = |m: &RationalMatrix| DMatrix::from_fn(m.rows(), m.cols(), |i, j| to_f64(&m[(i, j)]));
    let omega = to_dense(form.omega());
    let l = to_dense(l);
    t_samples.iter().all(|&t| {
        let e = (&l * t).exp();
        let drift = e.transpose() * &omega * &e - &omega;
        let norm = (0..n)
            .map(|i| drift.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max);
        norm.is_finite() && norm <= tol
    })
}

/// Whether `m` lies in the standard algebra for `J` of matching size.
pub fn is_standard_hamiltonian(m: &RationalMatrix) -> Result<bool> {
    let j = standard_matrix(m.rows() / 2);
    Ok(m.transpose().mul(&j)?.add(&j.mul(m)?)?.is_zero())
}
