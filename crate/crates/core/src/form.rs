//! Validated symplectic forms and Darboux bases.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratmat::{dot, Rational, RationalMatrix};

/// A skew-symmetric, invertible, even-dimensional rational matrix `[ω]`.
///
/// The transposed inverse `([ω]⁻¹)ᵀ` is computed once at validation, since
/// every Hamiltonian field built over the form needs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    omega: RationalMatrix,
    inv_transpose: RationalMatrix,
}

/// Change of basis `P` whose columns are a symplectic basis: `Pᵀ[ω]P = J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxTransform {
    p: RationalMatrix,
}

impl DarbouxTransform {
    pub fn p(&self) -> &RationalMatrix {
        &self.p
    }

    /// `Pᵀ[ω]P - J`; all zero when `self` belongs to `form`.
    pub fn residual(&self, form: &SymplecticForm) -> Result<RationalMatrix> {
        let congruent = self.p.transpose().mul(form.omega())?.mul(&self.p)?;
        congruent.sub(&standard_matrix(form.half_dim()))
    }

    pub fn belongs_to(&self, form: &SymplecticForm) -> bool {
        self.residual(form).is_ok_and(|r| r.is_zero())
    }
}

/// The block matrix `J = [[0, I], [-I, 0]]` of size `2n`.
pub fn standard_matrix(n: usize) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = Rational::one();
        j[(n + i, i)] = -Rational::one();
    }
    j
}

pub fn validate_form(m: RationalMatrix) -> Result<SymplecticForm> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() % 2 == 1 {
        return Err(Error::OddDimension(m.rows()));
    }
    if m.rows() == 0 {
        return Err(Error::ZeroDimension);
    }
    if !m.is_skew_symmetric()? {
        return Err(Error::NotSkewSymmetric);
    }
    let inv = m.inverse().map_err(|_| Error::Degenerate)?;
    Ok(SymplecticForm {
        inv_transpose: inv.transpose(),
        omega: m,
    })
}

pub fn standard_form(n: usize) -> Result<SymplecticForm> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    validate_form(standard_matrix(n))
}

impl SymplecticForm {
    pub fn omega(&self) -> &RationalMatrix {
        &self.omega
    }

    /// `([ω]⁻¹)ᵀ`
    pub fn inverse_transpose(&self) -> &RationalMatrix {
        &self.inv_transpose
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn half_dim(&self) -> usize {
        self.omega.rows() / 2
    }

    pub fn det(&self) -> Rational {
        self.omega.det().expect("validated form is square")
    }

    /// `ω(u, v) = uᵀ[ω]v`
    pub fn evaluate(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        if u.len() != self.dim() || v.len() != self.dim() {
            return Err(Error::dims(self.dim(), u.len().max(v.len())));
        }
        Ok(dot(u, &self.omega.mul_vec(v)?))
    }

    pub fn is_minus_identity_square(&self) -> bool {
        let sq = self.omega.mul(&self.omega).expect("square");
        sq == RationalMatrix::identity(self.dim()).neg()
    }

    /// Symplectic basis by skew Gram-Schmidt on the standard basis.
    ///
    /// At each step the lowest-index remaining vector `u` is paired with the
    /// lowest-index remaining `w` having `ω(u, w) ≠ 0`; `v = w / ω(u, w)` and
    /// the pair is projected out of the remaining vectors. Columns of `P` are
    /// ordered `u₁ … uₙ, v₁ … vₙ`.
    pub fn darboux_basis(&self) -> DarbouxTransform {
        let dim = self.dim();
        let n = self.half_dim();
        let mut remaining: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                let mut e = vec![Rational::zero(); dim];
                e[i] = Rational::one();
                e
            })
            .collect();
        let mut us = Vec::with_capacity(n);
        let mut vs = Vec::with_capacity(n);
        let form = |a: &[Rational], b: &[Rational]| self.evaluate(a, b).expect("length checked");

        while !remaining.is_empty() {
            let u = remaining.remove(0);
            // non-degeneracy on the ω-orthogonal complement guarantees a partner
            let (k, pairing) = remaining
                .iter()
                .enumerate()
                .map(|(k, w)| (k, form(&u, w)))
                .find(|(_, c)| !c.is_zero())
                .expect("non-degenerate form always has a partner");
            let w = remaining.remove(k);
            let inv = pairing.recip();
            let v: Vec<Rational> = w.iter().map(|x| x * &inv).collect();

            for z in remaining.iter_mut() {
                let zv = form(z, &v);
                let zu = form(z, &u);
                if zv.is_zero() && zu.is_zero() {
                    continue;
                }
                for ((zi, ui), vi) in z.iter_mut().zip(&u).zip(&v) {
                    *zi = &*zi - &zv * ui + &zu * vi;
                }
            }
            us.push(u);
            vs.push(v);
        }

        let mut p = RationalMatrix::zeros(dim, dim);
        for (c, col) in us.iter().chain(vs.iter()).enumerate() {
            for (r, x) in col.iter().enumerate() {
                p[(r, c)] = x.clone();
            }
        }
        DarbouxTransform { p }
    }
}
