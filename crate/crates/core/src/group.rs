//! Membership in the λ-symplectic sets `{B : BᵀΩB = λΩ}`, the symplectic
//! group, its antisymplectic coset and the semisymplectic group.

use num::traits::{One, Signed, Zero};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::form::SymplecticForm;
use crate::poly::{PolyMatrix, PolyVectorField};
use crate::ratmat::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupClass {
    Symplectic,
    Antisymplectic,
    /// Some `λ ∉ {0, 1, -1}`.
    LambdaSymplectic(Rational),
    Outside,
}

impl GroupClass {
    pub fn from_lambda(lambda: Option<Rational>) -> Self {
        match lambda {
            None => GroupClass::Outside,
            Some(l) if l.is_one() => GroupClass::Symplectic,
            Some(l) if (-&l).is_one() => GroupClass::Antisymplectic,
            Some(l) => GroupClass::LambdaSymplectic(l),
        }
    }

    pub fn lambda(&self) -> Option<Rational> {
        match self {
            GroupClass::Symplectic => Some(Rational::one()),
            GroupClass::Antisymplectic => Some(-Rational::one()),
            GroupClass::LambdaSymplectic(l) => Some(l.clone()),
            GroupClass::Outside => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupClass::Symplectic => "symplectic",
            GroupClass::Antisymplectic => "antisymplectic",
            GroupClass::LambdaSymplectic(_) => "lambda_symplectic",
            GroupClass::Outside => "outside",
        }
    }

    /// Whether the matrix lies in the semisymplectic group.
    pub fn in_omega_n(&self) -> bool {
        matches!(self, GroupClass::Symplectic | GroupClass::Antisymplectic)
    }
}

fn check_dim(form: &SymplecticForm, b: &RationalMatrix) -> Result<()> {
    if b.rows() != form.dim() || b.cols() != form.dim() {
        return Err(Error::dims(
            format!("{0}x{0}", form.dim()),
            format!("{}x{}", b.rows(), b.cols()),
        ));
    }
    Ok(())
}

/// The unique nonzero `λ` with `bᵀΩb = λΩ`, if any.
pub fn lambda_of(form: &SymplecticForm, b: &RationalMatrix) -> Result<Option<Rational>> {
    check_dim(form, b)?;
    let omega = form.omega();
    let pulled = b.transpose().mul(omega)?.mul(b)?;
    let (pos, w) = omega
        .entries()
        .iter()
        .enumerate()
        .find(|(_, w)| !w.is_zero())
        .expect("validated form is nonzero");
    let lambda = &pulled.entries()[pos] / w;
    if lambda.is_zero() || pulled != omega.scale(&lambda) {
        return Ok(None);
    }
    Ok(Some(lambda))
}

pub fn classify(form: &SymplecticForm, b: &RationalMatrix) -> Result<GroupClass> {
    Ok(GroupClass::from_lambda(lambda_of(form, b)?))
}

/// The coset sign: `+1` on the symplectic group, `-1` on the antisymplectic
/// coset.
pub fn sigma(form: &SymplecticForm, b: &RationalMatrix) -> Result<i8> {
    match classify(form, b)? {
        GroupClass::Symplectic => Ok(1),
        GroupClass::Antisymplectic => Ok(-1),
        _ => Err(Error::NotInOmegaN),
    }
}

/// Tests `(dξ)ᵀ Ω (dξ) = λΩ` as an identity of polynomial matrices.
pub fn is_lambda_symplectic_polymap(
    form: &SymplecticForm,
    xi: &PolyVectorField,
    lambda: &Rational,
) -> Result<bool> {
    let n = form.dim();
    if xi.dim() != n || xi.nvars() != n {
        return Err(Error::dims(n, format!("{} components in {} variables", xi.dim(), xi.nvars())));
    }
    let jac = xi.jacobian();
    let pulled = jac.transpose().right_mul_const(form.omega())?.mul(&jac)?;
    let target = PolyMatrix::from_constant(&form.omega().scale(lambda), n);
    Ok(pulled.sub(&target)?.is_zero())
}

fn exact_sqrt(q: &Rational) -> Option<Rational> {
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

fn small_rational<R: Rng>(rng: &mut R, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.random_range(-3..=3);
        let d: i64 = rng.random_range(1..=2);
        if !nonzero || n != 0 {
            return Rational::new(n.into(), d.into());
        }
    }
}

/// A random element of the standard symplectic group `Sp(n)` built from the
/// generators `[[I,S],[0,I]]`, `[[I,0],[S,I]]` and `[[A,0],[0,A⁻ᵀ]]`.
fn random_standard_symplectic<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    let dim = 2 * n;
    let mut acc = RationalMatrix::identity(dim);
    for _ in 0..3 {
        let mut s = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = small_rational(rng, false);
                s[(i, j)] = v.clone();
                s[(j, i)] = v;
            }
        }
        let mut upper = RationalMatrix::identity(dim);
        let mut lower = RationalMatrix::identity(dim);
        for i in 0..n {
            for j in 0..n {
                upper[(i, n + j)] = s[(i, j)].clone();
                lower[(n + i, j)] = s[(i, j)].clone();
            }
        }
        // unit lower-triangular times an invertible diagonal
        let mut a = RationalMatrix::identity(n);
        for i in 0..n {
            a[(i, i)] = small_rational(rng, true);
            for j in 0..i {
                a[(i, j)] = small_rational(rng, false);
            }
        }
        let a_inv_t = a.inverse().expect("triangular with nonzero diagonal").transpose();
        let mut diag = RationalMatrix::zeros(dim, dim);
        for i in 0..n {
            for j in 0..n {
                diag[(i, j)] = a[(i, j)].clone();
                diag[(n + i, n + j)] = a_inv_t[(i, j)].clone();
            }
        }
        for g in [upper, lower, diag] {
            acc = acc.mul(&g).expect("square");
        }
    }
    acc
}

/// Seeded generator of members of `Sp^λ_ω` for `λ = ±μ²`, `μ ∈ ℚ*`.
///
/// Standard symplectic matrices are conjugated into `Sp_ω` by the Darboux
/// transform; `λ < 0` composes with the swap `[[0,I],[I,0]]` and `|λ| ≠ 1`
/// scales by `μ`.
pub fn random_member(form: &SymplecticForm, lambda: &Rational, seed: u64) -> Result<RationalMatrix> {
    let unreachable = || Error::UnreachableLambda(lambda.to_string());
    if lambda.is_zero() {
        return Err(unreachable());
    }
    let mu = exact_sqrt(&lambda.abs()).ok_or_else(unreachable)?;
    let n = form.half_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = random_standard_symplectic(n, &mut rng);
    if lambda.is_negative() {
        let mut swap = RationalMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            swap[(i, n + i)] = Rational::one();
            swap[(n + i, i)] = Rational::one();
        }
        m = m.mul(&swap)?;
    }
    let p = form.darboux_basis().p().clone();
    let b = p.mul(&m)?.mul(&p.inverse()?)?;
    Ok(b.scale(&mu))
}
