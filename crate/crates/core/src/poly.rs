//! Exact multivariate polynomials, polynomial vector fields and polynomial
//! matrices over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors in graded
//! lexicographic order: lower total degree first, and within one degree the
//! lexicographically larger exponent vector first (`x²` before `xy` before
//! `y²`). Iteration order is therefore canonical and serialization is
//! reproducible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratmat::{to_f64, Rational, RationalMatrix};

pub const DEFAULT_MAX_DEGREE: u32 = 64;
pub const DEFAULT_MAX_NVARS: usize = 32;

/// Resource caps applied to polynomial inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: u32,
    pub max_nvars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_nvars: DEFAULT_MAX_NVARS,
        }
    }
}

impl Limits {
    pub fn check_nvars(&self, nvars: usize) -> Result<()> {
        if nvars > self.max_nvars {
            return Err(Error::ResourceLimit(format!(
                "{nvars} variables exceeds the cap of {}",
                self.max_nvars
            )));
        }
        Ok(())
    }

    pub fn check(&self, p: &MultiPoly) -> Result<()> {
        self.check_nvars(p.nvars)?;
        let d = p.degree();
        if d > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "total degree {d} exceeds the cap of {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::dims(format!("{nvars} exponents"), format!("{} exponents", e.len())));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// `½ xᵀ B x` for a square `B` (only the symmetric part contributes).
    pub fn quadratic_form(b: &RationalMatrix) -> Self {
        let n = b.rows();
        let half = Rational::new(1.into(), 2.into());
        let mut p = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let c = &b[(i, j)];
                if c.is_zero() {
                    continue;
                }
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(Monomial(e), c * &half);
            }
        }
        p
    }

    /// `Σ cᵢ xᵢ`
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    /// Lowest total degree among the terms, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn without_constant(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&Monomial::one(self.nvars));
        p
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i`
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn grad(&self) -> PolyVectorField {
        PolyVectorField {
            nvars: self.nvars,
            components: (0..self.nvars).map(|i| self.derivative(i)).collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.nvars {
            return Err(Error::dims(self.nvars, x.len()));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                if e > 0 {
                    t *= num::pow(xi.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Variable substitution `p(S·v)`.
    pub fn compose_linear(&self, s: &RationalMatrix) -> Result<Self> {
        if s.rows() != self.nvars || !s.is_square() {
            return Err(Error::dims(
                format!("{0}x{0}", self.nvars),
                format!("{}x{}", s.rows(), s.cols()),
            ));
        }
        let n = self.nvars;
        let images: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::linear_form(s.row(k))).collect();
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(n, Rational::one()), p.clone()])
            .collect();
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(n, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[k];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("nvars mismatch in polynomial addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("nvars mismatch in polynomial subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("nvars mismatch in polynomial product")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// A polynomial map given componentwise; all components share `nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVectorField {
    nvars: usize,
    components: Vec<MultiPoly>,
}

impl PolyVectorField {
    pub fn new(nvars: usize, components: Vec<MultiPoly>) -> Result<Self> {
        if let Some(bad) = components.iter().find(|c| c.nvars != nvars) {
            return Err(Error::NvarsMismatch(nvars, bad.nvars));
        }
        Ok(PolyVectorField { nvars, components })
    }

    pub fn zero(nvars: usize, dim: usize) -> Self {
        PolyVectorField {
            nvars,
            components: vec![MultiPoly::zero(nvars); dim],
        }
    }

    /// The linear field `x ↦ L x`.
    pub fn linear(l: &RationalMatrix) -> Self {
        PolyVectorField {
            nvars: l.cols(),
            components: (0..l.rows()).map(|i| MultiPoly::linear_form(l.row(i))).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &MultiPoly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn constant_part(&self) -> Vec<Rational> {
        self.components.iter().map(MultiPoly::constant_term).collect()
    }

    pub fn without_constant(&self) -> Self {
        self.map(MultiPoly::without_constant)
    }

    fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        PolyVectorField {
            nvars: self.nvars,
            components: self.components.iter().map(f).collect(),
        }
    }

    fn check_shape(&self, other: &PolyVectorField) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        if self.dim() != other.dim() {
            return Err(Error::dims(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PolyVectorField) -> Result<Self> {
        self.check_shape(other)?;
        Ok(PolyVectorField {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &PolyVectorField) -> Result<Self> {
        self.check_shape(other)?;
        Ok(PolyVectorField {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// `M · X` with a constant matrix acting on the components.
    pub fn apply_matrix(&self, m: &RationalMatrix) -> Result<Self> {
        if m.cols() != self.dim() {
            return Err(Error::dims(self.dim(), m.cols()));
        }
        let components = (0..m.rows())
            .map(|i| {
                let mut acc = MultiPoly::zero(self.nvars);
                for (c, p) in m.row(i).iter().zip(&self.components) {
                    if !c.is_zero() {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect();
        Ok(PolyVectorField {
            nvars: self.nvars,
            components,
        })
    }

    pub fn jacobian(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.dim() * self.nvars);
        for c in &self.components {
            for j in 0..self.nvars {
                entries.push(c.derivative(j));
            }
        }
        PolyMatrix {
            rows: self.dim(),
            cols: self.nvars,
            nvars: self.nvars,
            entries,
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.map(|p| p.homogeneous_part(d))
    }

    /// Nonzero homogeneous parts, each tagged with its degree, in
    /// increasing degree. Degrees with no terms are skipped.
    pub fn homogeneous_parts(&self) -> Vec<(u32, PolyVectorField)> {
        let mut degrees: Vec<u32> = self
            .components
            .iter()
            .flat_map(|c| c.terms.keys().map(Monomial::degree))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.into_iter().map(|d| (d, self.homogeneous_part(d))).collect()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.components.iter().all(|c| c.is_homogeneous(d))
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    /// `X(S·v)`
    pub fn compose_linear(&self, s: &RationalMatrix) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(|c| c.compose_linear(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyVectorField {
            nvars: self.nvars,
            components,
        })
    }

    /// Pushforward by a linear map: `v ↦ S·X(S⁻¹v)`.
    pub fn push_linear(&self, s: &RationalMatrix) -> Result<Self> {
        let inv = s.inverse()?;
        self.compose_linear(&inv)?.apply_matrix(s)
    }
}

/// Recovers `H` with `∇H = f` for a field homogeneous of degree `k ≥ 1`.
///
/// Uses the Euler identity: when `df` is symmetric, `H = (x·f)/(k+1)` is
/// the unique homogeneous potential of degree `k+1`.
pub fn euler_integrate(f: &PolyVectorField, k: u32) -> Result<MultiPoly> {
    if k == 0 || !f.is_homogeneous(k) {
        return Err(Error::NotHomogeneous(k));
    }
    if f.dim() != f.nvars {
        return Err(Error::dims(f.nvars, f.dim()));
    }
    if !f.jacobian().is_symmetric() {
        return Err(Error::JacobianNotSymmetric);
    }
    let n = f.nvars;
    let mut h = MultiPoly::zero(n);
    for (i, c) in f.components.iter().enumerate() {
        h = &h + &(&MultiPoly::var(n, i) * c);
    }
    Ok(h.scale(&Rational::new(1.into(), (k + 1).into())))
}

/// Dense matrix of polynomials sharing one variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_constant(m: &RationalMatrix, nvars: usize) -> Self {
        PolyMatrix {
            rows: m.rows(),
            cols: m.cols(),
            nvars,
            entries: m
                .entries()
                .iter()
                .map(|c| MultiPoly::constant(nvars, c.clone()))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            nvars: self.nvars,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dims(self.cols, other.rows));
        }
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            nvars: self.nvars,
            entries,
        })
    }

    /// `C · self` for a constant matrix `C`.
    pub fn left_mul_const(&self, c: &RationalMatrix) -> Result<Self> {
        if c.cols() != self.rows {
            return Err(Error::dims(self.rows, c.cols()));
        }
        let mut entries = Vec::with_capacity(c.rows() * self.cols);
        for i in 0..c.rows() {
            for j in 0..self.cols {
                let mut acc = MultiPoly::zero(self.nvars);
                for k in 0..self.rows {
                    if !c[(i, k)].is_zero() {
                        acc = &acc + &self.get(k, j).scale(&c[(i, k)]);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            rows: c.rows(),
            cols: self.cols,
            nvars: self.nvars,
            entries,
        })
    }

    /// `self · C` for a constant matrix `C`.
    pub fn right_mul_const(&self, c: &RationalMatrix) -> Result<Self> {
        Ok(self.transpose().left_mul_const(&c.transpose())?.transpose())
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|p| !p.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn trace(&self) -> MultiPoly {
        (0..self.rows.min(self.cols)).fold(MultiPoly::zero(self.nvars), |acc, i| &acc + self.get(i, i))
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(|p| p.homogeneous_part(d)).collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Result<RationalMatrix> {
        let data = self.entries.iter().map(|p| p.eval(x)).collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_vec(self.rows, self.cols, data)
    }
}

/// A polynomial flattened to `(coefficient, exponents)` pairs in f64 for
/// repeated numeric evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(f64, Vec<(usize, i32)>)>,
}

impl CompiledPoly {
    pub fn new(p: &MultiPoly) -> Self {
        CompiledPoly {
            terms: p
                .terms()
                .map(|(m, c)| {
                    let factors = m
                        .exponents()
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| (i, e as i32))
                        .collect();
                    (to_f64(c), factors)
                })
                .collect(),
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, factors)| factors.iter().fold(*c, |acc, &(i, e)| acc * x[i].powi(e)))
            .sum()
    }
}
