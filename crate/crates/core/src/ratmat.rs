//! Exact rational scalars and dense matrices.
//!
//! Scalars are arbitrary-precision fractions kept in lowest terms with a
//! positive denominator. Matrices are dense and row-major; all operations
//! return fresh values.

use std::fmt;
use std::ops::{Index, IndexMut};

use num::integer::Integer;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::{BigInt, BigRational};

use crate::error::{Error, Result};

/// Exact fraction; normalized so that `gcd(num, den) = 1` and `den > 0`.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"int"` or `"int/int"`. Surrounding whitespace is rejected so that
/// formatting the result reproduces canonical input byte for byte.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical string form: `"3"`, `"-1/2"`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims(rows * cols, data.len()));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::dims(format!("row length {m}"), format!("row length {}", bad.len())));
        }
        Ok(RationalMatrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers, used heavily in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dims(
                format!("{} rows", self.cols),
                format!("{} rows", other.rows),
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::dims(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn zip_with(&self, other: &RationalMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Result<Rational> {
        let n = self.require_square()?;
        Ok((0..n).fold(Rational::zero(), |acc, i| acc + &self[(i, i)]))
    }

    pub fn is_skew_symmetric(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok((0..n).all(|i| (i..n).all(|j| self[(i, j)] == -&self[(j, i)])))
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok((0..n).all(|i| (i + 1..n).all(|j| self[(i, j)] == self[(j, i)])))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first cleared of denominators, so the elimination runs on
    /// integers and every intermediate division is exact.
    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let lcm = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                scale *= &lcm;
                self.row(i)
                    .iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect()
            })
            .collect();

        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let mut d = Rational::new(a[n - 1][n - 1].clone(), scale);
        if negate {
            d = -d;
        }
        Ok(d)
    }

    /// Gauss-Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: &Rational) {
        for c in 0..self.cols {
            self[(i, c)] *= f;
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let s = &self[(source, c)] * factor;
            if !s.is_zero() {
                self[(target, c)] -= s;
            }
        }
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diag(blocks: &[RationalMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `max |a_ij|` after conversion to f64; used only for diagnostics.
    pub fn max_abs_f64(&self) -> f64 {
        self.data.iter().map(|q| to_f64(&q.abs())).fold(0.0, f64::max)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(to_f64).collect())
            .collect()
    }
}

/// Exact dot product of two rational vectors of the same length.
pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j1() -> RationalMatrix {
        RationalMatrix::from_i64(&[&[0, 1], &[-1, 0]])
    }

    pub(crate) fn remark_omega() -> RationalMatrix {
        RationalMatrix::from_i64(&[&[0, 1, 0, 2], &[-1, 0, -1, 0], &[0, 1, 0, 1], &[-2, 0, -1, 0]])
    }

    pub(crate) fn remark_l() -> RationalMatrix {
        RationalMatrix::from_i64(&[&[-1, 1, -1, 2], &[3, 0, 4, 1], &[-1, 2, 0, 2], &[3, 1, 1, 1]])
    }

    #[test]
    fn j_squared_is_minus_identity() {
        let j = j1();
        assert_eq!(j.mul(&j).unwrap(), RationalMatrix::identity(2).neg());
    }

    #[test]
    fn identity_is_neutral() {
        let m = remark_l();
        assert_eq!(RationalMatrix::identity(4).mul(&m).unwrap(), m);
    }

    #[test]
    fn remark_product_entry() {
        let p = remark_omega().mul(&remark_l()).unwrap();
        assert_eq!(p[(0, 0)], int(9));
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = RationalMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn determinants() {
        assert_eq!(j1().det().unwrap(), int(1));
        let b = RationalMatrix::diag(&[int(1), int(-2), rat(1, 2), int(-1)]);
        assert_eq!(b.det().unwrap(), int(1));
        assert_eq!(remark_omega().det().unwrap(), int(1));
        assert_eq!(RationalMatrix::zeros(3, 3).det().unwrap(), int(0));
        assert!(matches!(RationalMatrix::zeros(2, 3).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_needs_pivot_swap() {
        // leading zero forces a row exchange
        let m = RationalMatrix::from_rows(vec![
            vec![int(0), rat(1, 3), int(2)],
            vec![rat(1, 2), int(1), int(0)],
            vec![int(4), int(0), rat(-1, 5)],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let expected = -rat(1, 3) * (rat(1, 2) * rat(-1, 5) - int(0) * int(4))
            + int(2) * (rat(1, 2) * int(0) - int(1) * int(4));
        assert_eq!(m.det().unwrap(), expected);
    }

    #[test]
    fn inverses() {
        assert_eq!(j1().inverse().unwrap(), j1().neg());
        let d = RationalMatrix::diag(&[int(2), rat(1, 2)]);
        assert_eq!(d.inverse().unwrap(), RationalMatrix::diag(&[rat(1, 2), int(2)]));
        let w = remark_omega();
        assert_eq!(w.mul(&w.inverse().unwrap()).unwrap(), RationalMatrix::identity(4));
        assert_eq!(RationalMatrix::zeros(2, 2).inverse(), Err(Error::Singular));
    }

    #[test]
    fn symmetry_tests() {
        assert!(j1().is_skew_symmetric().unwrap());
        let i4 = RationalMatrix::identity(4);
        assert!(i4.is_symmetric().unwrap());
        assert!(!i4.is_skew_symmetric().unwrap());
        assert!(remark_omega().is_skew_symmetric().unwrap());
        assert!(RationalMatrix::zeros(1, 2).is_symmetric().is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4/-2").unwrap(), int(-2));
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(0)), "0");
        for bad in ["", "1/0", " 1", "1.5", "a/b", "--1", "1/"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }
}
