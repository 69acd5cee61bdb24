//! Named matrices, forms and fields used as reference cases in tests, the
//! CLI fixtures and the documentation.

use crate::poly::{MultiPoly, PolyVectorField};
use crate::ratmat::{int, Rational, RationalMatrix};

/// A 4×4 form with `Ω² ≠ -I`, paired with
/// [`transpose_counterexample_matrix`].
pub fn transpose_counterexample_form() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, 1, 0, 2], &[-1, 0, -1, 0], &[0, 1, 0, 1], &[-2, 0, -1, 0]])
}

/// Hamiltonian for [`transpose_counterexample_form`] while its transpose is
/// not.
pub fn transpose_counterexample_matrix() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[-1, 1, -1, 2], &[3, 0, 4, 1], &[-1, 2, 0, 2], &[3, 1, 1, 1]])
}

/// `diag(A₁, …, Aₙ)` with `Aⱼ = [[0, aⱼ], [-aⱼ, 0]]`.
pub fn block_form(a: &[Rational]) -> RationalMatrix {
    let blocks: Vec<RationalMatrix> = a
        .iter()
        .map(|aj| {
            RationalMatrix::from_rows(vec![vec![int(0), aj.clone()], vec![-aj, int(0)]])
                .expect("2x2 block")
        })
        .collect();
    RationalMatrix::block_diag(&blocks)
}

/// `diag(κ, …, κ)` with `κ = diag(-1, 1)`; antisymplectic for every
/// [`block_form`].
pub fn block_reflection(n: usize) -> RationalMatrix {
    let kappa = RationalMatrix::diag(&[int(-1), int(1)]);
    RationalMatrix::block_diag(&vec![kappa; n])
}

/// `diag(R, …, R)` with `R` the rotation with the given cosine and sine.
pub fn block_rotation(n: usize, cos: &Rational, sin: &Rational) -> RationalMatrix {
    let r = RationalMatrix::from_rows(vec![vec![cos.clone(), -sin], vec![sin.clone(), cos.clone()]])
        .expect("2x2 block");
    RationalMatrix::block_diag(&vec![r; n])
}

/// `diag([[0,1],[0,0]], [[0,λ₁],[-λ₁,0]], …)`, Hamiltonian for every
/// [`block_form`] of matching size.
pub fn block_hamiltonian_matrix(lambdas: &[Rational]) -> RationalMatrix {
    let mut blocks = vec![RationalMatrix::from_i64(&[&[0, 1], &[0, 0]])];
    for l in lambdas {
        blocks.push(
            RationalMatrix::from_rows(vec![vec![int(0), l.clone()], vec![-l, int(0)]]).expect("2x2 block"),
        );
    }
    RationalMatrix::block_diag(&blocks)
}

fn monomial(nvars: usize, exps: &[u32], c: i64) -> MultiPoly {
    MultiPoly::from_terms(nvars, vec![(exps.to_vec(), int(c))]).expect("exponent length")
}

fn sum(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    terms
        .iter()
        .fold(MultiPoly::zero(nvars), |acc, (e, c)| &acc + &monomial(nvars, e, *c))
}

/// A field on ℝ⁶ whose linearization at the origin has trace 3, so it is not
/// Hamiltonian for any form.
pub fn trace_obstructed_field() -> PolyVectorField {
    let n = 6;
    let components = vec![
        sum(n, &[(&[1, 0, 0, 0, 0, 0], 1), (&[0, 0, 1, 0, 0, 0], 1), (&[0, 0, 0, 0, 1, 0], 1), (&[2, 0, 0, 0, 0, 0], 1)]),
        sum(n, &[(&[0, 1, 0, 0, 0, 0], 1), (&[0, 0, 0, 1, 0, 0], 1), (&[0, 0, 0, 0, 0, 1], 1), (&[0, 1, 0, 1, 0, 1], 1)]),
        sum(n, &[(&[0, 0, 1, 0, 0, 0], -1), (&[0, 0, 0, 0, 1, 0], 1), (&[0, 0, 1, 0, 1, 0], 1)]),
        sum(n, &[(&[0, 0, 0, 1, 0, 0], 3)]),
        sum(n, &[(&[0, 0, 0, 0, 1, 0], -3), (&[0, 0, 0, 0, 0, 1], 1), (&[0, 0, 0, 0, 0, 3], -1)]),
        sum(n, &[(&[0, 0, 0, 0, 0, 1], 2)]),
    ];
    PolyVectorField::new(n, components).expect("uniform nvars")
}

/// A cubic field on ℝ⁴ with zero linearization at the origin that is not
/// Hamiltonian for any form.
pub fn cubic_obstructed_field() -> PolyVectorField {
    let n = 4;
    let components = vec![
        sum(n, &[(&[2, 0, 1, 0], 1), (&[1, 1, 0, 1], 1)]),
        sum(n, &[(&[1, 1, 1, 0], 1), (&[0, 2, 0, 1], 1)]),
        sum(n, &[(&[1, 0, 2, 0], 1), (&[0, 1, 1, 1], 1)]),
        sum(n, &[(&[1, 0, 1, 1], 1), (&[0, 1, 0, 2], 1)]),
    ];
    PolyVectorField::new(n, components).expect("uniform nvars")
}
