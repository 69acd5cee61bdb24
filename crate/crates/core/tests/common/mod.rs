#![allow(dead_code)]

use omega_core::form::validate_form;
use omega_core::ratmat::rat;
use omega_core::{MultiPoly, Rational, RationalMatrix, SymplecticForm};
use rand::Rng;

pub fn small<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(-4..=4), rng.random_range(1..=3))
}

pub fn random_square<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let data = (0..n * n).map(|_| small(rng)).collect();
    RationalMatrix::from_vec(n, n, data).unwrap()
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = small(rng);
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    loop {
        let m = random_square(rng, n);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Random nondegenerate skew-symmetric form on ℝ^dim.
pub fn random_form<R: Rng>(rng: &mut R, dim: usize) -> SymplecticForm {
    loop {
        let mut m = RationalMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = small(rng);
                m[(j, i)] = -v.clone();
                m[(i, j)] = v;
            }
        }
        if let Ok(f) = validate_form(m) {
            return f;
        }
    }
}

/// Random polynomial with no constant term and degrees in `1..=max_degree`.
pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, nterms: usize) -> MultiPoly {
    let terms = (0..nterms).map(|_| {
        let d = rng.random_range(1..=max_degree);
        let mut e = vec![0u32; nvars];
        for _ in 0..d {
            e[rng.random_range(0..nvars)] += 1;
        }
        (e, small(rng))
    });
    MultiPoly::from_terms(nvars, terms.collect::<Vec<_>>()).unwrap()
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small(rng)).collect()
}
