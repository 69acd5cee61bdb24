//! Exact linear algebra over arbitrary symplectic forms.
//!
//! A symplectic form is given by its matrix `Ω` in whatever basis is at
//! hand; nothing assumes `Ω = J`. On top of an exact rational kernel the
//! crate provides:
//!
//! * [`form`]: validation of `Ω` and Darboux bases `PᵀΩP = J`;
//! * [`group`]: classification of matrices by `BᵀΩB = λΩ`, including the
//!   antisymplectic coset and the coset sign;
//! * [`liealg`]: the algebra of Ω-Hamiltonian matrices `LᵀΩ + ΩL = 0`;
//! * [`poly`] and [`hamfield`]: polynomial fields `X_H = (Ω⁻¹)ᵀ∇H`, their
//!   recognition from the Jacobian alone, and recovery of `H`;
//! * [`flow`]: floating-point flows with energy and form drift diagnostics.

pub mod catalog;
pub mod error;
pub mod flow;
pub mod form;
pub mod group;
pub mod hamfield;
pub mod json;
pub mod liealg;
pub mod poly;
pub mod ratmat;

pub use error::{Error, Result};
pub use form::{standard_form, validate_form, DarbouxTransform, SymplecticForm};
pub use group::GroupClass;
pub use hamfield::{ConstantPart, HamiltonianField};
pub use liealg::HamiltonianMatrix;
pub use poly::{Limits, MultiPoly, PolyMatrix, PolyVectorField};
pub use ratmat::{Rational, RationalMatrix};
