//! Polynomial ω-Hamiltonian vector fields `X_H = (Ω⁻¹)ᵀ ∇H`: construction,
//! recognition through the Jacobian identity, recovery of `H`, and the
//! pushforward law under linear λ-symplectic maps.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::form::{validate_form, SymplecticForm};
use crate::group::lambda_of;
use crate::liealg::{is_hamiltonian_matrix, to_symmetric, HamiltonianMatrix};
use crate::poly::{euler_integrate, MultiPoly, PolyMatrix, PolyVectorField};
use crate::ratmat::{Rational, RationalMatrix};

/// A field together with the Hamiltonian that generates it, normalized so
/// that `H(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianField {
    form: SymplecticForm,
    field: PolyVectorField,
    hamiltonian: MultiPoly,
}

impl HamiltonianField {
    pub fn form(&self) -> &SymplecticForm {
        &self.form
    }

    pub fn field(&self) -> &PolyVectorField {
        &self.field
    }

    pub fn hamiltonian(&self) -> &MultiPoly {
        &self.hamiltonian
    }
}

/// How recognition treats a nonzero constant part `X(0)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConstantPart {
    #[default]
    Reject,
    /// Accept `X(0) ≠ 0`; recovery then adds the linear term `H¹` with
    /// `∇H¹ = Ωᵀ X(0)`.
    Allow,
}

/// Why a field failed recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// First nonzero entry (row-major) of `MᵀΩ + ΩM`, `M = dX`.
    pub entry: (usize, usize),
    pub residual: MultiPoly,
    /// `trace(dX₀)` when nonzero; any such value already rules the field out.
    pub trace_at_zero: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub hamiltonian: bool,
    pub witness: Option<Witness>,
}

fn check_field_dims(form: &SymplecticForm, x: &PolyVectorField) -> Result<()> {
    if x.nvars() != form.dim() || x.dim() != form.dim() {
        return Err(Error::dims(
            form.dim(),
            format!("{} components in {} variables", x.dim(), x.nvars()),
        ));
    }
    Ok(())
}

pub fn field_from_hamiltonian(form: &SymplecticForm, h: &MultiPoly) -> Result<HamiltonianField> {
    if h.nvars() != form.dim() {
        return Err(Error::dims(form.dim(), h.nvars()));
    }
    let constant = h.constant_term();
    if !constant.is_zero() {
        log::warn!("dropping constant term {constant} of the Hamiltonian");
    }
    let hamiltonian = h.without_constant();
    let field = hamiltonian.grad().apply_matrix(form.inverse_transpose())?;
    Ok(HamiltonianField {
        form: form.clone(),
        field,
        hamiltonian,
    })
}

/// `(dX)ᵀΩ + Ω dX` as a polynomial matrix.
pub fn recognition_residual(form: &SymplecticForm, x: &PolyVectorField) -> Result<PolyMatrix> {
    check_field_dims(form, x)?;
    let m = x.jacobian();
    m.transpose().right_mul_const(form.omega())?.add(&m.left_mul_const(form.omega())?)
}

/// `trace(dX₀)`: the sum of the coefficients of `xᵢ` in `Xᵢ`.
pub fn trace_at_zero(x: &PolyVectorField) -> Rational {
    let n = x.nvars();
    (0..x.dim().min(n)).fold(Rational::zero(), |acc, i| {
        let mut e = vec![0; n];
        e[i] = 1;
        acc + x.component(i).coefficient(&e)
    })
}

/// Decides whether `x` is ω-Hamiltonian by checking that its Jacobian lies
/// in the Hamiltonian algebra identically in `x`.
pub fn is_hamiltonian_field(
    form: &SymplecticForm,
    x: &PolyVectorField,
    constants: ConstantPart,
) -> Result<Recognition> {
    check_field_dims(form, x)?;
    if constants == ConstantPart::Reject && x.constant_part().iter().any(|c| !c.is_zero()) {
        return Err(Error::ConstantPartPresent);
    }
    let residual = recognition_residual(form, x)?;
    let Some(entry) = residual.first_nonzero() else {
        return Ok(Recognition {
            hamiltonian: true,
            witness: None,
        });
    };
    let trace = trace_at_zero(x);
    Ok(Recognition {
        hamiltonian: false,
        witness: Some(Witness {
            entry,
            residual: residual.get(entry.0, entry.1).clone(),
            trace_at_zero: (!trace.is_zero()).then_some(trace),
        }),
    })
}

/// Recovers the Hamiltonian degree by degree: for each homogeneous part
/// `Xʲ`, `fⱼ = ΩᵀXʲ` is a gradient and integrates to `Hʲ⁺¹`.
///
/// # Panics
///
/// If a recognized field produces a non-symmetric `d fⱼ` or fails the final
/// round trip; either means the algebra above is broken.
pub fn recover_hamiltonian(
    form: &SymplecticForm,
    x: &PolyVectorField,
    constants: ConstantPart,
) -> Result<HamiltonianField> {
    let rec = is_hamiltonian_field(form, x, constants)?;
    if let Some(w) = rec.witness {
        return Err(Error::NotHamiltonianField {
            row: w.entry.0,
            col: w.entry.1,
        });
    }
    let omega_t = form.omega().transpose();
    let n = form.dim();
    let mut h = MultiPoly::zero(n);
    for (degree, part) in x.homogeneous_parts() {
        let gradient = part.apply_matrix(&omega_t)?;
        let piece = if degree == 0 {
            MultiPoly::linear_form(&gradient.constant_part())
        } else {
            match euler_integrate(&gradient, degree) {
                Ok(p) => p,
                Err(e) => panic!("recognized field has a non-gradient part of degree {degree}: {e}"),
            }
        };
        h = &h + &piece;
    }
    let out = field_from_hamiltonian(form, &h)?;
    assert_eq!(&out.field, x, "recovered Hamiltonian does not reproduce the field");
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardReport {
    /// `S · X(S⁻¹v)`
    pub field: PolyVectorField,
    pub lambda: Rational,
    /// `H ∘ S⁻¹`
    pub transformed_hamiltonian: MultiPoly,
    /// Whether the pushed field equals `λ · X_{H∘S⁻¹}` exactly.
    pub identity_holds: bool,
}

/// Pushes `hf` forward by a linear λ-symplectic `s` and checks
/// `s_* X_H = λ X_{H∘s⁻¹}`.
pub fn pushforward(hf: &HamiltonianField, s: &RationalMatrix) -> Result<PushforwardReport> {
    let lambda = lambda_of(&hf.form, s)?.ok_or(Error::NotLambdaSymplectic)?;
    let field = hf.field.push_linear(s)?;
    let transformed_hamiltonian = hf.hamiltonian.compose_linear(&s.inverse()?)?;
    let expected = field_from_hamiltonian(&hf.form, &transformed_hamiltonian)?
        .field
        .scale(&lambda);
    Ok(PushforwardReport {
        identity_holds: field == expected,
        field,
        lambda,
        transformed_hamiltonian,
    })
}

/// A nonlinear Hamiltonian field with prescribed linearization:
/// `H = ½xᵀ(ΩᵀL)x + F` where `F` has no terms of degree below 3.
pub fn construct_family(
    form: &SymplecticForm,
    l: &HamiltonianMatrix,
    remainder: &MultiPoly,
) -> Result<HamiltonianField> {
    if l.form() != form {
        return Err(Error::dims("matrix Hamiltonian for this form", "matrix for another form"));
    }
    if remainder.nvars() != form.dim() {
        return Err(Error::dims(form.dim(), remainder.nvars()));
    }
    if remainder.min_degree().is_some_and(|d| d < 3) {
        return Err(Error::JetConditionViolated);
    }
    let quadratic = MultiPoly::quadratic_form(&to_symmetric(l));
    field_from_hamiltonian(form, &(&quadratic + remainder))
}

/// The form `[ω] = -L⁻¹` for which a skew-symmetric invertible `L` is
/// Hamiltonian.
pub fn adapted_form_for_skew(l: &RationalMatrix) -> Result<SymplecticForm> {
    if !l.is_skew_symmetric()? {
        return Err(Error::NotSkewSymmetric);
    }
    let inv = l.inverse()?;
    let form = validate_form(inv.neg())?;
    debug_assert!(is_hamiltonian_matrix(&form, l).unwrap_or(false));
    Ok(form)
}

/// Dedicated check for linear fields `x ↦ Lx`.
pub fn linear_field_check(form: &SymplecticForm, l: &RationalMatrix) -> Result<bool> {
    is_hamiltonian_matrix(form, l)
}

/// `dX₀`, the constant part of the Jacobian.
pub fn linearization(x: &PolyVectorField) -> RationalMatrix {
    let n = x.nvars();
    let mut m = RationalMatrix::zeros(x.dim(), n);
    for i in 0..x.dim() {
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            m[(i, j)] = x.component(i).coefficient(&e);
        }
    }
    m
}

/// `true` when `h` has no constant term and `x = (Ω⁻¹)ᵀ∇h`.
pub fn generates(form: &SymplecticForm, h: &MultiPoly, x: &PolyVectorField) -> bool {
    h.constant_term().is_zero()
        && field_from_hamiltonian(form, h).is_ok_and(|hf| hf.field == *x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::form::standard_form;
    use crate::liealg::from_symmetric;
    use crate::ratmat::{int, rat};

    fn x() -> MultiPoly {
        MultiPoly::var(2, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(2, 1)
    }
    fn oscillator() -> MultiPoly {
        MultiPoly::quadratic_form(&RationalMatrix::identity(2))
    }
    fn quartic_well() -> MultiPoly {
        &(&y() * &y()).scale(&rat(1, 2)) + &x().pow(4)
    }

    #[test]
    fn fields_from_hamiltonians() {
        let j = standard_form(1).unwrap();
        let hf = field_from_hamiltonian(&j, &oscillator()).unwrap();
        assert_eq!(hf.field().components(), &[y(), -&x()]);

        let hf = field_from_hamiltonian(&j, &quartic_well()).unwrap();
        assert_eq!(hf.field().components(), &[y(), x().pow(3).scale(&int(-4))]);

        let f = validate_form(catalog::transpose_counterexample_form()).unwrap();
        let l = catalog::transpose_counterexample_matrix();
        let b = f.omega().transpose().mul(&l).unwrap();
        let hf = field_from_hamiltonian(&f, &MultiPoly::quadratic_form(&b)).unwrap();
        assert_eq!(hf.field(), &PolyVectorField::linear(&l));
    }

    #[test]
    fn constant_term_is_dropped() {
        let j = standard_form(1).unwrap();
        let h = &oscillator() + &MultiPoly::constant(2, int(5));
        let hf = field_from_hamiltonian(&j, &h).unwrap();
        assert_eq!(hf.hamiltonian(), &oscillator());
        assert!(field_from_hamiltonian(&j, &MultiPoly::var(3, 0)).is_err());
    }

    #[test]
    fn recognition_examples() {
        let j = standard_form(1).unwrap();
        let rot = PolyVectorField::new(2, vec![y(), -&x()]).unwrap();
        let rec = is_hamiltonian_field(&j, &rot, ConstantPart::Reject).unwrap();
        assert!(rec.hamiltonian);
        assert!(rec.witness.is_none());

        let f6 = standard_form(3).unwrap();
        let rec = is_hamiltonian_field(&f6, &catalog::trace_obstructed_field(), ConstantPart::Reject).unwrap();
        assert!(!rec.hamiltonian);
        assert_eq!(rec.witness.unwrap().trace_at_zero, Some(int(3)));

        let f4 = validate_form(catalog::transpose_counterexample_form()).unwrap();
        let cubic = catalog::cubic_obstructed_field();
        assert!(linearization(&cubic).is_zero());
        let rec = is_hamiltonian_field(&f4, &cubic, ConstantPart::Reject).unwrap();
        assert!(!rec.hamiltonian);
        let w = rec.witness.unwrap();
        assert_eq!(w.trace_at_zero, None);
        assert!(w.residual.is_homogeneous(2));
    }

    #[test]
    fn constant_part_policy() {
        let j = standard_form(1).unwrap();
        let shifted = PolyVectorField::new(2, vec![&y() + &MultiPoly::constant(2, int(1)), -&x()]).unwrap();
        assert_eq!(
            is_hamiltonian_field(&j, &shifted, ConstantPart::Reject),
            Err(Error::ConstantPartPresent)
        );
        assert!(is_hamiltonian_field(&j, &shifted, ConstantPart::Allow).unwrap().hamiltonian);
        let hf = recover_hamiltonian(&j, &shifted, ConstantPart::Allow).unwrap();
        // ∇H¹ = Jᵀ(1, 0) = (0, 1), so H¹ = y
        assert_eq!(hf.hamiltonian(), &(&oscillator() + &y()));
        assert_eq!(hf.field(), &shifted);
    }

    #[test]
    fn recovery_examples() {
        let j = standard_form(1).unwrap();
        let rot = PolyVectorField::new(2, vec![y(), -&x()]).unwrap();
        assert_eq!(recover_hamiltonian(&j, &rot, ConstantPart::Reject).unwrap().hamiltonian(), &oscillator());

        let well = PolyVectorField::new(2, vec![y(), x().pow(3).scale(&int(-4))]).unwrap();
        assert_eq!(recover_hamiltonian(&j, &well, ConstantPart::Reject).unwrap().hamiltonian(), &quartic_well());

        let f = validate_form(catalog::transpose_counterexample_form()).unwrap();
        let l = catalog::transpose_counterexample_matrix();
        let hf = recover_hamiltonian(&f, &PolyVectorField::linear(&l), ConstantPart::Reject).unwrap();
        let b = f.omega().transpose().mul(&l).unwrap();
        assert_eq!(hf.hamiltonian(), &MultiPoly::quadratic_form(&b));

        let f6 = standard_form(3).unwrap();
        assert!(matches!(
            recover_hamiltonian(&f6, &catalog::trace_obstructed_field(), ConstantPart::Reject),
            Err(Error::NotHamiltonianField { .. })
        ));
    }

    #[test]
    fn pushforward_examples() {
        let j = standard_form(1).unwrap();
        let hf = field_from_hamiltonian(&j, &oscillator()).unwrap();
        let rep = pushforward(&hf, &RationalMatrix::identity(2)).unwrap();
        assert_eq!(rep.field, *hf.field());
        assert_eq!(rep.lambda, int(1));
        assert!(rep.identity_holds);

        let xy = &x() * &y();
        let hf = field_from_hamiltonian(&j, &xy).unwrap();
        let rep = pushforward(&hf, &RationalMatrix::diag(&[int(2), rat(1, 2)])).unwrap();
        assert_eq!(rep.field, *hf.field());
        assert_eq!(rep.transformed_hamiltonian, xy);
        assert!(rep.identity_holds);

        let hf = field_from_hamiltonian(&j, &oscillator()).unwrap();
        let rep = pushforward(&hf, &RationalMatrix::diag(&[int(-1), int(1)])).unwrap();
        assert_eq!(rep.lambda, int(-1));
        assert_eq!(rep.field, hf.field().scale(&int(-1)));
        assert!(rep.identity_holds);

        let f = standard_form(2).unwrap();
        let hf = field_from_hamiltonian(&f, &MultiPoly::var(4, 0)).unwrap();
        let shear = RationalMatrix::diag(&[int(1), int(2), int(1), int(1)]);
        assert_eq!(pushforward(&hf, &shear), Err(Error::NotLambdaSymplectic));
    }

    #[test]
    fn family_construction() {
        let j = standard_form(1).unwrap();
        let l = HamiltonianMatrix::new(&j, RationalMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        let hf = construct_family(&j, &l, &x().pow(4)).unwrap();
        assert_eq!(hf.field().components(), &[y(), x().pow(3).scale(&int(-4))]);
        assert_eq!(linearization(hf.field()), *l.matrix());

        let hf = construct_family(&j, &l, &MultiPoly::zero(2)).unwrap();
        assert_eq!(hf.field(), &PolyVectorField::linear(l.matrix()));

        assert_eq!(construct_family(&j, &l, &(&x() * &y())), Err(Error::JetConditionViolated));
        assert_eq!(construct_family(&j, &l, &x()), Err(Error::JetConditionViolated));

        // block form with a₁ = 1, a₂ = 2 and rotation speed 3 in the second block
        let block = validate_form(catalog::block_form(&[int(1), int(2)])).unwrap();
        let bl = HamiltonianMatrix::new(&block, catalog::block_hamiltonian_matrix(&[int(3)])).unwrap();
        let cube = MultiPoly::var(4, 0).pow(3);
        let hf = construct_family(&block, &bl, &cube).unwrap();
        assert_eq!(linearization(hf.field()), *bl.matrix());
        assert!(is_hamiltonian_field(&block, hf.field(), ConstantPart::Reject).unwrap().hamiltonian);
        // the cubic term only reaches the second component: -(1/a₁)·3x₁²
        let x1sq = MultiPoly::var(4, 0).pow(2).scale(&int(-3));
        assert_eq!(hf.field().component(1), &x1sq);
    }

    #[test]
    fn adapted_forms() {
        let jm = crate::form::standard_matrix(1);
        assert_eq!(adapted_form_for_skew(&jm).unwrap().omega(), &jm);
        let l = RationalMatrix::from_i64(&[&[0, 2], &[-2, 0]]);
        let f = adapted_form_for_skew(&l).unwrap();
        assert_eq!(
            f.omega(),
            &RationalMatrix::from_rows(vec![vec![int(0), rat(1, 2)], vec![rat(-1, 2), int(0)]]).unwrap()
        );
        let w = catalog::transpose_counterexample_form();
        let f = adapted_form_for_skew(&w).unwrap();
        assert_eq!(f.omega(), &w.inverse().unwrap().neg());
        assert!(is_hamiltonian_matrix(&f, &w).unwrap());

        assert_eq!(adapted_form_for_skew(&RationalMatrix::identity(2)), Err(Error::NotSkewSymmetric));
        assert_eq!(adapted_form_for_skew(&RationalMatrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn linear_fast_path() {
        let f = validate_form(catalog::transpose_counterexample_form()).unwrap();
        assert!(linear_field_check(&f, &catalog::transpose_counterexample_matrix()).unwrap());
        assert!(!linear_field_check(&f, &RationalMatrix::identity(4)).unwrap());
        let b = RationalMatrix::from_rows(vec![
            vec![int(1), rat(1, 2), int(0), int(3)],
            vec![rat(1, 2), int(-2), int(1), int(0)],
            vec![int(0), int(1), int(0), rat(-7, 3)],
            vec![int(3), int(0), rat(-7, 3), int(4)],
        ])
        .unwrap();
        let h = from_symmetric(&f, &b).unwrap();
        assert!(linear_field_check(&f, h.matrix()).unwrap());
    }
}
