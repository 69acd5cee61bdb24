//! Floating-point flows of polynomial fields with conservation diagnostics.
//!
//! Everything here is approximate: rational data is rounded to the nearest
//! `f64` on entry and nothing computed here feeds back into the exact
//! modules.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::form::SymplecticForm;
use crate::hamfield::HamiltonianField;
use crate::poly::{CompiledPoly, MultiPoly, PolyVectorField};
use crate::ratmat::to_f64;

pub const DEFAULT_TOL_ENERGY: f64 = 1e-8;
pub const DEFAULT_TOL_FORM: f64 = 1e-6;
pub const DEFAULT_DT: f64 = 1e-3;
pub const DEFAULT_T_END: f64 = 10.0;

#[derive(Clone, Debug, PartialEq)]
pub struct FlowTrace {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    /// `max |H(x(t)) - H(x₀)|`
    pub energy_drift: f64,
    /// `max |ω(Φeᵢ, Φeⱼ) - Ωᵢⱼ|` over pairs with `Ωᵢⱼ ≠ 0`, `Φ` the flow
    /// derivative.
    pub form_drift: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PreservationReport {
    pub pass: bool,
    pub energy_drift: f64,
    pub form_drift: f64,
    pub tol_energy: f64,
    pub tol_form: f64,
}

pub fn preservation_report(trace: &FlowTrace, tol_energy: f64, tol_form: f64) -> PreservationReport {
    PreservationReport {
        pass: trace.energy_drift <= tol_energy && trace.form_drift <= tol_form,
        energy_drift: trace.energy_drift,
        form_drift: trace.form_drift,
        tol_energy,
        tol_form,
    }
}

pub fn integrate(hf: &HamiltonianField, x0: &[f64], dt: f64, t_end: f64) -> Result<FlowTrace> {
    integrate_field(hf.form(), hf.field(), hf.hamiltonian(), x0, dt, t_end)
}

/// Right-hand side of the state plus variational system `ẋ = X(x)`,
/// `Φ̇ = dX(x) Φ`.
struct Augmented {
    n: usize,
    field: Vec<CompiledPoly>,
    jacobian: Vec<CompiledPoly>,
}

impl Augmented {
    fn eval(&self, z: &[f64], out: &mut [f64]) {
        let n = self.n;
        let (x, phi) = z.split_at(n);
        let (dx, dphi) = out.split_at_mut(n);
        for (d, f) in dx.iter_mut().zip(&self.field) {
            *d = f.eval(x);
        }
        let jac: Vec<f64> = self.jacobian.iter().map(|p| p.eval(x)).collect();
        for i in 0..n {
            for j in 0..n {
                dphi[i * n + j] = (0..n).map(|k| jac[i * n + k] * phi[k * n + j]).sum();
            }
        }
    }

    fn rk4_step(&self, z: &mut [f64], h: f64, k: &mut [Vec<f64>; 4], tmp: &mut [f64]) {
        self.eval(z, &mut k[0]);
        for stage in 1..4 {
            let c = if stage == 3 { h } else { h / 2.0 };
            let (prev, rest) = k.split_at_mut(stage);
            for ((t, zi), ki) in tmp.iter_mut().zip(z.iter()).zip(&prev[stage - 1]) {
                *t = zi + c * ki;
            }
            self.eval(tmp, &mut rest[0]);
        }
        for (i, zi) in z.iter_mut().enumerate() {
            *zi += h / 6.0 * (k[0][i] + 2.0 * k[1][i] + 2.0 * k[2][i] + k[3][i]);
        }
    }
}

/// Classical fourth-order Runge-Kutta on the state and its variational
/// equation. `field` need not be Hamiltonian; `hamiltonian` is only used to
/// measure energy drift.
pub fn integrate_field(
    form: &SymplecticForm,
    field: &PolyVectorField,
    hamiltonian: &MultiPoly,
    x0: &[f64],
    dt: f64,
    t_end: f64,
) -> Result<FlowTrace> {
    let n = form.dim();
    if field.dim() != n || field.nvars() != n || hamiltonian.nvars() != n {
        return Err(Error::dims(n, field.dim()));
    }
    if x0.len() != n {
        return Err(Error::dims(n, x0.len()));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidArgument(format!("dt must be positive, got {dt}")));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!("t_end must be positive, got {t_end}")));
    }

    let jac = field.jacobian();
    let system = Augmented {
        n,
        field: field.components().iter().map(CompiledPoly::new).collect(),
        jacobian: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| CompiledPoly::new(jac.get(i, j)))
            .collect(),
    };
    let energy = CompiledPoly::new(hamiltonian);
    let omega: Vec<f64> = form.omega().entries().iter().map(to_f64).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !form.omega()[(i, j)].is_zero())
        .collect();

    let form_error = |phi: &[f64]| -> f64 {
        pairs
            .iter()
            .map(|&(i, j)| {
                let mut w = 0.0;
                for a in 0..n {
                    for b in 0..n {
                        w += phi[a * n + i] * omega[a * n + b] * phi[b * n + j];
                    }
                }
                (w - omega[i * n + j]).abs()
            })
            .fold(0.0, f64::max)
    };

    let mut z = vec![0.0; n + n * n];
    z[..n].copy_from_slice(x0);
    for i in 0..n {
        z[n + i * n + i] = 1.0;
    }
    let h0 = energy.eval(x0);
    let mut trace = FlowTrace {
        times: vec![0.0],
        states: vec![x0.to_vec()],
        energy_drift: 0.0,
        form_drift: 0.0,
    };

    let mut k: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; z.len()]);
    let mut tmp = vec![0.0; z.len()];
    let mut t = 0.0;
    let mut step = 0u64;
    while t < t_end {
        step += 1;
        let mut t_next = (step as f64 * dt).min(t_end);
        if t_end - t_next < dt * 1e-9 {
            t_next = t_end;
        }
        system.rk4_step(&mut z, t_next - t, &mut k, &mut tmp);
        t = t_next;
        if z.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteState(t));
        }
        let x = &z[..n];
        trace.energy_drift = trace.energy_drift.max((energy.eval(x) - h0).abs());
        trace.form_drift = trace.form_drift.max(form_error(&z[n..]));
        trace.times.push(t);
        trace.states.push(x.to_vec());
    }
    Ok(trace)
}
