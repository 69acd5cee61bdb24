use omega_core::flow::integrate;
use omega_core::form::standard_form;
use omega_core::hamfield::field_from_hamiltonian;
use omega_core::ratmat::rat;
use omega_core::{HamiltonianField, MultiPoly, RationalMatrix};

fn oscillator() -> HamiltonianField {
    let h = MultiPoly::quadratic_form(&RationalMatrix::identity(2));
    field_from_hamiltonian(&standard_form(1).unwrap(), &h).unwrap()
}

fn quartic_well() -> HamiltonianField {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let h = &(&y * &y).scale(&rat(1, 2)) + &x.pow(4);
    field_from_hamiltonian(&standard_form(1).unwrap(), &h).unwrap()
}

fn drift_ratio(hf: &HamiltonianField, dt: f64) -> f64 {
    let coarse = integrate(hf, &[1.0, 0.0], dt, 10.0).unwrap();
    let fine = integrate(hf, &[1.0, 0.0], dt / 2.0, 10.0).unwrap();
    coarse.energy_drift / fine.energy_drift
}

#[test]
fn quartic_well_is_fourth_order_at_default_step() {
    let r = drift_ratio(&quartic_well(), 1e-3);
    assert!((8.0..=32.0).contains(&r), "{r}");
}

#[test]
fn oscillator_error_shrinks_like_h5_above_roundoff() {
    for dt in [0.2, 0.1, 0.05] {
        let r = drift_ratio(&oscillator(), dt);
        assert!((8.0..=32.0).contains(&r) && r > 30.0, "dt={dt}: {r}");
    }
}

#[test]
fn oscillator_reaches_roundoff_at_default_step() {
    let trace = integrate(&oscillator(), &[1.0, 0.0], 1e-3, 10.0).unwrap();
    assert!(trace.energy_drift < 1e-13, "{}", trace.energy_drift);
}

#[test]
fn form_drift_decreases_with_step() {
    let hf = quartic_well();
    let drifts: Vec<f64> = [0.1, 0.05, 0.025]
        .iter()
        .map(|&dt| integrate(&hf, &[1.0, 0.0], dt, 10.0).unwrap().form_drift)
        .collect();
    assert!(drifts.windows(2).all(|w| w[1] < w[0]), "{drifts:?}");
}
