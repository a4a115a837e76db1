//! Frozen-value and identity tests for the scalar special functions.
//!
//! Reference values were produced with an independent arbitrary-precision
//! implementation (30-digit working precision) and frozen here to 17
//! significant digits.

use zetamellin::branchc::{CNum, I};
use zetamellin::error::Error;
use zetamellin::special::{
    self, digamma, gamma, hurwitz_em, hurwitz_em_cx, lerch_phi, polylog, zeta, SeriesControl,
    EULER_GAMMA,
};

const PI: f64 = std::f64::consts::PI;

fn assert_close(got: CNum, want: CNum, tol: f64, what: &str) {
    let diff = (got - want).norm();
    let scale = want.norm().max(1.0);
    assert!(
        diff <= tol * scale,
        "{what}: got {got}, want {want}, diff {diff:.3e}"
    );
}

fn c(re: f64, im: f64) -> CNum {
    CNum::new(re, im)
}

#[test]
fn gamma_reference_values() {
    assert_close(gamma(c(0.5, 0.0)).unwrap().value, c(PI.sqrt(), 0.0), 1e-14, "Γ(1/2)");
    assert_close(gamma(c(5.0, 0.0)).unwrap().value, c(24.0, 0.0), 1e-14, "Γ(5)");
    assert_close(
        gamma(c(0.3, -0.7)).unwrap().value,
        c(0.30968625674374916, 0.85678775293927057),
        1e-13,
        "Γ(0.3 − 0.7i)",
    );
}

#[test]
fn gamma_poles_and_recurrence() {
    for z in [c(0.0, 0.0), c(-1.0, 0.0), c(-7.0, 0.0)] {
        assert!(matches!(gamma(z), Err(Error::Pole { .. })), "Γ pole at {z}");
    }
    // Γ(z+1) = z Γ(z) across the reflection region.
    for z in [c(0.3, 0.4), c(-1.7, 0.2), c(-4.4, -2.0), c(6.0, 1.0)] {
        let lhs = gamma(z + 1.0).unwrap().value;
        let rhs = z * gamma(z).unwrap().value;
        assert_close(lhs, rhs, 1e-12, "Γ recurrence");
    }
}

#[test]
fn gamma_reflection_identity() {
    // Γ(z) Γ(1−z) = π / sin(πz), checked away from the poles.
    for z in [c(0.25, 0.0), c(0.3, 0.7), c(-1.2, 0.4)] {
        let lhs = gamma(z).unwrap().value * gamma(c(1.0, 0.0) - z).unwrap().value;
        let rhs = c(PI, 0.0) / (PI * z).sin();
        assert_close(lhs, rhs, 1e-12, "reflection");
    }
}

#[test]
fn digamma_reference_values() {
    assert_close(digamma(c(1.0, 0.0)).unwrap().value, c(-EULER_GAMMA, 0.0), 1e-13, "ψ(1)");
    assert_close(
        digamma(c(0.5, 0.0)).unwrap().value,
        c(-EULER_GAMMA - 2.0 * 2f64.ln(), 0.0),
        1e-13,
        "ψ(1/2)",
    );
    assert_close(
        digamma(c(0.3, 0.2)).unwrap().value,
        c(-2.4533654676755741, 1.7621780903806546),
        1e-13,
        "ψ(0.3 + 0.2i)",
    );
    // ψ(z+1) = ψ(z) + 1/z.
    for z in [c(0.7, 0.0), c(-2.4, 1.1), c(3.0, -0.5)] {
        let lhs = digamma(z + 1.0).unwrap().value;
        let rhs = digamma(z).unwrap().value + 1.0 / z;
        assert_close(lhs, rhs, 1e-12, "ψ recurrence");
    }
}

#[test]
fn zeta_reference_values() {
    assert_close(zeta(c(2.0, 0.0)).unwrap().value, c(PI * PI / 6.0, 0.0), 1e-13, "ζ(2)");
    assert_close(zeta(c(3.0, 0.0)).unwrap().value, c(1.2020569031595943, 0.0), 1e-13, "ζ(3)");
    assert_close(zeta(c(0.5, 0.0)).unwrap().value, c(-1.4603545088095868, 0.0), 1e-13, "ζ(1/2)");
    assert_close(zeta(c(-1.0, 0.0)).unwrap().value, c(-1.0 / 12.0, 0.0), 1e-12, "ζ(−1)");
    assert_close(zeta(c(0.0, 0.0)).unwrap().value, c(-0.5, 0.0), 1e-13, "ζ(0)");
    assert!(zeta(c(1.0, 0.0)).is_err(), "ζ pole at 1");
}

#[test]
fn hurwitz_reference_values() {
    // ζ(s, 1) = ζ(s).
    let a = hurwitz_em(c(2.5, 0.0), 1.0).unwrap().value;
    let b = zeta(c(2.5, 0.0)).unwrap().value;
    assert_close(a, b, 1e-14, "ζ(s,1) = ζ(s)");
    assert_close(
        hurwitz_em(c(2.0, 0.0), 0.5).unwrap().value,
        c(PI * PI / 2.0, 0.0),
        1e-13,
        "ζ(2, 1/2)",
    );
    assert_close(
        hurwitz_em(c(-0.5, 0.0), 0.7).unwrap().value,
        c(-0.020932663816169043, 0.0),
        1e-12,
        "ζ(−1/2, 0.7)",
    );
    assert_close(
        hurwitz_em(c(1.5, -1.0), 0.75).unwrap().value,
        c(1.6302712902828024, 0.35078667935008075),
        1e-12,
        "ζ(1.5−i, 3/4)",
    );
    assert_close(
        hurwitz_em_cx(c(-2.5, 0.7), c(0.39, 0.0)).unwrap().value,
        c(-0.014653820043502002, -0.0057057324168441057),
        1e-11,
        "ζ(−2.5+0.7i, 0.39)",
    );
}

#[test]
fn hurwitz_shift_recurrence() {
    // ζ(s, x) = ζ(s, x+1) + x^{−s}.
    for (s, x) in [(c(2.5, 0.0), 0.3), (c(-0.5, 0.0), 0.7), (c(1.5, -1.0), 0.25)] {
        let lhs = hurwitz_em(s, x).unwrap().value;
        let rhs = hurwitz_em(s, x + 1.0).unwrap().value
            + zetamellin::branchc::cpow(c(x, 0.0), -s).unwrap();
        assert_close(lhs, rhs, 1e-12, "Hurwitz shift");
    }
}

#[test]
fn polylog_reference_values() {
    let ctl = SeriesControl::default();
    assert_close(
        polylog(c(2.0, 0.0), c(0.5, 0.0), &ctl).unwrap().value,
        c(0.58224052646501251, 0.0),
        1e-13,
        "Li₂(1/2)",
    );
    assert_close(
        polylog(c(2.0, 0.0), c(-1.0, 0.0), &ctl).unwrap().value,
        c(-PI * PI / 12.0, 0.0),
        1e-12,
        "Li₂(−1)",
    );
    // Unit-circle evaluation via the transformed tail.
    let z = CNum::from_polar(1.0, 2.0 * PI * 0.3);
    assert_close(
        polylog(c(1.5, 0.0), z, &ctl).unwrap().value,
        c(-0.4550669295073526, 0.71811454096711916),
        1e-12,
        "Li_{3/2} on the circle",
    );
    // Li₁(z) = −log(1−z) just inside the circle.
    let z = c(0.6, 0.35);
    assert_close(
        polylog(c(1.0, 0.0), z, &ctl).unwrap().value,
        -zetamellin::branchc::plog(c(1.0, 0.0) - z).unwrap(),
        1e-12,
        "Li₁ closed form",
    );
}

#[test]
fn lerch_reference_values() {
    let ctl = SeriesControl::default();
    assert_close(
        lerch_phi(c(2.0, 0.0), c(0.0, 0.5), c(1.5, 0.0), &ctl).unwrap().value,
        c(-0.018582799964835562, 0.074473751429398331),
        1e-13,
        "Φ₂(i/2, 3/2)",
    );
    // Window-edge circle point (arg z/2π = 0.2, the slowest-contracting
    // admissible angle for the transformed tail).
    let z = CNum::from_polar(1.0, 2.0 * PI * 0.2);
    assert_close(
        lerch_phi(c(0.5, 0.0), z, c(3.0, 0.0), &ctl).unwrap().value,
        c(-0.22847053845187233, 0.3803640799315066),
        1e-11,
        "Φ_{1/2} at the window edge",
    );
}

#[test]
fn lerch_high_order_direct_path() {
    // Orders this large once stalled the transformed tail; the direct
    // absolutely-convergent path must deliver full relative accuracy even
    // though the value is ~1e−38.
    let ctl = SeriesControl::default();
    let z = CNum::from_polar(1.0, 2.0 * PI * 0.35);
    let got = lerch_phi(c(30.0, 0.0), z, c(17.0, 0.0), &ctl).unwrap();
    let want = c(-1.3534789029612673e-38, 1.4016966483640569e-38);
    let rel = (got.value - want).norm() / want.norm();
    assert!(rel <= 1e-12, "Φ₃₀: rel diff {rel:.3e}");
    assert!(got.abs_err <= 1e-10 * want.norm(), "abs_err {:.3e}", got.abs_err);
}

#[test]
fn lerch_shift_recurrence_on_and_off_circle() {
    // Φ_s(z, x) = z(x+1)^{−s} + z·Φ_s(z, x+1) holds exactly; it exercises the
    // x-dependence of both the interior series and the transformed circle
    // path without comparing either against itself.
    let ctl = SeriesControl::default();
    let s = c(1.5, 0.0);
    for z in [
        CNum::from_polar(1.0, 2.0 * PI * 0.21),
        CNum::from_polar(1.0, 2.0 * PI * 0.35),
        CNum::from_polar(1.0, 2.0 * PI * 0.6),
        CNum::from_polar(0.9, 2.0 * PI * 0.35),
    ] {
        for x in [c(0.25, 0.0), c(3.0, 0.0)] {
            let lhs = lerch_phi(s, z, x, &ctl).unwrap().value;
            let rhs = z * ((x + 1.0).powc(-s) + lerch_phi(s, z, x + 1.0, &ctl).unwrap().value);
            assert!(
                (lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0),
                "shift recurrence at z={z}, x={x}: {lhs} vs {rhs}"
            );
        }
    }
}

#[test]
fn lerch_rejects_divergent_regimes() {
    let ctl = SeriesControl::default();
    // |z| > 1 diverges.
    assert!(lerch_phi(c(2.0, 0.0), c(1.2, 0.0), c(0.0, 0.0), &ctl).is_err());
    // z = 1 with Re s ≤ 1 diverges.
    assert!(lerch_phi(c(0.4, 0.0), c(1.0, 0.0), c(0.0, 0.0), &ctl).is_err());
}

#[test]
fn lerch_at_one_is_hurwitz() {
    // Φ_s(1, x) = ζ(s, 1 + x) for Re s > 1.
    let ctl = SeriesControl::default();
    let got = lerch_phi(c(2.5, 0.0), c(1.0, 0.0), c(0.5, 0.0), &ctl).unwrap().value;
    let want = hurwitz_em(c(2.5, 0.0), 1.5).unwrap().value;
    assert_close(got, want, 1e-11, "Φ_s(1,x)");
}

#[test]
fn cancellation_is_reported_not_returned() {
    // ζ(s, x) for large negative Re s loses digits in the Bernoulli block;
    // the implementation must refuse rather than return garbage.
    match hurwitz_em(c(-19.5, 0.0), 0.3) {
        Ok(r) => assert!(r.abs_err.is_finite() && r.converged),
        Err(Error::Cancellation { .. }) | Err(Error::Regime(_)) => {}
        Err(e) => panic!("unexpected error class: {e}"),
    }
}

#[test]
fn eval_result_error_fields_are_consistent() {
    let r = zeta(c(2.5, 0.0)).unwrap();
    assert!(r.converged);
    assert!(r.abs_err >= 0.0 && r.abs_err < 1e-10);
    assert!(r.terms >= 1);
    let sum: CNum = special::hurwitz_em(c(2.5, 0.0), 1.0).unwrap().value;
    assert_close(r.value, sum, 1e-14, "ζ via the two entry points");
}

#[test]
fn fourier_phase_splitting_consistency() {
    // Σ_{k≥1} e^{i2πkb}/k^s  =  Li_s(e^{i2πb}), via the Lerch entry point
    // with x = 0 — the two entry points must share branch conventions.
    let ctl = SeriesControl::default();
    let b = 0.3;
    let z = (I * 2.0 * PI * b).exp();
    let via_li = polylog(c(1.5, 0.0), z, &ctl).unwrap().value;
    let via_phi = lerch_phi(c(1.5, 0.0), z, c(0.0, 0.0), &ctl).unwrap().value;
    assert_close(via_li, via_phi, 1e-14, "Li vs Φ");
}
