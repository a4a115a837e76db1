//! Hypergeometric evaluator tests: closed forms, transformation identities,
//! tier continuity, and regression cases for the series stopping rules.

use zetamellin::branchc::{cpow, CNum, I};
use zetamellin::hyper::{
    f0f1, f1f1, f1f2, f2f1, f2f1_side, hyper_identity_suite, kummer_check, Side,
};
use zetamellin::special::SeriesControl;

const PI: f64 = std::f64::consts::PI;

fn c(re: f64, im: f64) -> CNum {
    CNum::new(re, im)
}

fn assert_close(got: CNum, want: CNum, tol: f64, what: &str) {
    let diff = (got - want).norm();
    let scale = want.norm().max(1.0);
    assert!(
        diff <= tol * scale,
        "{what}: got {got}, want {want}, rel {:.3e}",
        diff / scale
    );
}

#[test]
fn f0f1_is_cosine() {
    // ₀F₁(; 1/2; −y²/4) = cos y.
    let ctl = SeriesControl::default();
    for y in [0.5f64, 3.0, 9.0] {
        let got = f0f1(c(0.5, 0.0), c(-y * y / 4.0, 0.0), &ctl).unwrap().value;
        assert_close(got, c(y.cos(), 0.0), 1e-12, "cosine closed form");
    }
}

#[test]
fn f1f1_closed_forms() {
    let ctl = SeriesControl::default();
    // M(a; a; z) = e^z.
    let z = c(1.3, -2.0);
    let got = f1f1(c(0.7, 0.4), c(0.7, 0.4), z, &ctl).unwrap().value;
    assert_close(got, z.exp(), 1e-12, "M(a;a;z)");
    // M(1; 2; z) = (e^z − 1)/z.
    let z = c(-3.0, 1.0);
    let got = f1f1(c(1.0, 0.0), c(2.0, 0.0), z, &ctl).unwrap().value;
    assert_close(got, (z.exp() - 1.0) / z, 1e-12, "M(1;2;z)");
}

#[test]
fn f1f1_kummer_transform_across_tiers() {
    // M(a;b;z) = e^z M(b−a;b;−z), with one side always cancellation-heavy.
    // The residual must stay inside the reported error bars on every tier
    // (f64, double-double), and below 1e−9 relative wherever the bars say
    // the values are that accurate.
    let ctl = SeriesControl::default();
    let a = c(-1.3, 0.4);
    let b = c(0.2, 0.4) - a + 1.0;
    for r in [5.0, 15.0, 25.0, 36.0] {
        for th in [0.3f64, 2.8] {
            let z = CNum::from_polar(r, th);
            let lhs = f1f1(a, b, z, &ctl).unwrap();
            let m = f1f1(b - a, b, -z, &ctl).unwrap();
            let rhs = z.exp() * m.value;
            let resid = (lhs.value - rhs).norm();
            let scale = lhs.value.norm().max(rhs.norm());
            let bar = lhs.abs_err + z.exp().norm() * m.abs_err + 1e-13 * scale;
            assert!(
                resid <= 6.0 * bar,
                "|z|={r}, θ={th}: residual {resid:.3e} outside error bars {bar:.3e}"
            );
            if bar <= 1e-9 * scale {
                assert!(
                    resid <= 1e-9 * scale,
                    "|z|={r}, θ={th}: rel {:.3e} where bars claim 1e−9",
                    resid / scale
                );
            }
        }
    }
}

#[test]
fn f1f2_reduces_to_f0f1() {
    // ₁F₂(α; α, γ; z) = ₀F₁(; γ; z).
    let ctl = SeriesControl::default();
    let (al, ga, z) = (c(0.9, -0.2), c(1.4, 0.0), c(-6.0, 2.5));
    let lhs = f1f2(al, al, ga, z, &ctl).unwrap().value;
    let rhs = f0f1(ga, z, &ctl).unwrap().value;
    assert_close(lhs, rhs, 1e-12, "parameter cancellation");
}

#[test]
fn f2f1_log_closed_form() {
    // ₂F₁(1, 1; 2; z) = −log(1−z)/z in the direct and Pfaff regions.
    let ctl = SeriesControl::default();
    for z in [c(0.5, 0.0), c(-3.0, 0.0), c(-0.8, 0.6), c(0.4, 0.8)] {
        let got = f2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), z, &ctl).unwrap().value;
        let want = -zetamellin::branchc::plog(c(1.0, 0.0) - z).unwrap() / z;
        assert_close(got, want, 1e-11, "dilog kernel");
    }
}

#[test]
fn f2f1_on_cut_sides() {
    // On the cut [1, ∞) the two sides differ by the monodromy of log(1−z):
    // ₂F₁(1,1;2;x ∓ i0) = (−ln(x−1) ± iπ)/x for x > 1.
    let ctl = SeriesControl::default();
    let x = 2.0;
    let below = f2f1_side(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(x, 0.0), Side::Below, &ctl)
        .unwrap()
        .value;
    let above = f2f1_side(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(x, 0.0), Side::Above, &ctl)
        .unwrap()
        .value;
    assert_close(below, c(0.0, -PI / 2.0), 1e-11, "below the cut");
    assert_close(above, c(0.0, PI / 2.0), 1e-11, "above the cut");
    // Side::Auto on the cut must refuse rather than guess.
    assert!(f2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(x, 0.0), &ctl).is_err());
}

#[test]
fn f2f1_pfaff_window_terminates() {
    // Regression: a Pfaff-mapped argument with |u| ∈ [0.9, 0.92] once stalled
    // the series loop at subnormal term magnitudes until the term cap.
    let ctl = SeriesControl::default();
    let s = c(1.254434266931806, -1.374839927421757);
    let z = c(8.449427067790829, -2.293905141436662);
    let one = c(1.0, 0.0);
    let h = f2f1_side(one, one - s, c(2.0, 0.0) - s, -z, Side::Below, &ctl).unwrap();
    assert!(h.value.is_finite());
    assert!(h.abs_err <= 1e-9 * h.value.norm().max(1.0), "abs_err {:.3e}", h.abs_err);
}

#[test]
fn kummer_connection_residuals() {
    let ctl = SeriesControl::default();
    // The once-stalling seeded point, plus spread-out magnitudes and phases.
    let pts = [
        (c(1.254434266931806, -1.374839927421757), c(8.449427067790829, -2.293905141436662)),
        (c(0.5, 0.3), c(0.3, 0.2)),
        (c(-1.6, 0.9), CNum::from_polar(6.0, 2.0)),
        (c(2.3, -0.4), CNum::from_polar(0.15, -1.2)),
        (c(-0.7, 2.1), CNum::from_polar(9.5, 0.4)),
    ];
    for (s, z) in pts {
        let r = kummer_check(s, z, &ctl).unwrap();
        assert!(r <= 1e-9, "connection residual {r:.3e} at s={s}, z={z}");
    }
}

#[test]
fn identity_suite_residuals() {
    let ctl = SeriesControl::default();
    let rs = hyper_identity_suite(&ctl).unwrap();
    assert!(rs.len() >= 8, "suite unexpectedly small: {}", rs.len());
    for r in &rs {
        assert!(
            r.residual <= 1e-9,
            "identity `{}` residual {:.3e}",
            r.name,
            r.residual
        );
    }
}

#[test]
fn pow_branch_matches_cpow_off_the_gap() {
    for z in [c(2.0, 0.0), c(-1.5, 0.2), c(0.3, -4.0)] {
        for s in [c(0.5, 0.0), c(-1.2, 0.7)] {
            let a = zetamellin::hyper::pow_branch(z, s).unwrap();
            let b = cpow(z, s).unwrap();
            assert_close(a, b, 1e-14, "principal powers agree");
        }
    }
    // On real z ∈ (−1, 0) the connection formula needs the limit from below,
    // i.e. arg z = −π, whereas the principal branch closes the upper edge.
    let s = c(0.3, 0.0);
    let below = zetamellin::hyper::pow_branch(c(-0.5, 0.0), s).unwrap();
    let want = cpow(c(0.5, 0.0), s).unwrap() * (-I * PI * s).exp();
    assert_close(below, want, 1e-14, "lower-edge power on (−1, 0)");
}

#[test]
fn series_error_reporting() {
    // A divergent-argument request fails with a structured error, not a hang.
    let ctl = SeriesControl { max_terms: 2_000, ..SeriesControl::default() };
    let r = f1f1(c(1.0, 0.0), c(2.0, 0.0), c(900.0, 0.0), &ctl);
    assert!(r.is_err(), "overflow-scale argument must be refused under a small term cap");
    // e^{iπ/4}·large stays on a ray where the result is O(exp(|z| cos θ)).
    let ok = f1f1(c(1.0, 0.0), c(2.0, 0.0), I * 30.0, &SeriesControl::default());
    assert!(ok.is_ok(), "oscillatory large argument should still evaluate");
}
