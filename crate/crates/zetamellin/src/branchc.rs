//! Branch-aware complex kernel.
//!
//! Everything in this crate relies on a fixed, explicit branch convention:
//!
//! * the principal logarithm `plog` has imaginary part in (−π, π], with the
//!   **upper** edge closed, so `plog(−1) = iπ`;
//! * complex powers are defined through it, `a^b := exp(b · plog a)`;
//! * the complex fractional part extends the real one by
//!   `{z} = {Re z} + i·Im z`, so `{z} ∈ [0, 1)` on the real axis and
//!   `{m} = 0` for integers `m`;
//! * the two-valued sign `sgn2` maps `[0, ∞) → +1` and `(−∞, 0) → −1`.
//!
//! On top of these the module provides the log-sine factorization
//!
//! ```text
//! log(4 sin²(πz)) = 2πi(1/2 − {sgn2(Im z)·Re z + i|Im z|})
//!                   + 2 log(1 − e^{i2π·sgn2(Im z)·z})
//! ```
//!
//! whose exponential always has modulus ≤ 1 by the choice of sign, and the
//! `(d₊, d₋)` case analysis that decides which of the two oscillatory
//! exponentials `e^{±i2π(az + b)}` decays on the integration ray `(d, ∞)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex number type used throughout the crate.
///
/// All public operations keep components finite; producing a NaN/Inf is
/// reported as an error rather than silently propagated.
pub type CNum = Complex64;

/// Imaginary unit.
pub const I: CNum = Complex64::new(0.0, 1.0);

/// Branch bookkeeping for the tail integrals over `(d, ∞)`.
///
/// `d_plus` is the cutoff beyond which `Im(a x + b)` keeps a fixed sign;
/// `d_minus ∈ {−1, +1}` selects the decaying exponential direction on
/// `(d_plus, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPlan {
    /// Cutoff `d₊ ≥ d`; equals `d` unless `Im a ≠ 0` and `−Im b/Im a > d`.
    pub d_plus: f64,
    /// Sign `d₋ ∈ {−1, +1}` chosen so that `e^{i2π d₋ (a x + b)}` is bounded
    /// for `x > d₊`.
    pub d_minus: f64,
}

/// Principal logarithm with `Im ∈ (−π, π]`.
///
/// The branch is closed on the upper edge: negative reals map to
/// `ln|z| + iπ`, regardless of the sign of a zero imaginary part.
///
/// # Errors
///
/// `z = 0` is a domain error (logarithmic singularity).
pub fn plog(z: CNum) -> Result<CNum> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("plog(0) is undefined".into()));
    }
    // Collapse ±0 imaginary parts onto the upper edge so that the branch is
    // genuinely (−π, π] and not atan2's [−π, π].
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let arg = im.atan2(z.re);
    let val = CNum::new(z.re.hypot(z.im).ln(), arg);
    ensure_finite(val, "plog")
}

/// Principal power `a^b = e^{b·plog a}`.
///
/// # Errors
///
/// `a = 0` with `Re b ≤ 0` is a domain error; `a = 0` with `Re b > 0`
/// returns `0`. Overflow of the exponential is reported as such.
pub fn cpow(a: CNum, b: CNum) -> Result<CNum> {
    if a.re == 0.0 && a.im == 0.0 {
        return if b.re > 0.0 {
            Ok(CNum::new(0.0, 0.0))
        } else {
            Err(Error::Domain(format!("0^b undefined for Re b = {} ≤ 0", b.re)))
        };
    }
    let w = b * plog(a)?;
    if w.re > 709.0 {
        return Err(Error::Overflow(format!("cpow exponent Re = {:.3} too large", w.re)));
    }
    ensure_finite(w.exp(), "cpow")
}

/// Real fractional part `{x} ∈ [0, 1)` with `{m} = 0` for integers.
pub fn frac_re(x: f64) -> f64 {
    let f = x - x.floor();
    // x.floor() == x for integers gives f = 0 exactly; rounding in the
    // subtraction can only produce f ∈ [0, 1) already.
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Complex fractional part `{z} = {Re z} + i·Im z`.
///
/// Equals `1/2 + (i/2π)·plog(e^{−i2π(z−1/2)})` with the closed-upper-edge
/// branch; the direct form below is the numerically stable evaluation of the
/// same function (the exponential form is exercised in tests away from the
/// integers, where it is well conditioned).
pub fn frac(z: CNum) -> CNum {
    CNum::new(frac_re(z.re), z.im)
}

/// Complex floor `⌊z⌋ = z − {z} = ⌊Re z⌋` (real integer, no imaginary part).
pub fn floorc(z: CNum) -> CNum {
    CNum::new(z.re.floor(), 0.0)
}

/// Two-valued sign: `+1` for `x ≥ 0`, `−1` for `x < 0`.
///
/// With this convention `|e^{i2π·sgn2(Im z)·z}| ≤ 1` for every `z`, which is
/// what the log-sine factorization and the `d₋` case analysis require.
pub fn sgn2(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// `log(4 sin²(πz))` via the branch-correct three-term factorization.
///
/// Returns
/// `2πi(1/2 − {σ·Re z + i|Im z|}) + 2·plog(1 − e^{i2πσz})` with
/// `σ = sgn2(Im z)`. On the real axis this is the real value
/// `2 ln(2|sin πz|)`; for complex `z` it agrees with `2·plog(2 sin πz)` up
/// to the `2πi` normalization of the principal branch.
///
/// # Errors
///
/// Real integer `z` (a logarithmic singularity) is rejected.
pub fn logsin_split(z: CNum) -> Result<CNum> {
    if z.im == 0.0 && z.re == z.re.floor() {
        return Err(Error::Singularity(format!(
            "log(4 sin²(πz)) singular at integer z = {}",
            z.re
        )));
    }
    let sigma = sgn2(z.im);
    let w = CNum::new(sigma * z.re, z.im.abs());
    // e^{i2πσz} = e^{i2π(σ·Re z) − 2π|Im z|}: modulus ≤ 1 by construction.
    let e = (I * 2.0 * std::f64::consts::PI * sigma * z).exp();
    let one_minus = CNum::new(1.0, 0.0) - e;
    let log_term = plog(one_minus)?;
    let half_minus_frac = CNum::new(0.5, 0.0) - frac(w);
    let val = I * 2.0 * std::f64::consts::PI * half_minus_frac + 2.0 * log_term;
    ensure_finite(val, "logsin_split")
}

/// Derive the `(d₊, d₋)` branch plan for the ray `(d, ∞)`.
///
/// * `d₊ = −Im b/Im a` when `Im a ≠ 0` and that quotient exceeds `d`,
///   otherwise `d₊ = d`;
/// * `d₋ = +1` when `Im a = Im b = 0`; `d₋ = sgn2(Im b)` when
///   `Im a = 0 ≠ Im b`; and `d₋ = lim_{ε→0⁺} sgn2(Im a·(d₊+ε) + Im b)`
///   when `Im a ≠ 0`.
///
/// The case analysis is exact (no tolerances): in the last case the limit
/// always equals `sgn2(Im a)` because `Im a·d₊ + Im b ≥ 0` exactly when
/// `Im a > 0` and `≤ 0` when `Im a < 0` by the choice of `d₊`.
///
/// # Errors
///
/// Requires `d > 0` and `a ≠ 0`.
pub fn branch_plan(a: CNum, b: CNum, d: f64) -> Result<BranchPlan> {
    if !(d > 0.0) {
        return Err(Error::Domain(format!("branch_plan requires d > 0, got {d}")));
    }
    if a.re == 0.0 && a.im == 0.0 {
        return Err(Error::Domain("branch_plan requires a ≠ 0".into()));
    }
    let (d_plus, d_minus);
    if a.im != 0.0 {
        let t = -b.im / a.im;
        d_plus = if t > d { t } else { d };
        // Im a·(d₊+ε) + Im b = Im a·(d₊ − t) + ε·Im a; the first summand has
        // the sign of Im a (or vanishes), so the limit is sgn2(Im a).
        d_minus = sgn2(a.im);
    } else {
        d_plus = d;
        d_minus = if b.im == 0.0 { 1.0 } else { sgn2(b.im) };
    }
    Ok(BranchPlan { d_plus, d_minus })
}

/// The closed-form sign `sgn2(2 d₊ Im a + Im b)` that the tail expansion's
/// statement uses for `d₋`.
///
/// Provided for cross-checking: under the corrected `sgn2` it coincides with
/// the case-split value in [`branch_plan`] for every admissible `(a, b, d)`;
/// the harness verifies the agreement on its grids.
pub fn d_minus_statement(a: CNum, b: CNum, plan: &BranchPlan) -> f64 {
    sgn2(2.0 * plan.d_plus * a.im + b.im)
}

/// Reject non-finite results uniformly.
pub(crate) fn ensure_finite(z: CNum, what: &str) -> Result<CNum> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(format!("{what} produced a non-finite value")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn close(x: CNum, y: CNum, tol: f64) -> bool {
        (x - y).norm() <= tol
    }

    #[test]
    fn plog_principal_values() {
        assert!(close(plog(CNum::new(-1.0, 0.0)).unwrap(), CNum::new(0.0, PI), 1e-15));
        assert!(close(plog(CNum::new(1.0, 0.0)).unwrap(), CNum::new(0.0, 0.0), 1e-15));
        assert!(close(plog(CNum::new(0.0, 1.0)).unwrap(), CNum::new(0.0, PI / 2.0), 1e-15));
        // Negative zero imaginary part still lands on the closed upper edge.
        assert!(close(plog(CNum::new(-2.0, -0.0)).unwrap(), CNum::new(2f64.ln(), PI), 1e-15));
        assert!(plog(CNum::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn plog_inverts_exp_on_grid() {
        for i in -10..=10 {
            for j in -10..=10 {
                let z = CNum::new(i as f64 * 0.97 + 0.11, j as f64 * 1.03 - 0.05);
                if z.norm() < 1e-12 {
                    continue;
                }
                let w = plog(z).unwrap().exp();
                assert!(
                    (w - z).norm() <= 1e-13 * z.norm().max(1.0),
                    "exp(plog({z})) = {w}"
                );
            }
        }
    }

    #[test]
    fn cpow_basics() {
        assert!(close(cpow(CNum::new(-1.0, 0.0), CNum::new(0.5, 0.0)).unwrap(), I, 1e-15));
        assert!(close(cpow(CNum::new(2.0, 0.0), CNum::new(3.0, 0.0)).unwrap(), CNum::new(8.0, 0.0), 1e-14));
        assert!(close(cpow(CNum::new(0.0, -1.0), CNum::new(1.0, 0.0)).unwrap(), CNum::new(0.0, -1.0), 1e-15));
        assert!(close(cpow(CNum::new(0.0, 0.0), CNum::new(2.0, 0.0)).unwrap(), CNum::new(0.0, 0.0), 0.0));
        assert!(cpow(CNum::new(0.0, 0.0), CNum::new(-1.0, 0.0)).is_err());
        assert!(cpow(CNum::new(0.0, 0.0), CNum::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn frac_and_floor() {
        assert_eq!(frac(CNum::new(2.75, 0.0)), CNum::new(0.75, 0.0));
        assert_eq!(frac(CNum::new(-0.25, 0.0)), CNum::new(0.75, 0.0));
        assert_eq!(frac(CNum::new(3.0, 0.0)), CNum::new(0.0, 0.0));
        assert_eq!(frac(CNum::new(1.5, 2.0)), CNum::new(0.5, 2.0));
        assert_eq!(floorc(CNum::new(2.75, 0.0)), CNum::new(2.0, 0.0));
        assert_eq!(floorc(CNum::new(-0.25, 0.0)), CNum::new(-1.0, 0.0));
        assert_eq!(floorc(CNum::new(1.5, 2.0)), CNum::new(1.0, 0.0));
        // z = {z} + ⌊z⌋ exactly.
        let z = CNum::new(-7.3125, 0.5);
        assert_eq!(frac(z) + floorc(z), z);
    }

    #[test]
    fn frac_matches_exponential_form_off_integers() {
        // {z} = 1/2 + (i/2π)·plog(e^{−i2π(z−1/2)}), stable away from ℤ.
        for i in 0..40 {
            let x = -3.9 + 0.195 * i as f64;
            if (x - x.round()).abs() < 0.02 {
                continue;
            }
            for im in [-1.5, 0.0, 0.8] {
                let z = CNum::new(x, im);
                let e = (-I * 2.0 * PI * (z - 0.5)).exp();
                let via_log = CNum::new(0.5, 0.0) + I / (2.0 * PI) * plog(e).unwrap();
                assert!(
                    close(frac(z), via_log, 1e-12),
                    "z = {z}: {} vs {}",
                    frac(z),
                    via_log
                );
            }
        }
    }

    #[test]
    fn frac_periodicity_on_reals() {
        for i in 0..50 {
            let x = -5.0 + 0.21 * i as f64;
            let a = frac(CNum::new(x, 0.0)).re;
            let b = frac(CNum::new(x + 1.0, 0.0)).re;
            assert!((a - b).abs() <= 1e-13, "frac({x}) vs frac({})", x + 1.0);
            assert!((0.0..1.0).contains(&a));
        }
    }

    #[test]
    fn sgn2_values() {
        assert_eq!(sgn2(3.0), 1.0);
        assert_eq!(sgn2(-2.0), -1.0);
        assert_eq!(sgn2(0.0), 1.0);
        assert_eq!(sgn2(-0.0), 1.0);
    }

    #[test]
    fn logsin_split_known_values() {
        let v = logsin_split(CNum::new(0.25, 0.0)).unwrap();
        assert!(close(v, CNum::new(2f64.ln(), 0.0), 1e-14), "log 4sin²(π/4) = {v}");
        let v = logsin_split(CNum::new(1.0 / 6.0, 0.0)).unwrap();
        assert!(close(v, CNum::new(0.0, 0.0), 1e-14), "log 4sin²(π/6) = {v}");
        assert!(logsin_split(CNum::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn logsin_split_matches_direct_log() {
        // Compare against 2·plog(2 sin πz) with imaginary parts reduced
        // modulo 2π into (−π, π].
        let reduce = |x: f64| {
            let mut y = x % (2.0 * PI);
            if y > PI {
                y -= 2.0 * PI;
            }
            if y <= -PI {
                y += 2.0 * PI;
            }
            y
        };
        for &re in &[-2.3, -0.7, 0.13, 0.3, 0.49, 0.77, 1.6] {
            for &im in &[-5.0, -0.6, 0.0, 0.4, 5.0] {
                let z = CNum::new(re, im);
                let split = logsin_split(z).unwrap();
                let direct = 2.0 * plog(2.0 * (PI * z).sin()).unwrap();
                assert!(
                    (split.re - direct.re).abs() <= 1e-11,
                    "Re mismatch at {z}: {split} vs {direct}"
                );
                let di = reduce(split.im - direct.im);
                assert!(di.abs() <= 1e-11, "Im mismatch at {z}: {split} vs {direct}");
            }
        }
    }

    #[test]
    fn logsin_decay_property() {
        for &re in &[-1.3, 0.2, 2.7] {
            for &im in &[-3.0, -0.1, 0.0, 0.1, 3.0] {
                let z = CNum::new(re, im);
                let e = (I * 2.0 * PI * sgn2(z.im) * z).exp();
                assert!(e.norm() <= 1.0 + 1e-15, "|e^{{i2π·sgn2·z}}| = {} at {z}", e.norm());
            }
        }
    }

    #[test]
    fn branch_plan_cases() {
        // Real case: (d, +1) identically.
        let p = branch_plan(CNum::new(1.0, 0.0), CNum::new(0.3, 0.0), 2.0).unwrap();
        assert_eq!(p, BranchPlan { d_plus: 2.0, d_minus: 1.0 });
        // Im a ≠ 0 with −Im b/Im a = 4 > 1.
        let p = branch_plan(CNum::new(1.0, 1.0), CNum::new(0.0, -4.0), 1.0).unwrap();
        assert_eq!(p, BranchPlan { d_plus: 4.0, d_minus: 1.0 });
        // Im a = 0, Im b < 0.
        let p = branch_plan(CNum::new(1.0, 0.0), CNum::new(0.0, -2.0), 1.0).unwrap();
        assert_eq!(p, BranchPlan { d_plus: 1.0, d_minus: -1.0 });
        // Im a < 0: decaying direction flips.
        let p = branch_plan(CNum::new(1.0, -0.5), CNum::new(0.2, 1.0), 1.0).unwrap();
        assert_eq!(p.d_plus, 2.0);
        assert_eq!(p.d_minus, -1.0);
        assert!(branch_plan(CNum::new(0.0, 0.0), CNum::new(0.0, 0.0), 1.0).is_err());
        assert!(branch_plan(CNum::new(1.0, 0.0), CNum::new(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn branch_plan_agrees_with_statement_form() {
        let grid_a = [
            CNum::new(1.0, 0.0),
            CNum::new(-0.7, 0.0),
            CNum::new(1.0, 0.5),
            CNum::new(1.3, -0.4),
            CNum::new(0.3, 2.0),
        ];
        let grid_b = [
            CNum::new(0.0, 0.0),
            CNum::new(0.3, 0.0),
            CNum::new(0.25, 1.0),
            CNum::new(0.61, -2.0),
        ];
        for a in grid_a {
            for b in grid_b {
                for d in [0.5, 1.0, 2.0] {
                    let plan = branch_plan(a, b, d).unwrap();
                    assert!(plan.d_plus >= d);
                    assert_eq!(
                        plan.d_minus,
                        d_minus_statement(a, b, &plan),
                        "mismatch at a={a}, b={b}, d={d}"
                    );
                    // The selected exponential decays (or is bounded) on the ray.
                    let x = plan.d_plus + 0.125;
                    let w = I * 2.0 * PI * plan.d_minus * (a * x + b);
                    assert!(w.re <= 1e-12, "growth at a={a}, b={b}, d={d}: {}", w.re);
                }
            }
        }
    }
}
