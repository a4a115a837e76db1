//! Generalized hypergeometric series with explicit analytic continuation.
//!
//! Families provided: `0F1`, `1F1` (Kummer `M`), `1F2`, and Gauss `2F1`.
//! Every entry point routes its argument through one of three strategies and
//! reports which one it used:
//!
//!   * `DirectSeries` — the defining power series, summed in `f64` or, inside
//!     the heavy-cancellation window, in double-double arithmetic with a
//!     running cancellation monitor.
//!   * `RecurrenceShifted` — an exact index-shift recurrence (or its limiting
//!     asymptotic form) that moves the evaluation into a tame region.
//!   * `IntegralRoute` — a branch-tracked integral representation used for
//!     Gauss functions on or near the cut `[1, ∞)`, where the caller chooses
//!     the side of approach.
//!
//! Arguments outside every implemented regime produce `Error::Regime` or
//! `Error::Cancellation` rather than silently inaccurate values.

use std::f64::consts::PI;

use crate::branchc::{cpow, plog, CNum};
use crate::dd::CDd;
use crate::error::{Error, Result};
use crate::special::{self, CSum, SeriesControl};

/// Which evaluation path produced a [`HyperEval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Defining power series (possibly in double-double arithmetic).
    DirectSeries,
    /// Exact contiguous/index-shift recurrence or its asymptotic limit form.
    RecurrenceShifted,
    /// Branch-tracked integral representation.
    IntegralRoute,
}

/// Side from which a point on the cut `[1, ∞)` of `2F1` is approached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Let the principal branch decide; on the cut itself this is an error.
    Auto,
    /// Limit from the upper half-plane (`Im z → 0+`).
    Above,
    /// Limit from the lower half-plane (`Im z → 0−`).
    Below,
}

/// Value, error estimate, and strategy tag for a hypergeometric evaluation.
#[derive(Debug, Clone, Copy)]
pub struct HyperEval {
    pub value: CNum,
    pub abs_err: f64,
    pub strategy: Strategy,
}

impl HyperEval {
    fn new(value: CNum, abs_err: f64, strategy: Strategy) -> Self {
        HyperEval { value, abs_err, strategy }
    }
}

/// Relative cancellation beyond which a series result is refused outright.
const CANCEL_LIMIT: f64 = 1e-3;
/// Cancellation scale up to which the plain `f64` series is trusted.
const SCALE_F64: f64 = 20.0;
/// Cancellation scale up to which the double-double series is trusted.
const SCALE_DD: f64 = 40.0;

const EPS: f64 = f64::EPSILON;
/// Effective unit roundoff of the double-double accumulator.
const EPS_DD: f64 = 2.5e-32;

fn err_pole_params(which: &str, v: CNum) -> Error {
    Error::pole(v, format!("lower parameter {which} is a non-positive integer"))
}

/// Raw series Σ_n [Π_i (p_i)_n / Π_j (q_j)_n] z^n / n! in `f64`.
///
/// Returns `(sum, sum_of_abs, tail_estimate, terms)`.
fn series_f64(
    num: &[CNum],
    den: &[CNum],
    z: CNum,
    ctl: &SeriesControl,
) -> Result<(CNum, f64, f64, usize)> {
    let mut term = CNum::new(1.0, 0.0);
    let mut sum = CSum::new();
    sum.add(term);
    let mut sum_abs = 1.0;
    let mut small = 0usize;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for p in num {
            ratio *= *p + nf;
        }
        for q in den {
            ratio /= *q + nf;
        }
        term *= ratio;
        sum.add(term);
        sum_abs += term.norm();
        let v = sum.value();
        let scale = v.norm().max(sum_abs * EPS).max(f64::MIN_POSITIVE);
        let r = ratio.norm();
        // The gate must sit above the largest limiting ratio any caller can
        // produce (Gauss series after a Pfaff map reach |z| = 0.92), or a
        // convergent series stalls with subnormal terms that never hit zero.
        if term.norm() <= 0.1 * ctl.tol * scale && r < 0.95 {
            small += 1;
            if small >= ctl.consecutive_small {
                let tail = term.norm() * r / (1.0 - r);
                return Ok((v, sum_abs, tail, n + 2));
            }
        } else {
            small = 0;
        }
        if term.norm() == 0.0 {
            // Terminating (polynomial) case.
            return Ok((v, sum_abs, 0.0, n + 2));
        }
        if !term.norm().is_finite() {
            return Err(Error::Overflow(format!(
                "hypergeometric series term overflowed at n = {n} for z = {z}"
            )));
        }
    }
    Err(Error::NoConvergence { terms: ctl.max_terms, abs_err: term.norm() })
}

/// Same series in double-double arithmetic for the cancellation window.
fn series_dd(
    num: &[CNum],
    den: &[CNum],
    z: CNum,
    ctl: &SeriesControl,
) -> Result<(CNum, f64, f64, usize)> {
    let zdd = CDd::from_c(z);
    let mut term = CDd::from_f(1.0);
    let mut sum = term;
    let mut sum_abs = 1.0f64;
    let mut small = 0usize;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        // Form parameter shifts p + n with an exact two_sum: rounding them in
        // f64 first perturbs every coefficient by ~ε·n/|p+n| and the peak
        // terms (~e^{|z|}) amplify that into the final sum.
        let mut ratio = zdd.div(CDd::from_f(nf + 1.0));
        for p in num {
            ratio = ratio.mul(CDd::from_c(*p).add(CDd::from_f(nf)));
        }
        for q in den {
            ratio = ratio.div(CDd::from_c(*q).add(CDd::from_f(nf)));
        }
        term = term.mul(ratio);
        sum = sum.add(term);
        let tn = term.to_c().norm();
        sum_abs += tn;
        let v = sum.to_c();
        let scale = v.norm().max(sum_abs * EPS_DD).max(f64::MIN_POSITIVE);
        let r = ratio.to_c().norm();
        // Same gate margin as the f64 loop: see the comment there.
        if tn <= 0.1 * ctl.tol * scale && r < 0.95 {
            small += 1;
            if small >= ctl.consecutive_small {
                let tail = tn * r / (1.0 - r);
                return Ok((v, sum_abs, tail, n + 2));
            }
        } else {
            small = 0;
        }
        if tn == 0.0 {
            return Ok((v, sum_abs, 0.0, n + 2));
        }
        if !tn.is_finite() {
            return Err(Error::Overflow(format!(
                "hypergeometric series term overflowed at n = {n} for z = {z}"
            )));
        }
    }
    Err(Error::NoConvergence { terms: ctl.max_terms, abs_err: term.to_c().norm() })
}

/// Shared driver: run the series in the requested precision and convert the
/// cancellation tally into either an error bar or a refusal.
fn series_eval(
    num: &[CNum],
    den: &[CNum],
    z: CNum,
    ctl: &SeriesControl,
    use_dd: bool,
) -> Result<HyperEval> {
    for (j, q) in den.iter().enumerate() {
        if special::is_nonpositive_integer(*q) {
            return Err(err_pole_params(&format!("#{}", j + 1), *q));
        }
    }
    let eps = if use_dd { EPS_DD } else { EPS };
    let (value, sum_abs, tail, _terms) = if use_dd {
        series_dd(num, den, z, ctl)?
    } else {
        series_f64(num, den, z, ctl)?
    };
    let scale = value.norm().max(f64::MIN_POSITIVE);
    let cancel_rel = eps * sum_abs / scale;
    if cancel_rel > CANCEL_LIMIT {
        return Err(Error::Cancellation { estimate: cancel_rel, limit: CANCEL_LIMIT });
    }
    let abs_err = tail + eps * sum_abs * 4.0;
    Ok(HyperEval::new(value, abs_err, Strategy::DirectSeries))
}

/// `0F1(; β; z)`.
///
/// The cancellation scale is `y = 2√|z|`; the `f64` series is used for
/// `y ≤ 20`, double-double for `y ≤ 40`, and oscillatory arguments beyond
/// that are refused.
pub fn f0f1(beta: CNum, z: CNum, ctl: &SeriesControl) -> Result<HyperEval> {
    let y = 2.0 * z.norm().sqrt();
    let oscillatory = z.re < 0.6 * z.norm();
    if oscillatory && y > SCALE_DD {
        let estimate = EPS * y.min(600.0).exp();
        return Err(Error::Cancellation { estimate, limit: CANCEL_LIMIT });
    }
    let use_dd = oscillatory && y > SCALE_F64;
    series_eval(&[], &[beta], z, ctl, use_dd)
}

/// Kummer's function `M(α; β; z) = 1F1(α; β; z)`.
///
/// Routes: direct series for `|z| ≤ 20`, double-double series for
/// `|z| ≤ 40`, and for larger arguments the exact shift recurrence in its
/// limiting (asymptotic) form — available only for the parameter shape
/// `β − α = 1`, i.e. `M(−s; 1−s; z)`, which is the shape the surrounding
/// library needs. Other shapes at large `|z|` return `Error::Regime`.
pub fn f1f1(alpha: CNum, beta: CNum, z: CNum, ctl: &SeriesControl) -> Result<HyperEval> {
    if special::is_nonpositive_integer(beta) {
        return Err(err_pole_params("β", beta));
    }
    if z.norm() == 0.0 {
        return Ok(HyperEval::new(CNum::new(1.0, 0.0), 0.0, Strategy::DirectSeries));
    }
    let y = z.norm();
    if y <= SCALE_F64 {
        return series_eval(&[alpha], &[beta], z, ctl, false);
    }
    if y <= SCALE_DD {
        return series_eval(&[alpha], &[beta], z, ctl, true);
    }
    if special::is_nonpositive_integer(alpha) {
        // Terminating polynomial: exact at any argument size.
        return series_eval(&[alpha], &[beta], z, ctl, false);
    }
    // Large argument: only the β − α = 1 shape has a continuation here.
    let shape = beta - alpha;
    if (shape - CNum::new(1.0, 0.0)).norm() < 1e-12 {
        return f1f1_asymptotic(-alpha, z);
    }
    Err(Error::Regime(format!(
        "1F1 with |z| = {y:.3e} > 40 is implemented only for the parameter shape \
         β − α = 1 (found β − α = {shape})"
    )))
}

/// Upper edge of the series window for the exponential Kummer part: the
/// asymptotic route only reaches `≲ 1e−9` accuracy once `|z| ≥ 32` and, for
/// large `|s|`, `|z| ≳ 2|s| + 10`; the double-double series stays accurate
/// to `|z| ≈ 45`.
pub(crate) fn ez_series_max(s: CNum) -> f64 {
    (2.0 * s.norm() + 10.0).clamp(32.0, 45.0)
}

/// Truncated asymptotic factor `Σ_{m≥0} (s+1)_m z^{−m}`, stopped at its
/// smallest term. Returns `(sum, sum_of_abs, first_omitted_term)`.
pub(crate) fn f1f1_tail_factor(s: CNum, z: CNum) -> (CNum, f64, f64) {
    let mut t = CNum::new(1.0, 0.0);
    let mut acc = CSum::new();
    let mut acc_abs = 0.0f64;
    let mut trunc = t.norm();
    for m in 0..400usize {
        acc.add(t);
        acc_abs += t.norm();
        let tn = t * (s + (m as f64 + 1.0)) / z;
        if tn.norm() >= t.norm() {
            trunc = tn.norm();
            break;
        }
        trunc = tn.norm();
        if tn.norm() == 0.0 {
            trunc = 0.0;
            break;
        }
        t = tn;
    }
    (acc.value(), acc_abs, trunc)
}

/// Limiting form of the index-shift recurrence for `M(−s; 1−s; z)`,
/// valid for large `|z|`:
///
/// `M(−s; 1−s; z) = Γ(1−s)(−z)^s − s (e^z / z) Σ_{m≥0} (s+1)_m z^{−m}`,
///
/// with the divergent sum truncated at its smallest term (error of the
/// order of the first omitted term, ≈ e^{−|z|} at the optimal point).
fn f1f1_asymptotic(s: CNum, z: CNum) -> Result<HyperEval> {
    if z.im == 0.0 && z.re > 0.0 {
        // (−z)^s would sit exactly on the principal cut.
        return Err(Error::BranchCut(
            "asymptotic M(−s;1−s;z) needs (−z) off the negative real axis".into(),
        ));
    }
    if z.re > 700.0 {
        return Err(Error::Overflow(format!("e^z overflows for Re z = {}", z.re)));
    }
    let gamma_term = special::gamma_c(CNum::new(1.0, 0.0) - s)? * cpow(-z, s)?;
    let (fac, fac_abs, trunc) = f1f1_tail_factor(s, z);
    let pref = -s * z.exp() / z;
    let value = gamma_term + pref * fac;
    let abs_err = pref.norm() * (trunc + EPS * fac_abs * 4.0)
        + EPS * (gamma_term.norm() + (pref * fac).norm()) * 4.0;
    Ok(HyperEval::new(value, abs_err, Strategy::RecurrenceShifted))
}

/// The exponential part of the Kummer shape `M(−s; 1−s; z)`:
///
/// ```text
/// M̃(s; z) := M(−s; 1−s; z) − Γ(1−s)(−z)^s
///          = −s (e^z / z) Σ_{m≥0} (s+1)_m z^{−m}   (|z| → ∞)
/// ```
///
/// This is the piece that survives in the absolutely convergent series
/// assemblies: the removed Γ-power part cancels exactly against the
/// closed-form power terms of the kernel sums. Routes:
///
///   * `|z| ≤ 10` — `f64` series for `M` minus the Γ-term;
///   * `|z| ≤ max(32, min(45, 2|s|+10))` — double-double series minus the
///     Γ-term (the subtraction leaves a result of size `≈ |s|/|z|`, so the
///     `e^{|z|}·ε` rounding noise of a plain `f64` series would dominate well
///     before `|z| = 20`; in double-double the noise stays below `1e−12`
///     out to `|z| ≈ 45`);
///   * beyond — the asymptotic sum directly, truncated at its smallest term.
///     Its smallest term is `≲ e^{−|z|}` only while `|z| ≫ |s|`; for large
///     `|Im s|` the optimal truncation stalls near `m ≈ |z| − |s|`, which is
///     why the series window widens with `|s|`.
pub fn f1f1_ez_part(s: CNum, z: CNum, ctl: &SeriesControl) -> Result<HyperEval> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("M̃(s; z) needs z ≠ 0".into()));
    }
    if z.im == 0.0 && z.re > 0.0 {
        return Err(Error::BranchCut(
            "M̃(s; z) needs (−z) off the negative real axis".into(),
        ));
    }
    if special::is_integer(s) && s.re >= 1.0 - 1e-9 {
        return Err(Error::pole(s, "M̃(s; z): Γ(1−s) parameter pole"));
    }
    let y = z.norm();
    if y <= ez_series_max(s) {
        let m = series_eval(&[-s], &[CNum::new(1.0, 0.0) - s], z, ctl, y > 10.0)?;
        let gamma_term = special::gamma_c(CNum::new(1.0, 0.0) - s)? * cpow(-z, s)?;
        let value = m.value - gamma_term;
        let abs_err = m.abs_err + EPS * (m.value.norm() + gamma_term.norm()) * 8.0;
        return Ok(HyperEval::new(value, abs_err, m.strategy));
    }
    if z.re > 700.0 {
        return Err(Error::Overflow(format!("e^z overflows for Re z = {}", z.re)));
    }
    let (fac, fac_abs, trunc) = f1f1_tail_factor(s, z);
    let pref = -s * z.exp() / z;
    let value = pref * fac;
    let abs_err = pref.norm() * (trunc + EPS * fac_abs * 4.0) + EPS * value.norm() * 4.0;
    Ok(HyperEval::new(value, abs_err, Strategy::RecurrenceShifted))
}

/// `1F2(α; β, γ; z)`.
///
/// Cancellation scale `y = 2√|z|`: `f64` for `y ≤ 20`, double-double for
/// `y ≤ 40`, refusal beyond 40 when the argument is oscillatory
/// (`Re z` not dominant positive).
pub fn f1f2(alpha: CNum, beta: CNum, gamma: CNum, z: CNum, ctl: &SeriesControl) -> Result<HyperEval> {
    let y = 2.0 * z.norm().sqrt();
    let oscillatory = z.re < 0.6 * z.norm();
    if oscillatory && y > SCALE_DD {
        let estimate = EPS * y.min(600.0).exp();
        return Err(Error::Cancellation { estimate, limit: CANCEL_LIMIT });
    }
    let use_dd = oscillatory && y > SCALE_F64;
    series_eval(&[alpha], &[beta, gamma], z, ctl, use_dd)
}

/// Gauss `2F1(a, b; c; z)` on the principal branch (`Side::Auto`).
pub fn f2f1(a: CNum, b: CNum, c: CNum, z: CNum, ctl: &SeriesControl) -> Result<HyperEval> {
    f2f1_side(a, b, c, z, Side::Auto, ctl)
}

/// Gauss `2F1(a, b; c; z)` with an explicit side of approach for the cut.
///
/// Routes:
///   * `|z| ≤ 0.92` — direct series;
///   * Pfaff transform `(1−z)^{−a} 2F1(a, c−b; c; z/(z−1))` when the mapped
///     argument is comfortably inside the disk;
///   * on or near the cut `[1, ∞)` — a branch-tracked integral continuation,
///     implemented for the family `2F1(1, β; β+1; ·)` (in either argument
///     order); other parameter shapes there return `Error::Regime`.
pub fn f2f1_side(
    a: CNum,
    b: CNum,
    c: CNum,
    z: CNum,
    side: Side,
    ctl: &SeriesControl,
) -> Result<HyperEval> {
    if special::is_nonpositive_integer(c) {
        return Err(err_pole_params("c", c));
    }
    if (z - CNum::new(1.0, 0.0)).norm() < 1e-14 {
        return Err(Error::BranchCut("2F1 argument at the branch point z = 1".into()));
    }
    let on_cut = z.im == 0.0 && z.re >= 1.0;
    if !on_cut {
        if z.norm() <= 0.92 {
            return series_eval(&[a, b], &[c], z, ctl, false);
        }
        // Pfaff: z ↦ u = z/(z−1) maps ℂ∖[1,∞) onto ℂ∖[1,∞); for z in the
        // left half of the plane (u in the unit disk) this converges fast.
        let u = z / (z - 1.0);
        if u.norm() <= 0.92 {
            let inner = series_eval(&[a, c - b], &[c], u, ctl, false)?;
            let pref = cpow(CNum::new(1.0, 0.0) - z, -a)?;
            return Ok(HyperEval::new(
                pref * inner.value,
                pref.norm() * inner.abs_err + EPS * (pref * inner.value).norm() * 4.0,
                inner.strategy,
            ));
        }
        // Remaining off-cut region hugs the cut; fall through to the family
        // continuation if the parameters allow it, with the principal side.
        return f2f1_family(a, b, c, z, side, ctl);
    }
    if matches!(side, Side::Auto) {
        return Err(Error::BranchCut(format!(
            "2F1 argument z = {z} lies on the cut [1, ∞); specify a side"
        )));
    }
    f2f1_family(a, b, c, z, side, ctl)
}

/// Continuation for the family `2F1(1, β; β+1; w) = β · G_β(w)` where
/// `G_β(w) = Σ_{k≥0} w^k/(β+k)`.
fn f2f1_family(
    a: CNum,
    b: CNum,
    c: CNum,
    z: CNum,
    side: Side,
    ctl: &SeriesControl,
) -> Result<HyperEval> {
    let one = CNum::new(1.0, 0.0);
    let beta = if (a - one).norm() < 1e-12 && (c - b - one).norm() < 1e-12 {
        b
    } else if (b - one).norm() < 1e-12 && (c - a - one).norm() < 1e-12 {
        a
    } else {
        return Err(Error::Regime(format!(
            "2F1 continuation on/near the cut is implemented for the family \
             (1, β; β+1; ·) only; got a = {a}, b = {b}, c = {c}, z = {z}"
        )));
    };
    let g = g_series_continued(beta, z, side, ctl)?;
    Ok(HyperEval::new(beta * g.value, beta.norm() * g.abs_err, g.strategy))
}

/// `G_β(w) = Σ_{k≥0} w^k/(β+k)`, continued to all of ℂ minus the point
/// `w = 1`, with side-resolved values on the cut `[1, ∞)`.
///
/// Uses the shift `G_β = Σ_{j<M} w^j/(β+j) + w^M G_{β+M}` to reach
/// `Re β > 1/4`, then the integral form
///
/// `G_α(w) = w^{−α} ( −Log(1−w) + ∫₀^w (t^{α−1} − 1)/(1−t) dt )`,
///
/// where the integrand is analytic at `t = 1` and the path is the straight
/// ray `t = w u^m`, `u ∈ [0,1]`, which keeps `arg t` constant so that all
/// principal powers along the path agree with `plog(w)`.
fn g_series_continued(beta: CNum, w: CNum, side: Side, ctl: &SeriesControl) -> Result<HyperEval> {
    if w.norm() == 0.0 {
        if special::is_nonpositive_integer(beta) {
            return Err(err_pole_params("β", beta));
        }
        return Ok(HyperEval::new(1.0 / beta, EPS, Strategy::DirectSeries));
    }
    // Inside the disk the series itself is fine.
    if w.norm() <= 0.8 {
        let f = series_eval(&[CNum::new(1.0, 0.0), beta], &[beta + 1.0], w, ctl, false)?;
        return Ok(HyperEval::new(f.value / beta, f.abs_err / beta.norm(), f.strategy));
    }
    // Shift β until Re β > 1/4 so the integral converges comfortably at u=0.
    let mut shift = 0usize;
    while (beta + shift as f64).re <= 0.25 {
        shift += 1;
        if shift > 64 {
            return Err(Error::Regime(format!(
                "G_β continuation: β = {beta} requires too large a shift"
            )));
        }
    }
    let mut head = CSum::new();
    let mut wp = CNum::new(1.0, 0.0);
    for j in 0..shift {
        let den = beta + j as f64;
        if den.norm() < 1e-14 {
            return Err(err_pole_params("β", beta));
        }
        head.add(wp / den);
        wp *= w;
    }
    let alpha = beta + shift as f64;
    let lw = plog(w)?;
    // Path power m: ensures the integrand vanishes like u^{m·Reα − 1} at 0.
    let m = ((3.0 / alpha.re).ceil() as i32).clamp(1, 16);
    let mf = f64::from(m);
    let am1 = alpha - 1.0;
    let integrand = |u: f64| -> Result<CNum> {
        if u <= 0.0 {
            return Ok(CNum::new(0.0, 0.0));
        }
        let lu = u.ln();
        let t = w * u.powi(m);
        let om = CNum::new(1.0, 0.0) - t;
        if om.norm() == 0.0 {
            // Removable point: h(1) = 1 − α.
            return Ok((CNum::new(1.0, 0.0) - alpha) * w * mf * u.powi(m - 1));
        }
        if om.norm() < 1e-3 {
            // (t^{α−1} − 1)/(1−t) via expm1/ln1p stabilization.
            let lt = ln1p_c(-om);
            let h = expm1_c(am1 * lt) / om;
            return Ok(h * w * mf * u.powi(m - 1));
        }
        // Split form avoiding overflow of t^{α−1} at small u:
        //   g = w m [ exp((α−1)·Log w + (mα − 1)·ln u) − u^{m−1} ] / (1 − t)
        let p1 = (am1 * lw + (alpha * mf - 1.0) * lu).exp();
        let p2 = CNum::new(u.powi(m - 1), 0.0);
        Ok(w * mf * (p1 - p2) / om)
    };
    let (integral, qerr) = cgl_adaptive(&integrand, 0.0, 1.0, 1e-13, 0)?;
    // −Log(1−w), resolved by side when w sits on the cut.
    let log_term = if w.im == 0.0 && w.re >= 1.0 {
        let lr = (w.re - 1.0).ln();
        match side {
            Side::Below => -CNum::new(lr, PI),
            Side::Above => -CNum::new(lr, -PI),
            Side::Auto => {
                return Err(Error::BranchCut(format!(
                    "G_β argument w = {w} on the cut [1, ∞); specify a side"
                )))
            }
        }
    } else {
        -plog(CNum::new(1.0, 0.0) - w)?
    };
    let g_alpha = cpow(w, -alpha)? * (log_term + integral);
    let wshift = w.powi(shift as i32);
    let value = head.value() + wshift * g_alpha;
    let abs_err = (wshift * cpow(w, -alpha)?).norm() * (qerr + 1e-13)
        + EPS * (head.value().norm() + (wshift * g_alpha).norm()) * 8.0;
    Ok(HyperEval::new(value, abs_err, Strategy::IntegralRoute))
}

/// ln(1 + x) for complex x, accurate for small |x|.
fn ln1p_c(x: CNum) -> CNum {
    if x.norm() < 0.25 {
        // ln(1+x) = x − x²/2 + x³/3 − …
        let mut pw = x;
        let mut sum = pw;
        for k in 2..48 {
            pw *= -x;
            let add = pw / k as f64;
            sum += add;
            if add.norm() < 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        sum
    } else {
        (CNum::new(1.0, 0.0) + x).ln()
    }
}

/// e^x − 1 for complex x, accurate for small |x|.
fn expm1_c(x: CNum) -> CNum {
    if x.norm() < 0.25 {
        let mut term = x;
        let mut sum = term;
        for k in 2..48 {
            term *= x / k as f64;
            sum += term;
            if term.norm() < 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        sum
    } else {
        x.exp() - 1.0
    }
}

/// Adaptive 15-point Gauss–Legendre for a complex-valued closure.
fn cgl_adaptive(
    f: &dyn Fn(f64) -> Result<CNum>,
    lo: f64,
    hi: f64,
    tol: f64,
    depth: usize,
) -> Result<(CNum, f64)> {
    let coarse = cgl_panel(f, lo, hi)?;
    let mid = 0.5 * (lo + hi);
    let left = cgl_panel(f, lo, mid)?;
    let right = cgl_panel(f, mid, hi)?;
    let fine = left + right;
    let err = (fine - coarse).norm();
    let scale = fine.norm().max(1.0);
    if err <= tol * scale || depth >= 24 || (hi - lo) < 8.0 * EPS {
        return Ok((fine, 0.25 * err + EPS * fine.norm()));
    }
    let (vl, el) = cgl_adaptive(f, lo, mid, tol, depth + 1)?;
    let (vr, er) = cgl_adaptive(f, mid, hi, tol, depth + 1)?;
    Ok((vl + vr, el + er))
}

fn cgl_panel(f: &dyn Fn(f64) -> Result<CNum>, lo: f64, hi: f64) -> Result<CNum> {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut acc = CSum::new();
    for &(x, wgt) in crate::quadrature::gl_nodes().iter() {
        acc.add(f(c + h * x)? * wgt);
    }
    Ok(acc.value() * h)
}

/// Exact index-shift recurrence for `M(−s; 1−s; w)`:
///
/// `M(−s; 1−s; w) = −e^w Σ_{m=1}^{n} (s)_m w^{−m} + (s)_n w^{−n} M(−(s+n); 1−(s+n); w)`.
///
/// Requires `w ≠ 0` and `s, s+n ∉ ℕ` (denominator parameters stay off the
/// poles). The shifted function is evaluated through [`f1f1`].
pub fn f1f1_shift(s: CNum, w: CNum, n: usize, ctl: &SeriesControl) -> Result<HyperEval> {
    if w.norm() == 0.0 {
        return Err(Error::Domain("1F1 shift recurrence needs w ≠ 0".into()));
    }
    if n == 0 || n > 200 {
        return Err(Error::Domain(format!("1F1 shift order n = {n} out of range 1..=200")));
    }
    let nf = n as f64;
    if special::is_integer(s) && s.re >= 1.0 - 1e-9 {
        return Err(Error::pole(s, "1F1 shift: s is a positive integer (parameter pole)"));
    }
    if special::is_integer(s) && (s.re + nf) >= 1.0 - 1e-9 && s.re < 1.0 {
        return Err(Error::pole(s + nf, "1F1 shift: s + n is a positive integer (parameter pole)"));
    }
    if w.re > 700.0 {
        return Err(Error::Overflow(format!("e^w overflows for Re w = {}", w.re)));
    }
    let ew = w.exp();
    let mut t = s / w;
    let mut head = CSum::new();
    let mut head_abs = 0.0f64;
    for m in 1..=n {
        head.add(t);
        head_abs += t.norm();
        if m < n {
            t = t * (s + m as f64) / w;
        }
    }
    let poch_n = t; // after the loop, t = (s)_n / w^n
    let sn = s + nf;
    let shifted = f1f1(-sn, CNum::new(1.0, 0.0) - sn, w, ctl)?;
    let value = -ew * head.value() + poch_n * shifted.value;
    let abs_err = poch_n.norm() * shifted.abs_err
        + ew.norm() * (EPS * head_abs * 4.0)
        + EPS * value.norm() * 4.0;
    Ok(HyperEval::new(value, abs_err, Strategy::RecurrenceShifted))
}

/// Result of the telescoped Gauss recurrence [`f2f1_shift`]: the shifted
/// representation of `T = (ad/(1−s)) · 2F1(1, 1−s; 2−s; −ad/q) / q` together
/// with the certified remainder bound that was checked.
#[derive(Debug, Clone, Copy)]
pub struct ShiftedGauss {
    /// Value of `T` reconstructed from the shifted representation.
    pub value: CNum,
    /// Combined numerical error estimate.
    pub abs_err: f64,
    /// `|(ad/q)^n · 2F1(n, −s+n; 1−s+n; −ad/q)|` — the actual remainder size.
    pub remainder: f64,
    /// The certified bound `|(s−n)/(Re s − n)| · |ad/q|^n (1−ε)^{−n}`, when
    /// its hypotheses (`|ad/q| < 1`, `n > Re s`) hold.
    pub remainder_bound: Option<f64>,
}

/// Telescoped index-shift recurrence for the Gauss family
/// `T = (ad/(1−s)) · 2F1(1, 1−s; 2−s; −ad/q) / q`:
///
/// `T = Σ_{m=1}^{n−1} (ad)^m (m−1)! / ((1−s)_m (ad+q)^m)
///      + (ad)^n 2F1(n, −s+n; 1−s+n; −ad/q) / ((1−s)_n q^n)`.
///
/// When `|ad/q| < 1` and `n > Re s` the remainder is certified against
/// `|(s−n)/(Re s−n)| · |ad/q|^n (1−ε)^{−n}` with `ε = |ad/q|`; a violation
/// is reported as `Error::BoundViolation`.
pub fn f2f1_shift(
    s: CNum,
    ad: CNum,
    q: CNum,
    n: usize,
    ctl: &SeriesControl,
) -> Result<ShiftedGauss> {
    if q.norm() == 0.0 || (ad + q).norm() == 0.0 {
        return Err(Error::Domain("2F1 shift recurrence needs q ≠ 0 and ad + q ≠ 0".into()));
    }
    if n == 0 || n > 200 {
        return Err(Error::Domain(format!("2F1 shift order n = {n} out of range 1..=200")));
    }
    let nf = n as f64;
    if special::is_integer(s) && s.re >= 1.0 - 1e-9 && s.re <= nf + 1e-9 {
        return Err(Error::pole(s, "2F1 shift: (1−s)_n vanishes for integer s in 1..=n"));
    }
    // Partial sum Σ_{m=1}^{n−1} (ad)^m (m−1)! / ((1−s)_m (ad+q)^m).
    let one = CNum::new(1.0, 0.0);
    let denom = ad + q;
    let mut partial = CSum::new();
    let mut partial_abs = 0.0f64;
    let mut t = ad / ((one - s) * denom);
    for m in 1..n {
        partial.add(t);
        partial_abs += t.norm();
        t = t * (ad * m as f64) / ((one - s + m as f64) * denom);
    }
    // Remainder term (ad)^n 2F1(n, −s+n; 1−s+n; −ad/q) / ((1−s)_n q^n).
    let arg = -ad / q;
    let fshift = f2f1(CNum::new(nf, 0.0), -s + nf, one - s + nf, arg, ctl)?;
    let poch = special::pochhammer(one - s, n)?;
    let ratio = ad / q;
    let ratio_n = ratio.powi(n as i32);
    let remainder_term = ratio_n * fshift.value / poch;
    let value = partial.value() + remainder_term;
    let remainder = (ratio_n * fshift.value).norm();
    let mut remainder_bound = None;
    if ratio.norm() < 1.0 - 1e-12 && nf > s.re {
        let eps = ratio.norm();
        let bound = ((s - nf).norm() / (nf - s.re)) * ratio.norm().powi(n as i32)
            / (1.0 - eps).powi(n as i32);
        if remainder > bound * (1.0 + 1e-8) + 1e-300 {
            return Err(Error::BoundViolation(format!(
                "2F1 shift remainder {remainder:.6e} exceeds certified bound {bound:.6e} \
                 at n = {n}, |ad/q| = {:.6}",
                ratio.norm()
            )));
        }
        remainder_bound = Some(bound);
    }
    let abs_err =
        ratio_n.norm() / poch.norm() * fshift.abs_err + EPS * (partial_abs + value.norm()) * 8.0;
    Ok(ShiftedGauss { value, abs_err, remainder, remainder_bound })
}

/// Two-branch principal power used by the Kummer connection identity:
/// `z^s` for `z ∉ [−1, 0]`, and the conjugate-branch value
/// `conj(conj(z)^conj(s))` for real `z ∈ (−1, 0)` (the limit from below).
pub fn pow_branch(z: CNum, s: CNum) -> Result<CNum> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("pow_branch at z = 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 && z.re > -1.0 {
        return Ok(cpow(z.conj(), s.conj())?.conj());
    }
    cpow(z, s)
}

/// One residual from [`hyper_identity_suite`].
#[derive(Debug, Clone)]
pub struct IdentityResidual {
    pub name: String,
    pub residual: f64,
}

/// Self-check suite of three internal hypergeometric identities:
///
///  1. reflection `M(−s; 1−s; iy) = e^{iy} M(1; 1−s; −iy)`;
///  2. the sine-kernel moment expressed two ways — as a pair of `1F2`
///     values with upper parameters `(1−s)/2` and `−s/2`, and as the
///     equivalent phase-shifted pair with upper parameter 1;
///  3. the Euler-transform limit
///     `(a/(1−s)) 2F1(1, 1−s; 2−s; −a) = (a/((1−s)(1+a))) 2F1(1, 1; 2−s; a/(1+a))`.
///
/// Returns the relative residual for every grid point.
pub fn hyper_identity_suite(ctl: &SeriesControl) -> Result<Vec<IdentityResidual>> {
    let mut out = Vec::new();
    let one = CNum::new(1.0, 0.0);

    // (1) Kummer reflection.
    for &(sr, si, a) in &[
        (0.7f64, 0.0f64, 0.35f64),
        (-0.8, 0.0, 0.2),
        (1.3, 0.4, 0.45),
        (-0.25, -0.6, 0.3),
    ] {
        let s = CNum::new(sr, si);
        let y = CNum::new(0.0, 2.0 * PI * a);
        let lhs = f1f1(-s, one - s, y, ctl)?.value;
        let rhs = y.exp() * f1f1(one, one - s, -y, ctl)?.value;
        let den = lhs.norm().max(1.0);
        out.push(IdentityResidual {
            name: format!("kummer-reflection s={sr}{si:+}i a={a}"),
            residual: (lhs - rhs).norm() / den,
        });
    }

    // (2) Sine-kernel moment: two equivalent 1F2 decompositions.
    for &(sr, a, b, c, d, k) in &[
        (-0.8f64, 0.6f64, 0.2f64, 0.0f64, 1.0f64, 2u32),
        (-0.3, 0.25, 0.1, 0.15, 1.5, 1),
        (-1.4, 0.4, 0.0, 0.3, 0.8, 3),
    ] {
        let s = CNum::new(sr, 0.0);
        let kf = f64::from(k);
        let z = CNum::new(-(PI * a * d * kf).powi(2), 0.0);
        let phase_in = 2.0 * PI * (b * kf + c);
        // Route A: cosine/sine moment pair.
        let t1 = CNum::new(
            (2.0 * PI * a * d.powf(1.0 - sr) * phase_in.cos()) / (sr - 1.0),
            0.0,
        ) * f1f2(
            (one - s) / 2.0,
            CNum::new(1.5, 0.0),
            (CNum::new(3.0, 0.0) - s) / 2.0,
            z,
            ctl,
        )?
        .value;
        let t2 = CNum::new(phase_in.sin() / (sr * d.powf(sr) * kf), 0.0)
            * f1f2(-s / 2.0, CNum::new(0.5, 0.0), one - s / 2.0, z, ctl)?.value;
        let lhs = t1 + t2;
        // Route B: phase-shifted pair with upper parameter 1.
        let phase_out = 2.0 * PI * (a * d * kf + b * kf + c);
        let u1 = CNum::new(phase_out.sin() / (sr * d.powf(sr)), 0.0)
            * f1f2(one, (one - s) / 2.0, one - s / 2.0, z, ctl)?.value;
        let u2 = CNum::new(
            2.0 * PI * a * d.powf(1.0 - sr) * kf * phase_out.cos() / (sr * (1.0 - sr)),
            0.0,
        ) * f1f2(one, one - s / 2.0, (CNum::new(3.0, 0.0) - s) / 2.0, z, ctl)?.value;
        let rhs = (u1 - u2) / kf;
        let den = lhs.norm().max(1.0);
        out.push(IdentityResidual {
            name: format!("sine-moment-pair s={sr} a={a} b={b} c={c} d={d} k={k}"),
            residual: (lhs - rhs).norm() / den,
        });
    }

    // (3) Euler-transform limit for the Gauss family.
    for &(sr, av) in &[(0.25f64, 3.0f64), (-1.2, 0.5), (0.6, -0.3), (-0.4, 7.0)] {
        let s = CNum::new(sr, 0.0);
        let a = CNum::new(av, 0.0);
        let lhs = a / (one - s) * f2f1(one, one - s, CNum::new(2.0, 0.0) - s, -a, ctl)?.value;
        let u = a / (one + a);
        let rhs = a / ((one - s) * (one + a))
            * f2f1(one, one, CNum::new(2.0, 0.0) - s, u, ctl)?.value;
        let den = lhs.norm().max(1.0);
        out.push(IdentityResidual {
            name: format!("euler-transform s={sr} a={av}"),
            residual: (lhs - rhs).norm() / den,
        });
    }

    Ok(out)
}

/// Kummer connection identity residual, with the cut powers resolved by the
/// stated two-branch rule (both Gauss arguments approached from below):
///
/// `z/(1−s) · 2F1(1, 1−s; 2−s; −z) + 1/s · 2F1(1, s; 1+s; −1/z)
///     = (π / sin πs) · P(z, s)`,
///
/// where `P(z,s) = z^s` for `z ∉ [−1, 0]` and the conjugate-branch power for
/// real `z ∈ (−1, 0)`.
pub fn kummer_check(s: CNum, z: CNum, ctl: &SeriesControl) -> Result<f64> {
    if special::is_integer(s) {
        return Err(Error::pole(s, "Kummer connection: sin(πs) vanishes at integer s"));
    }
    if z.norm() == 0.0 || (z + CNum::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::Domain("Kummer connection: z must avoid 0 and −1".into()));
    }
    let one = CNum::new(1.0, 0.0);
    let t1 = z / (one - s)
        * f2f1_side(one, one - s, CNum::new(2.0, 0.0) - s, -z, Side::Below, ctl)?.value;
    let t2 = f2f1_side(one, s, one + s, -one / z, Side::Below, ctl)?.value / s;
    let lhs = t1 + t2;
    let sin_pis = (PI * s).sin();
    let rhs = CNum::new(PI, 0.0) / sin_pis * pow_branch(z, s)?;
    Ok((lhs - rhs).norm() / rhs.norm().max(1.0))
}
