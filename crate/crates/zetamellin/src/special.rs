//! Classical special functions: Γ, ψ, Hurwitz ζ, polylogarithm and
//! Lerch-type sums.
//!
//! Two independent evaluation routes exist for the Hurwitz zeta function
//!
//! ```text
//! ζ(s, x) = Σ_{k≥0} (k + x)^{−s},        Re s > 1,
//! ```
//!
//! * [`hurwitz_series`] — direct summation with an integral tail
//!   correction, valid only in the convergent half-plane `Re s > 1`;
//! * [`hurwitz_em`] — Euler–Maclaurin summation with Bernoulli corrections,
//!   which continues `ζ(s, x)` across the plane (up to the pole at `s = 1`)
//!   and serves as the independent oracle for every continuation identity
//!   verified elsewhere in the crate.
//!
//! The Lerch-type sum is taken literally as
//!
//! ```text
//! Φ_s(z, x) = Σ_{k≥1} z^k/(k + x)^s,     |z| ≤ 1,
//! ```
//!
//! and the polylogarithm is the standard `Li_s(z) = Σ_{k≥1} z^k k^{−s}
//! = Φ_s(z, 0)`. On the unit circle with `0 < Re s ≤ 1` the conditionally
//! convergent sum is evaluated by an Euler-transformed tail (summation by
//! parts in accelerated form), with the argument-doubling identity
//! `Φ_s(z, x) = 2^{1−s} Φ_s(z², x/2) − Φ_s(−z, x)` applied first whenever
//! `z` is too close to `1` for the transform to contract.

use crate::branchc::{cpow, ensure_finite, plog, CNum};
use crate::error::{Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Bernoulli numbers `B₂, B₄, …, B₂₄` as exact rational literals.
///
/// The Euler–Maclaurin remainder after the `B₂ⱼ` term decays like
/// `(N+x)^{−Re s−2j−1}`, so carrying the table through `B₂₄` keeps the
/// continuation usable down to `Re s > −20` with a comfortable margin.
pub(crate) const BERNOULLI_2J: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// `B₂₆/26!`, the leading constant of the first neglected Euler–Maclaurin
/// term (used for error estimation only).
const B26_OVER_26FACT: f64 = (8553103.0 / 6.0) / 4.032914611266056e26;

/// Outcome of a series or integral evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    /// Computed value.
    pub value: CNum,
    /// Absolute-error estimate (truncation plus rounding model).
    pub abs_err: f64,
    /// Series terms consumed or integrand evaluations performed.
    pub terms: usize,
    /// Whether `abs_err` met the requested tolerance (relative for values
    /// above 1 in magnitude, absolute below).
    pub converged: bool,
}

impl EvalResult {
    pub(crate) fn new(value: CNum, abs_err: f64, terms: usize, tol: f64) -> Self {
        EvalResult {
            value,
            abs_err,
            terms,
            converged: abs_err <= tol * value.norm().max(1.0),
        }
    }

    pub(crate) fn exact(value: CNum) -> Self {
        EvalResult {
            value,
            abs_err: f64::EPSILON * value.norm(),
            terms: 1,
            converged: true,
        }
    }
}

/// Stopping policy for series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Relative tolerance for the truncation error.
    pub tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Number of consecutive below-tolerance terms required before a series
    /// is allowed to stop (guards against premature stops at zero crossings
    /// of the term sequence).
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            tol: 1e-12,
            max_terms: 1_000_000,
            consecutive_small: 3,
        }
    }
}

/// Neumaier-compensated accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CSum {
    sre: f64,
    cre: f64,
    sim: f64,
    cim: f64,
}

impl CSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: CNum) {
        let t = self.sre + z.re;
        self.cre += if self.sre.abs() >= z.re.abs() {
            (self.sre - t) + z.re
        } else {
            (z.re - t) + self.sre
        };
        self.sre = t;
        let t = self.sim + z.im;
        self.cim += if self.sim.abs() >= z.im.abs() {
            (self.sim - t) + z.im
        } else {
            (z.im - t) + self.sim
        };
        self.sim = t;
    }

    pub fn value(&self) -> CNum {
        CNum::new(self.sre + self.cre, self.sim + self.cim)
    }
}

pub(crate) fn is_nonpositive_integer(z: CNum) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.floor() == z.re
}

pub(crate) fn is_integer(z: CNum) -> bool {
    z.im == 0.0 && z.re.floor() == z.re
}

// ---------------------------------------------------------------------------
// Gamma and digamma
// ---------------------------------------------------------------------------

/// Lanczos coefficients for `g = 7`, `n = 9` (≈ 1e−13 relative accuracy on
/// the right half-plane).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Complex gamma function Γ(z) (Lanczos approximation, reflection formula
/// for `Re z < 1/2`).
///
/// # Errors
///
/// Poles at the nonpositive integers are reported with their location.
pub fn gamma(z: CNum) -> Result<EvalResult> {
    let value = gamma_c(z)?;
    Ok(EvalResult {
        value,
        abs_err: 3e-13 * value.norm(),
        terms: LANCZOS.len(),
        converged: true,
    })
}

/// Bare-value gamma used internally.
pub(crate) fn gamma_c(z: CNum) -> Result<CNum> {
    if is_nonpositive_integer(z) {
        return Err(Error::pole(z, "Γ"));
    }
    if z.re < 0.5 {
        // Reflection: Γ(z) Γ(1−z) = π/sin(πz).
        let s = (std::f64::consts::PI * z).sin();
        let g = gamma_c(CNum::new(1.0, 0.0) - z)?;
        return ensure_finite(std::f64::consts::PI / (s * g), "gamma");
    }
    let zz = z - 1.0;
    let mut acc = CNum::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zz + i as f64);
    }
    let t = zz + LANCZOS_G + 0.5;
    let v = (2.0 * std::f64::consts::PI).sqrt() * cpow(t, zz + 0.5)? * (-t).exp() * acc;
    ensure_finite(v, "gamma")
}

/// `log Γ(z)` via Stirling's series after shifting `Re z ≥ 10`.
///
/// The imaginary part is only determined modulo 2πi across shifts; the
/// function is therefore crate-private and consumed exclusively through
/// exponentiated differences (Pochhammer ratios), where the ambiguity
/// cancels.
pub(crate) fn log_gamma(z: CNum) -> Result<CNum> {
    if is_nonpositive_integer(z) {
        return Err(Error::pole(z, "log Γ"));
    }
    let mut shift = CNum::new(0.0, 0.0);
    let mut w = z;
    while w.re < 10.0 {
        shift += plog(w)?;
        w += 1.0;
    }
    let lw = plog(w)?;
    let mut s = (w - 0.5) * lw - w + 0.5 * (2.0 * std::f64::consts::PI).ln();
    let w2 = w * w;
    let mut wp = w;
    for (j, &b) in BERNOULLI_2J.iter().enumerate() {
        let tj = 2.0 * (j as f64 + 1.0);
        s += b / (tj * (tj - 1.0)) / wp;
        wp *= w2;
    }
    Ok(s - shift)
}

/// Pochhammer symbol `(x)_n = x(x+1)⋯(x+n−1)`.
///
/// Direct product for `n ≤ 64`; gamma-ratio route (via exponentiated
/// log-gamma differences, which is branch-safe) for larger `n`.
pub fn pochhammer(x: CNum, n: usize) -> Result<CNum> {
    if n == 0 {
        return Ok(CNum::new(1.0, 0.0));
    }
    if n <= 64 {
        let mut p = x;
        for j in 1..n {
            p *= x + j as f64;
        }
        return ensure_finite(p, "pochhammer");
    }
    if x.im == 0.0 && x.re <= 0.0 && x.re.floor() == x.re && (-x.re) < n as f64 {
        // A factor x + j vanishes for j = −x < n.
        return Ok(CNum::new(0.0, 0.0));
    }
    let d = log_gamma(x + n as f64)? - log_gamma(x)?;
    if d.re > 709.0 {
        return Err(Error::Overflow(format!("({x})_{n} overflows f64")));
    }
    ensure_finite(d.exp(), "pochhammer")
}

/// `cot(πz)`, stable for large `|Im z|` (where it tends to `∓i`).
///
/// # Errors
///
/// Poles at real integers.
pub fn cot_pi(z: CNum) -> Result<CNum> {
    if is_integer(z) {
        return Err(Error::pole(z, "cot(πz)"));
    }
    let w = std::f64::consts::PI * z;
    let v = if w.im.abs() < 20.0 {
        w.cos() / w.sin()
    } else if w.im > 0.0 {
        let r = (CNum::new(0.0, 2.0) * w).exp();
        CNum::new(0.0, 1.0) * (r + 1.0) / (r - 1.0)
    } else {
        let r = (CNum::new(0.0, -2.0) * w).exp();
        CNum::new(0.0, 1.0) * (1.0 + r) / (1.0 - r)
    };
    ensure_finite(v, "cot_pi")
}

/// Digamma function ψ(z) (asymptotic series after recurrence shift,
/// reflection for `Re z < 1/2`).
///
/// # Errors
///
/// Poles at the nonpositive integers.
pub fn digamma(z: CNum) -> Result<EvalResult> {
    let value = digamma_c(z)?;
    Ok(EvalResult {
        value,
        abs_err: 1e-12 * value.norm().max(1.0),
        terms: BERNOULLI_2J.len(),
        converged: true,
    })
}

pub(crate) fn digamma_c(z: CNum) -> Result<CNum> {
    if is_nonpositive_integer(z) {
        return Err(Error::pole(z, "ψ"));
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1−z) − π cot(πz).
        let v = digamma_c(CNum::new(1.0, 0.0) - z)? - std::f64::consts::PI * cot_pi(z)?;
        return ensure_finite(v, "digamma");
    }
    let mut acc = CNum::new(0.0, 0.0);
    let mut w = z;
    while w.re < 12.0 {
        acc += w.inv();
        w += 1.0;
    }
    let mut s = plog(w)? - (2.0 * w).inv();
    let w2 = w * w;
    let mut wp = w2;
    for (j, &b) in BERNOULLI_2J.iter().enumerate() {
        s -= b / (2.0 * (j as f64 + 1.0)) / wp;
        wp *= w2;
    }
    ensure_finite(s - acc, "digamma")
}

// ---------------------------------------------------------------------------
// Hurwitz zeta
// ---------------------------------------------------------------------------

/// Shared direct-summation core: `Σ_{k≥0}(k+x)^{−s}` for `Re s > 1`, with
/// the integral tail correction
/// `(N+x)^{1−s}/(s−1) + (N+x)^{−s}/2` and the first-order error model
/// `|s|(N+Re x)^{−Re s−1}/6`.
fn hurwitz_direct(s: CNum, x: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    let sigma = s.re;
    // Terms needed so the post-correction error |s|(N+x)^{−σ−1}/6 ≤ tol.
    let target = ctl.tol.max(1e-15);
    let n_est = (s.norm() / (6.0 * target)).powf(1.0 / (sigma + 1.0));
    let n = (n_est.ceil() as usize).clamp(24, ctl.max_terms);
    let mut sum = CSum::default();
    for k in 0..n {
        sum.add(cpow(x + k as f64, -s)?);
    }
    let edge = x + n as f64;
    let tail = cpow(edge, 1.0 - s)? / (s - 1.0) + cpow(edge, -s)? / 2.0;
    let value = sum.value() + tail;
    let abs_err = s.norm() * (n as f64 + x.re).powf(-sigma - 1.0) / 6.0
        + f64::EPSILON * value.norm();
    Ok(EvalResult::new(value, abs_err, n, ctl.tol))
}

/// Hurwitz zeta by direct summation, `Re s > 1` only.
///
/// # Errors
///
/// `Re s ≤ 1` is a domain error (this routine is deliberately restricted to
/// the convergent half-plane; use [`hurwitz_em`] elsewhere), as is
/// `x ∈ ℤ_{≤0}`.
pub fn hurwitz_series(s: CNum, x: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!(
            "hurwitz_series requires Re s > 1 (got {}); use hurwitz_em",
            s.re
        )));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("ζ(s, x) undefined at x = {x}")));
    }
    hurwitz_direct(s, x, ctl)
}

/// Hurwitz zeta by Euler–Maclaurin summation: the independent continuation
/// oracle, valid for `Re s > −20`, `x > 0`, `s ≠ 1`.
///
/// ```text
/// ζ(s,x) = Σ_{k<N}(k+x)^{−s} + (N+x)^{1−s}/(s−1) + (N+x)^{−s}/2
///          + Σ_{j=1}^{12} B₂ⱼ/(2j)! · (s)₂ⱼ₋₁ · (N+x)^{−s−2j+1}
/// ```
///
/// with `N ≥ 10 + |s|` grown until the first neglected term is negligible.
pub fn hurwitz_em(s: CNum, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("hurwitz_em requires x > 0, got {x}")));
    }
    hurwitz_em_cx(s, CNum::new(x, 0.0))
}

/// [`hurwitz_em`] generalized to complex offset `x` with `Re x > 0` (the
/// summation path `x, x+1, …` must stay clear of the non-positive axis for
/// the Euler–Maclaurin remainder model to hold).
pub fn hurwitz_em_cx(s: CNum, x: CNum) -> Result<EvalResult> {
    if !(x.re > 0.0) {
        return Err(Error::Domain(format!("hurwitz_em_cx requires Re x > 0, got {x}")));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::pole(s, "ζ(s, x)"));
    }
    if s.re <= -20.0 {
        return Err(Error::Regime(format!(
            "hurwitz_em carries Bernoulli corrections for Re s > −20 only (got {})",
            s.re
        )));
    }
    let tol: f64 = 1e-14;
    // First-neglected-term magnitude: B₂₆/26! · |(s)₂₅| · |N+x|^{−Re s−25}.
    let ln_poch25: f64 = (0..25).map(|j| (s + j as f64).norm().max(1e-300).ln()).sum();
    let ln_c = B26_OVER_26FACT.ln() + ln_poch25;
    let mut n = (10.0 + s.norm()).ceil().max(16.0) as usize;
    while ln_c + (-s.re - 25.0) * ((n as f64) + x).norm().ln() > tol.ln() && n < 200_000 {
        n = n * 3 / 2;
    }
    let mut sum = CSum::default();
    for k in 0..n {
        sum.add(cpow(x + k as f64, -s)?);
    }
    let edge = x + n as f64;
    let mut value = sum.value() + cpow(edge, 1.0 - s)? / (s - 1.0) + cpow(edge, -s)? / 2.0;
    // Bernoulli corrections: running (s)_{2j−1} and (N+x)^{−s−2j+1}.
    let inv_e2 = (edge * edge).inv();
    let mut poch = s;
    let mut pw = cpow(edge, -s - 1.0)?;
    let mut fact = 2.0; // (2j)!
    for (j, &b) in BERNOULLI_2J.iter().enumerate() {
        if j > 0 {
            let m = 2.0 * j as f64;
            poch *= (s + (m - 1.0)) * (s + m);
            pw *= inv_e2;
            fact *= (m + 1.0) * (m + 2.0);
        }
        value += b / fact * poch * pw;
    }
    let abs_err = 2.0 * (ln_c + (-s.re - 25.0) * ((n as f64) + x).norm().ln()).exp()
        + 4.0 * f64::EPSILON * value.norm();
    ensure_finite(value, "hurwitz_em")?;
    Ok(EvalResult::new(value, abs_err, n, 1e-12))
}

/// Riemann zeta `ζ(s) = ζ(s, 1)` through the Euler–Maclaurin oracle.
pub fn zeta(s: CNum) -> Result<EvalResult> {
    hurwitz_em(s, 1.0)
}

// ---------------------------------------------------------------------------
// Lerch-type sums and polylogarithm
// ---------------------------------------------------------------------------

/// Lerch-type sum `Φ_s(z, x) = Σ_{k≥1} z^k/(k+x)^s`.
///
/// * `|z| < 1`: direct summation with a geometric tail bound;
/// * `z = 1`: requires `Re s > 1`, evaluates as `ζ(s, 1+x)`;
/// * `|z| = 1`, `z ≠ 1`: requires `Re s > 0`; the conditionally convergent
///   sum is evaluated by an Euler-transformed tail, after argument doubling
///   whenever `z` lies too close to `1` for the transform to contract.
///
/// # Errors
///
/// `|z| > 1`, divergent unit-circle regimes, and `x ∈ ℤ_{≤−1}` are domain
/// errors.
pub fn lerch_phi(s: CNum, z: CNum, x: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    if x.im == 0.0 && x.re <= -1.0 && x.re.floor() == x.re {
        return Err(Error::Domain(format!("Φ_s(z, x) undefined at x = {x}")));
    }
    let r = z.norm();
    if r == 0.0 {
        return Ok(EvalResult::exact(CNum::new(0.0, 0.0)));
    }
    if r > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("Φ_s requires |z| ≤ 1, got |z| = {r}")));
    }
    if r < 1.0 - 1e-12 {
        return lerch_interior(s, z, x, ctl);
    }
    // Unit circle.
    if (z - 1.0).norm() <= 1e-12 {
        if s.re <= 1.0 {
            return Err(Error::Domain(
                "Φ_s(1, x) diverges for Re s ≤ 1".into(),
            ));
        }
        return hurwitz_direct(s, x + 1.0, ctl);
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "unit-circle Φ_s requires Re s > 0, got Re s = {}",
            s.re
        )));
    }
    lerch_circle(s, z, x, ctl, 0)
}

/// Standard polylogarithm `Li_s(z) = Σ_{k≥1} z^k k^{−s} = Φ_s(z, 0)`.
pub fn polylog(s: CNum, z: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    lerch_phi(s, z, CNum::new(0.0, 0.0), ctl)
}

/// Direct summation for `|z| < 1`.
fn lerch_interior(s: CNum, z: CNum, x: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    let r = z.norm();
    let mut sum = CSum::default();
    let mut zp = CNum::new(1.0, 0.0);
    let mut small = 0usize;
    let mut k = 0usize;
    let mut tail = f64::INFINITY;
    while k < ctl.max_terms {
        k += 1;
        zp *= z;
        let term = zp * cpow(x + k as f64, -s)?;
        sum.add(term);
        // Ratio of consecutive term magnitudes (the power factor can grow
        // for Re s < 0, so fold it into the geometric bound).
        let grow = (1.0 + 1.0 / (k as f64 + x.re.max(0.0))).powf((-s.re).max(0.0));
        let ratio = r * grow;
        if ratio < 1.0 {
            tail = term.norm() * ratio / (1.0 - ratio);
            let scale = sum.value().norm().max(1.0);
            if tail <= ctl.tol * scale {
                small += 1;
                if small >= ctl.consecutive_small {
                    break;
                }
            } else {
                small = 0;
            }
        }
    }
    let value = sum.value();
    let abs_err = tail + f64::EPSILON * value.norm();
    if k >= ctl.max_terms {
        return Err(Error::NoConvergence { terms: k, abs_err });
    }
    Ok(EvalResult::new(value, abs_err, k, ctl.tol))
}

/// Unit-circle evaluation via partial sum + Euler-transformed tail, with
/// argument doubling for `z` near `1`:
/// `Φ_s(z, x) = 2^{1−s} Φ_s(z², x/2) − Φ_s(−z, x)`.
fn lerch_circle(
    s: CNum,
    z: CNum,
    x: CNum,
    ctl: &SeriesControl,
    depth: usize,
) -> Result<EvalResult> {
    // High orders: the defining series is absolutely convergent with a
    // near-geometric step ratio (1 + 1/(k+x))^{−Re s}, while the Euler
    // transform below fights growing difference terms for j ≲ Re s.  Sum
    // directly with an integral tail bound.
    if s.re >= 8.0 && x.re > -0.5 {
        let sig = s.re;
        let cushion = (s.im.abs() * std::f64::consts::FRAC_PI_2).exp();
        let mut sum = CSum::default();
        let mut zp = CNum::new(1.0, 0.0);
        let mut scale = 0.0f64;
        for k in 1..=400_000usize {
            zp *= z;
            let term = zp * cpow(x + k as f64, -s)?;
            sum.add(term);
            scale = scale.max(term.norm());
            // |Σ_{j>k} z^j (x+j)^{−s}| ≤ e^{|Im s|π/2} ∫_k^∞ (x+t)^{−Re s} dt.
            let bound = cushion * (x.re + k as f64).powf(1.0 - sig) / (sig - 1.0);
            if bound <= 0.25 * ctl.tol * scale.max(sum.value().norm()) {
                let value = sum.value();
                return Ok(EvalResult::new(
                    value,
                    bound + f64::EPSILON * value.norm(),
                    k,
                    ctl.tol,
                ));
            }
        }
        return Err(Error::NoConvergence { terms: 400_000, abs_err: f64::INFINITY });
    }
    let theta = crate::branchc::frac_re(z.arg() / (2.0 * std::f64::consts::PI));
    if (0.2..=0.8).contains(&theta) {
        return lerch_circle_base(s, z, x, ctl);
    }
    if depth >= 14 {
        return Err(Error::NoConvergence { terms: 0, abs_err: f64::INFINITY });
    }
    // Keep the doubled point exactly on the circle.
    let z2 = CNum::from_polar(1.0, 2.0 * std::f64::consts::PI * crate::branchc::frac_re(2.0 * theta));
    let half = lerch_circle(s, z2, x / 2.0, ctl, depth + 1)?;
    let alt = lerch_circle(s, -z, x, ctl, depth + 1)?;
    let w = cpow(CNum::new(2.0, 0.0), 1.0 - s)?;
    let value = w * half.value - alt.value;
    let abs_err = w.norm() * half.abs_err + alt.abs_err + f64::EPSILON * value.norm();
    Ok(EvalResult::new(
        value,
        abs_err,
        half.terms + alt.terms,
        ctl.tol,
    ))
}

/// Euler-transformed tail for `arg z/2π ∈ [0.2, 0.8]`, where the transform
/// ratio `|z/(1−z)| ≤ 1/(2 sin 0.2π) ≈ 0.851` contracts.
fn lerch_circle_base(s: CNum, z: CNum, x: CNum, ctl: &SeriesControl) -> Result<EvalResult> {
    let f = z / (CNum::new(1.0, 0.0) - z);
    let rho = f.norm();
    let mut m = 48usize;
    let jmax = 72usize;
    for _attempt in 0..5 {
        // Partial sum k = 1 .. M−1.
        let mut head = CSum::default();
        let mut zp = CNum::new(1.0, 0.0);
        for k in 1..m {
            zp *= z;
            head.add(zp * cpow(x + k as f64, -s)?);
        }
        // Forward differences of g(k) = (k+x)^{−s} at k = M.
        let mut g: Vec<CNum> = Vec::with_capacity(jmax + 1);
        for i in 0..=jmax {
            g.push(cpow(x + (m + i) as f64, -s)?);
        }
        let g_scale = g[0].norm();
        // Tail = z^M/(1−z) · Σ_j f^j (Δ^j g)(M), Δ forward difference.
        let mut acc = CSum::default();
        let mut fj = CNum::new(1.0, 0.0);
        let mut small = 0usize;
        let mut last = f64::INFINITY;
        let mut converged = false;
        let mut used = 0usize;
        for j in 0..=jmax {
            let contrib = fj * g[0];
            acc.add(contrib);
            used = j;
            last = contrib.norm();
            if last <= 0.25 * ctl.tol * acc.value().norm().max(g_scale) {
                small += 1;
                if small >= ctl.consecutive_small {
                    converged = true;
                    break;
                }
            } else {
                small = 0;
            }
            // Next difference level (in place, consuming the head).
            for i in 0..(jmax - j) {
                g[i] = g[i + 1] - g[i];
            }
            fj *= f;
        }
        let zm = CNum::from_polar(1.0, (m as f64) * z.arg());
        let tail = zm / (CNum::new(1.0, 0.0) - z) * acc.value();
        let value = head.value() + tail;
        // Rounding floor of the difference table: ε·g(M) amplified by Σρ^j.
        let noise = f64::EPSILON * g_scale / (1.0 - rho.min(0.9));
        let abs_err = last / (1.0 - rho.min(0.9)) + noise + f64::EPSILON * value.norm();
        if converged {
            return Ok(EvalResult::new(value, abs_err, m + used, ctl.tol));
        }
        m *= 2;
        if m + jmax > ctl.max_terms {
            return Err(Error::NoConvergence { terms: m, abs_err });
        }
    }
    Err(Error::NoConvergence { terms: m, abs_err: f64::INFINITY })
}
