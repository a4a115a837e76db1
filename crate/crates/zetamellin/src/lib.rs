//! Branch-correct special functions and verified hypergeometric expansions
//! of Mellin-type integrals.
//!
//! The crate evaluates both sides of a family of identities expressing
//! incomplete Mellin transforms of the fractional part `1/2 − {ax + b}` and
//! of the log-sine `log(4 sin²(π(ax + b)))` through generalized
//! hypergeometric series (₀F₁, ₁F₁, ₁F₂, ₂F₁), Hurwitz zeta values and
//! polylogarithms, and certifies them numerically against an independent
//! adaptive-quadrature oracle.
//!
//! Module layout:
//!
//! * [`branchc`] — principal-branch complex kernel: log, power, fractional
//!   part, the two-valued sign, the log-sine factorization, and the
//!   `(d₊, d₋)` branch plan for tail integrals;
//! * [`special`] — Γ, ψ, Hurwitz ζ (direct series and an independent
//!   Euler–Maclaurin continuation), polylogarithm and Lerch-type sums;
//! * [`hyper`] — generalized hypergeometric evaluation with recurrence
//!   shifts, large-argument asymptotics and the Kummer connection check;
//! * [`quadrature`] — the adaptive double-exponential / oscillatory-tail
//!   integration oracle;
//! * [`blocks`] — the named building blocks `f_{s,k}`, `g_{s,k}`,
//!   `F_{s,k}`, the series side `I_s`, the closed-form sides `M`, `H`,
//!   `R`, the log-sine Mellin evaluations and the generalized log-sine
//!   closed forms;
//! * [`harness`] — verification suites, residual records and JSON/CSV
//!   report emission.

pub mod blocks;
pub mod branchc;
mod dd;
pub mod error;
pub mod harness;
pub mod hyper;
pub mod quadrature;
pub mod special;

pub use branchc::{BranchPlan, CNum};
pub use error::{Error, Result};
pub use special::{EvalResult, SeriesControl};
