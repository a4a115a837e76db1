//! Compensated double-double arithmetic for series summation.
//!
//! Direct power series of the entire hypergeometric functions at argument
//! magnitudes `y ≳ 20` cancel catastrophically in f64: the partial sums reach
//! `~e^y` while the result stays `O(1)`, so plain accumulation loses
//! `y/ln 10` digits. Carrying both the term recurrence and the accumulator
//! in double-double (~31 significant digits) pushes the usable range to
//! `y ≈ 60`, past the point where the large-argument asymptotics take over.
//!
//! Only the handful of operations the series kernels need are implemented:
//! error-free transforms (`two_sum`, `two_prod` via FMA), the accurate
//! double-double add/mul/div, and a complex wrapper.

use crate::branchc::CNum;

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // Requires |a| ≥ |b| (or a = 0).
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::from(q2)));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from(q3))
    }
}

/// Complex double-double value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    #[inline]
    pub fn from_c(z: CNum) -> CDd {
        CDd { re: Dd::from(z.re), im: Dd::from(z.im) }
    }

    #[inline]
    pub fn from_f(x: f64) -> CDd {
        CDd { re: Dd::from(x), im: Dd::ZERO }
    }

    #[inline]
    pub fn to_c(self) -> CNum {
        CNum::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: CDd) -> CDd {
        CDd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn div(self, o: CDd) -> CDd {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(CDd { re: o.re, im: o.im.neg() });
        CDd { re: num.re.div(den), im: num.im.div(den) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_add_tracks_low_bits() {
        let a = Dd::from(1.0);
        let b = Dd::from(1e-20);
        let c = a.add(b);
        assert_eq!(c.hi, 1.0);
        assert_eq!(c.lo, 1e-20);
        let d = c.sub(a);
        assert_eq!(d.to_f64(), 1e-20);
    }

    #[test]
    fn dd_mul_div_roundtrip() {
        let a = Dd::from(std::f64::consts::PI);
        let b = Dd::from(std::f64::consts::E);
        let p = a.mul(b);
        let q = p.div(b);
        assert!((q.hi - a.hi).abs() < 1e-30);
        assert!((q.to_f64() - a.to_f64()).abs() < 1e-16);
    }

    #[test]
    fn cdd_complex_ops() {
        let z = CDd::from_c(CNum::new(0.3, -0.7));
        let w = CDd::from_c(CNum::new(-1.2, 0.5));
        let p = z.mul(w).div(w);
        let d = p.to_c() - CNum::new(0.3, -0.7);
        assert!(d.norm() < 1e-30, "residual {}", d.norm());
    }

    /// The motivating case: Σ (−y²/4)^k/((1/2)_k k!) = cos y at y = 40 keeps
    /// ~15 digits in double-double although the partial sums reach e^40.
    #[test]
    fn dd_defeats_alternating_cancellation() {
        let y: f64 = 40.0;
        let z = Dd::from(-y * y / 4.0);
        let mut term = Dd::from(1.0);
        let mut sum = term;
        for k in 0..200 {
            let kf = k as f64;
            term = term.mul(z).div(Dd::from((0.5 + kf) * (kf + 1.0)));
            sum = sum.add(term);
            if term.hi.abs() < 1e-40 {
                break;
            }
        }
        let exact = y.cos();
        assert!(
            (sum.to_f64() - exact).abs() < 1e-14,
            "got {}, want {exact}",
            sum.to_f64()
        );
    }
}
