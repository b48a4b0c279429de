//! Interval arithmetic in two flavors.
//!
//! [`RatInterval`] is exact rational interval arithmetic, used to evaluate
//! polynomials on root enclosures. [`FInterval`] is outward-rounded f64
//! interval arithmetic used as a fast certified filter in enumeration hot
//! paths; whenever an `FInterval` straddles zero the caller falls back to
//! the exact route.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, s: &BigRational) -> RatInterval {
        if s.is_negative() {
            RatInterval { lo: &self.hi * s, hi: &self.lo * s }
        } else {
            RatInterval { lo: &self.lo * s, hi: &self.hi * s }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: Some(1) / Some(-1) when the interval is strictly
    /// one-signed, None when it straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Outward-rounded f64 enclosure. `BigRational::to_f64` is accurate to
    /// a couple of ulps; widening by 4 ulps keeps the enclosure sound.
    pub fn to_f64(&self) -> FInterval {
        let lo = self.lo.to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        FInterval { lo: steps_down(lo, 4), hi: steps_up(hi, 4) }
    }
}

fn steps_down(x: f64, n: u32) -> f64 {
    let mut v = x;
    for _ in 0..n {
        v = v.next_down();
    }
    v
}

fn steps_up(x: f64, n: u32) -> f64 {
    let mut v = x;
    for _ in 0..n {
        v = v.next_up();
    }
    v
}

/// Outward-rounded floating interval.
#[derive(Debug, Copy, Clone, PartialEq)]
pub struct FInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FInterval {
    pub fn point(x: f64) -> Self {
        FInterval { lo: x, hi: x }
    }

    pub fn zero() -> Self {
        FInterval { lo: 0.0, hi: 0.0 }
    }

    fn widen(self) -> Self {
        FInterval { lo: self.lo.next_down(), hi: self.hi.next_up() }
    }

    pub fn add(self, o: FInterval) -> FInterval {
        FInterval { lo: self.lo + o.lo, hi: self.hi + o.hi }.widen()
    }

    pub fn sub(self, o: FInterval) -> FInterval {
        FInterval { lo: self.lo - o.hi, hi: self.hi - o.lo }.widen()
    }

    pub fn mul(self, o: FInterval) -> FInterval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let mut lo = c[0];
        let mut hi = c[0];
        for v in &c[1..] {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        FInterval { lo, hi }.widen()
    }

    pub fn scale_i64(self, s: i64) -> FInterval {
        let s = s as f64; // exact for |s| < 2^53
        if s >= 0.0 {
            FInterval { lo: self.lo * s, hi: self.hi * s }.widen()
        } else {
            FInterval { lo: self.hi * s, hi: self.lo * s }.widen()
        }
    }

    pub fn sign(self) -> Option<i8> {
        if self.lo > 0.0 {
            Some(1)
        } else if self.hi < 0.0 {
            Some(-1)
        } else {
            None
        }
    }

    pub fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_mul_signs() {
        let a = RatInterval::new(rat(-1, 2), rat(1, 3));
        let b = RatInterval::new(rat(-2, 1), rat(5, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-5, 2));
        assert_eq!(p.hi, rat(5, 3));
    }

    #[test]
    fn f64_outward_contains_truth() {
        let x = FInterval::point(0.1);
        let y = FInterval::point(0.2);
        let s = x.add(y);
        assert!(s.lo <= 0.1 + 0.2 && 0.1 + 0.2 <= s.hi);
        assert!(s.lo < s.hi);
    }

    #[test]
    fn sign_detection() {
        assert_eq!(FInterval { lo: 1e-300, hi: 2.0 }.sign(), Some(1));
        assert_eq!(FInterval { lo: -2.0, hi: -1e-300 }.sign(), Some(-1));
        assert_eq!(FInterval { lo: -1.0, hi: 1.0 }.sign(), None);
    }
}
