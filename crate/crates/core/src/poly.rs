//! Dense univariate polynomials over the rationals: arithmetic, resultants,
//! Sturm sequences, and certified real root isolation/refinement.
//!
//! Everything here is exact; floating point never enters a sign decision.

use crate::interval::RatInterval;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq)]
pub struct QPoly {
    /// Coefficients, constant term first; no trailing zeros.
    coeffs: Vec<BigRational>,
}

pub fn br(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn from_int_coeffs_ascending(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&x| br(x)).collect())
    }

    /// Parse from highest-degree-first integer coefficients, the CLI input
    /// convention ("1,0,-4,-1" is x^3 - 4x - 1).
    pub fn from_int_coeffs_descending(c: &[i64]) -> Self {
        let mut v: Vec<BigRational> = c.iter().map(|&x| br(x)).collect();
        v.reverse();
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RatInterval::point(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * br(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            v[i] += c;
        }
        QPoly::new(v)
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            v[i] -= c;
        }
        QPoly::new(v)
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }

    pub fn scale(&self, s: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: self = q*div + r with deg r < deg div.
    pub fn divrem(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dn = div.coeffs.len();
        if rem.len() < dn {
            return (QPoly::zero(), QPoly::new(rem));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dn + 1];
        let lead = div.coeffs.last().unwrap().clone();
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dn - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= t;
            }
            quot[i] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, div: &QPoly) -> QPoly {
        self.divrem(div).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().recip();
            a.scale(&inv)
        }
    }

    /// Resultant of self and o, via the Euclidean remainder sequence.
    pub fn resultant(&self, o: &QPoly) -> BigRational {
        fn go(a: &QPoly, b: &QPoly) -> BigRational {
            if b.is_zero() {
                return if a.degree() == 0 && !a.is_zero() {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
            }
            if b.degree() == 0 {
                let mut p = BigRational::one();
                for _ in 0..a.degree() {
                    p *= b.leading();
                }
                return p;
            }
            let r = a.rem(b);
            if r.is_zero() {
                return BigRational::zero();
            }
            let mut lead_pow = BigRational::one();
            for _ in 0..(a.degree() - r.degree()) {
                lead_pow *= b.leading();
            }
            let sign = if (a.degree() * b.degree()) % 2 == 1 {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            sign * lead_pow * go(b, &r)
        }
        go(self, o)
    }

    /// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).
    pub fn discriminant(&self) -> BigRational {
        let n = self.degree();
        let res = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        sign * res / self.leading()
    }

    /// Cauchy root bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let a = (c / &lead).abs();
            if a > m {
                m = a;
            }
        }
        m + BigRational::one()
    }
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[k - 1].degree() == 0 {
            break;
        }
        let r = chain[k - 2].rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(QPoly::new(r.coeffs.iter().map(|c| -c).collect()));
    }
    chain
}

fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots of a squarefree p in the open interval
/// (lo, hi), provided p(lo) != 0 != p(hi).
fn count_roots(chain: &[QPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// Isolating intervals for all real roots of a squarefree polynomial,
/// ascending, with non-root endpoints and exactly one root each.
pub fn isolate_real_roots(p: &QPoly) -> Vec<RatInterval> {
    assert!(p.degree() >= 1);
    let chain = sturm_chain(p);
    let bound = p.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    // endpoints of the Cauchy bound are never roots
    let total = count_roots(&chain, &lo, &hi);
    let mut done = Vec::new();
    let mut work = vec![(lo, hi, total)];
    while let Some((a, b, k)) = work.pop() {
        if k == 0 {
            continue;
        }
        if k == 1 {
            done.push(RatInterval::new(a, b));
            continue;
        }
        // pick a split point that is not a root
        let two = br(2);
        let mut mid = (&a + &b) / &two;
        let width = &b - &a;
        let mut offset = &width / br(64);
        while p.eval(&mid).is_zero() {
            mid = &mid + &offset;
            offset = &offset / &two;
        }
        let kl = count_roots(&chain, &a, &mid);
        work.push((a, mid.clone(), kl));
        work.push((mid, b, k - kl));
    }
    done.sort_by(|x, y| x.lo.cmp(&y.lo));
    done
}

/// Shrink an isolating interval of a squarefree polynomial by bisection
/// until its width is at most `width`. The sign of p changes across the
/// interval (simple root), which bisection preserves.
pub fn refine_root(p: &QPoly, iv: &RatInterval, width: &BigRational) -> RatInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = p.eval(&lo).is_positive();
    debug_assert!(!p.eval(&lo).is_zero() && !p.eval(&hi).is_zero());
    let two = br(2);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            // exact rational root; pin an artificially tight interval
            let eps = width / br(4);
            lo = &mid - &eps;
            hi = &mid + &eps;
            break;
        }
        if v.is_positive() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// All rational roots of an integer-coefficient monic-or-not polynomial.
pub fn rational_roots(p: &QPoly) -> Vec<BigRational> {
    // clear denominators first
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let a0 = ints.iter().find(|c| !c.is_zero());
    let a0 = match a0 {
        Some(v) => v.clone(),
        None => return vec![],
    };
    let lead = ints.last().unwrap().clone();
    let mut out = Vec::new();
    for p_div in divisors(&a0) {
        for q_div in divisors(&lead) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&p_div * BigInt::from(sign), q_div.clone());
                if p.eval(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if let Some(small) = n.to_u64() {
        let mut out = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d != small / d {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        out
    } else {
        // only used for constant terms of input polynomials; huge values
        // would make the rational-root test useless anyway
        vec![BigInt::one(), n]
    }
}

static SMALL_PRIMES: OnceLock<Vec<u64>> = OnceLock::new();

fn small_primes() -> &'static [u64] {
    SMALL_PRIMES.get_or_init(|| {
        let limit = 2_100_000usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut p = 2usize;
        while p * p <= limit {
            if sieve[p] {
                let mut q = p * p;
                while q <= limit {
                    sieve[q] = false;
                    q += p;
                }
            }
            p += 1;
        }
        (2..=limit).filter(|&i| sieve[i]).map(|i| i as u64).collect()
    })
}

/// Exact squarefree test for |n| < 2^63 (trial division to 2.1e6 plus a
/// perfect-square check covers every factorization pattern since
/// (2.1e6)^3 > 2^63).
pub fn is_squarefree_i64(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    if m == 0 {
        return false;
    }
    for &p in small_primes() {
        if p * p > m {
            break;
        }
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
    }
    let r = m.isqrt();
    !(m > 1 && r * r == m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -4, -1]);
        let d = QPoly::from_int_coeffs_descending(&[1, 2]);
        let (q, r) = p.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
    }

    #[test]
    fn discriminants() {
        // x^3 - 4x - 1 -> -4*(-4)^3 - 27 = 229
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -4, -1]);
        assert_eq!(p.discriminant(), br(229));
        // x^2 - x - 4 -> 17
        let p = QPoly::from_int_coeffs_descending(&[1, -1, -4]);
        assert_eq!(p.discriminant(), br(17));
        // x^3 - x^2 - 2x + 1 -> 49
        let p = QPoly::from_int_coeffs_descending(&[1, -1, -2, 1]);
        assert_eq!(p.discriminant(), br(49));
    }

    #[test]
    fn isolate_and_refine_sqrt17() {
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -17]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let tol = BigRational::new(BigInt::from(1), BigInt::from(10_000_000_000i64));
        let r1 = refine_root(&p, &roots[1], &tol);
        let v = r1.mid().to_f64().unwrap();
        assert!((v - 17f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn cubic_has_three_real_roots() {
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -4, -1]);
        assert_eq!(isolate_real_roots(&p).len(), 3);
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree_i64(229));
        assert!(is_squarefree_i64(17));
        assert!(!is_squarefree_i64(49));
        assert!(!is_squarefree_i64(12));
        assert!(is_squarefree_i64(-6));
        // large prime squared, beyond the trial division bound
        let p = 2_100_017i64;
        assert!(!is_squarefree_i64(p * p));
    }

    #[test]
    fn rational_roots_of_reducible() {
        let p = QPoly::from_int_coeffs_descending(&[1, -3, 2]); // (x-1)(x-2)
        let mut r = rational_roots(&p);
        r.sort();
        assert_eq!(r, vec![br(1), br(2)]);
    }
}
