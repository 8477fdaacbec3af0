//! Exact-rational univariate polynomials and Sturm's root-counting procedure.
//! Everything here is exact integer/rational arithmetic: the verdicts carry no
//! rounding error at all.

use astro_float::{BigFloat, Sign};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Polynomial with exact rational coefficients, ascending degree, no trailing
/// zero coefficient (except the zero polynomial, stored as an empty list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl RationalPolynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    /// Convenience constructor from (numerator, denominator) pairs, ascending.
    pub fn from_i64(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| big(Rational64::new(n, d)))
                .collect(),
        )
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&n| big(Rational64::from(n))).collect())
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

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval evaluation by Horner's scheme (for enclosure cross-checks).
    pub fn eval_interval(&self, x: &Interval, prec: usize) -> Result<Interval> {
        let mut acc = Interval::zero(prec);
        for c in self.coeffs.iter().rev() {
            let ci = rational_to_interval(c, prec)?;
            acc = acc.mul(x).add(&ci);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        Self::new(coeffs)
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Remainder of self / divisor under exact polynomial division.
    fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero());
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        let lead = &divisor.coeffs[d];
        while r.len() > d {
            let k = r.len() - 1;
            let factor = &r[k] / lead;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    r[idx] = &r[idx] - &factor * c;
                }
            }
            r.pop();
        }
        Self::new(r)
    }

    /// Exact synthetic division by (X − r); caller guarantees p(r) = 0.
    fn deflate(&self, r: &BigRational) -> Self {
        debug_assert!(self.eval(r).is_zero());
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::new(vec![]);
        }
        let mut q = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (0..n - 1).rev() {
            carry = &self.coeffs[i + 1] + r * &carry;
            q[i] = carry.clone();
        }
        Self::new(q)
    }

    /// Exact product of two polynomials.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    /// Exact difference self − rhs.
    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] = a.clone();
        }
        for (i, b) in rhs.coeffs.iter().enumerate() {
            out[i] = &out[i] - b;
        }
        Self::new(out)
    }

    /// Divides out the largest power of X, returning (reduced, power).
    pub fn strip_root_at_zero(&self) -> (Self, usize) {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        (Self::new(self.coeffs[k..].to_vec()), k)
    }
}

pub fn rational_to_interval(r: &BigRational, prec: usize) -> Result<Interval> {
    let num = Interval::from_int_str(&r.numer().to_string(), prec)?;
    let den = Interval::from_int_str(&r.denom().to_string(), prec)?;
    num.div(&den)
}

/// The canonical Sturm chain p₀ = p, p₁ = p′, p_{i+1} = −rem(p_{i−1}, p_i).
fn sturm_chain(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let next = chain[n - 2].rem(&chain[n - 1]).neg();
        if next.is_zero() {
            return chain;
        }
        chain.push(next);
    }
}

fn sign_variations(chain: &[RationalPolynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None; // sign of previous nonzero value
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Exact count of distinct real roots of `p` in the open interval (a, b).
///
/// Endpoint roots are removed by exact deflation first — dividing out (X − a)
/// or (X − b) only deletes roots the open interval excludes anyway, so the
/// count is unaffected.
pub fn sturm_count(p: &RationalPolynomial, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Argument("sturm_count of the zero polynomial".into()));
    }
    if a >= b {
        return Err(Error::Argument("sturm_count requires a < b".into()));
    }
    let mut q = p.clone();
    for r in [a, b] {
        while !q.is_zero() && q.eval(r).is_zero() {
            q = q.deflate(r);
        }
    }
    if q.degree() == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    // V(a) − V(b) counts distinct roots in (a, b] when neither endpoint is a
    // root; b is not one after deflation, so this is the open-interval count
    Ok(sign_variations(&chain, a) - sign_variations(&chain, b))
}

/// Pass iff `p` has no root in (a, b) and is positive at the midpoint.
pub fn sturm_positive(p: &RationalPolynomial, a: &BigRational, b: &BigRational) -> Result<bool> {
    let roots = sturm_count(p, a, b)?;
    if roots != 0 {
        return Ok(false);
    }
    let mid = (a + b) / BigRational::from(BigInt::from(2));
    Ok(p.eval(&mid).is_positive())
}

pub fn rat_big(n: i64, d: i64) -> BigRational {
    big(Rational64::new(n, d))
}

/// Exact rational value of a finite binary float (every finite `BigFloat`
/// is a dyadic rational, so no rounding is involved).
pub fn bigfloat_to_rational(x: &BigFloat) -> Result<BigRational> {
    if x.is_zero() {
        return Ok(BigRational::zero());
    }
    let (words, _bits, sign, exp, _inexact) = x
        .as_raw_parts()
        .ok_or_else(|| Error::Domain(format!("non-finite float {x:?} has no rational value")))?;
    let mut m = BigInt::zero();
    for w in words.iter().rev() {
        m = (m << 64) | BigInt::from(*w);
    }
    if sign == Sign::Neg {
        m = -m;
    }
    // value = m · 2^(exp − 64·len) with the mantissa read as a fraction
    let shift = 64 * words.len() as i64 - exp as i64;
    let value = if shift >= 0 {
        BigRational::new(m, BigInt::one() << shift as usize)
    } else {
        BigRational::from(m << (-shift) as usize)
    };
    Ok(value)
}

/// A bound M ≥ 1 with every real root of `p` inside (−M, M) (Cauchy's bound).
pub fn cauchy_root_bound(p: &RationalPolynomial) -> Result<BigRational> {
    if p.is_zero() {
        return Err(Error::Argument("root bound of the zero polynomial".into()));
    }
    let lead = p.coeffs.last().unwrap().abs();
    let mut worst = BigRational::zero();
    for c in &p.coeffs[..p.coeffs.len() - 1] {
        let ratio = c.abs() / &lead;
        if ratio > worst {
            worst = ratio;
        }
    }
    Ok(worst + BigRational::one())
}

/// Pass iff `p` is positive on the whole ray (a, ∞): no roots between a and
/// the Cauchy bound (hence none beyond it), and a positive sample value.
pub fn positive_on_ray(p: &RationalPolynomial, a: &BigRational) -> Result<bool> {
    if p.is_zero() || p.degree() == 0 {
        return Ok(!p.is_zero() && p.coeffs[0].is_positive());
    }
    let m = cauchy_root_bound(p)?;
    let b = if &m > a {
        m + BigRational::one()
    } else {
        a + BigRational::one()
    };
    if sturm_count(p, a, &b)? != 0 {
        return Ok(false);
    }
    Ok(p.eval(&b).is_positive())
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*X"),
                _ => format!("{c}*X^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_root_counts() {
        // X² − 1/4: roots ±1/2
        let p = RationalPolynomial::from_i64(&[(-1, 4), (0, 1), (1, 1)]);
        assert_eq!(sturm_count(&p, &rat_big(0, 1), &rat_big(1, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &rat_big(-1, 1), &rat_big(1, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &rat_big(3, 5), &rat_big(1, 1)).unwrap(), 0);
    }

    #[test]
    fn endpoint_root_is_open_interval() {
        // (X − 1/2)(X − 1): count on (1/2, 1) must be 0 (both roots are endpoints)
        let p = RationalPolynomial::from_i64(&[(1, 2), (-3, 2), (1, 1)]);
        assert_eq!(sturm_count(&p, &rat_big(1, 2), &rat_big(1, 1)).unwrap(), 0);
        assert_eq!(sturm_count(&p, &rat_big(0, 1), &rat_big(2, 1)).unwrap(), 2);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (X − 1/3)² has one distinct root
        let p = RationalPolynomial::from_i64(&[(1, 9), (-2, 3), (1, 1)]);
        assert_eq!(sturm_count(&p, &rat_big(0, 1), &rat_big(1, 1)).unwrap(), 1);
    }

    #[test]
    fn paper_quadratic_676() {
        // 676X² + 676X − 331 has no roots in (0.4, 1)
        let p = RationalPolynomial::from_ints(&[-331, 676, 676]);
        assert_eq!(sturm_count(&p, &rat_big(2, 5), &rat_big(1, 1)).unwrap(), 0);
        assert!(sturm_positive(&p, &rat_big(2, 5), &rat_big(1, 1)).unwrap());
        // its positive root 0.36014… lies just below 0.4
        assert_eq!(sturm_count(&p, &rat_big(0, 1), &rat_big(2, 5)).unwrap(), 1);
    }

    #[test]
    fn degree_six_positive() {
        // 2X⁶ + 18X⁴ − 6X² + 2 > 0 on (0, 1)
        let p = RationalPolynomial::from_ints(&[2, 0, -6, 0, 18, 0, 2]);
        assert_eq!(sturm_count(&p, &rat_big(0, 1), &rat_big(1, 1)).unwrap(), 0);
        assert!(sturm_positive(&p, &rat_big(0, 1), &rat_big(1, 1)).unwrap());
    }

    #[test]
    fn negative_constant_fails_positive() {
        let p = RationalPolynomial::from_ints(&[-1]);
        assert!(!sturm_positive(&p, &rat_big(0, 1), &rat_big(1, 1)).unwrap());
    }

    #[test]
    fn strip_zero_root() {
        // X²(X − 1)
        let p = RationalPolynomial::from_ints(&[0, 0, -1, 1]);
        let (q, k) = p.strip_root_at_zero();
        assert_eq!(k, 2);
        assert_eq!(q, RationalPolynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn product_and_difference() {
        let a = RationalPolynomial::from_ints(&[1, 1]); // X + 1
        let b = RationalPolynomial::from_ints(&[-1, 1]); // X − 1
        assert_eq!(a.mul(&b), RationalPolynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(
            a.sub(&b),
            RationalPolynomial::from_ints(&[2]),
            "(X+1) − (X−1) = 2"
        );
    }

    #[test]
    fn float_to_rational_is_exact() {
        let half = Interval::from_ratio(1, 2, 128).unwrap();
        assert_eq!(bigfloat_to_rational(half.lo()).unwrap(), rat_big(1, 2));
        let x = Interval::from_ratio(-7, 4, 128).unwrap();
        assert_eq!(bigfloat_to_rational(x.hi()).unwrap(), rat_big(-7, 4));
        assert_eq!(
            bigfloat_to_rational(Interval::zero(128).lo()).unwrap(),
            rat_big(0, 1)
        );
        // π's endpoints convert to rationals that straddle π
        let pi = Interval::pi(128);
        let lo = bigfloat_to_rational(pi.lo()).unwrap();
        let hi = bigfloat_to_rational(pi.hi()).unwrap();
        assert!(lo < hi);
        assert!(lo > rat_big(314159, 100000) && hi < rat_big(314160, 100000));
    }

    #[test]
    fn ray_positivity() {
        // n² + 5n − 2: positive root (−5+√33)/2 ≈ 0.372, so positive on (1, ∞)
        let p = RationalPolynomial::from_ints(&[-2, 5, 1]);
        assert!(positive_on_ray(&p, &rat_big(1, 1)).unwrap());
        assert!(!positive_on_ray(&p, &rat_big(0, 1)).unwrap());
        // X² − 4 has a root at 2 > 1
        let q = RationalPolynomial::from_ints(&[-4, 0, 1]);
        assert!(!positive_on_ray(&q, &rat_big(1, 1)).unwrap());
        assert!(positive_on_ray(&q, &rat_big(5, 2)).unwrap());
        // negative leading coefficient can never pass
        let r = RationalPolynomial::from_ints(&[0, 0, -1]);
        assert!(!positive_on_ray(&r, &rat_big(1, 1)).unwrap());
    }

    #[test]
    fn interval_eval_contains_exact() {
        let p = RationalPolynomial::from_ints(&[-331, 676, 676]);
        let x = rat_big(3, 7);
        let exact = p.eval(&x);
        let ix = Interval::from_ratio(3, 7, 128).unwrap();
        let enc = p.eval_interval(&ix, 128).unwrap();
        let exact_iv = rational_to_interval(&exact, 128).unwrap();
        assert!(enc.intersect(&exact_iv).is_some());
    }
}
