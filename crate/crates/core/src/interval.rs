//! Rigorous interval arithmetic over arbitrary-precision floating point.
//!
//! Every operation rounds its lower endpoint toward −∞ and its upper endpoint
//! toward +∞, so the returned interval always contains the exact real result.
//! Transcendental results are additionally padded by one ulp on each side so
//! that correctness does not hinge on the last-bit rounding behaviour of the
//! underlying library.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};

use crate::error::{Error, Result};

/// Default significand precision in bits.
pub const DEFAULT_PREC: usize = 128;

/// Number of significand bits used for endpoint arithmetic.
///
/// The minimum is 53 bits (double precision); there is no practical upper
/// limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision(usize);

impl Precision {
    pub fn new(bits: usize) -> Result<Self> {
        if bits < 53 {
            return Err(Error::Argument(format!(
                "precision must be at least 53 bits, got {bits}"
            )));
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> usize {
        self.0
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_PREC)
    }
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Runs `f` with the thread-local constants cache of the underlying library.
pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

const DN: RoundingMode = RoundingMode::Down;
const UP: RoundingMode = RoundingMode::Up;

/// A closed interval `[lo, hi]` with outward-rounded endpoints.
#[derive(Debug, Clone)]
pub struct Interval {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

fn bf_cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b) {
        Some(v) if v < 0 => Ordering::Less,
        Some(v) if v > 0 => Ordering::Greater,
        Some(_) => Ordering::Equal,
        None => panic!("NaN in interval endpoint comparison"),
    }
}

fn bf_min(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_cmp(&a, &b) == Ordering::Greater {
        b
    } else {
        a
    }
}

fn bf_max(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_cmp(&a, &b) == Ordering::Less {
        b
    } else {
        a
    }
}

/// Sign of `x` as an ordering against zero. BigFloat's own `is_positive` is a
/// raw sign-flag test that reports +0 as positive, so it must not be used for
/// sign decisions.
fn bf_sign(x: &BigFloat) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// One unit in the last place of `x` at precision `p` (0 for x = 0).
fn ulp(x: &BigFloat, p: usize) -> BigFloat {
    if x.is_zero() {
        return BigFloat::from_i8(0, p);
    }
    let e = x.exponent().expect("finite value");
    let mut u = BigFloat::from_word(1, p);
    // from_word(1) represents 1 = 0.1₂ × 2¹; setting the exponent to
    // e − p + 1 turns it into 2^{e−p}, one ulp at precision p.
    u.set_exponent(e - p as astro_float::Exponent + 1);
    u
}

impl Interval {
    // ---------------------------------------------------------------- ctors

    fn assert_finite(self) -> Self {
        assert!(
            !self.lo.is_nan() && !self.hi.is_nan() && !self.lo.is_inf() && !self.hi.is_inf(),
            "non-finite interval endpoint"
        );
        debug_assert!(bf_cmp(&self.lo, &self.hi) != Ordering::Greater);
        self
    }

    /// Interval from already-exact endpoints. Caller guarantees `lo ≤ hi`.
    pub(crate) fn from_endpoints(lo: BigFloat, hi: BigFloat, prec: usize) -> Self {
        Interval { lo, hi, prec }.assert_finite()
    }

    pub fn exact_int(v: i64, prec: usize) -> Self {
        let x = BigFloat::from_i64(v, prec);
        Interval {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    pub fn zero(prec: usize) -> Self {
        Self::exact_int(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::exact_int(1, prec)
    }

    /// Enclosure of the rational `num/den`.
    pub fn from_ratio(num: i64, den: i64, prec: usize) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Self::exact_int(num, prec).div(&Self::exact_int(den, prec))
    }

    /// Enclosure of a (possibly huge) integer given in decimal.
    pub fn from_int_str(s: &str, prec: usize) -> Result<Self> {
        Self::from_dec_str(s, prec)
    }

    /// Enclosure of a decimal literal.
    pub fn from_dec_str(s: &str, prec: usize) -> Result<Self> {
        let (lo, hi) = with_consts(|cc| {
            (
                BigFloat::parse(s, Radix::Dec, prec, DN, cc),
                BigFloat::parse(s, Radix::Dec, prec, UP, cc),
            )
        });
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::Parse(format!("bad decimal literal {s:?}")));
        }
        Ok(Interval { lo, hi, prec }.assert_finite())
    }

    /// Enclosure of π.
    pub fn pi(prec: usize) -> Self {
        let (lo, hi) = with_consts(|cc| (cc.pi(prec, DN), cc.pi(prec, UP)));
        Interval { lo, hi, prec }.pad()
    }

    /// Enclosure of β₁ = log 2 / log(16/5), the sharp exponent.
    pub fn beta1(prec: usize) -> Self {
        let two = Self::exact_int(2, prec);
        let r = Self::from_ratio(16, 5, prec).unwrap();
        two.ln().unwrap().div(&r.ln().unwrap()).unwrap()
    }

    /// Enclosure of β₂ = ln 2 / (ln 288 − ln 130), the full-convexity
    /// threshold at n = 7.
    pub fn beta2(prec: usize) -> Self {
        let two = Self::exact_int(2, prec);
        let r = Self::from_ratio(288, 130, prec).unwrap();
        two.ln().unwrap().div(&r.ln().unwrap()).unwrap()
    }

    // ------------------------------------------------------------- accessors

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    /// The lower endpoint as a point interval.
    pub fn lo_interval(&self) -> Self {
        Self::from_endpoints(self.lo.clone(), self.lo.clone(), self.prec)
    }

    /// The upper endpoint as a point interval.
    pub fn hi_interval(&self) -> Self {
        Self::from_endpoints(self.hi.clone(), self.hi.clone(), self.prec)
    }

    pub fn width(&self) -> BigFloat {
        self.hi.sub(&self.lo, self.prec, UP)
    }

    /// Midpoint, rounded to working precision (not an enclosure).
    pub fn mid(&self) -> BigFloat {
        let s = self.lo.add(&self.hi, self.prec, RoundingMode::ToEven);
        let mut m = s;
        if !m.is_zero() {
            let e = m.exponent().unwrap();
            m.set_exponent(e - 1);
        }
        m
    }

    pub fn is_point(&self) -> bool {
        bf_cmp(&self.lo, &self.hi) == Ordering::Equal
    }

    // ------------------------------------------------------------ arithmetic

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        Interval {
            lo: self.lo.add(&rhs.lo, p, DN),
            hi: self.hi.add(&rhs.hi, p, UP),
            prec: p,
        }
        .assert_finite()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        Interval {
            lo: self.lo.sub(&rhs.hi, p, DN),
            hi: self.hi.sub(&rhs.lo, p, UP),
            prec: p,
        }
        .assert_finite()
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        let (a, b) = (&self.lo, &self.hi);
        let (c, d) = (&rhs.lo, &rhs.hi);
        // Sign-case dispatch: two multiplications in the common cases, the
        // full four-product hull only when both operands straddle zero.
        let a_neg = a.is_negative();
        let b_pos = !b.is_negative(); // b ≥ 0
        let c_neg = c.is_negative();
        let d_pos = !d.is_negative();
        let (lo, hi) = match (a_neg, b_pos, c_neg, d_pos) {
            // self ≥ 0
            (false, _, false, _) => (a.mul(c, p, DN), b.mul(d, p, UP)),
            (false, _, true, false) => (b.mul(c, p, DN), a.mul(d, p, UP)),
            (false, _, true, true) => (b.mul(c, p, DN), b.mul(d, p, UP)),
            // self ≤ 0 (a < 0, b ≤ 0)
            (true, false, false, _) => (a.mul(d, p, DN), b.mul(c, p, UP)),
            (true, false, true, false) => (b.mul(d, p, DN), a.mul(c, p, UP)),
            (true, false, true, true) => (a.mul(d, p, DN), a.mul(c, p, UP)),
            // self straddles 0
            (true, true, false, _) => (a.mul(d, p, DN), b.mul(d, p, UP)),
            (true, true, true, false) => (b.mul(c, p, DN), a.mul(c, p, UP)),
            (true, true, true, true) => (
                bf_min(a.mul(d, p, DN), b.mul(c, p, DN)),
                bf_max(a.mul(c, p, UP), b.mul(d, p, UP)),
            ),
        };
        Interval { lo, hi, prec: p }.assert_finite()
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.contains_zero() {
            return Err(Error::Domain(
                "division by an interval containing zero".into(),
            ));
        }
        let p = self.prec.max(rhs.prec);
        let (a, b) = (&self.lo, &self.hi);
        let (c, d) = (&rhs.lo, &rhs.hi);
        let rhs_pos = c.is_positive();
        let a_neg = a.is_negative();
        let b_pos = !b.is_negative();
        let (lo, hi) = if rhs_pos {
            match (a_neg, b_pos) {
                (false, _) => (a.div(d, p, DN), b.div(c, p, UP)),
                (true, false) => (a.div(c, p, DN), b.div(d, p, UP)),
                (true, true) => (a.div(c, p, DN), b.div(c, p, UP)),
            }
        } else {
            match (a_neg, b_pos) {
                (false, _) => (b.div(d, p, DN), a.div(c, p, UP)),
                (true, false) => (b.div(c, p, DN), a.div(d, p, UP)),
                (true, true) => (b.div(d, p, DN), a.div(d, p, UP)),
            }
        };
        Ok(Interval { lo, hi, prec: p }.assert_finite())
    }

    /// Integer power with correct handling of even exponents on intervals
    /// that straddle zero.
    pub fn powi(&self, n: u32) -> Self {
        let p = self.prec;
        match n {
            0 => Self::one(p),
            1 => self.clone(),
            _ => {
                let lo_pow = self.lo.powi(n as usize, p, DN);
                let hi_pow = self.hi.powi(n as usize, p, UP);
                if n % 2 == 1 || !self.lo.is_negative() {
                    // odd power, or even power of a nonnegative interval:
                    // monotone, endpoints map directly
                    Interval {
                        lo: lo_pow,
                        hi: hi_pow,
                        prec: p,
                    }
                    .assert_finite()
                } else if self.hi.is_negative() || self.hi.is_zero() {
                    Interval {
                        lo: self.hi.powi(n as usize, p, DN),
                        hi: self.lo.powi(n as usize, p, UP),
                        prec: p,
                    }
                    .assert_finite()
                } else {
                    // straddles zero: minimum is 0, maximum at the wider side
                    Interval {
                        lo: BigFloat::from_i8(0, p),
                        hi: bf_max(self.lo.powi(n as usize, p, UP), hi_pow),
                        prec: p,
                    }
                    .assert_finite()
                }
            }
        }
    }

    // --------------------------------------------------------- transcendental

    /// Pads both endpoints outward by one ulp.
    fn pad(mut self) -> Self {
        let u_lo = ulp(&self.lo, self.prec);
        let u_hi = ulp(&self.hi, self.prec);
        self.lo = self.lo.sub(&u_lo, self.prec, DN);
        self.hi = self.hi.add(&u_hi, self.prec, UP);
        self.assert_finite()
    }

    pub fn sqrt(&self) -> Result<Self> {
        if bf_sign(&self.lo) == Ordering::Less {
            return Err(Error::Domain("sqrt of a partially negative interval".into()));
        }
        let p = self.prec;
        Ok(Interval {
            lo: self.lo.sqrt(p, DN).max(&BigFloat::from_i8(0, p)),
            hi: self.hi.sqrt(p, UP),
            prec: p,
        }
        .pad())
    }

    pub fn ln(&self) -> Result<Self> {
        if bf_sign(&self.lo) != Ordering::Greater {
            return Err(Error::Domain("ln of a nonpositive interval".into()));
        }
        let p = self.prec;
        let (lo, hi) = with_consts(|cc| (self.lo.ln(p, DN, cc), self.hi.ln(p, UP, cc)));
        Ok(Interval { lo, hi, prec: p }.pad())
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let (lo, hi) = with_consts(|cc| (self.lo.exp(p, DN, cc), self.hi.exp(p, UP, cc)));
        Interval { lo, hi, prec: p }.pad()
    }

    /// `self^beta` for a strictly positive base, computed as `exp(beta · ln self)`.
    pub fn pow(&self, beta: &Self) -> Result<Self> {
        if bf_sign(&self.lo) != Ordering::Greater {
            return Err(Error::Domain("pow requires a strictly positive base".into()));
        }
        Ok(self.ln()?.mul(beta).exp())
    }

    pub fn sin(&self) -> Self {
        self.sin_cos_impl(true)
    }

    pub fn cos(&self) -> Self {
        self.sin_cos_impl(false)
    }

    fn sin_cos_impl(&self, is_sin: bool) -> Self {
        let p = self.prec;
        if self.is_point() && self.lo.is_zero() {
            // sin 0 = 0, cos 0 = 1, exactly
            return if is_sin { Self::zero(p) } else { Self::one(p) };
        }
        let f = |x: &BigFloat, rm: RoundingMode| {
            with_consts(|cc| if is_sin { x.sin(p, rm, cc) } else { x.cos(p, rm, cc) })
        };
        let v_lo = Interval {
            lo: f(&self.lo, DN),
            hi: f(&self.lo, UP),
            prec: p,
        }
        .pad();
        let v_hi = Interval {
            lo: f(&self.hi, DN),
            hi: f(&self.hi, UP),
            prec: p,
        }
        .pad();
        let mut lo = bf_min(v_lo.lo, v_hi.lo);
        let mut hi = bf_max(v_lo.hi, v_hi.hi);
        // Interior extrema: sin attains +1 at π/2 + 2πj and −1 at −π/2 + 2πj;
        // cos attains +1 at 2πj and −1 at π + 2πj. The argument interval
        // contains such a point iff (x − offset)/(2π) contains an integer.
        let two_pi = Self::pi(p).mul(&Self::exact_int(2, p));
        let offset_max = if is_sin {
            Self::pi(p).div(&Self::exact_int(2, p)).unwrap()
        } else {
            Self::zero(p)
        };
        let offset_min = if is_sin {
            Self::pi(p).div(&Self::exact_int(-2, p)).unwrap()
        } else {
            Self::pi(p)
        };
        if self.sub(&offset_max).div(&two_pi).unwrap().contains_integer() {
            hi = BigFloat::from_i8(1, p);
        }
        if self.sub(&offset_min).div(&two_pi).unwrap().contains_integer() {
            lo = BigFloat::from_i8(-1, p);
        }
        let one = BigFloat::from_i8(1, p);
        let neg_one = BigFloat::from_i8(-1, p);
        Interval {
            lo: bf_max(lo, neg_one),
            hi: bf_min(hi, one),
            prec: p,
        }
        .assert_finite()
    }

    /// Whether the interval possibly contains an integer (conservative: may
    /// report true when the enclosure merely comes close).
    fn contains_integer(&self) -> bool {
        let span = self.hi.sub(&self.lo, self.prec, UP);
        if bf_cmp(&span, &BigFloat::from_i8(1, self.prec)) != Ordering::Less {
            return true;
        }
        let f = self.hi.floor();
        let c = self.lo.ceil();
        bf_cmp(&f, &c) != Ordering::Less
    }

    // ------------------------------------------------------------ set algebra

    pub fn hull(&self, other: &Self) -> Self {
        Interval {
            lo: bf_min(self.lo.clone(), other.lo.clone()),
            hi: bf_max(self.hi.clone(), other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = bf_max(self.lo.clone(), other.lo.clone());
        let hi = bf_min(self.hi.clone(), other.hi.clone());
        if bf_cmp(&lo, &hi) == Ordering::Greater {
            None
        } else {
            Some(Interval {
                lo,
                hi,
                prec: self.prec.max(other.prec),
            })
        }
    }

    /// Splits at the midpoint.
    pub fn split(&self) -> (Self, Self) {
        let m = self.mid();
        (
            Interval {
                lo: self.lo.clone(),
                hi: m.clone(),
                prec: self.prec,
            },
            Interval {
                lo: m,
                hi: self.hi.clone(),
                prec: self.prec,
            },
        )
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if self.hi.is_negative() || self.hi.is_zero() {
            self.neg()
        } else {
            Interval {
                lo: BigFloat::from_i8(0, self.prec),
                hi: bf_max(self.lo.neg(), self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    // ------------------------------------------------------------- predicates

    pub fn contains_zero(&self) -> bool {
        bf_sign(&self.lo) != Ordering::Greater && bf_sign(&self.hi) != Ordering::Less
    }

    /// Certified `self > 0` (every point positive).
    pub fn is_pos(&self) -> bool {
        bf_sign(&self.lo) == Ordering::Greater
    }

    /// Certified `self ≥ 0`.
    pub fn is_nonneg(&self) -> bool {
        bf_sign(&self.lo) != Ordering::Less
    }

    /// Certified `self < 0`.
    pub fn is_neg(&self) -> bool {
        bf_sign(&self.hi) == Ordering::Less
    }

    /// Certified `self ≤ 0`.
    pub fn is_nonpos(&self) -> bool {
        bf_sign(&self.hi) != Ordering::Greater
    }

    /// Certified `self ≥ other` (pointwise for every pair of members).
    pub fn ge_certain(&self, other: &Self) -> bool {
        bf_cmp(&self.lo, &other.hi) != Ordering::Less
    }

    /// Certified `self > other`.
    pub fn gt_certain(&self, other: &Self) -> bool {
        bf_cmp(&self.lo, &other.hi) == Ordering::Greater
    }

    /// Certified `self ≤ other`.
    pub fn le_certain(&self, other: &Self) -> bool {
        bf_cmp(&self.hi, &other.lo) != Ordering::Greater
    }

    /// Certified `self < other`.
    pub fn lt_certain(&self, other: &Self) -> bool {
        bf_cmp(&self.hi, &other.lo) == Ordering::Less
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        bf_cmp(&self.lo, &other.lo) != Ordering::Greater
            && bf_cmp(&self.hi, &other.hi) != Ordering::Less
    }

    pub fn contains_bigfloat(&self, v: &BigFloat) -> bool {
        bf_cmp(&self.lo, v) != Ordering::Greater && bf_cmp(&self.hi, v) != Ordering::Less
    }

    /// Whether the interval (certifiably) contains the decimal value `s`.
    /// Conservative: compares against an enclosure of `s`, so it may return
    /// false for values extremely close to an endpoint.
    pub fn contains_dec(&self, s: &str) -> bool {
        match Self::from_dec_str(s, self.prec) {
            Ok(v) => self.contains(&v),
            Err(_) => false,
        }
    }

    // -------------------------------------------------------------- formatting

    /// Approximate value as f64 (for display only).
    pub fn approx_f64(&self) -> f64 {
        bigfloat_to_f64(&self.mid())
    }

    pub fn width_f64(&self) -> f64 {
        bigfloat_to_f64(&self.width())
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{:e} ± {:.3e}]",
            self.approx_f64(),
            self.width_f64() / 2.0
        )
    }
}

/// Approximate conversion through the decimal formatter (display only).
pub fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mut y = x.clone();
    if y.set_precision(64, RoundingMode::ToEven).is_err() {
        return f64::NAN;
    }
    let s = with_consts(|cc| y.format(Radix::Dec, RoundingMode::ToEven, cc))
        .unwrap_or_else(|_| "nan".into());
    s.parse::<f64>().unwrap_or(f64::NAN)
}

// ------------------------------------------------------------- serialization

/// Bit-exact textual form of a BigFloat: `sign:exponent:bits:words`.
pub fn bigfloat_to_hex(x: &BigFloat) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let (words, n, sign, e, _inexact) = x.as_raw_parts().expect("finite value");
    let sign_ch = if sign == Sign::Neg { '-' } else { '+' };
    let words_hex: Vec<String> = words.iter().map(|w| format!("{w:x}")).collect();
    format!("{sign_ch}:{e}:{n}:{}", words_hex.join(","))
}

pub fn bigfloat_from_hex(s: &str) -> Result<BigFloat> {
    if s == "0" {
        return Ok(BigFloat::from_i8(0, DEFAULT_PREC));
    }
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("bad float literal {s:?}")));
    }
    let sign = match parts[0] {
        "+" => Sign::Pos,
        "-" => Sign::Neg,
        _ => return Err(Error::Parse(format!("bad sign in {s:?}"))),
    };
    let e: astro_float::Exponent = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad bit count in {s:?}")))?;
    let words: Result<Vec<Word>> = parts[3]
        .split(',')
        .map(|w| Word::from_str_radix(w, 16).map_err(|_| Error::Parse(format!("bad word in {s:?}"))))
        .collect();
    let x = BigFloat::from_raw_parts(&words?, n, sign, e, false);
    if x.is_nan() {
        return Err(Error::Parse(format!("inconsistent float literal {s:?}")));
    }
    Ok(x)
}
