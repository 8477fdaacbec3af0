//! The sine-polynomial objects of the proof: coefficients a_{n,k}, evaluation
//! of S and S⁻, the τ_k partial-sum identities, second differences □_k and the
//! δ_k quantities.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// How the exponent β is specified. Decimal user input is kept as an exact
/// rational so that re-running at higher precision tightens the enclosure
/// instead of baking in a binary rounding of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetaSpec {
    /// β₁ = log 2 / log(16/5), the sharp exponent of Theorem AK.
    Beta1,
    /// β₂ = ln 2 / (ln 288 − ln 130), full convexity threshold at n = 7.
    Beta2,
    Rational(Rational64),
}

impl BetaSpec {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "beta1" => Ok(BetaSpec::Beta1),
            "beta2" => Ok(BetaSpec::Beta2),
            _ => {
                let r = parse_decimal_rational(s)?;
                Ok(BetaSpec::Rational(r))
            }
        }
    }

    pub fn interval(&self, prec: usize) -> Interval {
        match self {
            BetaSpec::Beta1 => Interval::beta1(prec),
            BetaSpec::Beta2 => Interval::beta2(prec),
            BetaSpec::Rational(r) => {
                Interval::from_ratio(*r.numer(), *r.denom(), prec).expect("nonzero denominator")
            }
        }
    }
}

impl std::fmt::Display for BetaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BetaSpec::Beta1 => write!(f, "beta1"),
            BetaSpec::Beta2 => write!(f, "beta2"),
            BetaSpec::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Parses a plain decimal literal (e.g. "0.58", "1", "7/12") into an exact
/// rational.
pub fn parse_decimal_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational literal {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad())?;
        let d: i64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    let t = s.trim();
    let (sign, t) = match t.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, t),
    };
    let (int_part, frac_part) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits: String = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: i64 = digits.parse().map_err(|_| bad())?;
    let den = 10i64
        .checked_pow(frac_part.len() as u32)
        .ok_or_else(bad)?;
    Ok(Rational64::new(sign * num, den))
}

/// Exact value of the coefficient base (n²−k²)/((n²−1)k).
pub fn base_rational(n: i64, k: i64) -> Rational64 {
    Rational64::new(n * n - k * k, (n * n - 1) * k)
}

/// Enclosure of a_{n,k} = ((n²−k²)/((n²−1)k))^β; exact 0 for k = n.
pub fn coeff(n: u32, k: u32, beta: &Interval, prec: usize) -> Result<Interval> {
    if n < 2 || k < 1 || k > n {
        return Err(Error::Argument(format!("coeff: bad indices n={n}, k={k}")));
    }
    if k == n {
        return Ok(Interval::zero(prec));
    }
    let b = base_rational(n as i64, k as i64);
    Interval::from_ratio(*b.numer(), *b.denom(), prec)?.pow(beta)
}

/// The coefficient family a_{n,1..n} for fixed (n, β), with a_n stored as an
/// exact zero.
#[derive(Debug, Clone)]
pub struct CoefficientSequence {
    n: u32,
    beta: Interval,
    /// a[k-1] is a_{n,k}, k = 1..=n
    a: Vec<Interval>,
    prec: usize,
}

impl CoefficientSequence {
    pub fn new(n: u32, beta: &Interval, prec: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(format!("n must be at least 2, got {n}")));
        }
        let a = (1..=n)
            .map(|k| coeff(n, k, beta, prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoefficientSequence {
            n,
            beta: beta.clone(),
            a,
            prec,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn beta(&self) -> &Interval {
        &self.beta
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn a(&self, k: u32) -> Result<&Interval> {
        if k < 1 || k > self.n {
            return Err(Error::Argument(format!(
                "coefficient index k={k} out of 1..={}",
                self.n
            )));
        }
        Ok(&self.a[(k - 1) as usize])
    }

    /// All coefficients a_1..a_{n−1} (the nonzero ones).
    pub fn coeffs(&self) -> &[Interval] {
        &self.a[..(self.n - 1) as usize]
    }

    /// □_k = a_{k−1} − 2a_k + a_{k+1}, for 2 ≤ k ≤ n−1.
    pub fn second_diff(&self, k: u32) -> Result<Interval> {
        if k < 2 || k > self.n - 1 {
            return Err(Error::Argument(format!(
                "second difference index k={k} out of 2..={}",
                self.n - 1
            )));
        }
        let two = Interval::exact_int(2, self.prec);
        Ok(self
            .a(k - 1)?
            .sub(&two.mul(self.a(k)?))
            .add(self.a(k + 1)?))
    }

    /// δ_k = −□_{n−k}, for 1 ≤ k ≤ n−2.
    pub fn delta(&self, k: u32) -> Result<Interval> {
        if k < 1 || k > self.n - 2 {
            return Err(Error::Argument(format!(
                "delta index k={k} out of 1..={}",
                self.n - 2
            )));
        }
        Ok(self.second_diff(self.n - k)?.neg())
    }

    /// d_k = a_k − a_{k+1}, for 1 ≤ k ≤ n−1.
    pub fn d(&self, k: u32) -> Result<Interval> {
        if k < 1 || k > self.n - 1 {
            return Err(Error::Argument(format!(
                "difference index k={k} out of 1..={}",
                self.n - 1
            )));
        }
        Ok(self.a(k)?.sub(self.a(k + 1)?))
    }

    /// Strict decrease of the coefficients holds for every β > 0 because the
    /// exact rational bases decrease in k; this checks that fact exactly.
    pub fn bases_strictly_decreasing(&self) -> bool {
        (1..self.n - 1).all(|k| {
            base_rational(self.n as i64, k as i64) > base_rational(self.n as i64, k as i64 + 1)
        })
    }
}

/// The value of a sine polynomial at an interval argument.
#[derive(Debug, Clone)]
pub struct SinePolyValue {
    pub value: Interval,
    pub x: Interval,
}

/// Evaluates Σ (±)^{k+1} c_k sin(kx) for an explicit coefficient slice
/// (c_1 first). Used by S, H, K and T alike.
pub fn eval_sine_poly(coeffs: &[Interval], x: &Interval, alternating: bool) -> Interval {
    let prec = x.prec();
    let mut acc = Interval::zero(prec);
    let mut angles = AngleSeq::new(x);
    for (i, c) in coeffs.iter().enumerate() {
        let (s, _) = angles.next_pair();
        let term = c.mul(&s);
        if alternating && i % 2 == 1 {
            acc = acc.sub(&term);
        } else {
            acc = acc.add(&term);
        }
    }
    acc
}

/// Enclosure of S_{n,β}(x) (or S⁻ when `alternating`).
#[allow(non_snake_case)]
pub fn eval_S(
    n: u32,
    beta: &Interval,
    x: &Interval,
    alternating: bool,
    prec: usize,
) -> Result<SinePolyValue> {
    let seq = CoefficientSequence::new(n, beta, prec)?;
    Ok(eval_S_seq(&seq, x, alternating))
}

#[allow(non_snake_case)]
pub fn eval_S_seq(seq: &CoefficientSequence, x: &Interval, alternating: bool) -> SinePolyValue {
    SinePolyValue {
        value: eval_sine_poly(seq.coeffs(), x, alternating),
        x: x.clone(),
    }
}

/// Rolling enclosures of (sin kx, cos kx) built by the angle-addition
/// recurrence; one sin/cos pair is computed per evaluation point, after which
/// every further harmonic costs a handful of multiplications.
pub struct AngleSeq {
    s1: Interval,
    c1: Interval,
    s: Option<(Interval, Interval)>,
}

impl AngleSeq {
    pub fn new(x: &Interval) -> Self {
        AngleSeq {
            s1: x.sin(),
            c1: x.cos(),
            s: None,
        }
    }

    /// Returns (sin kx, cos kx) for k = 1, 2, ... on successive calls.
    pub fn next_pair(&mut self) -> (Interval, Interval) {
        let next = match &self.s {
            None => (self.s1.clone(), self.c1.clone()),
            Some((sk, ck)) => (
                sk.mul(&self.c1).add(&ck.mul(&self.s1)),
                ck.mul(&self.c1).sub(&sk.mul(&self.s1)),
            ),
        };
        // keep the enclosures inside [−1, 1]; the recurrence can overshoot
        let clamp = |v: Interval| {
            let one = Interval::exact_int(1, v.prec());
            v.intersect(&one.neg().hull(&one)).expect("sin/cos range")
        };
        let next = (clamp(next.0), clamp(next.1));
        self.s = Some(next.clone());
        next
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauForm {
    Closed,
    Direct,
}

/// Result of a τ evaluation; `fell_back` records an automatic switch from the
/// closed form to direct summation near the closed form's pole.
#[derive(Debug, Clone)]
pub struct TauValue {
    pub value: Interval,
    pub fell_back: bool,
}

/// Enclosure of τ_k (or τ_k⁻) at x via the requested form.
///
/// Closed forms (well-known):
///   τ_k  = (cos(x/2) − cos((k+1/2)x)) / (2 sin(x/2)),
///   τ_k⁻ = (sin(x/2) − (−1)^k sin((k+1/2)x)) / (2 cos(x/2)).
pub fn tau(k: u32, x: &Interval, alternating: bool, form: TauForm) -> Result<TauValue> {
    if k < 1 {
        return Err(Error::Argument("tau requires k ≥ 1".into()));
    }
    let prec = x.prec();
    if form == TauForm::Direct {
        return Ok(TauValue {
            value: tau_direct(k, x, alternating),
            fell_back: false,
        });
    }
    let half = x.div(&Interval::exact_int(2, prec))?;
    let denom_fn = if alternating { half.cos() } else { half.sin() };
    // 2⁻²⁰ cutoff: below this the closed form has lost all accuracy
    let cutoff = Interval::from_ratio(1, 1 << 20, prec)?;
    if !denom_fn.abs().gt_certain(&cutoff) {
        return Ok(TauValue {
            value: tau_direct(k, x, alternating),
            fell_back: true,
        });
    }
    let two = Interval::exact_int(2, prec);
    let kph = Interval::exact_int(2 * k as i64 + 1, prec)
        .div(&two)?
        .mul(x);
    let value = if alternating {
        let sgn_term = if k % 2 == 0 {
            kph.sin()
        } else {
            kph.sin().neg()
        };
        half.sin().sub(&sgn_term).div(&two.mul(&half.cos()))?
    } else {
        half.cos().sub(&kph.cos()).div(&two.mul(&half.sin()))?
    };
    Ok(TauValue {
        value,
        fell_back: false,
    })
}

fn tau_direct(k: u32, x: &Interval, alternating: bool) -> Interval {
    let mut acc = Interval::zero(x.prec());
    let mut angles = AngleSeq::new(x);
    for j in 0..k {
        let (s, _) = angles.next_pair();
        if alternating && j % 2 == 1 {
            acc = acc.sub(&s);
        } else {
            acc = acc.add(&s);
        }
    }
    acc
}
