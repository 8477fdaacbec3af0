//! The structural decomposition S = H + K + T: convex/concave split point m,
//! the three-coefficient head H, the Fejér part K, the tail weights d_k, and
//! the h_i(y; β) function family.

use crate::certify::Verdict;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::sinepoly::{eval_sine_poly, tau, CoefficientSequence, TauForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitPoint {
    /// All second differences certified nonnegative; T is empty.
    FullyConvex,
    /// Index m: head {a₁…a_m} convex, tail {a_m…a_n} concave with an odd
    /// number of terms (so T gets an even number of summands).
    At(u32),
}

/// Certified sign pattern of the □_k row: nonnegative up to κ, negative after.
/// Ambiguous enclosures retry at 2× and 4× precision before giving up.
fn second_diff_transition(seq: &CoefficientSequence) -> Result<Option<u32>> {
    let n = seq.n();
    let mut kappa = None; // last index with □_k ≥ 0
    let mut seen_negative = false;
    for k in 2..n {
        let mut v = seq.second_diff(k)?;
        let mut escalate = 2usize;
        let sign = loop {
            if v.is_nonneg() {
                break 1;
            }
            if v.is_neg() {
                break -1;
            }
            if escalate > 4 {
                return Err(Error::Undecidable(format!(
                    "second difference at k={k} (n={n}) straddles zero at 4x precision: {v}"
                )));
            }
            let hi = CoefficientSequence::new(n, seq.beta(), seq.prec() * escalate)?;
            v = hi.second_diff(k)?;
            escalate *= 2;
        };
        if sign >= 0 {
            if seen_negative {
                return Err(Error::Structure(format!(
                    "second differences change sign twice (n={n}, k={k})"
                )));
            }
            kappa = Some(k);
        } else {
            seen_negative = true;
        }
    }
    Ok(if seen_negative { kappa } else { None })
}

/// The paper's split: place m at the sign transition of □_k, shifted by at
/// most one index so the concave tail {a_m…a_n} has odd length.
pub fn split_point(seq: &CoefficientSequence) -> Result<SplitPoint> {
    let n = seq.n();
    if n < 5 {
        return Err(Error::Argument(format!("split_point needs n ≥ 5, got {n}")));
    }
    let kappa = match second_diff_transition(seq)? {
        None => return Ok(SplitPoint::FullyConvex),
        Some(k) => k,
    };
    // both κ and κ+1 give a valid convex/concave split; the smaller one with
    // n − m even wins (tail length n − m + 1 odd)
    let m = if (n - kappa) % 2 == 0 { kappa } else { kappa + 1 };
    Ok(SplitPoint::At(m))
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    n: u32,
    beta: Interval,
    /// split index; equals n in the fully convex case
    m: u32,
    fully_convex: bool,
    /// the three head coefficients [a₁−4a₄+3a₅, a₂−3a₄+2a₅, a₃−2a₄+a₅]
    h_coeffs: [Interval; 3],
    /// coefficients of K = S₁ − H, length m, last entry exact zero
    k_coeffs: Vec<Interval>,
    /// d_k = a_k − a_{k+1} for k = m…n−1 (empty when fully convex)
    d_weights: Vec<Interval>,
    prec: usize,
}

/// Builds the decomposition, certifying the structural facts as it goes.
pub fn build(seq: &CoefficientSequence) -> Result<Decomposition> {
    let n = seq.n();
    let (m, fully_convex) = match split_point(seq)? {
        SplitPoint::FullyConvex => (n, true),
        SplitPoint::At(m) => (m, false),
    };
    if m < 5 {
        return Err(Error::Structure(format!(
            "split index m={m} leaves fewer than five head terms (n={n})"
        )));
    }
    let a = |k: u32| seq.a(k);
    let four = Interval::exact_int(4, seq.prec());
    let three = Interval::exact_int(3, seq.prec());
    let two = Interval::exact_int(2, seq.prec());
    let h_coeffs = [
        a(1)?.sub(&four.mul(a(4)?)).add(&three.mul(a(5)?)),
        a(2)?.sub(&three.mul(a(4)?)).add(&two.mul(a(5)?)),
        a(3)?.sub(&two.mul(a(4)?)).add(a(5)?),
    ];
    // S₁ = Σ_{k≤m} (a_k − a_m) sin kx ends in zero; K = S₁ − H
    let am = a(m)?.clone();
    let mut k_coeffs = Vec::with_capacity(m as usize);
    for j in 1..m {
        let base = a(j)?.sub(&am);
        k_coeffs.push(if j <= 3 {
            base.sub(&h_coeffs[(j - 1) as usize])
        } else {
            base
        });
    }
    k_coeffs.push(Interval::zero(seq.prec()));
    let mut d_weights = Vec::new();
    for k in m..n {
        d_weights.push(seq.d(k)?);
    }
    Ok(Decomposition {
        n,
        beta: seq.beta().clone(),
        m,
        fully_convex,
        h_coeffs,
        k_coeffs,
        d_weights,
        prec: seq.prec(),
    })
}

impl Decomposition {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn beta(&self) -> &Interval {
        &self.beta
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_fully_convex(&self) -> bool {
        self.fully_convex
    }

    pub fn h_coeffs(&self) -> &[Interval; 3] {
        &self.h_coeffs
    }

    pub fn k_coeffs(&self) -> &[Interval] {
        &self.k_coeffs
    }

    pub fn d_weights(&self) -> &[Interval] {
        &self.d_weights
    }

    pub fn eval_h(&self, x: &Interval, alternating: bool) -> Interval {
        eval_sine_poly(&self.h_coeffs, x, alternating)
    }

    pub fn eval_k(&self, x: &Interval, alternating: bool) -> Interval {
        eval_sine_poly(&self.k_coeffs, x, alternating)
    }

    pub fn eval_t(&self, x: &Interval, alternating: bool, form: TauForm) -> Result<Interval> {
        let mut acc = Interval::zero(self.prec);
        for (i, d) in self.d_weights.iter().enumerate() {
            let k = self.m + i as u32;
            let t = tau(k, x, alternating, form)?;
            acc = acc.add(&d.mul(&t.value));
        }
        Ok(acc)
    }

    /// Fejér hypotheses for K, using the structure of its construction: the
    /// first three appended-zero second differences vanish identically (the
    /// head coefficients are built to cancel them), the middle ones are the
    /// □_j of the original sequence, and the last is d_{m−1}. Checking the
    /// raw k_coeffs instead would leave the exact zeros ambiguous under
    /// interval widths.
    pub fn certify_k_fejer(&self, seq: &CoefficientSequence) -> Result<Verdict> {
        if seq.n() != self.n {
            return Err(Error::Argument("sequence/decomposition mismatch".into()));
        }
        let mut verdict = Verdict::Pass;
        for j in 5..self.m {
            let d = seq.second_diff(j)?;
            if d.is_neg() {
                return Ok(Verdict::Fail);
            }
            if !d.is_nonneg() {
                verdict = Verdict::Inconclusive;
            }
        }
        let last = seq.d(self.m - 1)?;
        if last.is_neg() {
            return Ok(Verdict::Fail);
        }
        if !last.is_nonneg() {
            verdict = Verdict::Inconclusive;
        }
        Ok(verdict)
    }
}

/// Number of d-summands of T at β = β₁ (0 when fully convex).
#[allow(non_snake_case)]
pub fn count_T_summands(n: u32, prec: usize) -> Result<u32> {
    if n < 7 {
        return Err(Error::Argument(format!(
            "count_T_summands needs n ≥ 7, got {n}"
        )));
    }
    let seq = CoefficientSequence::new(n, &Interval::beta1(prec), prec)?;
    Ok(match split_point(&seq)? {
        SplitPoint::FullyConvex => 0,
        SplitPoint::At(m) => n - m,
    })
}

/// The h-function family at a point (or subinterval) of [0, 1/48]: with
/// p = (1−3y)/2, u = (1−8y)/3, q = (1−15y)/4, r = (1−24y)/5,
///   h₁ = 1 − 4q^β + 3r^β,   h₂ = p^β − 3q^β + 2r^β,   h₃ = u^β − 2q^β + r^β,
///   h₄ = h₁ − 2h₂ + h₃ = 1 − 2p^β + u^β,   h₅ = h₂ − 2h₃ = p^β + q^β − 2u^β.
/// At y = 1/(n²−1) these are the head coefficients and their differences.
#[derive(Debug, Clone)]
pub struct HFunctionFamily {
    pub y: Interval,
    pub beta: Interval,
    pub h: [Interval; 5],
}

pub fn h_family(y: &Interval, beta: &Interval, prec: usize) -> Result<HFunctionFamily> {
    // accept anything inside the outward-rounded [0, 1/48] enclosure
    let range = Interval::zero(prec).hull(&Interval::from_ratio(1, 48, prec)?);
    if !range.contains(y) {
        return Err(Error::Argument(format!("y = {y} outside [0, 1/48]")));
    }
    let lin = |c: i64, d: i64| -> Result<Interval> {
        // ((1 − c·y)/d)^β
        let num = Interval::one(prec).sub(&Interval::exact_int(c, prec).mul(y));
        num.div(&Interval::exact_int(d, prec))?.pow(beta)
    };
    let p = lin(3, 2)?;
    let u = lin(8, 3)?;
    let q = lin(15, 4)?;
    let r = lin(24, 5)?;
    let one = Interval::one(prec);
    let two = Interval::exact_int(2, prec);
    let three = Interval::exact_int(3, prec);
    let four = Interval::exact_int(4, prec);
    let h = [
        one.sub(&four.mul(&q)).add(&three.mul(&r)),
        p.sub(&three.mul(&q)).add(&two.mul(&r)),
        u.sub(&two.mul(&q)).add(&r),
        one.sub(&two.mul(&p)).add(&u),
        p.add(&q).sub(&two.mul(&u)),
    ];
    Ok(HFunctionFamily {
        y: y.clone(),
        beta: beta.clone(),
        h,
    })
}

/// The inner ratio of Lemma 5(iii)'s convexity-radius formula,
/// (√(5−4β) + β − 2)/(1−β), whose value at β₁ is the paper's 0.5281747….
pub fn x_star_ratio(beta: &Interval, prec: usize) -> Result<Interval> {
    let five = Interval::exact_int(5, prec);
    let four = Interval::exact_int(4, prec);
    let two = Interval::exact_int(2, prec);
    let one = Interval::one(prec);
    five.sub(&four.mul(beta))
        .sqrt()?
        .add(beta)
        .sub(&two)
        .div(&one.sub(beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{bigfloat_to_f64, DEFAULT_PREC};
    use crate::sinepoly::{eval_S_seq, BetaSpec};

    const P: usize = DEFAULT_PREC;

    fn seq(n: u32, beta: &Interval) -> CoefficientSequence {
        CoefficientSequence::new(n, beta, P).unwrap()
    }

    fn iv(s: &str) -> Interval {
        Interval::from_dec_str(s, P).unwrap()
    }

    #[test]
    fn split_n7() {
        let b1 = Interval::beta1(P);
        assert_eq!(split_point(&seq(7, &b1)).unwrap(), SplitPoint::At(5));
        // comfortably above β₂ the whole sequence is convex
        let b = BetaSpec::parse("0.9").unwrap().interval(P);
        assert_eq!(split_point(&seq(7, &b)).unwrap(), SplitPoint::FullyConvex);
        // at exactly β₂ the sign of □₆ is genuinely zero, hence undecidable
        let b2 = Interval::beta2(P);
        assert!(matches!(
            split_point(&seq(7, &b2)),
            Err(Error::Undecidable(_))
        ));
    }

    #[test]
    fn split_n17() {
        let b1 = Interval::beta1(P);
        assert_eq!(split_point(&seq(17, &b1)).unwrap(), SplitPoint::At(13));
    }

    #[test]
    fn summand_counts() {
        assert_eq!(count_T_summands(7, P).unwrap(), 2);
        assert_eq!(count_T_summands(9, P).unwrap(), 2);
        // n = 11, 13 genuinely need four summands at β₁ (□₈ resp. □₁₀ dip
        // slightly negative), n = 41, 43 need twelve
        assert_eq!(count_T_summands(11, P).unwrap(), 4);
        assert_eq!(count_T_summands(13, P).unwrap(), 4);
        assert_eq!(count_T_summands(41, P).unwrap(), 12);
        assert_eq!(count_T_summands(43, P).unwrap(), 12);
    }

    #[test]
    fn d_weights_n7() {
        let b1 = Interval::beta1(P);
        let d = build(&seq(7, &b1)).unwrap();
        assert_eq!(d.m(), 5);
        assert_eq!(d.d_weights().len(), 2);
        let tenth = Interval::from_ratio(1, 10, P).unwrap().pow(&b1).unwrap();
        let c288 = Interval::from_ratio(13, 288, P).unwrap().pow(&b1).unwrap();
        assert!(d.d_weights()[0].intersect(&tenth.sub(&c288)).is_some());
        assert!(d.d_weights()[1].intersect(&c288).is_some());
    }

    #[test]
    fn decomposition_identity() {
        let b1 = Interval::beta1(P);
        for n in [7u32, 12, 17, 40] {
            let s = seq(n, &b1);
            let d = build(&s).unwrap();
            for xs in ["0.3", "1.0", "2.2"] {
                let x = iv(xs);
                let whole = eval_S_seq(&s, &x, false).value;
                let parts = d
                    .eval_h(&x, false)
                    .add(&d.eval_k(&x, false))
                    .add(&d.eval_t(&x, false, TauForm::Closed).unwrap());
                assert!(
                    whole.intersect(&parts).is_some(),
                    "n={n} x={xs}: {whole} vs {parts}"
                );
            }
        }
    }

    #[test]
    fn k_fejer_certified() {
        let b1 = Interval::beta1(P);
        for n in [7u32, 17, 45] {
            let s = seq(n, &b1);
            let d = build(&s).unwrap();
            assert_eq!(d.certify_k_fejer(&s).unwrap(), Verdict::Pass, "n={n}");
        }
    }

    #[test]
    fn d_weights_nondecreasing_even() {
        let b1 = Interval::beta1(P);
        for n in 7u32..=60 {
            let d = build(&seq(n, &b1)).unwrap();
            assert_eq!(d.d_weights().len() % 2, 0, "n={n}");
            for w in d.d_weights().windows(2) {
                assert!(w[1].ge_certain(&w[0]), "n={n}");
            }
            for w in d.d_weights() {
                assert!(w.is_pos(), "n={n}");
            }
        }
    }

    #[test]
    fn h_family_at_n7() {
        let b1 = Interval::beta1(P);
        let y = Interval::from_ratio(1, 48, P).unwrap();
        let fam = h_family(&y, &b1, P).unwrap();
        // h₁(1/48) = 1 − 4(11/64)^β + 3(1/10)^β
        let q = Interval::from_ratio(11, 64, P).unwrap().pow(&b1).unwrap();
        let r = Interval::from_ratio(1, 10, P).unwrap().pow(&b1).unwrap();
        let expect = Interval::one(P)
            .sub(&Interval::exact_int(4, P).mul(&q))
            .add(&Interval::exact_int(3, P).mul(&r));
        assert!(fam.h[0].intersect(&expect).is_some());
        // and the head coefficients of the n = 7 decomposition agree
        let d = build(&seq(7, &b1)).unwrap();
        for i in 0..3 {
            assert!(d.h_coeffs()[i].intersect(&fam.h[i]).is_some());
        }
    }

    #[test]
    fn h_family_identities() {
        let one = Interval::one(P);
        for ys in [0i64, 1, 7, 13] {
            let y = Interval::from_ratio(ys, 624, P).unwrap();
            for b in ["0.6", "0.75", "1.0"] {
                let beta = BetaSpec::parse(b).unwrap().interval(P);
                let fam = h_family(&y, &beta, P).unwrap();
                let h4 = fam.h[0].sub(&Interval::exact_int(2, P).mul(&fam.h[1])).add(&fam.h[2]);
                let h5 = fam.h[1].sub(&Interval::exact_int(2, P).mul(&fam.h[2]));
                assert!(fam.h[3].intersect(&h4).is_some());
                assert!(fam.h[4].intersect(&h5).is_some());
            }
        }
        // exact rational check: h₄(0; 1) = 1 − 2(1/2) + 1/3 = 1/3
        let fam = h_family(&Interval::zero(P), &one, P).unwrap();
        let third = Interval::from_ratio(1, 3, P).unwrap();
        assert!(fam.h[3].intersect(&third).is_some());
        assert!(fam.h[3].width_f64() < 1e-30);
    }

    #[test]
    fn h_family_domain() {
        let b1 = Interval::beta1(P);
        assert!(h_family(&iv("0.03"), &b1, P).is_err());
        assert!(h_family(&iv("-0.001"), &b1, P).is_err());
    }

    #[test]
    fn x_star_printed_constant() {
        let v = x_star_ratio(&Interval::beta1(P), P).unwrap();
        assert!(bigfloat_to_f64(v.sub(&iv("0.5281747")).abs().hi()) < 1e-6);
    }

    #[test]
    fn split_respects_x_star_floor() {
        let b1 = Interval::beta1(P);
        for n in 10u32..=120 {
            if let SplitPoint::At(m) = split_point(&seq(n, &b1)).unwrap() {
                let floor = (0.5281747 * n as f64).floor() as u32 - 1;
                assert!(m >= floor, "n={n}: m={m} < {floor}");
            }
        }
    }
}
