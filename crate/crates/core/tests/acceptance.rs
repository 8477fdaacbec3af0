//! Acceptance gate: one test and one printed pass/fail line per criterion.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

use sinecert::sinepoly::{coeff, parse_decimal_rational};
use sinecert::sturm::bigfloat_to_rational;
use sinecert::{
    brute_min, build, check_certificate, h_anchor, pipeline, sharpness, sturm_count,
    sturm_positive, verify_h_certificates, verify_lemma, x_star_ratio, BetaSpec,
    CoefficientSequence, Interval, RationalPolynomial, DEFAULT_PREC,
};

const P: usize = DEFAULT_PREC;

fn report(num: u32, name: &str, ok: bool) {
    println!(
        "criterion {num} ({name}): {}",
        if ok { "pass" } else { "fail" }
    );
    assert!(ok, "criterion {num} ({name}) failed");
}

fn run(body: impl FnOnce() -> bool + UnwindSafe) -> bool {
    catch_unwind(body).unwrap_or(false)
}

fn dec(s: &str) -> Interval {
    Interval::from_dec_str(s, P).unwrap()
}

/// The enclosure lies inside the band printed ± tol.
fn within(v: &Interval, printed: &str, tol: &str) -> bool {
    let p = dec(printed);
    let t = dec(tol);
    p.sub(&t).hull(&p.add(&t)).contains(v)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn exact_sum(addends: &[&str]) -> Rational64 {
    addends
        .iter()
        .map(|s| parse_decimal_rational(s).unwrap())
        .sum()
}

/// δ_k(n) at β₁ from the exact coefficient formula.
fn delta(n: u32, k: u32, beta1: &Interval) -> Interval {
    let two = Interval::exact_int(2, P);
    let mid = coeff(n, n - k, beta1, P).unwrap();
    let lo = coeff(n, n - k - 1, beta1, P).unwrap();
    let hi = coeff(n, n - k + 1, beta1, P).unwrap();
    two.mul(&mid).sub(&lo).sub(&hi)
}

#[test]
fn criterion_1_constant_reproduction() {
    let t0 = Instant::now();
    let ok = run(|| {
        let mut ok = true;

        ok &= within(&Interval::beta1(P), "0.59592", "1e-5");
        ok &= within(&Interval::beta2(P), "0.8714162659", "1e-9");

        // anchor slope H-(7, beta1)/x at x = 3/4
        let (anchor, _) = h_anchor(7, 3, 4, P).unwrap();
        ok &= within(&anchor, "0.2232352723", "1e-9");

        // window thresholds: 1.105/(2 c cos(u0)) with the printed 4-digit
        // anchor truncations c and boundary angles u0 = 3/8 and 13/70
        let num = Interval::from_ratio(1105, 1000, P).unwrap();
        let thr = |c_num: i64, a_num: i64, a_den: i64| {
            let c = Interval::from_ratio(c_num, 10_000, P).unwrap();
            let u = Interval::from_ratio(a_num, a_den, P).unwrap();
            num.div(&Interval::exact_int(2, P).mul(&c).mul(&u.cos()))
                .unwrap()
        };
        ok &= within(&thr(2232, 3, 8), "2.660223693", "1e-6");
        ok &= within(&thr(2285, 13, 70), "2.4602482", "1e-6");

        // convexity-radius inner ratio at beta1
        let beta1 = Interval::beta1(P);
        ok &= within(&x_star_ratio(&beta1, P).unwrap(), "0.5281747", "1e-6");

        // the two roots of the H7b concavity quadratic
        let h7b = verify_lemma("H7b", P).unwrap();
        ok &= h7b.passed();
        let root = |name: &str| {
            h7b.constants
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .unwrap()
        };
        ok &= within(&root("root1"), "0.39281956258689586", "1e-12");
        ok &= within(&root("root2"), "0.67755077339437549", "1e-12");

        // theta(n) = (n-1) delta_1(n) at the two table arguments
        for (n, bound) in [(12u32, "0.3921"), (45, "0.3428")] {
            let seq = CoefficientSequence::new(n, &beta1, P).unwrap();
            let theta = Interval::exact_int(n as i64 - 1, P).mul(&seq.delta(1).unwrap());
            ok &= theta.lt_certain(&dec(bound));
        }

        // the two tail totals, re-added exactly from the printed addends
        let sum1 = exact_sum(&["0.196", "0.0206", "0.009", "0.005171", "0.003451"]);
        ok &= sum1 == parse_decimal_rational("0.234222").unwrap();
        let half = parse_decimal_rational("0.1636").unwrap() / 2;
        let sum2 = half + exact_sum(&["0.006902", "0.010342", "0.018", "0.0326", "0.3428"]);
        ok &= sum2 == parse_decimal_rational("0.492444").unwrap();

        ok
    });
    let ok = ok && t0.elapsed() < Duration::from_secs(60);
    report(1, "constant reproduction", ok);
}

#[test]
fn criterion_2_certificate_suite() {
    let t0 = Instant::now();
    let ok = run(|| {
        let rep = verify_h_certificates(64, P).unwrap();
        let mut ok = rep.passed();
        // 10 built chains plus the published 4-point chain
        ok &= rep.certificates.len() == 11;
        for (name, cert) in &rep.certificates {
            ok &= cert.chain.len() <= 64;
            ok &= check_certificate(cert);
            if name == "hm1-published-chain" {
                ok &= cert.chain.len() == 4;
            }
        }
        ok &= rep.certificates.iter().any(|(n, _)| n == "hm1-published-chain");
        ok
    });
    let ok = ok && t0.elapsed() < Duration::from_secs(10);
    report(2, "certificate suite", ok);
}

#[test]
fn criterion_3_sturm_suite() {
    let ok = run(|| {
        let mut ok = true;

        // the comparison-bound quadratic: positive (0 roots) right of 0.366
        let q = RationalPolynomial::from_ints(&[-331, 676, 676]);
        ok &= sturm_positive(&q, &rat(366, 1000), &rat(1, 1)).unwrap();

        // the three convexity-radius cases
        let g0 = RationalPolynomial::from_ints(&[2, 0, -6, 0, 18, 0, 2]);
        ok &= sturm_positive(&g0, &rat(0, 1), &rat(1, 1)).unwrap();
        let g1 = RationalPolynomial::from_ints(&[6, 0, -12, 0, 6]);
        ok &= sturm_positive(&g1, &rat(0, 1), &rat(999_999, 1_000_000)).unwrap();
        let gs = RationalPolynomial::from_ints(&[-1, 0, 56, 0, -78, 0, 8, 0, -1]);
        ok &= sturm_positive(&gs, &rat(2, 5), &rat(4, 5)).unwrap();

        // the Taylor-remainder quartic: positive (0 roots) on (0, 2/5)
        let quartic = RationalPolynomial::from_ints(&[24, -68, 28, -15, 9]);
        ok &= sturm_positive(&quartic, &rat(0, 1), &rat(2, 5)).unwrap();

        // the head-concavity quadratic -36 h3 X^2 + 8 h2 X + (9 h3 - h1) at
        // n = 7: its rational upper majorant has no root in (cos 3/4, 1) and
        // is negative there
        let beta1 = Interval::beta1(P);
        let seq = CoefficientSequence::new(7, &beta1, P).unwrap();
        let dc = build(&seq).unwrap();
        let h = dc.h_coeffs();
        let a2 = Interval::exact_int(-36, P).mul(&h[2]);
        let a1 = Interval::exact_int(8, P).mul(&h[1]);
        let a0 = Interval::exact_int(9, P).mul(&h[2]).sub(&h[0]);
        let maj = RationalPolynomial::new(vec![
            bigfloat_to_rational(a0.hi()).unwrap(),
            bigfloat_to_rational(a1.hi()).unwrap(),
            bigfloat_to_rational(a2.hi()).unwrap(),
        ]);
        let xlo = bigfloat_to_rational(Interval::from_ratio(3, 4, P).unwrap().cos().lo()).unwrap();
        let zero = BigRational::from_integer(0.into());
        ok &= sturm_count(&maj, &xlo, &rat(1, 1)).unwrap() == 0;
        ok &= maj.eval(&xlo) < zero && maj.eval(&rat(1, 1)) < zero;

        ok
    });
    report(3, "Sturm suite", ok);
}

#[test]
fn criterion_4_pipeline_replay() {
    let t0 = Instant::now();
    let ok = run(|| {
        let betas = [BetaSpec::parse("beta1").unwrap(), BetaSpec::parse("1").unwrap()];
        let mut branches = BTreeSet::new();
        for n in 7..=200u32 {
            for beta in &betas {
                let trace = pipeline(n, beta, P).unwrap();
                if !trace.proved() {
                    eprintln!("pipeline n={n} beta={beta} not proved");
                    return false;
                }
                branches.insert(trace.branch.clone());
            }
        }
        let expected: BTreeSet<String> =
            ["fejer", "even", "two-summand", "ten-or-fewer", "more-than-ten"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        branches == expected
    });
    let elapsed = t0.elapsed();
    let ok = ok && elapsed < Duration::from_secs(300);
    report(4, "pipeline replay", ok);
}

#[test]
fn criterion_5_oracle_consistency() {
    let t0 = Instant::now();
    let ok = run(|| {
        let beta1 = Interval::beta1(P);
        for n in 2..=200u32 {
            let scan = brute_min(n, &beta1, 8192, P).unwrap();
            if scan.negative_cell.is_some() {
                eprintln!("scan found a certified-negative cell at n={n}");
                return false;
            }
        }
        let b058 = BetaSpec::parse("0.58").unwrap().interval(P);
        sharpness(3, &b058, 8192, P).unwrap().is_some()
    });
    let ok = ok && t0.elapsed() < Duration::from_secs(120);
    report(5, "oracle consistency", ok);
}

#[test]
fn criterion_6_delta_bound_table() {
    let ok = run(|| {
        let beta1 = Interval::beta1(P);
        let bounds = [
            (3u32, "0.0412"),
            (5, "0.018"),
            (7, "0.010342"),
            (9, "0.006902"),
        ];
        let mut ok = true;
        for n in (15..=199u32).step_by(2) {
            for (k, b) in &bounds {
                let v = Interval::exact_int((n - k) as i64, P).mul(&delta(n, *k, &beta1));
                ok &= v.lt_certain(&dec(b));
            }
        }
        // the sharper (n-3) delta_3 bound on the finite odd set 45..97
        for n in (45..=97u32).step_by(2) {
            let v = Interval::exact_int((n - 3) as i64, P).mul(&delta(n, 3, &beta1));
            ok &= v.lt_certain(&dec("0.0326"));
        }
        ok
    });
    report(6, "delta-bound table", ok);
}

#[test]
fn criterion_7_property_suites() {
    let ok = run(|| {
        common::check_interval_inclusion_monotone();
        common::check_tau_closed_matches_direct();
        common::check_decomposition_identity();
        common::check_tail_weight_shape();
        common::check_summand_count_monotone_in_beta();
        true
    });
    report(7, "property suites", ok);
}
