//! Property-check bodies shared between the `properties` test binary and the
//! acceptance gate. Each function panics on the first violation. All
//! randomness is seeded for reproducibility.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sinecert::{
    build, eval_S_seq, split_point, tau, BetaSpec, CoefficientSequence, Interval, SplitPoint,
    TauForm, DEFAULT_PREC,
};

pub const P: usize = DEFAULT_PREC;

pub fn ratio(rng: &mut StdRng, lo: i64, hi: i64, max_den: i64, prec: usize) -> Interval {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(lo * den..=hi * den);
    Interval::from_ratio(num, den, prec).unwrap()
}

/// 10⁵ cases: for random boxes A ⊇ X and B ⊇ Y, every operation must satisfy
/// op(X, Y) ⊆ op(A, B) (inclusion monotonicity; with X, Y points this is
/// exactly containment of the true value).
pub fn check_interval_inclusion_monotone() {
    const PREC: usize = 64;
    const CASES: usize = 100_000;
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);

    for case in 0..CASES {
        let op = case % 9;
        // positive operands where the domain demands it (div, sqrt, ln, pow)
        let positive = matches!(op, 3 | 4 | 5 | 8);
        let (lo, hi) = if positive { (1, 50) } else { (-50, 50) };
        let p1 = ratio(&mut rng, lo, hi, 1000, PREC);
        let p2 = ratio(&mut rng, lo, hi, 1000, PREC);
        let q1 = ratio(&mut rng, lo, hi, 1000, PREC);
        let q2 = ratio(&mut rng, lo, hi, 1000, PREC);
        let a = p1.hull(&p2);
        let b = q1.hull(&q2);
        // X and Y are members of A and B by construction
        let x = if rng.gen() { p1 } else { p2 };
        let y = if rng.gen() { q1 } else { q2 };

        let (name, small, big) = match op {
            0 => ("add", x.add(&y), a.add(&b)),
            1 => ("sub", x.sub(&y), a.sub(&b)),
            2 => ("mul", x.mul(&y), a.mul(&b)),
            3 => ("div", x.div(&y).unwrap(), a.div(&b).unwrap()),
            4 => ("sqrt", x.sqrt().unwrap(), a.sqrt().unwrap()),
            5 => ("ln", x.ln().unwrap(), a.ln().unwrap()),
            6 => ("sin", x.sin(), a.sin()),
            7 => ("cos", x.cos(), a.cos()),
            // fractional power, the workhorse of the coefficient sequences
            8 => {
                let beta = Interval::beta1(PREC);
                ("pow", x.pow(&beta).unwrap(), a.pow(&beta).unwrap())
            }
            _ => unreachable!(),
        };
        assert!(
            big.contains(&small),
            "case {case}: {name}({x}) = {small} escapes {name}({a}) = {big}"
        );
    }
}

/// The closed form of τ_k agrees with the direct partial sum for every
/// k ≤ 64: both enclose the same real number, so they must intersect.
pub fn check_tau_closed_matches_direct() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    // include an argument small enough to take the near-pole fallback
    let mut xs = vec![Interval::from_ratio(1, 2_000_000, P).unwrap()];
    for _ in 0..4 {
        xs.push(ratio(&mut rng, 0, 3, 1024, P));
    }
    for k in 1..=64u32 {
        for x in &xs {
            if x.is_nonneg() && !x.is_pos() {
                continue; // ratio() may land on 0, where τ is trivially 0
            }
            for alternating in [false, true] {
                let closed = tau(k, x, alternating, TauForm::Closed).unwrap().value;
                let direct = tau(k, x, alternating, TauForm::Direct).unwrap().value;
                assert!(
                    closed.intersect(&direct).is_some(),
                    "tau_{k}({x}, alt={alternating}): closed {closed} vs direct {direct}"
                );
            }
        }
    }
}

/// S = H + K + T as interval enclosures: for a spread of n up to 200 and 32
/// random abscissae each, the whole-sum route and the three-part route must
/// intersect (they enclose the same value).
pub fn check_decomposition_identity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut ns = vec![7u32, 8, 11, 13, 15, 41, 45, 99, 100, 199, 200];
    while ns.len() < 24 {
        let n = rng.gen_range(7..=200);
        if !ns.contains(&n) {
            ns.push(n);
        }
    }
    let beta1 = Interval::beta1(P);
    for n in ns {
        let seq = CoefficientSequence::new(n, &beta1, P).unwrap();
        let dec = build(&seq).unwrap();
        if dec.is_fully_convex() {
            continue;
        }
        for i in 0..32 {
            let x = ratio(&mut rng, 0, 3, 4096, P);
            let alternating = i % 2 == 0;
            let whole = eval_S_seq(&seq, &x, alternating).value;
            let parts = dec
                .eval_h(&x, alternating)
                .add(&dec.eval_k(&x, alternating))
                .add(&dec.eval_t(&x, alternating, TauForm::Closed).unwrap());
            assert!(
                whole.intersect(&parts).is_some(),
                "n={n} x={x} alt={alternating}: S={whole} vs H+K+T={parts}"
            );
        }
    }
}

/// Every split in 7 ≤ n ≤ 200 at β₁ yields an even count of positive,
/// nondecreasing tail weights ending at a_{n−1}.
pub fn check_tail_weight_shape() {
    let beta1 = Interval::beta1(P);
    for n in 7..=200u32 {
        let seq = CoefficientSequence::new(n, &beta1, P).unwrap();
        let dec = build(&seq).unwrap();
        if dec.is_fully_convex() {
            continue;
        }
        let d = dec.d_weights();
        assert_eq!(d.len() as u32, n - dec.m(), "n={n}");
        assert_eq!(d.len() % 2, 0, "n={n}: odd tail weight count");
        assert!(d.iter().all(|w| w.is_pos()), "n={n}: nonpositive weight");
        assert!(
            d.windows(2).all(|w| w[1].ge_certain(&w[0])),
            "n={n}: weights not nondecreasing"
        );
        let last = d.last().unwrap();
        let a_last = seq.a(n - 1).unwrap();
        assert!(
            last.intersect(a_last).is_some(),
            "n={n}: d_{{n-1}} should equal a_{{n-1}}"
        );
    }
}

/// The number of T summands never grows as β grows (the sequence becomes
/// convex): checked across β = 1/2 < β₁ < 7/10 < 4/5 < 1 for n ≤ 60.
pub fn check_summand_count_monotone_in_beta() {
    let betas = [
        BetaSpec::parse("0.5").unwrap().interval(P),
        Interval::beta1(P),
        BetaSpec::parse("0.7").unwrap().interval(P),
        BetaSpec::parse("0.8").unwrap().interval(P),
        BetaSpec::parse("1").unwrap().interval(P),
    ];
    for n in 7..=60u32 {
        let counts: Vec<u32> = betas
            .iter()
            .map(|b| {
                let seq = CoefficientSequence::new(n, b, P).unwrap();
                match split_point(&seq).unwrap() {
                    SplitPoint::FullyConvex => 0,
                    SplitPoint::At(m) => n - m,
                }
            })
            .collect();
        assert!(
            counts.windows(2).all(|w| w[1] <= w[0]),
            "n={n}: summand counts {counts:?} not nonincreasing in beta"
        );
    }
}
