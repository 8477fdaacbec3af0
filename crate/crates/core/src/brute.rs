//! Brute-force grid oracle: a fast f64 scan of S_{n,β} over [0, π] with
//! outward-rounded cell enclosures.
//!
//! This is deliberately independent of the certification pipeline: it knows
//! nothing about decompositions or anchors and simply bounds S on every cell
//! of a uniform grid with a centered Taylor form. Agreement between the two
//! routes (pipeline proves ≥ 0, scan finds no certainly-negative cell) is a
//! cross-check; a certainly-negative cell is a genuine counterexample
//! witness, used to exhibit sharpness below β₁.
//!
//! Every f64 operation is padded outward: one ulp per arithmetic op (IEEE
//! results are correctly rounded, so the true value is within one ulp), four
//! ulps per libm sine/cosine (their rounding is not formally specified; the
//! 1-ulp-accurate implementations in common libms leave 4 ulps a comfortable
//! margin), and four ulps when leaving the high-precision coefficient world.

use crate::error::{Error, Result};
use crate::interval::{bigfloat_to_f64, Interval};
use crate::sinepoly::CoefficientSequence;

/// Steps an f64 one representable value toward +∞.
fn up1(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let b = x.to_bits();
    if x > 0.0 {
        f64::from_bits(b + 1)
    } else {
        f64::from_bits(b - 1)
    }
}

/// Steps an f64 one representable value toward −∞.
fn dn1(x: f64) -> f64 {
    -up1(-x)
}

fn up(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| up1(v))
}

fn dn(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| dn1(v))
}

/// An outward-rounded f64 interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair {
    pub lo: f64,
    pub hi: f64,
}

impl Pair {
    pub fn point(x: f64) -> Self {
        Pair { lo: x, hi: x }
    }

    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Pair { lo, hi }
    }

    pub fn add(self, rhs: Self) -> Self {
        Pair {
            lo: dn(self.lo + rhs.lo, 1),
            hi: up(self.hi + rhs.hi, 1),
        }
    }

    pub fn sub(self, rhs: Self) -> Self {
        Pair {
            lo: dn(self.lo - rhs.hi, 1),
            hi: up(self.hi - rhs.lo, 1),
        }
    }

    pub fn neg(self) -> Self {
        Pair {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(self, rhs: Self) -> Self {
        let cands = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = cands.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Pair {
            lo: dn(lo, 1),
            hi: up(hi, 1),
        }
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            Pair {
                lo: 0.0,
                hi: self.hi.max(-self.lo),
            }
        }
    }

    fn clamp_unit(self) -> Self {
        Pair {
            lo: self.lo.max(-1.0),
            hi: self.hi.min(1.0),
        }
    }
}

/// sin/cos of an f64 point with 4-ulp outward padding, clamped to [−1, 1].
fn sin_pair(x: f64) -> Pair {
    let s = x.sin();
    Pair::new(dn(s, 4), up(s, 4)).clamp_unit()
}

fn cos_pair(x: f64) -> Pair {
    let c = x.cos();
    Pair::new(dn(c, 4), up(c, 4)).clamp_unit()
}

/// Converts a high-precision enclosure to an f64 pair, padding 4 ulps on
/// each side for the binary→decimal→binary round trip.
fn to_pair(v: &Interval) -> Pair {
    Pair::new(dn(bigfloat_to_f64(v.lo()), 4), up(bigfloat_to_f64(v.hi()), 4))
}

/// Certified bounds for S on one grid cell.
#[derive(Debug, Clone, Copy)]
pub struct CellBound {
    pub index: usize,
    /// cell center (an exact f64)
    pub x_mid: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Result of scanning the whole grid.
#[derive(Debug, Clone)]
pub struct BruteScan {
    pub n: u32,
    pub cells: usize,
    /// the cell with the smallest certified lower bound
    pub min_cell: CellBound,
    /// first cell whose certified upper bound is negative, if any: a genuine
    /// witness that S takes negative values there
    pub negative_cell: Option<CellBound>,
}

/// Scans S_{n,β} over a uniform grid of `cells` cells covering [0, π], using
/// the centered form S(c) ± (|S′(c)| h + M₂ h²/2) with M₂ ≥ sup |S″|.
pub fn brute_min(n: u32, beta: &Interval, cells: usize, prec: usize) -> Result<BruteScan> {
    if cells < 4 {
        return Err(Error::Argument(format!(
            "grid needs at least 4 cells, got {cells}"
        )));
    }
    let seq = CoefficientSequence::new(n, beta, prec)?;
    let coeffs: Vec<Pair> = seq.coeffs().iter().map(to_pair).collect();

    // M₂ = Σ k² a_k bounds |S″|; computed once
    let mut m2 = Pair::point(0.0);
    for (i, a) in coeffs.iter().enumerate() {
        let k = (i + 1) as f64;
        m2 = m2.add(a.mul(Pair::point(k * k)));
    }

    // cell geometry: width W with cells·W ≥ π, half-width padded to absorb
    // the rounding of the center ordinates
    let pi_hi = up(std::f64::consts::PI, 1);
    let w = up(pi_hi / cells as f64, 1);
    let h_base = up(w / 2.0, 1);

    let mut min_cell: Option<CellBound> = None;
    let mut negative_cell: Option<CellBound> = None;

    for i in 0..cells {
        let c = (i as f64 + 0.5) * w;
        // |computed c − (i+1/2)W| ≤ ½ ulp(c)
        let h = up(h_base + c * f64::EPSILON, 2);

        // S(c) and S′(c) by the angle-addition recurrence
        let s1 = sin_pair(c);
        let c1 = cos_pair(c);
        let (mut sk, mut ck) = (s1, c1);
        let mut val = Pair::point(0.0);
        let mut deriv = Pair::point(0.0);
        for (j, a) in coeffs.iter().enumerate() {
            let k = (j + 1) as f64;
            val = val.add(a.mul(sk));
            deriv = deriv.add(a.mul(Pair::point(k)).mul(ck));
            let next_s = sk.mul(c1).add(ck.mul(s1)).clamp_unit();
            let next_c = ck.mul(c1).sub(sk.mul(s1)).clamp_unit();
            sk = next_s;
            ck = next_c;
        }

        let hp = Pair::point(h);
        let slack = deriv
            .abs()
            .mul(hp)
            .add(m2.mul(hp).mul(hp).mul(Pair::new(0.5, 0.5)));
        let bound = CellBound {
            index: i,
            x_mid: c,
            lo: dn(val.lo - slack.hi, 1),
            hi: up(val.hi + slack.hi, 1),
        };
        if min_cell.map_or(true, |m| bound.lo < m.lo) {
            min_cell = Some(bound);
        }
        if negative_cell.is_none() && bound.hi < 0.0 {
            negative_cell = Some(bound);
        }
    }

    Ok(BruteScan {
        n,
        cells,
        min_cell: min_cell.expect("at least one cell"),
        negative_cell,
    })
}

/// Returns a witness abscissa where S_{n,β} is certified negative, if the
/// scan finds one. `None` means the grid saw no certainly-negative cell —
/// which is evidence, not proof, of nonnegativity.
pub fn sharpness(n: u32, beta: &Interval, cells: usize, prec: usize) -> Result<Option<f64>> {
    Ok(brute_min(n, beta, cells, prec)?
        .negative_cell
        .map(|c| c.x_mid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::DEFAULT_PREC;
    use crate::sinepoly::BetaSpec;

    const P: usize = DEFAULT_PREC;

    #[test]
    fn pair_arithmetic_is_outward() {
        let a = Pair::point(0.1);
        let b = Pair::point(0.2);
        let s = a.add(b);
        assert!(s.lo < 0.1 + 0.2 && 0.1 + 0.2 < s.hi);
        let p = a.mul(b);
        assert!(p.lo <= 0.02 && 0.02 <= p.hi);
        let n = Pair::new(-2.0, 3.0).abs();
        assert_eq!((n.lo, n.hi), (0.0, 3.0));
    }

    #[test]
    fn sine_is_nonnegative_at_beta1() {
        let b1 = Interval::beta1(P);
        for n in [2u32, 3, 7, 20] {
            let scan = brute_min(n, &b1, 512, P).unwrap();
            assert!(scan.negative_cell.is_none(), "n={n}");
            // the global minimum 0 (endpoints) must stay inside the bounds
            assert!(scan.min_cell.lo <= 0.0);
        }
    }

    #[test]
    fn n3_min_encloses_zero() {
        // at β₁ the n = 3 polynomial is sin x (1 + cos x): 2(5/16)^{β₁} = 1
        // exactly, so the infimum over (0, π) is exactly 0 at the π end
        let scan = brute_min(3, &Interval::beta1(P), 2048, P).unwrap();
        assert!(scan.min_cell.lo <= 0.0 && 0.0 <= scan.min_cell.hi);
        assert!(scan.min_cell.x_mid > 3.0); // attained near π
    }

    #[test]
    fn below_beta1_gives_a_witness() {
        let b = BetaSpec::parse("0.58").unwrap().interval(P);
        let w = sharpness(3, &b, 2048, P).unwrap();
        let x = w.expect("S_{3,0.58} dips negative near pi");
        assert!(x > 2.9 && x < std::f64::consts::PI);
        // and at β₁ itself no witness appears on the same grid
        assert!(sharpness(3, &Interval::beta1(P), 2048, P).unwrap().is_none());
    }

    #[test]
    fn tiny_grid_rejected() {
        assert!(brute_min(5, &Interval::beta1(P), 2, P).is_err());
    }
}
