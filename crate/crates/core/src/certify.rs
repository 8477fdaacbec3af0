//! Certification primitives: monotone-difference point-chain certificates
//! (the `dif` technique), derivative-based monotonicity verification, the
//! Fejér convexity criterion, the ξ(β) endpoint reduction, and the
//! comparison-principle lower bound.
//!
//! Exact-rational Sturm positivity lives in [`crate::sturm`] and is re-exported
//! here for convenience.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::interval::{bigfloat_from_hex, bigfloat_to_hex, Interval};

pub use crate::sturm::{sturm_count, sturm_positive, RationalPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// How the monotonicity of a certificate function is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// Asserted by the caller (established by calculus outside the system).
    Declared,
    /// Certified by `verify_monotone`.
    Certified,
}

/// A function declared (or certified) monotone on a domain interval.
#[derive(Debug, Clone)]
pub struct MonotoneFn {
    pub expr: Expr,
    pub direction: Direction,
    pub domain: Interval,
    pub monotonicity: Monotonicity,
}

impl MonotoneFn {
    pub fn new(expr: Expr, direction: Direction, domain: Interval) -> Self {
        MonotoneFn {
            expr,
            direction,
            domain,
            monotonicity: Monotonicity::Declared,
        }
    }

    pub fn eval(&self, x: &Interval, prec: usize) -> Result<Interval> {
        self.expr.eval(x, prec)
    }

    /// Runs `verify_monotone` and records a pass in `monotonicity`.
    pub fn certify_monotone(&mut self, prec: usize) -> Result<Verdict> {
        let v = verify_monotone(self, prec)?;
        if v == Verdict::Pass {
            self.monotonicity = Monotonicity::Certified;
        }
        Ok(v)
    }
}

/// One checked link of a dif chain.
#[derive(Debug, Clone)]
pub struct Link {
    /// enclosure of g1 at the link's lower-bound point
    pub g1_at: Interval,
    /// enclosure of g2 at the link's upper-bound point
    pub g2_at: Interval,
    /// g1_at − g2_at; its lower endpoint must be strictly positive
    pub diff: Interval,
}

/// A point chain τ₁ < τ₂ < … < τ_m spanning the domain, with interval
/// witnesses proving g1 ≥ g2 pointwise by monotonicity.
///
/// Increasing case: on [τ_i, τ_{i+1}], g1(x) ≥ g1(τ_i) and g2(x) ≤ g2(τ_{i+1}),
/// so the link checks g1(τ_i) − g2(τ_{i+1}) > 0. Decreasing case mirrored.
#[derive(Debug, Clone)]
pub struct DifCertificate {
    pub g1: MonotoneFn,
    pub g2: MonotoneFn,
    pub chain: Vec<Interval>,
    pub links: Vec<Link>,
    pub prec: usize,
}

/// Relative margin demanded beyond strict positivity when building chains.
const DIF_MARGIN_BITS: i32 = 20;
const DIF_BISECT_DEPTH: u32 = 60;

fn link_points<'a>(
    dir: Direction,
    chain: &'a [Interval],
    i: usize,
) -> (&'a Interval, &'a Interval) {
    match dir {
        Direction::Increasing => (&chain[i], &chain[i + 1]),
        Direction::Decreasing => (&chain[i + 1], &chain[i]),
    }
}

fn compute_links(
    g1: &MonotoneFn,
    g2: &MonotoneFn,
    chain: &[Interval],
    prec: usize,
) -> Result<Vec<Link>> {
    let mut links = Vec::with_capacity(chain.len() - 1);
    for i in 0..chain.len() - 1 {
        let (p1, p2) = link_points(g1.direction, chain, i);
        let g1_at = g1.eval(p1, prec)?;
        let g2_at = g2.eval(p2, prec)?;
        let diff = g1_at.sub(&g2_at);
        links.push(Link { g1_at, g2_at, diff });
    }
    Ok(links)
}

impl DifCertificate {
    /// Builds and validates a certificate from an explicitly given chain
    /// (e.g. one transcribed from a published table).
    pub fn from_chain(
        g1: MonotoneFn,
        g2: MonotoneFn,
        chain: Vec<Interval>,
        prec: usize,
    ) -> Result<DifCertificate> {
        if g1.direction != g2.direction {
            return Err(Error::Argument("dif requires a shared direction".into()));
        }
        if chain.len() < 2 {
            return Err(Error::Argument("chain needs at least two points".into()));
        }
        let links = compute_links(&g1, &g2, &chain, prec)?;
        Ok(DifCertificate {
            g1,
            g2,
            chain,
            links,
            prec,
        })
    }

    fn chain_is_valid(&self) -> bool {
        let d = &self.g1.domain;
        let spans = self.chain[0].lo().cmp(d.lo()).map_or(false, |c| c <= 0)
            && self.chain[self.chain.len() - 1]
                .hi()
                .cmp(d.hi())
                .map_or(false, |c| c >= 0);
        let increasing = self
            .chain
            .windows(2)
            .all(|w| w[0].hi().cmp(w[1].lo()).map_or(false, |c| c < 0));
        spans && increasing
    }
}

/// Greedy chain construction: from the current point, bisect for the farthest
/// next point whose link still clears a 2⁻²⁰ relative margin.
pub fn dif_certify(
    g1: &MonotoneFn,
    g2: &MonotoneFn,
    max_points: usize,
    prec: usize,
) -> Result<DifCertificate> {
    if g1.direction != g2.direction {
        return Err(Error::Argument("dif requires a shared direction".into()));
    }
    let dom = &g1.domain;
    let alpha = Interval::from_endpoints(dom.lo().clone(), dom.lo().clone(), prec);
    let beta = Interval::from_endpoints(dom.hi().clone(), dom.hi().clone(), prec);
    let dir = g1.direction;

    // link from a to b holds (with margin) if bound(a) − other(b) > margin
    let link_ok = |cur: &Interval, next: &Interval| -> Result<bool> {
        let (v1, v2) = match dir {
            Direction::Increasing => (g1.eval(cur, prec)?, g2.eval(next, prec)?),
            Direction::Decreasing => (g1.eval(next, prec)?, g2.eval(cur, prec)?),
        };
        let diff = v1.sub(&v2);
        let margin = scale_down(&v1.abs(), DIF_MARGIN_BITS, prec);
        Ok(diff.gt_certain(&margin))
    };

    let mut chain = vec![alpha];
    loop {
        let cur = chain.last().unwrap().clone();
        if link_ok(&cur, &beta)? {
            chain.push(beta);
            break;
        }
        if chain.len() >= max_points {
            return Err(Error::Certification(format!(
                "dif chain exceeded {max_points} points; stuck near {}",
                cur
            )));
        }
        // bisect for the largest good step toward beta
        let mut good = cur.clone();
        let mut bad = beta.clone();
        for _ in 0..DIF_BISECT_DEPTH {
            let mid = good.hull(&bad).mid();
            let cand = Interval::from_endpoints(mid.clone(), mid, prec);
            if link_ok(&cur, &cand)? {
                good = cand;
            } else {
                bad = cand;
            }
        }
        if good.hi().cmp(cur.hi()).map_or(true, |c| c <= 0) {
            return Err(Error::Certification(format!(
                "dif made no progress at {} (functions too close or not ordered)",
                cur
            )));
        }
        chain.push(good);
    }
    DifCertificate::from_chain(g1.clone(), g2.clone(), chain, prec)
}

/// |v| · 2^{−bits}
fn scale_down(v: &Interval, bits: i32, prec: usize) -> Interval {
    let scale = Interval::from_ratio(1, 1i64 << bits, prec).unwrap();
    v.mul(&scale)
}

/// Re-evaluates every link with fresh interval arithmetic. Pass iff the chain
/// is valid, every recomputed difference is strictly positive, and the stored
/// witnesses match the recomputation bit-for-bit (tamper evidence).
pub fn check_certificate(cert: &DifCertificate) -> bool {
    if cert.g1.direction != cert.g2.direction
        || cert.chain.len() < 2
        || cert.links.len() != cert.chain.len() - 1
        || !cert.chain_is_valid()
    {
        return false;
    }
    let fresh = match compute_links(&cert.g1, &cert.g2, &cert.chain, cert.prec) {
        Ok(l) => l,
        Err(_) => return false,
    };
    fresh.iter().zip(&cert.links).all(|(f, s)| {
        f.diff.is_pos()
            && same_interval(&f.g1_at, &s.g1_at)
            && same_interval(&f.g2_at, &s.g2_at)
            && same_interval(&f.diff, &s.diff)
    })
}

fn same_interval(a: &Interval, b: &Interval) -> bool {
    a.lo().cmp(b.lo()) == Some(0) && a.hi().cmp(b.hi()) == Some(0)
}

/// Certifies the declared direction by signing the derivative enclosure over
/// an adaptive subdivision. Wide positive domains split at the geometric mean
/// so relative (not absolute) width shrinks per level.
pub fn verify_monotone(f: &MonotoneFn, prec: usize) -> Result<Verdict> {
    fn recurse(f: &MonotoneFn, dom: &Interval, depth: u32, prec: usize) -> Result<Verdict> {
        let d = match f.expr.eval_d(dom, prec) {
            Ok((_, d)) => d,
            // domain errors on a wide enclosure may vanish after splitting
            Err(_) if depth > 0 => return split_and_recurse(f, dom, depth, prec),
            Err(e) => return Err(e),
        };
        let ok = match f.direction {
            Direction::Increasing => d.is_nonneg(),
            Direction::Decreasing => d.is_nonpos(),
        };
        if ok {
            return Ok(Verdict::Pass);
        }
        let refuted = match f.direction {
            Direction::Increasing => d.is_neg(),
            Direction::Decreasing => d.is_pos(),
        };
        if refuted {
            return Ok(Verdict::Fail);
        }
        if depth == 0 {
            return Ok(Verdict::Inconclusive);
        }
        split_and_recurse(f, dom, depth, prec)
    }

    fn split_and_recurse(
        f: &MonotoneFn,
        dom: &Interval,
        depth: u32,
        prec: usize,
    ) -> Result<Verdict> {
        let (a, b) = split_domain(dom, prec);
        let left = recurse(f, &a, depth - 1, prec)?;
        if left == Verdict::Fail {
            return Ok(Verdict::Fail);
        }
        let right = recurse(f, &b, depth - 1, prec)?;
        if right == Verdict::Fail {
            return Ok(Verdict::Fail);
        }
        if left == Verdict::Pass && right == Verdict::Pass {
            Ok(Verdict::Pass)
        } else {
            Ok(Verdict::Inconclusive)
        }
    }

    recurse(f, &f.domain, 12, prec)
}

/// Branch-and-bound supremum bound: certifies f(x) < bound for every x in
/// `dom` from value enclosures alone (no derivatives), splitting adaptively
/// wherever the enclosure is too wide to decide. Wide positive domains are
/// split at the geometric mean, so ranges like [45, 10⁶] stay tractable.
pub fn verify_below(
    f: &Expr,
    dom: &Interval,
    bound: &Interval,
    max_depth: u32,
    prec: usize,
) -> Result<Verdict> {
    fn recurse(
        f: &Expr,
        dom: &Interval,
        bound: &Interval,
        depth: u32,
        prec: usize,
    ) -> Result<Verdict> {
        let v = match f.eval(dom, prec) {
            Ok(v) => v,
            Err(_) if depth > 0 => return split(f, dom, bound, depth, prec),
            Err(e) => return Err(e),
        };
        if v.lt_certain(bound) {
            return Ok(Verdict::Pass);
        }
        if v.ge_certain(bound) {
            return Ok(Verdict::Fail);
        }
        if depth == 0 {
            return Ok(Verdict::Inconclusive);
        }
        split(f, dom, bound, depth, prec)
    }

    fn split(
        f: &Expr,
        dom: &Interval,
        bound: &Interval,
        depth: u32,
        prec: usize,
    ) -> Result<Verdict> {
        let (a, b) = split_domain(dom, prec);
        let left = recurse(f, &a, bound, depth - 1, prec)?;
        if left == Verdict::Fail {
            return Ok(Verdict::Fail);
        }
        let right = recurse(f, &b, bound, depth - 1, prec)?;
        if right == Verdict::Fail {
            return Ok(Verdict::Fail);
        }
        if left == Verdict::Pass && right == Verdict::Pass {
            Ok(Verdict::Pass)
        } else {
            Ok(Verdict::Inconclusive)
        }
    }

    recurse(f, dom, bound, max_depth, prec)
}

/// Geometric-mean split for wide strictly-positive domains, arithmetic
/// midpoint otherwise.
fn split_domain(dom: &Interval, prec: usize) -> (Interval, Interval) {
    if dom.is_pos() {
        let four = Interval::exact_int(4, prec);
        let ratio = dom
            .hi_interval()
            .div(&dom.lo_interval())
            .expect("positive domain");
        if ratio.gt_certain(&four) {
            if let Ok(g) = dom.lo_interval().mul(&dom.hi_interval()).sqrt() {
                let m = g.mid();
                let left = Interval::from_endpoints(dom.lo().clone(), m.clone(), prec);
                let right = Interval::from_endpoints(m, dom.hi().clone(), prec);
                return (left, right);
            }
        }
    }
    dom.split()
}

/// Fejér criterion, appended-zero form: pass iff every second difference of
/// {c₁,…,c_m, 0} is certified nonnegative.
pub fn fejer_check(c: &[Interval]) -> Verdict {
    if c.is_empty() {
        return Verdict::Fail;
    }
    let prec = c[0].prec();
    let zero = Interval::zero(prec);
    let two = Interval::exact_int(2, prec);
    let get = |i: usize| -> &Interval { if i < c.len() { &c[i] } else { &zero } };
    let mut verdict = Verdict::Pass;
    for j in 1..=c.len() {
        // second difference at position j+1 of the 1-based appended sequence
        let d = get(j - 1).sub(&two.mul(get(j))).add(get(j + 1));
        if d.is_neg() {
            return Verdict::Fail;
        }
        if !d.is_nonneg() {
            verdict = Verdict::Inconclusive;
        }
    }
    verdict
}

/// ξ(β) = λA^β − (λ+μ)B^β + μC^β with 0 < C < B < A ≤ 1, λ, μ ≥ 0.
#[derive(Debug, Clone)]
pub struct PowerDiffFn {
    pub lambda: Rational64,
    pub mu: Rational64,
    pub a: Rational64,
    pub b: Rational64,
    pub c: Rational64,
}

impl PowerDiffFn {
    pub fn new(
        lambda: Rational64,
        mu: Rational64,
        a: Rational64,
        b: Rational64,
        c: Rational64,
    ) -> Result<Self> {
        let zero = Rational64::new(0, 1);
        let one = Rational64::new(1, 1);
        if lambda < zero || mu < zero || !(zero < c && c < b && b < a && a <= one) {
            return Err(Error::Argument(
                "PowerDiffFn requires λ, μ ≥ 0 and 0 < C < B < A ≤ 1".into(),
            ));
        }
        Ok(PowerDiffFn { lambda, mu, a, b, c })
    }

    fn terms(&self, prec: usize) -> Result<[(Interval, Interval); 3]> {
        let r = |q: Rational64| Interval::from_ratio(*q.numer(), *q.denom(), prec);
        Ok([
            (r(self.lambda)?, r(self.a)?),
            (r(self.lambda + self.mu)?.neg(), r(self.b)?),
            (r(self.mu)?, r(self.c)?),
        ])
    }

    pub fn eval(&self, beta: &Interval, prec: usize) -> Result<Interval> {
        let mut acc = Interval::zero(prec);
        for (coef, base) in self.terms(prec)? {
            acc = acc.add(&coef.mul(&base.pow(beta)?));
        }
        Ok(acc)
    }

    /// ξ′(β) = λA^β ln A − (λ+μ)B^β ln B + μC^β ln C
    pub fn eval_deriv(&self, beta: &Interval, prec: usize) -> Result<Interval> {
        let mut acc = Interval::zero(prec);
        for (coef, base) in self.terms(prec)? {
            acc = acc.add(&coef.mul(&base.pow(beta)?).mul(&base.ln()?));
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiVerdict {
    /// ξ is nonincreasing on [β_low, 1]: its supremum sits at β_low.
    SupAtLow,
    /// ξ is nondecreasing on [β_low, 1]: its supremum sits at 1.
    SupAtHigh,
    Inconclusive,
}

/// Endpoint reduction: a single certified derivative sign at an endpoint of
/// [β_low, 1] settles which endpoint dominates ξ on the whole range.
pub fn xi_endpoint_reduce(
    f: &PowerDiffFn,
    beta_low: &Interval,
    prec: usize,
) -> Result<XiVerdict> {
    let at_low = f.eval(beta_low, prec)?;
    if !at_low.is_nonneg() {
        return Err(Error::Certification(format!(
            "hypothesis ξ(β_low) ≥ 0 not certified: got {at_low}"
        )));
    }
    let one = Interval::one(prec);
    if f.eval_deriv(&one, prec)?.is_nonneg() {
        return Ok(XiVerdict::SupAtHigh);
    }
    if f.eval_deriv(beta_low, prec)?.is_nonpos() {
        return Ok(XiVerdict::SupAtLow);
    }
    Ok(XiVerdict::Inconclusive)
}

/// Comparison-principle lower bound for alternating sine polynomials with
/// positive decreasing coefficients led by c1 ≥ c2:
/// (c1(sin(x/2) + sin(3x/2)) − c2(1 + sin(3x/2))) / (2cos(x/2)).
pub fn alt_lower_bound(c1: &Interval, c2: &Interval, x: &Interval) -> Result<Interval> {
    let prec = x.prec();
    let two = Interval::exact_int(2, prec);
    let half = x.div(&two)?;
    let s1 = half.sin();
    let s3 = half.mul(&Interval::exact_int(3, prec)).sin();
    let num = c1.mul(&s1.add(&s3)).sub(&c2.mul(&Interval::one(prec).add(&s3)));
    num.div(&two.mul(&half.cos()))
}

// ------------------------------------------------------------- serialization

fn interval_to_hex(v: &Interval) -> String {
    format!("{} {}", bigfloat_to_hex(v.lo()), bigfloat_to_hex(v.hi()))
}

fn interval_from_hex(lo: &str, hi: &str, prec: usize) -> Result<Interval> {
    let lo = bigfloat_from_hex(lo)?;
    let hi = bigfloat_from_hex(hi)?;
    if lo.cmp(&hi).map_or(true, |c| c > 0) {
        return Err(Error::Parse("interval endpoints out of order".into()));
    }
    Ok(Interval::from_endpoints(lo, hi, prec))
}

impl DifCertificate {
    /// Line-oriented text form. Endpoints are emitted both as decimals (for
    /// reading) and as exact hex (for bit-exact round-tripping).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("difcert v1\n");
        out.push_str(&format!("precision {}\n", self.prec));
        out.push_str(&format!(
            "direction {}\n",
            match self.g1.direction {
                Direction::Increasing => "increasing",
                Direction::Decreasing => "decreasing",
            }
        ));
        out.push_str(&format!(
            "monotonicity {}\n",
            match (self.g1.monotonicity, self.g2.monotonicity) {
                (Monotonicity::Certified, Monotonicity::Certified) => "certified",
                _ => "declared",
            }
        ));
        out.push_str(&format!("domain {}\n", interval_to_hex(&self.g1.domain)));
        out.push_str(&format!("g1 {}\n", self.g1.expr));
        out.push_str(&format!("g2 {}\n", self.g2.expr));
        out.push_str(&format!("points {}\n", self.chain.len()));
        for p in &self.chain {
            out.push_str(&format!("point {} ~{}\n", interval_to_hex(p), p));
        }
        for (i, l) in self.links.iter().enumerate() {
            out.push_str(&format!(
                "link {} g1 {} g2 {} diff {} ~{} ~{} difflo {:e}\n",
                i + 1,
                interval_to_hex(&l.g1_at),
                interval_to_hex(&l.g2_at),
                interval_to_hex(&l.diff),
                l.g1_at,
                l.g2_at,
                crate::interval::bigfloat_to_f64(l.diff.lo()),
            ));
        }
        out.push_str("end difcert\n");
        out
    }

    pub fn from_text(text: &str) -> Result<DifCertificate> {
        let mut lines = text.lines();
        let bad = |what: &str| Error::Parse(format!("certificate: {what}"));
        let mut expect = |tag: &str| -> Result<Vec<String>> {
            let line = lines.next().ok_or_else(|| bad("truncated file"))?;
            let mut parts = line.split_whitespace().map(str::to_owned);
            if parts.next().as_deref() != Some(tag) {
                return Err(bad(&format!("expected `{tag}` line, got {line:?}")));
            }
            Ok(parts.collect())
        };

        if expect("difcert")?.first().map(String::as_str) != Some("v1") {
            return Err(bad("unsupported version"));
        }
        let prec: usize = expect("precision")?
            .first()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad precision"))?;
        let direction = match expect("direction")?.first().map(String::as_str) {
            Some("increasing") => Direction::Increasing,
            Some("decreasing") => Direction::Decreasing,
            _ => return Err(bad("bad direction")),
        };
        let monotonicity = match expect("monotonicity")?.first().map(String::as_str) {
            Some("certified") => Monotonicity::Certified,
            Some("declared") => Monotonicity::Declared,
            _ => return Err(bad("bad monotonicity")),
        };
        let dom = expect("domain")?;
        if dom.len() < 2 {
            return Err(bad("bad domain"));
        }
        let domain = interval_from_hex(&dom[0], &dom[1], prec)?;
        let g1_expr: Expr = expect("g1")?.join(" ").parse()?;
        let g2_expr: Expr = expect("g2")?.join(" ").parse()?;
        let npoints: usize = expect("points")?
            .first()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad point count"))?;
        if npoints < 2 {
            return Err(bad("chain needs at least two points"));
        }
        let mut chain = Vec::with_capacity(npoints);
        for _ in 0..npoints {
            let p = expect("point")?;
            if p.len() < 2 {
                return Err(bad("bad point"));
            }
            chain.push(interval_from_hex(&p[0], &p[1], prec)?);
        }
        let mut links = Vec::with_capacity(npoints - 1);
        for i in 0..npoints - 1 {
            let l = expect("link")?;
            // link <i> g1 <lo> <hi> g2 <lo> <hi> diff <lo> <hi> …
            if l.len() < 10
                || l[0] != (i + 1).to_string()
                || l[1] != "g1"
                || l[4] != "g2"
                || l[7] != "diff"
            {
                return Err(bad("bad link record"));
            }
            links.push(Link {
                g1_at: interval_from_hex(&l[2], &l[3], prec)?,
                g2_at: interval_from_hex(&l[5], &l[6], prec)?,
                diff: interval_from_hex(&l[8], &l[9], prec)?,
            });
        }
        expect("end")?;

        let mk = |expr: Expr| MonotoneFn {
            expr,
            direction,
            domain: domain.clone(),
            monotonicity,
        };
        Ok(DifCertificate {
            g1: mk(g1_expr),
            g2: mk(g2_expr),
            chain,
            links,
            prec,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{int, rat};
    use crate::interval::DEFAULT_PREC;

    fn iv(s: &str) -> Interval {
        Interval::from_dec_str(s, DEFAULT_PREC).unwrap()
    }

    fn unit() -> Interval {
        Interval::zero(DEFAULT_PREC).hull(&Interval::one(DEFAULT_PREC))
    }

    #[test]
    fn constants_one_link() {
        let g1 = MonotoneFn::new(int(1), Direction::Increasing, unit());
        let g2 = MonotoneFn::new(int(0), Direction::Increasing, unit());
        let cert = dif_certify(&g1, &g2, 64, DEFAULT_PREC).unwrap();
        assert_eq!(cert.chain.len(), 2);
        assert!(check_certificate(&cert));
    }

    #[test]
    fn exp_vs_linear() {
        // exp(x) ≥ 1 + x on [0.1, 1], both increasing
        let dom = iv("0.1").hull(&Interval::one(DEFAULT_PREC));
        let g1 = MonotoneFn::new(Expr::X.exp(), Direction::Increasing, dom.clone());
        let g2 = MonotoneFn::new(int(1).add(Expr::X), Direction::Increasing, dom);
        let cert = dif_certify(&g1, &g2, 40, DEFAULT_PREC).unwrap();
        assert!(cert.chain.len() <= 40);
        assert!(check_certificate(&cert));
        // every stored diff is strictly positive
        assert!(cert.links.iter().all(|l| l.diff.is_pos()));
    }

    #[test]
    fn touching_functions_fail() {
        // g1 = g2 = x: no strict margin anywhere
        let g1 = MonotoneFn::new(Expr::X, Direction::Increasing, unit());
        let g2 = MonotoneFn::new(Expr::X, Direction::Increasing, unit());
        assert!(dif_certify(&g1, &g2, 16, DEFAULT_PREC).is_err());
    }

    #[test]
    fn decreasing_direction() {
        // 1/x ≥ 1/(x + 1/10) on [1, 2], both decreasing
        let dom = Interval::one(DEFAULT_PREC).hull(&Interval::exact_int(2, DEFAULT_PREC));
        let g1 = MonotoneFn::new(int(1).div(Expr::X), Direction::Decreasing, dom.clone());
        let g2 = MonotoneFn::new(
            int(1).div(Expr::X.add(rat(1, 10))),
            Direction::Decreasing,
            dom,
        );
        let cert = dif_certify(&g1, &g2, 64, DEFAULT_PREC).unwrap();
        assert!(check_certificate(&cert));
    }

    #[test]
    fn non_monotone_chain_rejected() {
        let g1 = MonotoneFn::new(int(1), Direction::Increasing, unit());
        let g2 = MonotoneFn::new(int(0), Direction::Increasing, unit());
        let chain = vec![
            Interval::zero(DEFAULT_PREC),
            iv("0.7"),
            iv("0.3"),
            Interval::one(DEFAULT_PREC),
        ];
        let cert = DifCertificate::from_chain(g1, g2, chain, DEFAULT_PREC).unwrap();
        assert!(!check_certificate(&cert));
    }

    #[test]
    fn tampered_certificate_detected() {
        let dom = iv("0.1").hull(&Interval::one(DEFAULT_PREC));
        let g1 = MonotoneFn::new(Expr::X.exp(), Direction::Increasing, dom.clone());
        let g2 = MonotoneFn::new(int(1).add(Expr::X), Direction::Increasing, dom);
        let mut cert = dif_certify(&g1, &g2, 40, DEFAULT_PREC).unwrap();
        assert!(check_certificate(&cert));
        cert.links[0].diff = cert.links[0].diff.add(&iv("0.125"));
        assert!(!check_certificate(&cert));
    }

    #[test]
    fn verify_monotone_basics() {
        let id = MonotoneFn::new(Expr::X, Direction::Increasing, unit());
        assert_eq!(verify_monotone(&id, DEFAULT_PREC).unwrap(), Verdict::Pass);
        let pi_dom = Interval::zero(DEFAULT_PREC).hull(&Interval::pi(DEFAULT_PREC));
        let sine = MonotoneFn::new(Expr::X.sin(), Direction::Increasing, pi_dom);
        assert_ne!(verify_monotone(&sine, DEFAULT_PREC).unwrap(), Verdict::Pass);
    }

    #[test]
    fn verify_monotone_wide_domain() {
        // (2x−1)/((x+1)(x−1)^{1/10}) is decreasing on [15, 10⁶]
        let f = int(2)
            .mul(Expr::X)
            .sub(int(1))
            .div(Expr::X.add(int(1)).mul(Expr::X.sub(int(1)).pow(rat(1, 10))));
        let dom = Interval::exact_int(15, DEFAULT_PREC)
            .hull(&Interval::exact_int(1_000_000, DEFAULT_PREC));
        let m = MonotoneFn::new(f, Direction::Decreasing, dom);
        assert_eq!(verify_monotone(&m, DEFAULT_PREC).unwrap(), Verdict::Pass);
    }

    #[test]
    fn fejer_examples() {
        let p = DEFAULT_PREC;
        let c = |v: i64| Interval::exact_int(v, p);
        assert_eq!(fejer_check(&[c(2), c(2)]), Verdict::Fail);
        assert_eq!(fejer_check(&[c(3), c(2), c(1)]), Verdict::Pass);
        assert_eq!(fejer_check(&[c(4), c(2), c(1)]), Verdict::Pass);
        // ambiguous: a second difference enclosure straddling zero
        let eps = iv("0.000001");
        let wobble = c(2).sub(&eps).hull(&c(2).add(&eps));
        assert_eq!(fejer_check(&[c(3), wobble, c(1)]), Verdict::Inconclusive);
    }

    #[test]
    fn xi_reduction_cases() {
        let p = DEFAULT_PREC;
        let b1 = Interval::beta1(p);
        let r = Rational64::new;
        // λ=1, μ=0, bases below 1/e: ξ = A^β − B^β decreasing in β
        let f = PowerDiffFn::new(r(1, 1), r(0, 1), r(1, 5), r(1, 10), r(1, 20)).unwrap();
        assert_eq!(xi_endpoint_reduce(&f, &b1, p).unwrap(), XiVerdict::SupAtLow);
        // bases above 1/e flip the verdict: A^β − B^β increasing in β
        let h = PowerDiffFn::new(r(1, 1), r(0, 1), r(3, 4), r(1, 2), r(1, 4)).unwrap();
        assert_eq!(xi_endpoint_reduce(&h, &b1, p).unwrap(), XiVerdict::SupAtHigh);
        // λ=0, μ=1, B close above C: ξ = −B^β + C^β ≤ 0 fails the hypothesis
        let g = PowerDiffFn::new(r(0, 1), r(1, 1), r(3, 4), r(1, 2), r(1, 4)).unwrap();
        assert!(xi_endpoint_reduce(&g, &b1, p).is_err());
    }

    #[test]
    fn alt_lower_bound_formula() {
        let p = DEFAULT_PREC;
        let one = Interval::one(p);
        let x = Interval::pi(p).div(&Interval::exact_int(2, p)).unwrap();
        let b = alt_lower_bound(&one, &one, &x).unwrap();
        // (sin(π/4) − 1)/(2cos(π/4))
        let q = Interval::pi(p).div(&Interval::exact_int(4, p)).unwrap();
        let expect = q
            .sin()
            .sub(&one)
            .div(&Interval::exact_int(2, p).mul(&q.cos()))
            .unwrap();
        assert!(b.intersect(&expect).is_some());
        assert!(b.sub(&expect).abs().width_f64() < 1e-30);
    }

    #[test]
    fn serialization_round_trip() {
        let dom = iv("0.1").hull(&Interval::one(DEFAULT_PREC));
        let g1 = MonotoneFn::new(Expr::X.exp(), Direction::Increasing, dom.clone());
        let g2 = MonotoneFn::new(int(1).add(Expr::X), Direction::Increasing, dom);
        let cert = dif_certify(&g1, &g2, 40, DEFAULT_PREC).unwrap();
        let text = cert.to_text();
        let back = DifCertificate::from_text(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert!(check_certificate(&back));
    }

    #[test]
    fn below_bound_on_wide_domain() {
        let p = DEFAULT_PREC;
        // x·e^{−x} < 0.37 on [1/2, 10⁶] (max e⁻¹ ≈ 0.3679 at x = 1)
        let f = Expr::X.mul(Expr::X.neg().exp());
        let dom = iv("0.5").hull(&Interval::exact_int(1_000_000, p));
        let bound = iv("0.37");
        assert_eq!(
            verify_below(&f, &dom, &bound, 40, p).unwrap(),
            Verdict::Pass
        );
        // 0.367 < e⁻¹, so the same claim with that bound must not pass
        let tight = iv("0.367");
        assert_ne!(
            verify_below(&f, &dom, &tight, 20, p).unwrap(),
            Verdict::Pass
        );
        // a bound the function definitely exceeds is refuted outright
        assert_eq!(
            verify_below(&f, &dom, &iv("0.1"), 20, p).unwrap(),
            Verdict::Fail
        );
    }

    #[test]
    fn truncated_text_rejected() {
        let g1 = MonotoneFn::new(int(1), Direction::Increasing, unit());
        let g2 = MonotoneFn::new(int(0), Direction::Increasing, unit());
        let cert = dif_certify(&g1, &g2, 8, DEFAULT_PREC).unwrap();
        let text = cert.to_text();
        let cut = &text[..text.len() / 2];
        assert!(DifCertificate::from_text(cut).is_err());
    }
}
