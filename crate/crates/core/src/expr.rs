//! Univariate expression trees with interval evaluation and forward-mode
//! derivative enclosures. These describe the g₁/g₂ functions inside
//! certificates, so they serialize to a compact s-expression form that
//! round-trips exactly.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    X,
    Rat(Rational64),
    Beta1,
    Beta2,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// Power with an x-free exponent (the only form the paper needs).
    Pow(Box<Expr>, Box<Expr>),
    Ln(Box<Expr>),
    Exp(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Sqrt(Box<Expr>),
}

pub fn rat(n: i64, d: i64) -> Expr {
    Expr::Rat(Rational64::new(n, d))
}

pub fn int(n: i64) -> Expr {
    rat(n, 1)
}

impl Expr {
    pub fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
    pub fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
    pub fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
    pub fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
    pub fn pow(self, e: Expr) -> Expr {
        Expr::Pow(Box::new(self), Box::new(e))
    }
    pub fn ln(self) -> Expr {
        Expr::Ln(Box::new(self))
    }
    pub fn exp(self) -> Expr {
        Expr::Exp(Box::new(self))
    }
    pub fn sin(self) -> Expr {
        Expr::Sin(Box::new(self))
    }
    pub fn cos(self) -> Expr {
        Expr::Cos(Box::new(self))
    }
    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    pub fn contains_x(&self) -> bool {
        match self {
            Expr::X => true,
            Expr::Rat(_) | Expr::Beta1 | Expr::Beta2 => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.contains_x() || b.contains_x(),
            Expr::Neg(a) | Expr::Ln(a) | Expr::Exp(a) | Expr::Sin(a) | Expr::Cos(a)
            | Expr::Sqrt(a) => a.contains_x(),
        }
    }

    pub fn eval(&self, x: &Interval, prec: usize) -> Result<Interval> {
        Ok(match self {
            Expr::X => x.clone(),
            Expr::Rat(r) => Interval::from_ratio(*r.numer(), *r.denom(), prec)?,
            Expr::Beta1 => Interval::beta1(prec),
            Expr::Beta2 => Interval::beta2(prec),
            Expr::Add(a, b) => a.eval(x, prec)?.add(&b.eval(x, prec)?),
            Expr::Sub(a, b) => a.eval(x, prec)?.sub(&b.eval(x, prec)?),
            Expr::Mul(a, b) => a.eval(x, prec)?.mul(&b.eval(x, prec)?),
            Expr::Div(a, b) => a.eval(x, prec)?.div(&b.eval(x, prec)?)?,
            Expr::Neg(a) => a.eval(x, prec)?.neg(),
            Expr::Pow(a, b) => a.eval(x, prec)?.pow(&b.eval(x, prec)?)?,
            Expr::Ln(a) => a.eval(x, prec)?.ln()?,
            Expr::Exp(a) => a.eval(x, prec)?.exp(),
            Expr::Sin(a) => a.eval(x, prec)?.sin(),
            Expr::Cos(a) => a.eval(x, prec)?.cos(),
            Expr::Sqrt(a) => a.eval(x, prec)?.sqrt()?,
        })
    }

    /// Forward-mode (value, derivative) enclosure pair.
    pub fn eval_d(&self, x: &Interval, prec: usize) -> Result<(Interval, Interval)> {
        let zero = || Interval::zero(prec);
        Ok(match self {
            Expr::X => (x.clone(), Interval::one(prec)),
            Expr::Rat(r) => (Interval::from_ratio(*r.numer(), *r.denom(), prec)?, zero()),
            Expr::Beta1 => (Interval::beta1(prec), zero()),
            Expr::Beta2 => (Interval::beta2(prec), zero()),
            Expr::Add(a, b) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let (bv, bd) = b.eval_d(x, prec)?;
                (av.add(&bv), ad.add(&bd))
            }
            Expr::Sub(a, b) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let (bv, bd) = b.eval_d(x, prec)?;
                (av.sub(&bv), ad.sub(&bd))
            }
            Expr::Mul(a, b) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let (bv, bd) = b.eval_d(x, prec)?;
                (av.mul(&bv), ad.mul(&bv).add(&av.mul(&bd)))
            }
            Expr::Div(a, b) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let (bv, bd) = b.eval_d(x, prec)?;
                let v = av.div(&bv)?;
                let d = ad.mul(&bv).sub(&av.mul(&bd)).div(&bv.mul(&bv))?;
                (v, d)
            }
            Expr::Neg(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                (av.neg(), ad.neg())
            }
            Expr::Pow(a, b) => {
                if b.contains_x() {
                    return Err(Error::Argument(
                        "pow derivative requires an x-free exponent".into(),
                    ));
                }
                let (av, ad) = a.eval_d(x, prec)?;
                let bv = b.eval(x, prec)?;
                let v = av.pow(&bv)?;
                // (f^b)' = b f^{b−1} f' = b (v / f) f'; f > 0 from pow's domain
                let d = bv.mul(&v.div(&av)?).mul(&ad);
                (v, d)
            }
            Expr::Ln(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                (av.ln()?, ad.div(&av)?)
            }
            Expr::Exp(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let v = av.exp();
                let d = v.mul(&ad);
                (v, d)
            }
            Expr::Sin(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                (av.sin(), av.cos().mul(&ad))
            }
            Expr::Cos(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                (av.cos(), av.sin().neg().mul(&ad))
            }
            Expr::Sqrt(a) => {
                let (av, ad) = a.eval_d(x, prec)?;
                let v = av.sqrt()?;
                let d = ad.div(&Interval::exact_int(2, prec).mul(&v))?;
                (v, d)
            }
        })
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expr::X => write!(f, "x"),
            Expr::Rat(r) => write!(f, "(rat {} {})", r.numer(), r.denom()),
            Expr::Beta1 => write!(f, "beta1"),
            Expr::Beta2 => write!(f, "beta2"),
            Expr::Add(a, b) => write!(f, "(add {a} {b})"),
            Expr::Sub(a, b) => write!(f, "(sub {a} {b})"),
            Expr::Mul(a, b) => write!(f, "(mul {a} {b})"),
            Expr::Div(a, b) => write!(f, "(div {a} {b})"),
            Expr::Neg(a) => write!(f, "(neg {a})"),
            Expr::Pow(a, b) => write!(f, "(pow {a} {b})"),
            Expr::Ln(a) => write!(f, "(ln {a})"),
            Expr::Exp(a) => write!(f, "(exp {a})"),
            Expr::Sin(a) => write!(f, "(sin {a})"),
            Expr::Cos(a) => write!(f, "(cos {a})"),
            Expr::Sqrt(a) => write!(f, "(sqrt {a})"),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        let mut toks = tokenize(s);
        let e = parse_expr(&mut toks)?;
        if toks.next().is_some() {
            return Err(Error::Parse("trailing tokens after expression".into()));
        }
        Ok(e)
    }
}

fn tokenize(s: &str) -> std::vec::IntoIter<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_owned)
        .collect::<Vec<_>>()
        .into_iter()
}

fn parse_expr(toks: &mut std::vec::IntoIter<String>) -> Result<Expr> {
    let tok = toks
        .next()
        .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
    match tok.as_str() {
        "x" => Ok(Expr::X),
        "beta1" => Ok(Expr::Beta1),
        "beta2" => Ok(Expr::Beta2),
        "(" => {
            let head = toks
                .next()
                .ok_or_else(|| Error::Parse("empty list".into()))?;
            let e = match head.as_str() {
                "rat" => {
                    let n = parse_int(toks)?;
                    let d = parse_int(toks)?;
                    if d == 0 {
                        return Err(Error::Parse("rat with zero denominator".into()));
                    }
                    Expr::Rat(Rational64::new(n, d))
                }
                "add" | "sub" | "mul" | "div" | "pow" => {
                    let a = Box::new(parse_expr(toks)?);
                    let b = Box::new(parse_expr(toks)?);
                    match head.as_str() {
                        "add" => Expr::Add(a, b),
                        "sub" => Expr::Sub(a, b),
                        "mul" => Expr::Mul(a, b),
                        "div" => Expr::Div(a, b),
                        _ => Expr::Pow(a, b),
                    }
                }
                "neg" | "ln" | "exp" | "sin" | "cos" | "sqrt" => {
                    let a = Box::new(parse_expr(toks)?);
                    match head.as_str() {
                        "neg" => Expr::Neg(a),
                        "ln" => Expr::Ln(a),
                        "exp" => Expr::Exp(a),
                        "sin" => Expr::Sin(a),
                        "cos" => Expr::Cos(a),
                        _ => Expr::Sqrt(a),
                    }
                }
                other => return Err(Error::Parse(format!("unknown operator {other:?}"))),
            };
            match toks.next().as_deref() {
                Some(")") => Ok(e),
                _ => Err(Error::Parse("missing closing parenthesis".into())),
            }
        }
        other => Err(Error::Parse(format!("unexpected token {other:?}"))),
    }
}

fn parse_int(toks: &mut std::vec::IntoIter<String>) -> Result<i64> {
    let tok = toks
        .next()
        .ok_or_else(|| Error::Parse("expected integer".into()))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
}
