//! Exact univariate rational generating functions over the integers.
//!
//! A [`RationalGF`] is kept as a pair of integer polynomials whose joint
//! content is 1 and whose denominator has a positive constant term. Common
//! polynomial factors are not cancelled; equality is decided by
//! cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in `z`; `coeffs[i]` multiplies `z^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `z^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn div_exact(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x / c).collect())
    }

    fn write_dense(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_dense(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A power series at `z = 0` given as `numerator / denominator`.
#[derive(Debug, Clone)]
pub struct RationalGF {
    num: Poly,
    den: Poly,
}

impl RationalGF {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if den.constant_term().is_zero() {
            return Err(Error::NonExpandable);
        }
        Ok(RationalGF { num, den }.canonical())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalGF { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The series `z`.
    pub fn z() -> Self {
        Self::from_poly(Poly::monomial(1))
    }

    pub fn z_pow(d: usize) -> Self {
        Self::from_poly(Poly::monomial(d))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonical(self) -> Self {
        if self.num.is_zero() {
            return RationalGF::zero();
        }
        let g = self.num.content().gcd(&self.den.content());
        let mut num = self.num.div_exact(&g);
        let mut den = self.den.div_exact(&g);
        if den.constant_term().is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalGF { num, den }
    }

    pub fn checked_div(&self, rhs: &RationalGF) -> Result<RationalGF> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalGF::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<RationalGF> {
        RationalGF::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> RationalGF {
        RationalGF {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .canonical()
    }

    /// Coefficients of `z^0 ..= z^n_max`.
    pub fn series(&self, n_max: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::NonExpandable);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = self.num.coeff(n);
            for i in 1..den.len().min(n + 1) {
                acc -= &den[i] * &out[n - i];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralCoefficient { index: n });
            }
            out.push(q);
        }
        Ok(out)
    }

    pub fn coefficient(&self, n: usize) -> Result<BigInt> {
        Ok(self.series(n)?.pop().unwrap())
    }
}

pub fn arith(a: &RationalGF, b: &RationalGF, op: ArithOp) -> Result<RationalGF> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalGF {}

impl Add for &RationalGF {
    type Output = RationalGF;

    fn add(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .canonical()
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;

    fn sub(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .canonical()
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;

    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .canonical()
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;

    fn neg(self) -> RationalGF {
        RationalGF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalGF {
            type Output = RationalGF;
            fn $m(self, rhs: RationalGF) -> RationalGF {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        self.num.write_dense(f)?;
        f.write_str(") / (")?;
        self.den.write_dense(f)?;
        f.write_str(")")
    }
}

fn parse_dense(s: &str) -> Result<Poly> {
    let s = s.trim();
    if s == "0" {
        return Ok(Poly::zero());
    }
    let mut coeffs = Vec::new();
    for (i, term) in s.split(" + ").enumerate() {
        let term = term.trim();
        let (c, power) = match term.split_once("*z") {
            None => (term, 0),
            Some((c, "")) => (c, 1),
            Some((c, rest)) => {
                let p = rest
                    .strip_prefix('^')
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                (c, p)
            }
        };
        if power != i {
            return Err(Error::Parse(format!("term {term:?} out of order, expected power {i}")));
        }
        coeffs.push(c.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?);
    }
    Ok(Poly::new(coeffs))
}

impl FromStr for RationalGF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .trim()
            .split_once(") / (")
            .ok_or_else(|| Error::Parse("expected (numerator) / (denominator)".into()))?;
        let num = num
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse("missing opening parenthesis".into()))?;
        let den = den
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse("missing closing parenthesis".into()))?;
        RationalGF::new(parse_dense(num)?, parse_dense(den)?)
    }
}

fn poly(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

fn ratio(num: &[i64], den: &[i64]) -> RationalGF {
    RationalGF::new(poly(num), poly(den)).expect("constant denominator term is nonzero")
}

/// `(1 - z)^e`.
fn one_minus_z_pow(e: u32) -> Poly {
    poly(&[1, -1]).pow(e)
}

/// Height-bounded continued fraction counting `A_n(δ_k; 213)`:
/// `f_1 = 0`, `f_2 = z`, `f_3 = z(1-z)/(1-2z)`, `f_k = z / (1 - f_{k-1})`.
pub fn cf_213(k: usize) -> Result<RationalGF> {
    match k {
        0 => Err(Error::Domain("cf_213 needs k >= 1".into())),
        1 => Ok(RationalGF::zero()),
        2 => Ok(RationalGF::z()),
        _ => {
            let mut f = ratio(&[0, 1, -1], &[1, -2]);
            for _ in 4..=k {
                f = RationalGF::z().checked_div(&(&RationalGF::one() - &f))?;
            }
            Ok(f)
        }
    }
}

/// Generating function of `a_{n,k}(231)`.
///
/// The `k = 3` entry is `z/(1-z)^2` as printed with the closed forms; its
/// coefficients exceed the true counts by one from `n = 2` on.
pub fn gf_231(k: usize) -> Result<RationalGF> {
    match k {
        0 => Err(Error::Domain("gf_231 needs k >= 1".into())),
        1 | 2 => Ok(RationalGF::z()),
        3 => RationalGF::new(poly(&[0, 1]), one_minus_z_pow(2)),
        4 => RationalGF::new(poly(&[0, 1, -2, 1, 1]), &poly(&[1, -1]) * &poly(&[1, -2])),
        _ => {
            let outer = cf_213(k - 1)?;
            let inner = cf_213(k - 2)?;
            let factor = &(&inner.pow(2) - &inner) + &RationalGF::one();
            (&outer * &factor).checked_div(&ratio(&[1, -1], &[1]))
        }
    }
}

/// Generating function of `b_{n,k}(231)` (permutations starting with `n`),
/// `k >= 5`.
pub fn gf_b231(k: usize) -> Result<RationalGF> {
    if k < 5 {
        return Err(Error::Domain("gf_b231 needs k >= 5".into()));
    }
    let f = cf_213(k - 2)?;
    let bracket = &(&RationalGF::one() - &(&RationalGF::z() * &f)) + &f.pow(2);
    Ok(&ratio(&[0, 1], &[1, -1]) * &bracket)
}

/// Generating function of `a°_{n,k}(1342)`, including the constant term 1.
pub fn gf_1342(k: usize) -> Result<RationalGF> {
    match k {
        0 => Err(Error::Domain("gf_1342 needs k >= 1".into())),
        1 | 2 => Ok(RationalGF::from_poly(poly(&[1, 1]))),
        _ => {
            let main = RationalGF::new(poly(&[1, -3, 2, 1]), &one_minus_z_pow(2) * &poly(&[1, -2]))?;
            let mut corr_num = Poly::monomial(k + 1);
            corr_num = corr_num.scale(&BigInt::from(2));
            let corr = RationalGF::new(corr_num, &one_minus_z_pow((k - 1) as u32) * &poly(&[1, -2]))?;
            Ok(&main - &corr)
        }
    }
}

/// Generating function of `b°_{n,k}(1342)`, `k >= 3`.
pub fn gf_b1342(k: usize) -> Result<RationalGF> {
    if k < 3 {
        return Err(Error::Domain("gf_b1342 needs k >= 3".into()));
    }
    let main = ratio(&[0, 1, -1, -1], &[1, -2]);
    let corr = RationalGF::new(Poly::monomial(k + 1), &poly(&[1, -2]) * &one_minus_z_pow((k - 2) as u32))?;
    Ok(&main - &corr)
}

/// Generating function of `a°_{n,k}(1324)` assembled from the closed
/// counts: `z + z^2/(1-2z)` at `k = 3`, `z + z^2(1-z)/(1-3z+z^2)` for
/// `k >= 4`.
pub fn gf_1324(k: usize) -> Result<RationalGF> {
    match k {
        0 => Err(Error::Domain("gf_1324 needs k >= 1".into())),
        1 => Ok(RationalGF::zero()),
        2 => Ok(RationalGF::z()),
        3 => Ok(&RationalGF::z() + &ratio(&[0, 0, 1], &[1, -2])),
        _ => Ok(&RationalGF::z() + &ratio(&[0, 0, 1, -1], &[1, -3, 1])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn arith_examples() {
        let g = ratio(&[0, 1], &[1, -1]);
        assert_eq!(arith(&g, &g, ArithOp::Add).unwrap(), ratio(&[0, 2], &[1, -1]));
        let q = arith(&RationalGF::z(), &ratio(&[1, -1], &[1]), ArithOp::Div).unwrap();
        assert_eq!(q, g);
        assert_eq!(q.to_string(), "(0 + 1*z) / (1 + -1*z)");
    }

    #[test]
    fn division_errors() {
        assert_eq!(RationalGF::one().checked_div(&RationalGF::zero()), Err(Error::DivisionByZero));
        assert_eq!(RationalGF::one().checked_div(&RationalGF::z()), Err(Error::NonExpandable));
        assert!(matches!(RationalGF::new(poly(&[1]), poly(&[0, 1])), Err(Error::NonExpandable)));
    }

    #[test]
    fn non_integral_series() {
        let half = ratio(&[1], &[2, -1]);
        assert_eq!(half.series(3), Err(Error::NonIntegralCoefficient { index: 0 }));
    }

    #[test]
    fn geometric_series() {
        assert_eq!(ratio(&[0, 1], &[1, -1]).series(3).unwrap(), ints(&[0, 1, 1, 1]));
    }

    #[test]
    fn continued_fraction_step() {
        let f3 = cf_213(3).unwrap();
        let f4 = RationalGF::z().checked_div(&(&RationalGF::one() - &f3)).unwrap();
        assert_eq!(f4, cf_213(4).unwrap());
        assert_eq!(cf_213(4).unwrap(), ratio(&[0, 1, -2], &[1, -3, 1]));
        assert_eq!(cf_213(4).unwrap().series(7).unwrap(), ints(&[0, 1, 1, 2, 5, 13, 34, 89]));
        assert_eq!(cf_213(5).unwrap().series(7).unwrap(), ints(&[0, 1, 1, 2, 5, 14, 41, 122]));
        assert_eq!(cf_213(3).unwrap(), ratio(&[0, 1, -1], &[1, -2]));
        assert_eq!(cf_213(2).unwrap(), RationalGF::z());
        assert!(cf_213(1).unwrap().is_zero());
        assert!(cf_213(0).is_err());
    }

    #[test]
    fn seeding_the_fraction_at_f2_is_wrong() {
        let from_f2 = RationalGF::z().checked_div(&(&RationalGF::one() - &cf_213(2).unwrap())).unwrap();
        assert_eq!(from_f2, ratio(&[0, 1], &[1, -1]));
        assert_ne!(from_f2, cf_213(3).unwrap());
    }

    #[test]
    fn gf_231_examples() {
        assert_eq!(gf_231(4).unwrap().series(9).unwrap(), ints(&[0, 1, 1, 2, 5, 11, 23, 47, 95, 191]));
        let printed = &ratio(&[0, 1, -2], &[1, -4, 4, -1]) - &ratio(&[0, 0, 1], &[1, -2]);
        // (z^2 - 3z + 1)(1 - z) = 1 - 4z + 4z^2 - z^3
        assert_eq!(gf_231(5).unwrap(), printed);
        assert_eq!(gf_231(1).unwrap(), RationalGF::z());
        assert_eq!(gf_231(3).unwrap().series(3).unwrap(), ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn gf_b231_examples() {
        assert_eq!(gf_b231(5).unwrap().coefficient(3).unwrap(), BigInt::from(1));
        for k in 5..=9 {
            let g = gf_b231(k).unwrap();
            let f = cf_213(k - 2).unwrap();
            let z = RationalGF::z();
            let bracket = &(&RationalGF::one() - &(&z * &f)) + &f.pow(2);
            let lhs = &(&g * &ratio(&[1, -1], &[1])) - &(&z * &bracket);
            assert!(lhs.is_zero(), "k = {k}");
        }
        assert!(gf_b231(4).is_err());
    }

    #[test]
    fn gf_1342_examples() {
        assert_eq!(gf_1342(3).unwrap().series(7).unwrap(), ints(&[1, 1, 1, 2, 3, 4, 5, 6]));
        assert_eq!(gf_1342(4).unwrap().coefficient(5).unwrap(), BigInt::from(10));
        assert_eq!(gf_1342(6).unwrap().coefficient(6).unwrap(), BigInt::from(27));
        assert_eq!(gf_1342(2).unwrap().series(3).unwrap(), ints(&[1, 1, 0, 0]));
    }

    #[test]
    fn gf_b1342_examples() {
        assert_eq!(gf_b1342(3).unwrap().series(6).unwrap(), ints(&[0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(gf_b1342(4).unwrap().coefficient(5).unwrap(), BigInt::from(3));
        for k in 4..=9 {
            let b = gf_b1342(k).unwrap();
            let prev = gf_b1342(k - 1).unwrap();
            let z = RationalGF::z();
            let rest = &(&(&b - &(&z * &b)) - &(&z * &prev)) - &RationalGF::from_poly(poly(&[0, 1, -1, -1]));
            assert!(rest.is_zero(), "k = {k}");
        }
        assert!(gf_b1342(2).is_err());
    }

    #[test]
    fn gf_1324_examples() {
        assert_eq!(gf_1324(3).unwrap().series(5).unwrap(), ints(&[0, 1, 1, 2, 4, 8]));
        assert_eq!(gf_1324(4).unwrap().series(6).unwrap(), ints(&[0, 1, 1, 2, 5, 13, 34]));
    }

    #[test]
    fn text_form_round_trips() {
        for k in 2..=8 {
            let f = cf_213(k).unwrap();
            let text = f.to_string();
            let back: RationalGF = text.parse().unwrap();
            assert_eq!(back.to_string(), text);
        }
        assert!("z/(1-z)".parse::<RationalGF>().is_err());
        assert!("(0 + 1*z^2) / (1)".parse::<RationalGF>().is_err());
    }

    #[test]
    fn canonical_form_normalizes_sign_and_content() {
        let f = RationalGF::new(poly(&[0, -4]), poly(&[-2, 2])).unwrap();
        assert_eq!(f.numerator(), &poly(&[0, 2]));
        assert_eq!(f.denominator(), &poly(&[1, -1]));
    }
}
