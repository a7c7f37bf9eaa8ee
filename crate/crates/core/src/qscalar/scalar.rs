use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of Q(s), s = q^{1/2}, kept in canonical form.
///
/// The value is `s^shift * num(s) / den(s)` where `num` and `den` are
/// ordinary polynomials with:
/// * `num(0) != 0` (all powers of `s` live in `shift`), or `num == 0` with
///   `shift == 0` and `den == 1`;
/// * `den` monic with `den(0) != 0`;
/// * `gcd(num, den) == 1`.
///
/// Two scalars are equal iff their canonical forms are identical, so the
/// derived `PartialEq`/`Hash` are the field's equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i64,
    num: Poly,
    den: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { shift: 0, num: Poly::constant(c), den: Poly::one() }
    }

    /// `s^e = q^{e/2}`.
    pub fn s_pow(e: i64) -> Self {
        Scalar { shift: e, num: Poly::one(), den: Poly::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Scalar::s_pow(2 * e)
    }

    /// Build a Laurent polynomial from `(exponent of s, coefficient)` pairs.
    pub fn laurent<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let terms: Vec<(i64, BigRational)> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Scalar::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Scalar::from_parts(low, Poly::from_coeffs(coeffs), Poly::one())
    }

    /// Canonicalize `s^shift * num / den` for arbitrary polynomials, `den != 0`.
    pub(crate) fn from_parts(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let nl = num.low_order();
        let dl = den.low_order();
        let mut num = num.shift_down(nl);
        let mut den = den.shift_down(dl);
        let shift = shift + nl as i64 - dl as i64;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The constant rational value, if this scalar does not depend on `s`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.shift == 0 && self.num.coeffs().len() == 1 && self.den.is_one())
            .then(|| self.num.coeffs()[0].clone())
    }

    /// Numerator as `(exponent of s, coefficient)` pairs, lowest exponent first.
    pub fn numerator_terms(&self) -> Vec<(i64, BigRational)> {
        poly_terms(&self.num, self.shift)
    }

    pub fn denominator_terms(&self) -> Vec<(i64, BigRational)> {
        poly_terms(&self.den, 0)
    }

    pub(crate) fn denominator_poly(&self) -> &Poly {
        &self.den
    }

    pub(crate) fn from_poly(p: Poly) -> Scalar {
        Scalar::from_parts(0, p, Poly::one())
    }

    /// Division known to be exact. Laurent polynomials are divided by long
    /// division without a gcd; anything else falls back to field division.
    pub fn div_exact(&self, other: &Scalar) -> Scalar {
        assert!(!other.is_zero(), "scalar division by zero");
        if self.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            let (q, r) = self.num.div_rem(&other.num);
            if r.is_zero() {
                return Scalar::from_parts(self.shift - other.shift, q, Poly::one());
            }
        }
        self / other
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num(0) != 0, so swapping keeps den free of s-factors
        let lc = self.num.leading().unwrap().recip();
        Ok(Scalar { shift: -self.shift, num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.recip()?)
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        Ok(match op {
            ArithOp::Add => self + other,
            ArithOp::Sub => self - other,
            ArithOp::Mul => self * other,
            ArithOp::Div => self.checked_div(other)?,
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `s = 1` (equivalently the limit `q -> 1`).
    pub fn specialize_q1(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    /// Apply `s -> s^{-1}` (the bar involution `q -> q^{-1}`).
    pub fn bar(&self) -> Scalar {
        let flip = |p: &Poly| {
            let mut c = p.coeffs().to_vec();
            c.reverse();
            Poly::from_coeffs(c)
        };
        let nd = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        // s^k num(1/s) / den(1/s) = s^{k - nd + dd} rev(num) / rev(den)
        Scalar::from_parts(-self.shift - nd + dd, flip(&self.num), flip(&self.den))
    }

    fn add_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - low) as usize);
        let b = other.num.shift_up((other.shift - low) as usize);
        if self.den == other.den {
            return Scalar::from_parts(low, a.add(&b), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.exact_div(&g);
        let d2 = other.den.exact_div(&g);
        let num = a.mul(&d2).add(&b.mul(&d1));
        Scalar::from_parts(low, num, self.den.mul(&d2))
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            return Scalar { shift, num: self.num.mul(&other.num), den: Poly::one() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = other.den.exact_div(&g1);
        let n2 = other.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading().unwrap().recip();
        Scalar { shift, num: num.scale(&lc), den: den.scale(&lc) }
    }
}

fn poly_terms(p: &Poly, shift: i64) -> Vec<(i64, BigRational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift + i as i64, c.clone()))
        .collect()
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(c: BigRational) -> Self {
        Scalar::from_rational(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| a
    .checked_div(b)
    .expect("scalar division by zero"));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, terms: &[(i64, BigRational)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().rev().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (*e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write!(f, "s^{e}")?,
            (_, false) => write!(f, "{mag}*s^{e}")?,
        }
    }
    Ok(())
}

/// `"<num> / <den>"`, terms by decreasing exponent of `s`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.numerator_terms())?;
        write!(f, " / ")?;
        write_poly(f, &self.denominator_terms())
    }
}

fn parse_poly(src: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("malformed Laurent polynomial `{src}`"));
    let src = src.trim();
    if src.is_empty() {
        return Err(bad());
    }
    // split into signed terms on " + " / " - "
    let mut terms = Vec::new();
    let mut rest = src;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let next = [" + ", " - "]
            .iter()
            .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
            .min_by_key(|(i, _)| *i);
        let (tok, tail) = match next {
            Some((i, sep)) => (&rest[..i], Some((&rest[i + 3..], sep))),
            None => (rest, None),
        };
        terms.push((sign, tok.trim()));
        match tail {
            Some((t, sep)) => {
                sign = if sep == " - " { -1 } else { 1 };
                rest = t;
            }
            None => break,
        }
    }
    let mut out = Vec::new();
    for (sign, tok) in terms {
        let (coeff, exp) = if let Some((c, e)) = tok.split_once("*s^") {
            (c.parse::<BigRational>().map_err(|_| bad())?, e.parse::<i64>().map_err(|_| bad())?)
        } else if let Some(e) = tok.strip_prefix("s^") {
            (BigRational::one(), e.parse::<i64>().map_err(|_| bad())?)
        } else if tok == "s" {
            (BigRational::one(), 1)
        } else {
            (tok.parse::<BigRational>().map_err(|_| bad())?, 0)
        };
        out.push((exp, coeff * BigRational::from_integer(sign.into())));
    }
    Ok(Scalar::laurent(out))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(src: &str) -> Result<Scalar> {
        match src.split_once(" / ") {
            Some((n, d)) => parse_poly(n)?.checked_div(&parse_poly(d)?),
            None => parse_poly(src),
        }
    }
}
