//! Dense univariate polynomials over the rationals.
//!
//! Coefficient `i` multiplies `s^i`. The vector never carries trailing zeros,
//! so the zero polynomial is the empty vector and structural equality is
//! polynomial equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * s^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Largest `e` with `s^e` dividing `self` (0 for the zero polynomial).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `s^e`; the caller guarantees `e <= low_order()`.
    pub fn shift_down(&self, e: usize) -> Poly {
        debug_assert!(self.is_zero() || e <= self.low_order());
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs[e..].to_vec())
    }

    /// Multiply by `s^e`.
    pub fn shift_up(&self, e: usize) -> Poly {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        // convolve over the integers, normalizing once per coefficient
        let (a, da) = self.integer_coeffs();
        let (b, db) = other.integer_coeffs();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        Poly::from_coeffs(out.into_iter().map(|c| BigRational::new(c, den.clone())).collect())
    }

    /// `(c, m)` with `self = c / m`, `c` integral.
    fn integer_coeffs(&self) -> (Vec<BigInt>, BigInt) {
        let m = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let c = self.coeffs.iter().map(|x| x.numer() * (&m / x.denom())).collect();
        (c, m)
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            return Poly::one();
        }
        let mut a = primitive_integer_part(self);
        let mut b = primitive_integer_part(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Poly::one();
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = make_primitive(r);
        }
        let g = Poly::from_coeffs(a.into_iter().map(BigRational::from_integer).collect());
        g.make_monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }
}

fn primitive_integer_part(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        // keep coefficients small between steps
        r = make_primitive(r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = Poly::from_i64(&[1, 1]); // 1 + s
        let b = Poly::from_i64(&[-1, 0, 1]); // s^2 - 1
        let c = Poly::from_i64(&[2, 0, 3]);
        let g = a.mul(&c).gcd(&b.mul(&c));
        assert_eq!(g, Poly::from_i64(&[1, 1]).mul(&c).make_monic());
    }

    #[test]
    fn division_remainder() {
        let a = Poly::from_i64(&[1, 0, 0, 1]); // s^3 + 1
        let b = Poly::from_i64(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(&[1, -1, 1]));
        let (_, r) = Poly::from_i64(&[2, 0, 1]).div_rem(&b);
        assert_eq!(r, Poly::from_i64(&[3]));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = Poly::from_i64(&[1, 0, 1]);
        let b = Poly::from_i64(&[-1, 1]);
        assert!(a.gcd(&b).is_one());
    }
}
