use num_rational::BigRational;

use super::Scalar;
use crate::error::{Error, Result};

/// The quantum integer `[n]` evaluated at `q^d`, stored as a value type so it
/// can be passed around before materializing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QInt {
    pub n: i64,
    pub d: u32,
}

impl QInt {
    pub fn new(n: i64, d: u32) -> Self {
        assert!(d >= 1, "q-integer base exponent must be positive");
        QInt { n, d }
    }

    pub fn materialize(self) -> Scalar {
        qint(self.n, self.d)
    }
}

/// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`, expanded as the
/// palindromic Laurent polynomial `sum_{j} q^{d(|n|-1-2j)}` with the sign of `n`.
pub fn qint(n: i64, d: u32) -> Scalar {
    assert!(d >= 1, "q-integer base exponent must be positive");
    let m = n.abs();
    let sign = BigRational::from_integer(n.signum().into());
    let d = d as i64;
    // exponents of s, since q = s^2
    Scalar::laurent((0..m).map(|j| (2 * d * (m - 1 - 2 * j), sign.clone())))
}

/// `[n]_{q^d}! = [1][2]...[n]`; `[0]! = 1`.
pub fn qfactorial(n: i64, d: u32) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::UndefinedFactorial(n));
    }
    Ok((1..=n).fold(Scalar::one(), |acc, k| acc * qint(k, d)))
}

/// The bracket `[r]! / ([s]! [r-s+1]!)` with the `r - s + 1` shift kept in
/// the lower factorial. Note this differs from the usual q-binomial, which
/// uses `[r-s]!`.
pub fn qbinom(r: i64, s: i64, d: u32) -> Result<Scalar> {
    let top = qfactorial(r, d)?;
    let low = qfactorial(s, d)? * qfactorial(r - s + 1, d)?;
    top.checked_div(&low)
}

/// `(x^k - x^{-k}) / (q - q^{-1})` with `x = q^level`; equals `[k*level]_q`.
pub fn level_pairing(k: i64, level: i64) -> Scalar {
    qint(k * level, 1)
}

/// `q - q^{-1}`.
pub fn q_minus_qinv() -> Scalar {
    Scalar::q_pow(1) - Scalar::q_pow(-1)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
