//! Exact arithmetic in Q(q^{1/2}) and quantum integers.
//!
//! Everything is expressed in the formal variable `s = q^{1/2}`, so `q = s^2`
//! and half-integer powers of `q` (and of `gamma` once a level is fixed) stay
//! in one exponent lattice.

mod poly;
mod qnum;
mod scalar;

pub use poly::Poly;
pub use qnum::{level_pairing, q_minus_qinv, qbinom, qfactorial, qint, rational, QInt};
pub use scalar::{ArithOp, Scalar};

/// Value at q = 1; see [`Scalar::specialize_q1`].
pub fn specialize_q1(a: &Scalar) -> crate::Result<num_rational::BigRational> {
    a.specialize_q1()
}
