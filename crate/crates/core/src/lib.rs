//! Exact symbolic computation around the quantum Heisenberg subalgebra of an
//! untwisted quantum affine algebra.
//!
//! * [`qscalar`]: the ground field Q(q^{1/2}) and quantum integers.
//! * [`cartan`]: affine Cartan data and finite root systems.
//! * [`termalg`]: normal ordering for presentations with central commutators.
//! * [`heisenberg`]: structure constants, primed generators, canonical relations.
//! * [`weyliso`]: the isomorphism with an infinite-rank Weyl algebra at level `l`.
//! * [`verma`]: imaginary Verma modules: bases, actions, graded dimensions, Gram forms.
//! * [`loopweights`]: support and weight multiplicities of loop modules.
//! * [`cli`]: the `qaff` command line.

pub mod cartan;
pub mod cli;
mod error;
pub mod heisenberg;
pub mod loopweights;
pub mod matrix;
pub mod qscalar;
pub mod termalg;
pub mod verma;
pub mod weyliso;

pub use error::{Error, Result};
pub use qscalar::Scalar;
