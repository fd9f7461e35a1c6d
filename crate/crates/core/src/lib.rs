//! Exact computer algebra for Hankel and Toeplitz hyperdeterminants,
//! symmetric functions and Jack polynomials, with an executable registry of
//! the identities that tie them together.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! identities are checked by equality, never by tolerance.

pub mod arith;
pub mod error;
pub mod hyperdet;
pub mod identities;
pub mod jack;
pub mod linalg;
pub mod par;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod symfunc;

pub use arith::{Rational, Ring};
pub use error::{Error, Result};
pub use partition::{Partition, ShiftVector};
pub use poly::LaurentPoly;
pub use symfunc::{Alphabet, Basis, SymFunc};
