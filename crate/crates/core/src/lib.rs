//! Exact-arithmetic library for lex approximations of homogeneous ideals.
//!
//! Fix an ideal shape (a monomial ideal, a complete intersection, or raw
//! Hilbert-numerator coefficients) and let the number of ring variables
//! N grow: for each degree d there is a unique lex ideal matching the
//! Hilbert function through degree d. Its minimal-generator counts a_d, b_d
//! stabilize for large N; this crate computes those stable sequences by a
//! closed recursion ([`approx`]), certifies them against a direct Macaulay
//! lex-segment construction ([`oracle`]), and covers the companion material:
//! universal lex ideals from degree/count specifications ([`unilex`]),
//! linear-combination-of-binomials Hilbert functions ([`lcbc`]), and the
//! Hamilton numbers with their growth constant ρ ([`hamilton`]).
//!
//! Everything is exact: big integers throughout, and the one real-valued
//! quantity (ρ) is produced as a certified decimal from integer fixed-point
//! arithmetic. The sequences grow doubly exponentially (b_13 for two
//! quadratic forms has 86 digits), so callers always supply a degree cap.

pub mod approx;
pub mod bigcomb;
mod error;
mod fixedpoint;
pub mod hamilton;
pub mod json;
pub mod lcbc;
pub mod monomial;
pub mod oracle;
pub mod unilex;

pub use error::{Error, Result};
