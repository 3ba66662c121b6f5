//! Exact-arithmetic machinery for equiangular line systems: polynomial algebra
//! over Z and Q, Seidel matrices and their spectra, candidate characteristic
//! polynomial enumeration, compatibility of interlacing polynomials, exact
//! Farkas certificates, and the nonexistence pipelines built on top of them.
//!
//! Everything in this crate computes over arbitrary-precision integers and
//! rationals; there is no floating point on any decision path.

pub mod compat;
pub mod construct;
pub mod enumerate;
pub mod feasibility;
pub mod matio;
pub mod num;
pub mod poly;
pub mod quad;
pub mod ruleout;
pub mod seidel;

pub use num::{BigInt, BigRational};
pub use poly::{FactoredPoly, IntPoly, RatPoly};
