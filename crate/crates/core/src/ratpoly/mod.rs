//! Exact arithmetic substrate: arbitrary-precision rationals, univariate
//! polynomials in the Laplacian eigenvalue λ, bivariate polynomials in
//! (z, λ), and reduced rational functions in (z, λ).
//!
//! Everything on the canonicalization path is exact; floating point enters
//! only through explicit evaluation helpers.

mod bivar;
mod lambda;
mod ratfun;
mod rational;

pub use bivar::{poly_gcd_z, BivarPoly};
pub use lambda::LambdaPoly;
pub use ratfun::{ratfun_reduce, BivarRatFun};
pub use rational::{parse_rational, rat, rat_int, rational_to_f64, Rational};
