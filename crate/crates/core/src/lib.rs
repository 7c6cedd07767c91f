//! canform: a toolkit for first-order distributed optimization algorithms.
//!
//! Algorithms that combine one round of neighbor communication, one local
//! gradient evaluation, and a linear time-invariant state update per
//! iteration admit a five-parameter canonical form (α, ζ0, ζ1, ζ2, ζ3).
//! This crate:
//!
//! - models such algorithms as structured state-space realizations and
//!   extracts their doubly-indexed transfer functions G_λ(z) in exact
//!   rational arithmetic ([`realization`], [`ratpoly`]);
//! - canonicalizes realizations by coefficient matching and decides
//!   algorithm equivalence ([`canonical`]);
//! - builds and validates graph Laplacians and analyzes per-eigenvalue
//!   poles and zeros ([`graph`], [`spectral`]);
//! - ships a registry of named algorithms (EXTRA, NIDS, Exact Diffusion,
//!   DIGing, ...) reproducing their known parameter table ([`algorithms`]);
//! - simulates the canonical iteration and arbitrary realizations on small
//!   graphs and objectives ([`sim`]).

pub mod algorithms;
pub mod canonical;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod ratpoly;
pub mod realization;
pub mod sim;
pub mod spectral;

pub use error::{Error, Result};
pub use ratpoly::{poly_gcd_z, ratfun_reduce, BivarPoly, BivarRatFun, LambdaPoly, Rational};
