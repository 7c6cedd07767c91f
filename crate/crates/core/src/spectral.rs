//! Numeric pole/zero analysis of G_λ(z) at Laplacian eigenvalues: the
//! consensus direction must keep a simple marginal pole at z = 1, every
//! other direction must be strictly stable with a zero at z = 1.

use nalgebra::DMatrix;
pub use num_complex::Complex64;

use crate::canonical::{canonical_transfer_function, CanonicalParams};
use crate::graph::LaplacianGraph;
use crate::ratpoly::BivarRatFun;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum StabilityClass {
    MarginalWithPoleAtOne,
    StrictlyStableWithZeroAtOne,
    Violation(String),
}

impl std::fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::MarginalWithPoleAtOne => write!(f, "marginal, pole at z=1"),
            Self::StrictlyStableWithZeroAtOne => write!(f, "strictly stable, zero at z=1"),
            Self::Violation(detail) => write!(f, "VIOLATION ({detail})"),
        }
    }
}

/// Poles and zeros of G_λ(z) at one numeric λ, after cancelling common
/// roots, together with the classification.
#[derive(Clone, Debug)]
pub struct PoleZeroReport {
    pub lambda: f64,
    pub poles: Vec<Complex64>,
    pub zeros: Vec<Complex64>,
    pub classification: StabilityClass,
}

/// Roots of a real-coefficient polynomial (ascending coefficients).
///
/// Degrees one and two use closed forms; higher degrees go through the
/// eigenvalues of the companion matrix.
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len().saturating_sub(1);
    match deg {
        0 => Vec::new(),
        1 => vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)],
        2 => {
            let (c, b, a) = (coeffs[0], coeffs[1], coeffs[2]);
            let disc = Complex64::new(b * b - 4.0 * a * c, 0.0).sqrt();
            // Pair the numerically stable branch with the product identity.
            let q = if b >= 0.0 {
                (Complex64::new(-b, 0.0) - disc) / 2.0
            } else {
                (Complex64::new(-b, 0.0) + disc) / 2.0
            };
            let r1 = q / a;
            let r2 = if q.norm() > 0.0 {
                Complex64::new(c, 0.0) / q
            } else {
                Complex64::new(0.0, 0.0)
            };
            let mut roots = vec![r1, r2];
            sort_roots(&mut roots);
            roots
        }
        _ => {
            let lead = coeffs[deg];
            let mut companion = DMatrix::<f64>::zeros(deg, deg);
            for i in 1..deg {
                companion[(i, i - 1)] = 1.0;
            }
            for i in 0..deg {
                companion[(i, deg - 1)] = -coeffs[i] / lead;
            }
            let mut roots: Vec<Complex64> =
                companion.complex_eigenvalues().iter().copied().collect();
            sort_roots(&mut roots);
            roots
        }
    }
}

fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap())
    });
}

fn trim_leading(coeffs: &[f64], tol: f64) -> Vec<f64> {
    let scale = coeffs.iter().fold(1.0_f64, |m, c| m.max(c.abs()));
    let mut out: Vec<f64> = coeffs.to_vec();
    while out.len() > 1 && out.last().is_some_and(|c| c.abs() <= tol * scale) {
        out.pop();
    }
    out
}

/// Substitutes λ into the reduced transfer function, cancels pole/zero pairs
/// closer than `tol`, and classifies per the two necessary conditions.
pub fn pole_zero_report(f: &BivarRatFun, lambda: f64, tol: f64) -> PoleZeroReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let num_coeffs = f.num().substitute_lambda(lambda);
    let den_coeffs = trim_leading(&f.den().substitute_lambda(lambda), tol);

    let num_scale = num_coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let tf_is_zero = num_scale <= tol;
    let mut zeros = if tf_is_zero { Vec::new() } else { poly_roots(&trim_leading(&num_coeffs, tol)) };
    let mut poles = poly_roots(&den_coeffs);

    // Cancel numerically common roots (one pole per zero, nearest first).
    let mut kept_zeros = Vec::new();
    'outer: while let Some(z) = zeros.pop() {
        for (k, p) in poles.iter().enumerate() {
            if (z - p).norm() <= tol {
                poles.remove(k);
                continue 'outer;
            }
        }
        kept_zeros.push(z);
    }
    kept_zeros.reverse();
    let zeros = kept_zeros;

    let classification = if lambda.abs() <= tol {
        classify_consensus_direction(&poles, tol)
    } else {
        classify_disagreement_direction(&poles, &zeros, tf_is_zero, tol)
    };

    PoleZeroReport { lambda, poles, zeros, classification }
}

fn classify_consensus_direction(poles: &[Complex64], tol: f64) -> StabilityClass {
    let one = Complex64::new(1.0, 0.0);
    let at_one = poles.iter().filter(|p| (*p - one).norm() <= tol).count();
    if at_one == 0 {
        return StabilityClass::Violation("no pole at z=1 in the consensus direction".into());
    }
    if at_one > 1 {
        return StabilityClass::Violation(format!("pole at z=1 has multiplicity {at_one}"));
    }
    if let Some(p) = poles.iter().find(|p| p.norm() > 1.0 + tol) {
        return StabilityClass::Violation(format!("pole outside the unit disk: {}", fmt_c(p)));
    }
    // Any pole on the unit circle must be simple.
    for (i, p) in poles.iter().enumerate() {
        if p.norm() >= 1.0 - tol {
            let repeated = poles
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && (p - q).norm() <= tol);
            if repeated {
                return StabilityClass::Violation(format!(
                    "repeated pole on the unit circle near {}",
                    fmt_c(p)
                ));
            }
        }
    }
    StabilityClass::MarginalWithPoleAtOne
}

fn classify_disagreement_direction(
    poles: &[Complex64],
    zeros: &[Complex64],
    tf_is_zero: bool,
    tol: f64,
) -> StabilityClass {
    let one = Complex64::new(1.0, 0.0);
    // An identically-zero transfer function has zero steady-state gain, which
    // is what the zero at z=1 enforces.
    let has_zero_at_one = tf_is_zero || zeros.iter().any(|z| (z - one).norm() <= tol);
    if !has_zero_at_one {
        return StabilityClass::Violation("no zero at z=1".into());
    }
    if let Some(p) = poles.iter().find(|p| p.norm() >= 1.0 - tol) {
        return StabilityClass::Violation(format!("pole not strictly stable: {}", fmt_c(p)));
    }
    StabilityClass::StrictlyStableWithZeroAtOne
}

fn fmt_c(c: &Complex64) -> String {
    if c.im.abs() < 1e-12 {
        format!("{:.6}", c.re)
    } else {
        format!("{:.6}{:+.6}i", c.re, c.im)
    }
}

/// Per-eigenvalue reports plus the overall verdict.
#[derive(Clone, Debug)]
pub struct SpectralOutcome {
    pub reports: Vec<PoleZeroReport>,
    pub pass: bool,
}

/// Runs [`pole_zero_report`] on the canonical transfer function at every
/// distinct Laplacian eigenvalue. Passes when the consensus direction is
/// marginal with its pole at one and every other direction is strictly
/// stable with a zero at one.
pub fn spectral_check(p: &CanonicalParams, graph: &LaplacianGraph, tol: f64) -> SpectralOutcome {
    let tf = canonical_transfer_function(p);
    let reports: Vec<PoleZeroReport> = graph
        .distinct_eigenvalues(tol)
        .into_iter()
        .map(|lam| pole_zero_report(&tf, lam, tol))
        .collect();
    let pass = reports.iter().all(|r| {
        if r.lambda.abs() <= tol {
            r.classification == StabilityClass::MarginalWithPoleAtOne
        } else {
            r.classification == StabilityClass::StrictlyStableWithZeroAtOne
        }
    });
    SpectralOutcome { reports, pass }
}
