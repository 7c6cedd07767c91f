//! The five-parameter canonical form: its realization and transfer function,
//! canonicalization of arbitrary realizations by coefficient matching,
//! technical-condition checks, optimal fixed-point construction, and the
//! single-state impossibility certificate.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::LaplacianGraph;
use crate::matrix::RatMatrix;
use crate::ratpoly::{
    ratfun_reduce, rational_to_f64, BivarPoly, BivarRatFun, LambdaPoly, Rational,
};
use crate::realization::StructuredRealization;

/// The five scalars (α, ζ0, ζ1, ζ2, ζ3) parameterizing the canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalParams {
    pub alpha: Rational,
    pub zeta0: Rational,
    pub zeta1: Rational,
    pub zeta2: Rational,
    pub zeta3: Rational,
}

impl CanonicalParams {
    pub fn new(
        alpha: Rational,
        zeta0: Rational,
        zeta1: Rational,
        zeta2: Rational,
        zeta3: Rational,
    ) -> Self {
        Self { alpha, zeta0, zeta1, zeta2, zeta3 }
    }

    pub fn zetas(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.zeta0, &self.zeta1, &self.zeta2, &self.zeta3)
    }

    pub fn to_f64(&self) -> (f64, f64, f64, f64, f64) {
        (
            rational_to_f64(&self.alpha),
            rational_to_f64(&self.zeta0),
            rational_to_f64(&self.zeta1),
            rational_to_f64(&self.zeta2),
            rational_to_f64(&self.zeta3),
        )
    }
}

impl fmt::Display for CanonicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha = {}, zeta = ({}, {}, {}, {})",
            self.alpha, self.zeta0, self.zeta1, self.zeta2, self.zeta3
        )
    }
}

/// The twelve polynomial coefficient combinations of a two-state realization
/// that appear in its transfer function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaCoefficients {
    etas: [Rational; 12],
}

impl EtaCoefficients {
    /// η_k for k in 1..=12.
    pub fn eta(&self, k: usize) -> &Rational {
        assert!((1..=12).contains(&k), "eta index out of range");
        &self.etas[k - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalizationErrorKind {
    NotStrictlyProper,
    DegreeTooHighInZ,
    DegreeTooHighInLambda,
    NoPoleAtOne,
    NoZeroAtOne,
    DoubleCommunication,
    ZeroGain,
}

impl fmt::Display for CanonicalizationErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::NotStrictlyProper => "NotStrictlyProper",
            Self::DegreeTooHighInZ => "DegreeTooHighInZ",
            Self::DegreeTooHighInLambda => "DegreeTooHighInLambda",
            Self::NoPoleAtOne => "NoPoleAtOne",
            Self::NoZeroAtOne => "NoZeroAtOne",
            Self::DoubleCommunication => "DoubleCommunication",
            Self::ZeroGain => "ZeroGain",
        };
        write!(f, "{name}")
    }
}

/// First violated constraint in the fixed checking order, from shape checks
/// through pole/zero conditions to the gain condition.
#[derive(Clone, Debug)]
pub struct CanonicalizationError {
    pub kind: CanonicalizationErrorKind,
    pub detail: String,
}

impl fmt::Display for CanonicalizationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}

impl std::error::Error for CanonicalizationError {}

fn cerr(kind: CanonicalizationErrorKind, detail: impl Into<String>) -> CanonicalizationError {
    CanonicalizationError { kind, detail: detail.into() }
}

/// The two-state realization of the canonical form:
///
/// ```text
/// A0 = [1 ζ0; 0 1]   B0 = [-α; 0]   C0 = [1 0]   D0 = 0
/// A1 = [-ζ1 ζ2; -1 0] B1 = [0; 0]   C1 = [-ζ3 0] D1 = 0
/// ```
pub fn canonical_realization(p: &CanonicalParams) -> StructuredRealization {
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![Rational::one(), p.zeta0.clone()],
        vec![z(), Rational::one()],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![-p.zeta1.clone(), p.zeta2.clone()],
        vec![-Rational::one(), z()],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-p.alpha.clone()], vec![z()]]);
    let b1 = RatMatrix::zeros(2, 1);
    let c0 = RatMatrix::from_rows(vec![vec![Rational::one(), z()]]);
    let c1 = RatMatrix::from_rows(vec![vec![-p.zeta3.clone(), z()]]);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z())
        .expect("canonical blocks are dimensionally consistent")
}

/// The alternate realization with the communication moved from the output
/// side into the input matrix (B1 = [αζ3; 0], C1 = 0). It realizes the same
/// transfer function as [`canonical_realization`].
pub fn input_side_realization(p: &CanonicalParams) -> StructuredRealization {
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![Rational::one(), p.zeta0.clone()],
        vec![z(), Rational::one()],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![-p.zeta1.clone(), p.zeta2.clone()],
        vec![-Rational::one(), z()],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-p.alpha.clone()], vec![z()]]);
    let b1 = RatMatrix::from_rows(vec![vec![&p.alpha * &p.zeta3], vec![z()]]);
    let c0 = RatMatrix::from_rows(vec![vec![Rational::one(), z()]]);
    let c1 = RatMatrix::zeros(1, 2);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z())
        .expect("canonical blocks are dimensionally consistent")
}

/// The canonical transfer function, built directly from the closed form
///
/// ```text
/// G(z) = -α(1 - ζ3 λ)(z - 1) / ((z - 1)(z - 1 + ζ1 λ) + λ(ζ0 + ζ2 λ))
/// ```
///
/// and reduced to the canonical representative.
pub fn canonical_transfer_function(p: &CanonicalParams) -> BivarRatFun {
    let zm1 = BivarPoly::z_minus_one();
    // -α(1 - ζ3 λ) = -α + αζ3 λ
    let gain = LambdaPoly::linear(-p.alpha.clone(), &p.alpha * &p.zeta3);
    let num = zm1.mul_lambda(&gain);
    // z - 1 + ζ1 λ
    let shifted = BivarPoly::new(vec![
        LambdaPoly::linear(-Rational::one(), p.zeta1.clone()),
        LambdaPoly::one(),
    ]);
    // λ(ζ0 + ζ2 λ)
    let drift = BivarPoly::constant(LambdaPoly::new(vec![
        Rational::zero(),
        p.zeta0.clone(),
        p.zeta2.clone(),
    ]));
    let den = &(&zm1 * &shifted) + &drift;
    ratfun_reduce(num, den).expect("canonical denominator is nonzero")
}

/// Computes η1..η12 from the blocks of a two-state realization without
/// pass-through.
pub fn eta_coefficients(r: &StructuredRealization) -> Result<EtaCoefficients> {
    if r.state_dim() != 2 {
        return Err(Error::WrongStateDimension { expected: 2, found: r.state_dim() });
    }
    if r.has_passthrough() {
        return Err(Error::NonzeroPassthrough);
    }
    let a1 = &r.a0[(0, 0)];
    let a2 = &r.a0[(0, 1)];
    let a3 = &r.a0[(1, 0)];
    let a4 = &r.a0[(1, 1)];
    let a5 = &r.a1[(0, 0)];
    let a6 = &r.a1[(0, 1)];
    let a7 = &r.a1[(1, 0)];
    let a8 = &r.a1[(1, 1)];
    let b1 = &r.b0[(0, 0)];
    let b2 = &r.b0[(1, 0)];
    let b3 = &r.b1[(0, 0)];
    let b4 = &r.b1[(1, 0)];
    let c1 = &r.c0[(0, 0)];
    let c2 = &r.c0[(0, 1)];
    let c3 = &r.c1[(0, 0)];
    let c4 = &r.c1[(0, 1)];

    let eta1 = b1 * c1 + b2 * c2;
    let eta2 = b1 * c3 + b3 * c1 + b2 * c4 + b4 * c2;
    let eta3 = b3 * c3 + b4 * c4;
    let eta4 = -(a1 * b2) * c2 + a2 * b2 * c1 + a3 * b1 * c2 - a4 * b1 * c1;
    let eta5 = a2 * b2 * c3 - a1 * b4 * c2 - a1 * b2 * c4
        + a2 * b4 * c1
        + a3 * b1 * c4
        + a3 * b3 * c2
        - a4 * b1 * c3
        - a4 * b3 * c1
        - a5 * b2 * c2
        + a6 * b2 * c1
        + a7 * b1 * c2
        - a8 * b1 * c1;
    let eta6 = a2 * b4 * c3 - a1 * b4 * c4 + a3 * b3 * c4 - a4 * b3 * c3 - a5 * b2 * c4
        - a5 * b4 * c2
        + a6 * b2 * c3
        + a6 * b4 * c1
        + a7 * b1 * c4
        + a7 * b3 * c2
        - a8 * b1 * c3
        - a8 * b3 * c1;
    let eta7 = a6 * b4 * c3 - a5 * b4 * c4 + a7 * b3 * c4 - a8 * b3 * c3;
    let eta8 = -(a1 + a4);
    let eta9 = -(a5 + a8);
    let eta10 = a1 * a4 - a2 * a3;
    let eta11 = a1 * a8 - a2 * a7 - a3 * a6 + a4 * a5;
    let eta12 = a5 * a8 - a6 * a7;

    Ok(EtaCoefficients {
        etas: [eta1, eta2, eta3, eta4, eta5, eta6, eta7, eta8, eta9, eta10, eta11, eta12],
    })
}

/// Recovers canonical parameters from a reduced transfer function by
/// matching against the template
///
/// ```text
/// (η1 + η2 λ + η3 λ²) z + (η4 + η5 λ + η6 λ² + η7 λ³)
/// ----------------------------------------------------
///   z² + (η8 + η9 λ) z + (η10 + η11 λ + η12 λ²)
/// ```
///
/// Checks run in the fixed order of [`CanonicalizationErrorKind`]; on
/// success the parameters are (−η1, η9+η11, η9, η12, −η2/η1).
pub fn canonicalize_tf(
    tf: &BivarRatFun,
) -> std::result::Result<CanonicalParams, CanonicalizationError> {
    use CanonicalizationErrorKind::*;
    let num = tf.num();
    let den = tf.den();
    let den_deg = den.z_degree().expect("reduced denominator is nonzero");

    if let Some(num_deg) = num.z_degree() {
        if num_deg >= den_deg {
            return Err(cerr(
                NotStrictlyProper,
                format!("numerator z-degree {num_deg} is not below denominator z-degree {den_deg}"),
            ));
        }
    }
    if den_deg != 2 {
        return Err(cerr(
            DegreeTooHighInZ,
            format!("reduced denominator has z-degree {den_deg}, the canonical shape requires 2"),
        ));
    }
    let lam_deg = |p: &LambdaPoly| p.degree().map_or(0, |d| d);
    let shape = [
        (den.coeff(2), 0usize, "denominator z^2 coefficient"),
        (den.coeff(1), 1, "denominator z^1 coefficient"),
        (den.coeff(0), 2, "denominator z^0 coefficient"),
        (num.coeff(1), 2, "numerator z^1 coefficient"),
        (num.coeff(0), 3, "numerator z^0 coefficient"),
    ];
    for (poly, max_deg, what) in &shape {
        if lam_deg(poly) > *max_deg {
            return Err(cerr(
                DegreeTooHighInLambda,
                format!("{what} has λ-degree {}, at most {max_deg} allowed", lam_deg(poly)),
            ));
        }
    }

    let den1 = den.coeff(1);
    let den0 = den.coeff(0);
    let num1 = num.coeff(1);
    let num0 = num.coeff(0);
    let eta1 = num1.coeff(0);
    let eta2 = num1.coeff(1);
    let eta3 = num1.coeff(2);
    let eta4 = num0.coeff(0);
    let eta5 = num0.coeff(1);
    let eta6 = num0.coeff(2);
    let eta7 = num0.coeff(3);
    let eta8 = den1.coeff(0);
    let eta9 = den1.coeff(1);
    let eta10 = den0.coeff(0);
    let eta11 = den0.coeff(1);
    let eta12 = den0.coeff(2);

    if eta8 != Rational::from_integer((-2).into()) || !eta10.is_one() {
        return Err(cerr(
            NoPoleAtOne,
            format!("at λ = 0 the denominator must be (z-1)²; found z-coefficients ({eta8}, {eta10})"),
        ));
    }
    if !(&eta1 + &eta4).is_zero() || !(&eta2 + &eta5).is_zero() || !eta6.is_zero() {
        return Err(cerr(
            NoZeroAtOne,
            "the numerator does not carry the required (z-1) factor".to_string(),
        ));
    }
    if !eta3.is_zero() || !eta7.is_zero() {
        return Err(cerr(
            DoubleCommunication,
            "λ² terms in the numerator imply two sequential communication rounds per iteration"
                .to_string(),
        ));
    }
    if eta1.is_zero() {
        return Err(cerr(ZeroGain, "zero gain: η1 = 0 leaves no pole at z = 1".to_string()));
    }

    let alpha = -eta1.clone();
    let zeta3 = -(&eta2 / &eta1);
    Ok(CanonicalParams::new(alpha, &eta9 + &eta11, eta9, eta12, zeta3))
}

/// Canonicalizes a realization through its reduced transfer function.
pub fn canonicalize(
    r: &StructuredRealization,
) -> std::result::Result<CanonicalParams, CanonicalizationError> {
    canonicalize_tf(&r.transfer_function())
}

/// Two realizations are equivalent when they canonicalize to exactly equal
/// parameters; when either falls outside the canonical shape, equivalence
/// falls back to exact equality of the reduced transfer functions.
pub fn equivalent(r1: &StructuredRealization, r2: &StructuredRealization) -> bool {
    match (canonicalize(r1), canonicalize(r2)) {
        (Ok(p1), Ok(p2)) => p1 == p2,
        _ => r1.transfer_function() == r2.transfer_function(),
    }
}

/// Outcome of checking the technical conditions T1-T3 for given parameters
/// on a given graph.
#[derive(Clone, Debug)]
pub struct TechnicalReport {
    pub t1_alpha_nonzero: bool,
    pub t2_solvable: bool,
    /// Eigenvalue at which ζ0 + ζ2 λ vanishes, when T2 fails.
    pub t2_offending_eigenvalue: Option<f64>,
    pub t3_initialization: bool,
    pub w0_sum_norm: f64,
}

impl TechnicalReport {
    pub fn all_pass(&self) -> bool {
        self.t1_alpha_nonzero && self.t2_solvable && self.t3_initialization
    }
}

const T2_TOL: f64 = 1e-9;
const T3_TOL: f64 = 1e-12;

/// T1: α ≠ 0. T2: ζ0 + ζ2 λ ≠ 0 at every nonzero Laplacian eigenvalue, so
/// the fixed-point system is solvable for any balanced u. T3: ζ0 = 0 or the
/// initial w sums to zero.
pub fn check_technical_conditions(
    p: &CanonicalParams,
    graph: &LaplacianGraph,
    w0_sum: &[f64],
) -> TechnicalReport {
    let t1 = !p.alpha.is_zero();
    let z0 = rational_to_f64(&p.zeta0);
    let z2 = rational_to_f64(&p.zeta2);
    let mut t2 = true;
    let mut offending = None;
    for &lam in graph.nonzero_eigenvalues() {
        if (z0 + z2 * lam).abs() <= T2_TOL {
            t2 = false;
            offending = Some(lam);
            break;
        }
    }
    let w0_norm = w0_sum.iter().map(|v| v * v).sum::<f64>().sqrt();
    let t3 = p.zeta0.is_zero() || w0_norm <= T3_TOL;
    TechnicalReport {
        t1_alpha_nonzero: t1,
        t2_solvable: t2,
        t2_offending_eigenvalue: offending,
        t3_initialization: t3,
        w0_sum_norm: w0_norm,
    }
}

/// An optimal fixed point of the canonical form: per-agent values of the six
/// quantities, with v1 = 0 and every output equal to the minimizer.
#[derive(Clone, Debug)]
pub struct FixedPoint {
    pub x_star: Vec<Vec<f64>>,
    pub w_star: Vec<Vec<f64>>,
    pub v1_star: Vec<Vec<f64>>,
    pub v2_star: Vec<Vec<f64>>,
    pub y_star: Vec<Vec<f64>>,
    pub u_star: Vec<Vec<f64>>,
    /// Residual of the linear system (ζ0 I + ζ2 L) w = α u.
    pub residual: f64,
}

/// Builds the optimal fixed point: v1 = 0, y = x*, u = the local gradients
/// at x*, and w the minimum-norm solution of (ζ0 I + ζ2 L) w = α u in the
/// complement of the consensus direction.
pub fn construct_fixed_point(
    p: &CanonicalParams,
    graph: &LaplacianGraph,
    x_star: &[f64],
    grads_at_xstar: &[Vec<f64>],
) -> Result<FixedPoint> {
    let n = graph.n();
    let d = x_star.len();
    if grads_at_xstar.len() != n || grads_at_xstar.iter().any(|g| g.len() != d) {
        return Err(Error::DimensionMismatch("gradient table must be n vectors of dimension d".into()));
    }
    let mut sum = vec![0.0; d];
    for g in grads_at_xstar {
        for (s, v) in sum.iter_mut().zip(g) {
            *s += v;
        }
    }
    let sum_norm = sum.iter().map(|v| v * v).sum::<f64>().sqrt();
    if sum_norm > 1e-9 {
        return Err(Error::GradientsNotBalanced(sum_norm));
    }
    if p.alpha.is_zero() {
        return Err(Error::ZeroStepsize);
    }

    let alpha = rational_to_f64(&p.alpha);
    let z0 = rational_to_f64(&p.zeta0);
    let z2 = rational_to_f64(&p.zeta2);
    for &lam in graph.nonzero_eigenvalues() {
        if (z0 + z2 * lam).abs() <= T2_TOL {
            return Err(Error::T2Violated(format!(
                "zeta0 + zeta2*lambda = {:.3e} at eigenvalue {lam}",
                z0 + z2 * lam
            )));
        }
    }

    // Solve per coordinate in the Laplacian eigenbasis; the consensus
    // component of w is set to zero (minimum-norm representative).
    let mut w_star = vec![vec![0.0; d]; n];
    for coord in 0..d {
        let u_col: Vec<f64> = grads_at_xstar.iter().map(|g| g[coord]).collect();
        let u_hat = graph.to_eigenbasis(&u_col);
        let mut w_hat = vec![0.0; n];
        for ell in 1..n {
            let lam = graph.eigenvalues()[ell];
            w_hat[ell] = alpha * u_hat[ell] / (z0 + z2 * lam);
        }
        let w_col = graph.from_eigenbasis(&w_hat);
        for i in 0..n {
            w_star[i][coord] = w_col[i];
        }
    }

    let v2_star: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..d)
                .map(|c| {
                    (0..n).map(|j| graph.lap()[i][j] * w_star[j][c]).sum::<f64>()
                })
                .collect()
        })
        .collect();

    // Residual of (ζ0 I + ζ2 L) w − α u.
    let mut residual: f64 = 0.0;
    for i in 0..n {
        for c in 0..d {
            let lhs = z0 * w_star[i][c] + z2 * v2_star[i][c];
            let rhs = alpha * grads_at_xstar[i][c];
            residual += (lhs - rhs) * (lhs - rhs);
        }
    }
    let residual = residual.sqrt();

    Ok(FixedPoint {
        x_star: vec![x_star.to_vec(); n],
        w_star,
        v1_star: vec![vec![0.0; d]; n],
        v2_star,
        y_star: vec![x_star.to_vec(); n],
        u_star: grads_at_xstar.to_vec(),
        residual,
    })
}

/// Which of the two transfer-function requirements a single-state
/// realization fails. At least one always fails: the pole condition needs
/// B0·C0 ≠ 0 while the zero condition forces B0·C0 = 0.
#[derive(Clone, Debug)]
pub struct SingleStateCertificate {
    /// A0 = 1 and B0·C0 ≠ 0, so G has a pole at z = 1 when λ = 0.
    pub pole_at_one_holds: bool,
    /// (B0, B1) = 0 or (C0, C1) = 0, the only way the z-constant numerator
    /// (C0 + λC1)(B0 + λB1) vanishes for every λ ≠ 0.
    pub zero_at_one_holds: bool,
    pub detail: String,
}

impl SingleStateCertificate {
    pub fn infeasible(&self) -> bool {
        !(self.pole_at_one_holds && self.zero_at_one_holds)
    }
}

/// Evaluates the two necessary conditions on a single-state realization and
/// reports which fails. They are mutually exclusive, which is the
/// impossibility argument for one-state distributed algorithms.
pub fn single_state_infeasible(r: &StructuredRealization) -> Result<SingleStateCertificate> {
    if r.state_dim() != 1 {
        return Err(Error::WrongStateDimension { expected: 1, found: r.state_dim() });
    }
    if r.has_passthrough() {
        return Err(Error::NonzeroPassthrough);
    }
    let a0 = &r.a0[(0, 0)];
    let b0 = &r.b0[(0, 0)];
    let b1 = &r.b1[(0, 0)];
    let c0 = &r.c0[(0, 0)];
    let c1 = &r.c1[(0, 0)];

    let pole = a0.is_one() && !(b0 * c0).is_zero();
    let zero = (b0.is_zero() && b1.is_zero()) || (c0.is_zero() && c1.is_zero());
    let detail = match (pole, zero) {
        (true, false) => {
            "pole at z=1 holds; the constant-in-z numerator cannot vanish at z=1 for λ ≠ 0".into()
        }
        (false, true) => "numerator vanishes identically, so there is no pole at z=1".into(),
        (false, false) => "both the pole and the zero condition fail".into(),
        (true, true) => unreachable!("pole condition needs B0C0 ≠ 0, zero condition forces B0C0 = 0"),
    };
    Ok(SingleStateCertificate { pole_at_one_holds: pole, zero_at_one_holds: zero, detail })
}

/// Verifies symbolically that (z - 1) divides the numerator of a transfer
/// function, returning the cofactor when it does.
pub fn factor_out_z_minus_one(num: &BivarPoly) -> Option<BivarPoly> {
    if num.is_zero() {
        return Some(BivarPoly::zero());
    }
    // Remainder of division by (z - 1) is num evaluated at z = 1.
    let at_one: LambdaPoly = num
        .coeffs()
        .iter()
        .fold(LambdaPoly::zero(), |acc, c| &acc + c);
    if at_one.is_zero() {
        Some(num.exact_div(&BivarPoly::z_minus_one()))
    } else {
        None
    }
}

/// Restriction of a reduced transfer function to λ = λ0 (exact), re-reduced
/// as a univariate rational function in z with monic denominator.
pub fn restrict_lambda(tf: &BivarRatFun, lambda: &Rational) -> Result<(LambdaPoly, LambdaPoly)> {
    let num = LambdaPoly::new(tf.num().substitute_lambda_rational(lambda));
    let den = LambdaPoly::new(tf.den().substitute_lambda_rational(lambda));
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok((LambdaPoly::zero(), LambdaPoly::one()));
    }
    let g = LambdaPoly::gcd(&num, &den);
    let num = num.exact_div(&g);
    let den = den.exact_div(&g);
    let lc = den.leading().expect("nonzero").clone();
    let inv = lc.recip();
    Ok((num.scale(&inv), den.scale(&inv)))
}
