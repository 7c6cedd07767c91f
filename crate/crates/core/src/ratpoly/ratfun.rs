//! Reduced rational functions in (z, λ).

use std::fmt;

use num_complex::Complex64;

use super::bivar::{poly_gcd_z, BivarPoly};
use super::lambda::LambdaPoly;
use crate::error::{Error, Result};

/// A rational function num/den in z with λ-polynomial coefficients, kept in
/// a canonical reduced form:
///
/// - num and den share no nonconstant z-factor over the λ-function field,
///   and no nonconstant λ-content factor;
/// - the leading λ-coefficient of den's leading z-coefficient is 1, so den
///   is monic in z whenever its leading z-coefficient is λ-free;
/// - zero is 0/1.
///
/// Two equal rational functions therefore compare equal coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarRatFun {
    num: BivarPoly,
    den: BivarPoly,
}

impl BivarRatFun {
    pub fn num(&self) -> &BivarPoly {
        &self.num
    }

    pub fn den(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn zero() -> Self {
        Self { num: BivarPoly::zero(), den: BivarPoly::one() }
    }

    /// Floating evaluation at (z0, λ0). Errors when the point sits on a pole.
    pub fn eval(&self, z0: Complex64, lambda0: f64) -> Result<Complex64> {
        let d = self.den.eval(z0, lambda0);
        if d.norm() <= 1e-12 {
            return Err(Error::PoleAtEvaluationPoint(d.norm()));
        }
        Ok(self.num.eval(z0, lambda0) / d)
    }
}

impl fmt::Display for BivarRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Cancels the z-gcd and the λ-content gcd of num/den and rescales to the
/// canonical representative described on [`BivarRatFun`].
///
/// The reduction is canonical: any two (num, den) pairs representing the same
/// rational function produce identical output.
pub fn ratfun_reduce(num: BivarPoly, den: BivarPoly) -> Result<BivarRatFun> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(BivarRatFun::zero());
    }
    let num_content = num.content();
    let den_content = den.content();
    let num_pp = num.exact_div_lambda(&num_content);
    let den_pp = den.exact_div_lambda(&den_content);

    let g = poly_gcd_z(&num_pp, &den_pp);
    let (num_pp, den_pp) = if g.is_one() {
        (num_pp, den_pp)
    } else {
        (num_pp.exact_div(&g), den_pp.exact_div(&g))
    };

    let content_gcd = LambdaPoly::gcd(&num_content, &den_content);
    let num_content = num_content.exact_div(&content_gcd);
    let den_content = den_content.exact_div(&content_gcd);

    let mut n = num_pp.mul_lambda(&num_content);
    let mut d = den_pp.mul_lambda(&den_content);

    let pin = d
        .leading()
        .and_then(|lc| lc.leading().cloned())
        .expect("nonzero denominator");
    if !num_traits::One::is_one(&pin) {
        let inv = pin.recip();
        n = n.scale(&inv);
        d = d.scale(&inv);
    }
    Ok(BivarRatFun { num: n, den: d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, rat_int};

    fn lam(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn zpoly(cs: &[LambdaPoly]) -> BivarPoly {
        BivarPoly::new(cs.to_vec())
    }

    #[test]
    fn cancels_shared_linear_factor() {
        // (-α(z-1), (z-1)²) → -α / (z-1), with α = 1
        let zm1 = BivarPoly::z_minus_one();
        let num = zm1.scale(&rat_int(-1));
        let den = &zm1 * &zm1;
        let f = ratfun_reduce(num, den).unwrap();
        assert_eq!(f.num(), &BivarPoly::constant(lam(&[-1])));
        assert_eq!(f.den(), &BivarPoly::z_minus_one());
    }

    #[test]
    fn cancels_scalars_and_factors() {
        // (2(z-1), 2(z-1)(z+3)) → 1/(z+3)
        let zm1 = BivarPoly::z_minus_one();
        let zp3 = zpoly(&[lam(&[3]), lam(&[1])]);
        let num = zm1.scale(&rat_int(2));
        let den = (&zm1 * &zp3).scale(&rat_int(2));
        let f = ratfun_reduce(num, den).unwrap();
        assert_eq!(f.num(), &BivarPoly::one());
        assert_eq!(f.den(), &zp3);
    }

    #[test]
    fn idempotent() {
        let num = zpoly(&[lam(&[1, -1]), lam(&[2])]);
        let den = zpoly(&[lam(&[0, 3]), lam(&[1]), lam(&[2])]);
        let f = ratfun_reduce(num, den).unwrap();
        let again = ratfun_reduce(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn cancels_lambda_content() {
        // (λ·(z-1), λ²·(z+1)) → (z-1) / (λ(z+1))
        let zm1 = BivarPoly::z_minus_one();
        let zp1 = zpoly(&[lam(&[1]), lam(&[1])]);
        let f = ratfun_reduce(zm1.mul_lambda(&lam(&[0, 1])), zp1.mul_lambda(&lam(&[0, 0, 1]))).unwrap();
        assert_eq!(f.num(), &BivarPoly::z_minus_one());
        assert_eq!(f.den(), &zp1.mul_lambda(&lam(&[0, 1])));
    }

    #[test]
    fn zero_numerator() {
        let f = ratfun_reduce(BivarPoly::zero(), BivarPoly::z_minus_one()).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.den(), &BivarPoly::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            ratfun_reduce(BivarPoly::one(), BivarPoly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn eval_simple_pole_free() {
        // -1/(z-1) at z=2 → -1
        let f = ratfun_reduce(BivarPoly::constant(lam(&[-1])), BivarPoly::z_minus_one()).unwrap();
        let v = f.eval(Complex64::new(2.0, 0.0), 0.0).unwrap();
        assert!((v.re + 1.0).abs() < 1e-14 && v.im.abs() < 1e-14);
        assert!(matches!(
            f.eval(Complex64::new(1.0, 0.0), 0.0),
            Err(Error::PoleAtEvaluationPoint(_))
        ));
    }

    #[test]
    fn monic_pin_with_rational_leading() {
        // (z-1) / (2z + 4) → (1/2 z - 1/2) / (z + 2)
        let den = zpoly(&[lam(&[4]), lam(&[2])]);
        let f = ratfun_reduce(BivarPoly::z_minus_one(), den).unwrap();
        assert_eq!(f.den(), &zpoly(&[lam(&[2]), lam(&[1])]));
        assert_eq!(f.num(), &BivarPoly::z_minus_one().scale(&rat(1, 2)));
    }
}
