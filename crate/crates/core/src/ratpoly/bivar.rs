//! Bivariate polynomials in (z, λ): polynomials in z whose coefficients are
//! λ-polynomials, plus a subresultant gcd over that ring.

use std::fmt;
use std::mem;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::lambda::LambdaPoly;
use super::rational::Rational;

/// Polynomial in z with `LambdaPoly` coefficients, ascending by z-power.
///
/// The zero polynomial is the empty list; otherwise the leading
/// z-coefficient is a nonzero λ-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    coeffs: Vec<LambdaPoly>,
}

impl BivarPoly {
    pub fn new(mut coeffs: Vec<LambdaPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LambdaPoly::one())
    }

    /// A polynomial constant in z (but possibly depending on λ).
    pub fn constant(c: LambdaPoly) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·z^k.
    pub fn monomial(c: LambdaPoly, k: usize) -> Self {
        let mut coeffs = vec![LambdaPoly::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// z - 1, a factor that recurs throughout.
    pub fn z_minus_one() -> Self {
        Self::new(vec![LambdaPoly::constant(crate::ratpoly::rat_int(-1)), LambdaPoly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn z_degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Coefficient of z^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> LambdaPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&LambdaPoly> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_lambda(&self, m: &LambdaPoly) -> Self {
        if m.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * m).collect())
    }

    /// Pseudo-division in z: returns (q, r) with lc(d)^(deg self - deg d + 1)·self = q·d + r.
    ///
    /// If deg self < deg d the result is (0, self).
    pub fn pseudo_div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let nd = d.z_degree().unwrap();
        let np = match self.z_degree() {
            Some(np) if np >= nd => np,
            _ => return (Self::zero(), self.clone()),
        };
        let lc = d.leading().unwrap().clone();
        let mut q = Self::zero();
        let mut r = self.clone();
        let mut steps_left = np - nd + 1;
        while let Some(rd) = r.z_degree() {
            if rd < nd {
                break;
            }
            let coef = r.leading().unwrap().clone();
            let k = rd - nd;
            q = &q.mul_lambda(&lc) + &Self::monomial(coef.clone(), k);
            r = &r.mul_lambda(&lc) - &d.mul_lambda(&coef).shift_z(k);
            steps_left -= 1;
        }
        // Pad so the pseudo-division identity holds with the full lc power.
        for _ in 0..steps_left {
            q = q.mul_lambda(&lc);
            r = r.mul_lambda(&lc);
        }
        (q, r)
    }

    /// Multiplies by z^k.
    pub fn shift_z(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![LambdaPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Exact division in z; panics if the divisor does not divide exactly.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let nd = d.z_degree().unwrap();
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![
            LambdaPoly::zero();
            self.z_degree().unwrap().checked_sub(nd).map_or(0, |k| k + 1)
        ];
        assert!(!q.is_empty(), "non-exact division: degree too low");
        while let Some(rd) = r.z_degree() {
            if rd < nd {
                break;
            }
            let c = r.leading().unwrap().exact_div(lc);
            let k = rd - nd;
            r = &r - &d.mul_lambda(&c).shift_z(k);
            q[k] = c;
        }
        assert!(r.is_zero(), "non-exact division: remainder left");
        Self::new(q)
    }

    /// Divides every z-coefficient by the λ-polynomial `m`; panics when not exact.
    pub fn exact_div_lambda(&self, m: &LambdaPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.exact_div(m)).collect())
    }

    /// Content: the monic λ-gcd of all z-coefficients (zero for the zero polynomial).
    pub fn content(&self) -> LambdaPoly {
        let mut g = LambdaPoly::zero();
        for c in &self.coeffs {
            g = LambdaPoly::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Removes the λ-content. Rational scalars are untouched (units).
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.exact_div_lambda(&c)
        }
    }

    pub fn eval(&self, z: Complex64, lambda: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.eval_f64(lambda);
        }
        acc
    }

    /// Substitutes a numeric λ, yielding z-polynomial coefficients (ascending).
    pub fn substitute_lambda(&self, lambda: f64) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.eval_f64(lambda)).collect()
    }

    /// Substitutes an exact λ, yielding exact z-polynomial coefficients (ascending,
    /// trailing zeros trimmed).
    pub fn substitute_lambda_rational(&self, lambda: &Rational) -> Vec<Rational> {
        let mut out: Vec<Rational> =
            self.coeffs.iter().map(|c| c.eval_rational(lambda)).collect();
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Serialized z-coefficient lists, lowest degree first.
    pub fn coeff_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.coeff_list_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 {
                String::new()
            } else if c.degree() == Some(0) {
                c.render("L")
            } else {
                format!("({})", c.render("L"))
            };
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = match (coeff.is_empty(), var.is_empty()) {
                (true, _) => var,
                (false, true) => coeff,
                (false, false) => format!("{coeff} {var}"),
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        BivarPoly::new(out)
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        BivarPoly::new(out)
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let mut out = vec![LambdaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BivarPoly::new(out)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Pins the one remaining scalar freedom of a primitive polynomial: scales so
/// the leading λ-coefficient of the leading z-coefficient equals 1.
fn pin_scalar(p: BivarPoly) -> BivarPoly {
    match p.leading().and_then(|lc| lc.leading().cloned()) {
        Some(top) if !top.is_one() => {
            let inv = top.recip();
            p.scale(&inv)
        }
        _ => p,
    }
}

fn normalized_primitive(p: &BivarPoly) -> BivarPoly {
    pin_scalar(p.primitive_part())
}

/// Greatest common divisor in z over the field of rational functions in λ,
/// via a subresultant pseudo-remainder sequence over the λ-polynomial ring.
///
/// The result is represented λ-denominator-free: primitive in λ, scaled so
/// the leading λ-coefficient of its leading z-coefficient is 1. Polynomials
/// that are coprime in z (including any nonzero z-constant gcd, a unit over
/// the λ-function field) yield the constant 1.
pub fn poly_gcd_z(p: &BivarPoly, q: &BivarPoly) -> BivarPoly {
    assert!(!(p.is_zero() && q.is_zero()), "gcd of two zero polynomials");
    if p.is_zero() {
        return unit_or(normalized_primitive(q));
    }
    if q.is_zero() {
        return unit_or(normalized_primitive(p));
    }
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.z_degree() < b.z_degree() {
        mem::swap(&mut a, &mut b);
    }
    if b.z_degree() == Some(0) {
        return BivarPoly::one();
    }

    let mut deg_prev = a.z_degree().unwrap();
    let mut deg_cur = b.z_degree().unwrap();
    // Subresultant bookkeeping: lc_prev and psi start as units.
    let mut lc_prev = LambdaPoly::one();
    let mut psi = LambdaPoly::one();
    loop {
        let delta = deg_prev - deg_cur;
        let (_, rem) = a.pseudo_div_rem(&b);
        if rem.is_zero() {
            break;
        }
        let divisor = &(-&lc_prev) * &(-&psi).pow(delta);
        let f = rem.exact_div_lambda(&divisor);
        if f.z_degree() == Some(0) {
            return BivarPoly::one();
        }
        let new_deg = f.z_degree().unwrap();
        let lc_b = b.leading().unwrap().clone();
        psi = if delta == 0 {
            psi
        } else {
            lc_b.pow(delta).exact_div(&psi.pow(delta - 1))
        };
        a = b;
        b = f;
        deg_prev = deg_cur;
        deg_cur = new_deg;
        lc_prev = lc_b;
    }
    unit_or(normalized_primitive(&b))
}

fn unit_or(g: BivarPoly) -> BivarPoly {
    if g.z_degree() == Some(0) {
        BivarPoly::one()
    } else {
        g
    }
}
