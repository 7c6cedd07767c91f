//! Structured state-space model of first-order distributed algorithms and
//! exact extraction of the doubly-indexed transfer function G_λ(z).
//!
//! Per-agent dynamics with s states, scalar input u and output y:
//!
//! ```text
//! ξ⁺ = (A0 + λ A1) ξ + (B0 + λ B1) u
//! y  = (C0 + λ C1) ξ + (D0 + λ D1) u
//! ```
//!
//! where λ ranges over the Laplacian eigenvalues of the communication graph.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{parse_matrix, render_matrix, RatMatrix};
use crate::ratpoly::{parse_rational, ratfun_reduce, BivarPoly, BivarRatFun, LambdaPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredRealization {
    s: usize,
    pub a0: RatMatrix,
    pub a1: RatMatrix,
    pub b0: RatMatrix,
    pub b1: RatMatrix,
    pub c0: RatMatrix,
    pub c1: RatMatrix,
    pub d0: Rational,
    pub d1: Rational,
}

/// Diagnostics against the algorithm class: state dimension at most two,
/// no direct pass-through, and a single communication round per iteration
/// (B1 = 0 or C1 = 0).
#[derive(Clone, Debug)]
pub struct ClassDiagnostics {
    pub state_dim_ok: bool,
    pub passthrough_ok: bool,
    pub single_comm_ok: bool,
    pub messages: Vec<String>,
}

impl ClassDiagnostics {
    pub fn all_ok(&self) -> bool {
        self.state_dim_ok && self.passthrough_ok && self.single_comm_ok
    }
}

impl StructuredRealization {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a0: RatMatrix,
        a1: RatMatrix,
        b0: RatMatrix,
        b1: RatMatrix,
        c0: RatMatrix,
        c1: RatMatrix,
        d0: Rational,
        d1: Rational,
    ) -> Result<Self> {
        let s = a0.rows();
        let square = |m: &RatMatrix| m.rows() == s && m.cols() == s;
        let col = |m: &RatMatrix| m.rows() == s && m.cols() == 1;
        let row = |m: &RatMatrix| m.rows() == 1 && m.cols() == s;
        if s == 0 || !square(&a0) || !square(&a1) || !col(&b0) || !col(&b1) || !row(&c0) || !row(&c1)
        {
            return Err(Error::DimensionMismatch(format!(
                "blocks inconsistent with state dimension s = {s}"
            )));
        }
        Ok(Self { s, a0, a1, b0, b1, c0, c1, d0, d1 })
    }

    pub fn state_dim(&self) -> usize {
        self.s
    }

    pub fn has_passthrough(&self) -> bool {
        !self.d0.is_zero() || !self.d1.is_zero()
    }

    fn a_poly(&self) -> Vec<Vec<LambdaPoly>> {
        (0..self.s)
            .map(|i| {
                (0..self.s)
                    .map(|j| LambdaPoly::linear(self.a0[(i, j)].clone(), self.a1[(i, j)].clone()))
                    .collect()
            })
            .collect()
    }

    fn b_poly(&self) -> Vec<LambdaPoly> {
        (0..self.s)
            .map(|i| LambdaPoly::linear(self.b0[(i, 0)].clone(), self.b1[(i, 0)].clone()))
            .collect()
    }

    fn c_poly(&self) -> Vec<LambdaPoly> {
        (0..self.s)
            .map(|j| LambdaPoly::linear(self.c0[(0, j)].clone(), self.c1[(0, j)].clone()))
            .collect()
    }

    fn d_poly(&self) -> LambdaPoly {
        LambdaPoly::linear(self.d0.clone(), self.d1.clone())
    }

    /// Reduced transfer function
    /// C(λ)·adj(zI − A(λ))·B(λ)/det(zI − A(λ)) + D(λ), computed exactly.
    ///
    /// The characteristic polynomial and adjugate come from the
    /// Faddeev–LeVerrier recursion over the λ-polynomial ring; the integer
    /// divisions it performs are exact by construction and double-checked by
    /// the terminal zero-matrix identity.
    pub fn transfer_function(&self) -> BivarRatFun {
        let s = self.s;
        let a = self.a_poly();
        let mut bk: Vec<Vec<LambdaPoly>> = poly_identity(s);
        let mut char_coeffs = vec![LambdaPoly::zero(); s + 1];
        char_coeffs[s] = LambdaPoly::one();
        let mut adjugate = Vec::with_capacity(s);
        adjugate.push(bk.clone());
        for k in 1..=s {
            let m = poly_mat_mul(&a, &bk);
            let c = poly_trace(&m).scale(&Rational::new((-1).into(), (k as i64).into()));
            char_coeffs[s - k] = c.clone();
            bk = m;
            for (i, row) in bk.iter_mut().enumerate().take(s) {
                row[i] = &row[i] + &c;
            }
            if k < s {
                adjugate.push(bk.clone());
            }
        }
        // Terminal identity A·B_{s-1} + c_0 I = 0 certifies the exact divisions.
        assert!(
            bk.iter().all(|row| row.iter().all(LambdaPoly::is_zero)),
            "Faddeev-LeVerrier terminal identity violated"
        );

        let den = BivarPoly::new(char_coeffs.clone());
        let cvec = self.c_poly();
        let bvec = self.b_poly();
        let mut num_coeffs = vec![LambdaPoly::zero(); s];
        for (k, mat) in adjugate.iter().enumerate() {
            // C · B_k · B contributes to the z^(s-1-k) coefficient.
            let mut acc = LambdaPoly::zero();
            for i in 0..s {
                for j in 0..s {
                    if cvec[i].is_zero() || mat[i][j].is_zero() || bvec[j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(&cvec[i] * &mat[i][j]) * &bvec[j]);
                }
            }
            num_coeffs[s - 1 - k] = acc;
        }
        let mut num = BivarPoly::new(num_coeffs);
        let d = self.d_poly();
        if !d.is_zero() {
            num = &num + &den.mul_lambda(&d);
        }
        ratfun_reduce(num, den).expect("characteristic polynomial is monic, hence nonzero")
    }

    /// Change of state coordinates ξ → Tξ; the transfer function is invariant.
    pub fn similarity_transform(&self, t: &RatMatrix) -> Result<Self> {
        if t.rows() != self.s || t.cols() != self.s {
            return Err(Error::DimensionMismatch(format!(
                "transform must be {s}x{s}",
                s = self.s
            )));
        }
        let tinv = t.inverse().ok_or(Error::SingularTransform)?;
        Ok(Self {
            s: self.s,
            a0: t.mul(&self.a0).mul(&tinv),
            a1: t.mul(&self.a1).mul(&tinv),
            b0: t.mul(&self.b0),
            b1: t.mul(&self.b1),
            c0: self.c0.mul(&tinv),
            c1: self.c1.mul(&tinv),
            d0: self.d0.clone(),
            d1: self.d1.clone(),
        })
    }

    pub fn validate_class(&self) -> ClassDiagnostics {
        let mut messages = Vec::new();
        let state_dim_ok = self.s <= 2;
        if !state_dim_ok {
            messages.push(format!(
                "state dimension {} exceeds 2; canonicalization must go through the transfer function",
                self.s
            ));
        }
        let passthrough_ok = !self.has_passthrough();
        if !passthrough_ok {
            messages.push("nonzero pass-through D0 or D1".into());
        }
        let single_comm_ok = self.b1.is_zero() || self.c1.is_zero();
        if !single_comm_ok {
            messages.push(
                "both B1 and C1 nonzero: requires two sequential communication rounds per iteration"
                    .into(),
            );
        }
        ClassDiagnostics { state_dim_ok, passthrough_ok, single_comm_ok, messages }
    }

    /// Serializes to the flat key-value realization config format.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("s = {}\n", self.s));
        out.push_str(&format!("A0 = {}\n", render_matrix(&self.a0)));
        out.push_str(&format!("A1 = {}\n", render_matrix(&self.a1)));
        out.push_str(&format!("B0 = {}\n", render_matrix(&self.b0.transpose())));
        out.push_str(&format!("B1 = {}\n", render_matrix(&self.b1.transpose())));
        out.push_str(&format!("C0 = {}\n", render_matrix(&self.c0)));
        out.push_str(&format!("C1 = {}\n", render_matrix(&self.c1)));
        out.push_str(&format!("D0 = {}\n", self.d0));
        out.push_str(&format!("D1 = {}\n", self.d1));
        out
    }

    /// Parses the realization config format written by [`to_config_string`].
    ///
    /// Fields: `s`, square matrices `A0`/`A1` ("a b ; c d"), vectors
    /// `B0`/`B1`/`C0`/`C1`, scalars `D0`/`D1`. Rational entries round-trip
    /// bit-exactly.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('[') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected 'key = value', got '{line}'")))?;
            fields.insert(key.trim().to_lowercase(), value.trim().to_string());
        }
        let get = |k: &str| {
            fields
                .get(k)
                .ok_or_else(|| Error::Parse(format!("missing realization field '{k}'")))
        };
        let s: usize = get("s")?
            .parse()
            .map_err(|_| Error::Parse("field 's' must be a positive integer".into()))?;
        if s == 0 {
            return Err(Error::Parse("field 's' must be positive".into()));
        }
        let a0 = parse_matrix(get("a0")?, s, s)?;
        let a1 = parse_matrix(get("a1")?, s, s)?;
        let b0 = parse_matrix(get("b0")?, 1, s)?.transpose();
        let b1 = parse_matrix(get("b1")?, 1, s)?.transpose();
        let c0 = parse_matrix(get("c0")?, 1, s)?;
        let c1 = parse_matrix(get("c1")?, 1, s)?;
        let d0 = parse_rational(get("d0")?)?;
        let d1 = parse_rational(get("d1")?)?;
        Self::new(a0, a1, b0, b1, c0, c1, d0, d1)
    }

    pub fn read_file(path: &std::path::Path) -> Result<Self> {
        Self::from_config_str(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_config_string())?;
        Ok(())
    }
}

fn poly_identity(s: usize) -> Vec<Vec<LambdaPoly>> {
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| if i == j { LambdaPoly::one() } else { LambdaPoly::zero() })
                .collect()
        })
        .collect()
}

fn poly_mat_mul(a: &[Vec<LambdaPoly>], b: &[Vec<LambdaPoly>]) -> Vec<Vec<LambdaPoly>> {
    let s = a.len();
    let mut out = vec![vec![LambdaPoly::zero(); s]; s];
    for i in 0..s {
        for k in 0..s {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..s {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

fn poly_trace(a: &[Vec<LambdaPoly>]) -> LambdaPoly {
    let mut t = LambdaPoly::zero();
    for (i, row) in a.iter().enumerate() {
        t = &t + &row[i];
    }
    t
}

/// True when the reduced transfer function is strictly proper in z.
pub fn strictly_proper(tf: &BivarRatFun) -> bool {
    match tf.num().z_degree() {
        None => true,
        Some(n) => n < tf.den().z_degree().unwrap_or(0),
    }
}

/// Convenience check used in tests: |x| of every entry below tolerance.
pub fn matrix_abs_max(m: &RatMatrix) -> Rational {
    let mut best = Rational::zero();
    for i in 0..m.rows() {
        for e in m.row(i) {
            let a = e.abs();
            if a > best {
                best = a;
            }
        }
    }
    best
}
