//! Small dense matrices over exact rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{rational_to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds from i64 entries, row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&e| Rational::from_integer(e.into())).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Exact inverse via Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[(col, col)].clone();
            let pinv = p.recip();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &pinv;
                inv[(col, j)] = &inv[(col, j)] * &pinv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &a[(col, j)] * &f;
                    a[(r, j)] -= t;
                    let t = &inv[(col, j)] * &f;
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(rational_to_f64).collect())
            .collect()
    }

    /// Exact matrix-vector product (vector given column-wise).
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Parses row-major "a b c ; d e f" matrix text with rational entries.
pub fn parse_matrix(text: &str, rows: usize, cols: usize) -> Result<RatMatrix> {
    let mut parsed_rows = Vec::new();
    for row_text in text.split(';') {
        let entries: Vec<&str> = row_text.split_whitespace().collect();
        if entries.is_empty() {
            continue;
        }
        let row: Result<Vec<Rational>> =
            entries.iter().map(|e| crate::ratpoly::parse_rational(e)).collect();
        parsed_rows.push(row?);
    }
    if parsed_rows.len() != rows || parsed_rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!(
            "expected {rows}x{cols} matrix, got {} rows of {:?} entries",
            parsed_rows.len(),
            parsed_rows.iter().map(|r| r.len()).collect::<Vec<_>>()
        )));
    }
    Ok(RatMatrix::from_rows(parsed_rows))
}

/// Renders in the same "a b c ; d e f" form accepted by [`parse_matrix`].
pub fn render_matrix(m: &RatMatrix) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv[(0, 0)], rat(-2, 1));
        assert_eq!(inv[(0, 1)], rat(1, 1));
    }

    #[test]
    fn singular_detected() {
        let m = RatMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn parse_render_round_trip() {
        let text = "1 -1/2 0 ; 0 1 2/3";
        let m = parse_matrix(text, 2, 3).unwrap();
        assert_eq!(render_matrix(&m), text);
        assert!(parse_matrix(text, 3, 2).is_err());
    }
}
