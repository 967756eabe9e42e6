//! Matrices over `Z[q^±]` with exact fraction-free determinants.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A dense matrix over the Laurent ring.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LaurentMatrix {
            rows,
            cols,
            entries: alloc::vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LaurentMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.cols != other.rows {
            return Err(Error::Mismatch("matrix dimensions do not compose".into()));
        }
        let mut out = LaurentMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.at(r, k).is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    if other.at(k, c).is_zero() {
                        continue;
                    }
                    let prod = self.at(r, k) * other.at(k, c);
                    *out.at_mut(r, c) += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over `Z[q^±]`.
    pub fn apply_vec(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if v.len() != self.cols {
            return Err(Error::Mismatch("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = LaurentPoly::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(r, c).is_zero() {
                        acc += &(self.at(r, c) * x);
                    }
                }
                acc
            })
            .collect())
    }

    /// Exact determinant by fraction-free Bareiss elimination. A global
    /// power of `q` clears negative exponents first; the correction is
    /// divided back out at the end.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Mismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let min_exp = self
            .entries
            .iter()
            .filter_map(LaurentPoly::min_exp)
            .min()
            .unwrap_or(0)
            .min(0);
        let shift = -min_exp;
        let mut m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).shifted(shift)).collect())
            .collect();

        let mut sign_flip = false;
        let mut prev_pivot = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                m.swap(k, swap);
                sign_flip = !sign_flip;
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let(a, b) = (&m[k][k] * &m[r][c], &m[r][k] * &m[k][c]);
                    let num = &a - &b;
                    m[r][c] = num
                        .exact_div(&prev_pivot)
                        .expect("Bareiss minors divide exactly");
                }
                m[r][k] = LaurentPoly::zero();
            }
            prev_pivot = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].clone();
        if sign_flip {
            det = -det;
        }
        // Undo the global q-shift: det(q^s · A) = q^{s n} det(A).
        Ok(det.shifted(-shift * n as i64))
    }
}

impl core::fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "LaurentMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}{}", if c > 0 { ", " } else { "" }, self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
