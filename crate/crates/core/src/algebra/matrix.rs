use std::fmt;
use std::ops::{Index, IndexMut};

use super::{LaurentPoly, Ring};
use crate::error::{Error, Result};

/// Dense rectangular matrix of Laurent polynomials over a single ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring, rows, cols, entries: vec![LaurentPoly::zero(ring); rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(ring);
        }
        m
    }

    /// Build from row vectors; all entries must share `ring`.
    pub fn from_rows(ring: Ring, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Precondition("ragged matrix rows".into()));
            }
            for e in row {
                ring.check_same(e.ring())?;
                entries.push(e);
            }
        }
        Ok(PolyMatrix { ring, rows: n, cols, entries })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix on the given row and column indices (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self[(i, j)].clone());
            }
        }
        PolyMatrix { ring: self.ring, rows: rows.len(), cols: cols.len(), entries }
    }

    /// Drop the columns in `range`.
    pub fn without_columns(&self, range: std::ops::Range<usize>) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|j| !range.contains(j)).collect();
        self.select(&rows, &cols)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let ring = self.ring;
        if n == 0 {
            return Ok(LaurentPoly::one(ring));
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(ring);
        for k in 0..n - 1 {
            // prefer the sparsest available pivot to keep degrees small
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].span().unwrap_or(usize::MAX));
            let Some(pivot) = pivot else {
                return Ok(LaurentPoly::zero(ring));
            };
            if pivot != k {
                a.swap(pivot, k);
                negate = !negate;
            }
            let (upper, lower) = a.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            for row in lower.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let num = &(&pivot_row[k] * &row[j]) - &(&lead * &pivot_row[j]);
                    row[j] = num
                        .exact_div(&prev)?
                        .expect("Bareiss step divides exactly");
                }
                row[k] = LaurentPoly::zero(ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, Ring::Int).unwrap()
    }

    #[test]
    fn identity_and_scalar() {
        assert!(PolyMatrix::identity(Ring::Fp(5), 4).det().unwrap().is_one());
        let m = PolyMatrix::from_rows(Ring::Int, vec![vec![z("t^2 - 3")]]).unwrap();
        assert_eq!(m.det().unwrap(), z("t^2 - 3"));
        assert!(PolyMatrix::zeros(Ring::Int, 0, 0).det().unwrap().is_one());
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::zeros(Ring::Int, 2, 3);
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn two_by_two_with_zero_pivot() {
        let m = PolyMatrix::from_rows(
            Ring::Int,
            vec![vec![z("0"), z("t")], vec![z("1 - t"), z("t^-1")]],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), z("t^2 - t"));
    }
}
