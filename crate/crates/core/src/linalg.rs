//! Dense matrices over a [`GaloisField`] and Gaussian elimination.

use crate::error::{Error, Result};
use crate::galois::{GaloisField, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Gf::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gf>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gf) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Gf {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Gf>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, f: &GaloisField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, f: &GaloisField, v: &[Gf]) -> Result<Vec<Gf>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector length {} != {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(Gf::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows > 0 && other.rows > 0 && self.cols != other.cols {
            return Err(Error::Shape("column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &GaloisField, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols {
                let t = m.get(p, j);
                m.set(p, j, m.get(row, j));
                m.set(row, j, t);
            }
        }
        let inv = f.inv(m.get(row, col));
        for j in col..m.cols {
            m.set(row, j, f.mul(inv, m.get(row, j)));
        }
        for i in 0..m.rows {
            let factor = m.get(i, col);
            if i == row || factor.is_zero() {
                continue;
            }
            for j in col..m.cols {
                let v = f.sub(m.get(i, j), f.mul(factor, m.get(row, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(f: &GaloisField, m: &Matrix) -> usize {
    rref(f, &mut m.clone()).len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace(f: &GaloisField, m: &Matrix) -> Vec<Vec<Gf>> {
    let mut r = m.clone();
    let pivots = rref(f, &mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Gf::ZERO; m.cols];
            v[fc] = Gf::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

/// One solution of a x = b, if any.
pub fn solve(f: &GaloisField, a: &Matrix, b: &[Gf]) -> Option<Vec<Gf>> {
    assert_eq!(a.rows, b.len());
    let aug = Matrix::from_fn(a.rows, a.cols + 1, |i, j| if j < a.cols { a.get(i, j) } else { b[i] });
    let mut r = aug;
    let pivots = rref(f, &mut r);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![Gf::ZERO; a.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(i, a.cols);
    }
    Some(x)
}

pub fn inverse(f: &GaloisField, a: &Matrix) -> Option<Matrix> {
    if a.rows != a.cols {
        return None;
    }
    let n = a.rows;
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j)
        } else if j - n == i {
            Gf::ONE
        } else {
            Gf::ZERO
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j)))
}
