//! Twistulant matrices: rows are successive twisted shifts of one defining row.
//!
//! The twistulant of c(X) with twist mu is the matrix of multiplication by c in
//! F_q[X]/(X^m - mu) acting on row vectors, so products and inverses reduce to
//! ring arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{GaloisField, Gf};
use crate::linalg::Matrix;
use crate::polyring::{ring_mul, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistulantMatrix {
    m: usize,
    twist: Gf,
    row: Vec<Gf>,
}

impl TwistulantMatrix {
    pub fn from_poly(c: &Poly, m: usize, twist: Gf) -> Result<Self> {
        if m == 0 {
            return Err(Error::Shape("twistulant size must be positive".into()));
        }
        if twist.is_zero() {
            return Err(Error::Domain("twist must be nonzero".into()));
        }
        if c.degree().is_some_and(|d| d >= m) {
            return Err(Error::Shape(format!("defining polynomial has degree >= {m}")));
        }
        Ok(TwistulantMatrix { m, twist, row: c.padded(m) })
    }

    pub fn from_row(row: Vec<Gf>, twist: Gf) -> Result<Self> {
        let m = row.len();
        Self::from_poly(&Poly::new(row), m, twist)
    }

    pub fn identity(m: usize, twist: Gf) -> Self {
        Self::from_poly(&Poly::one(), m, twist).expect("identity")
    }

    /// Recovers the twistulant from a dense matrix, or None if the matrix is not one.
    pub fn from_dense(f: &GaloisField, dense: &Matrix, twist: Gf) -> Option<Self> {
        if dense.rows() != dense.cols() || dense.rows() == 0 {
            return None;
        }
        let t = Self::from_row(dense.row(0).to_vec(), twist).ok()?;
        (t.to_dense(f) == *dense).then_some(t)
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn twist(&self) -> Gf {
        self.twist
    }
    pub fn row(&self) -> &[Gf] {
        &self.row
    }
    pub fn poly(&self) -> Poly {
        Poly::new(self.row.clone())
    }

    pub fn entry(&self, f: &GaloisField, i: usize, j: usize) -> Gf {
        if j >= i {
            self.row[j - i]
        } else {
            f.mul(self.twist, self.row[self.m + j - i])
        }
    }

    pub fn to_dense(&self, f: &GaloisField) -> Matrix {
        Matrix::from_fn(self.m, self.m, |i, j| self.entry(f, i, j))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.twist != other.twist {
            return Err(Error::Shape(format!(
                "twistulants differ in size or twist ({}, {}) vs ({}, {})",
                self.m, self.twist, other.m, other.twist
            )));
        }
        Ok(())
    }

    pub fn mul(&self, f: &GaloisField, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let prod = ring_mul(f, &self.poly(), &other.poly(), self.m, self.twist);
        Self::from_poly(&prod, self.m, self.twist)
    }

    pub fn add(&self, f: &GaloisField, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Self::from_poly(&self.poly().add(f, &other.poly()), self.m, self.twist)
    }

    /// Inverse through the extended gcd with X^m - twist.
    pub fn inv(&self, f: &GaloisField) -> Result<Self> {
        let modulus = Poly::twist_modulus(f, self.m, self.twist);
        let (g, s, _) = Poly::ext_gcd(f, &self.poly(), &modulus);
        if g != Poly::one() {
            return Err(Error::SingularMatrix);
        }
        Self::from_poly(&s.rem(f, &modulus)?, self.m, self.twist)
    }

    pub fn is_invertible(&self, f: &GaloisField) -> bool {
        let modulus = Poly::twist_modulus(f, self.m, self.twist);
        Poly::gcd(f, &self.poly(), &modulus) == Poly::one()
    }
}

/// H = [I | G_1* | ... | G_{ell-1}*] with blocks of twist `twist`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCheckMatrix {
    m: usize,
    twist: Gf,
    blocks: Vec<TwistulantMatrix>,
}

impl ParityCheckMatrix {
    /// Blocks after the leading identity.
    pub fn new(m: usize, twist: Gf, tail: Vec<TwistulantMatrix>) -> Result<Self> {
        let mut blocks = vec![TwistulantMatrix::identity(m, twist)];
        for b in tail {
            if b.m != m || b.twist != twist {
                return Err(Error::Shape("block size or twist mismatch".into()));
            }
            blocks.push(b);
        }
        Ok(ParityCheckMatrix { m, twist, blocks })
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn ell(&self) -> usize {
        self.blocks.len()
    }
    pub fn twist(&self) -> Gf {
        self.twist
    }
    pub fn blocks(&self) -> &[TwistulantMatrix] {
        &self.blocks
    }

    /// Dense m x m*ell matrix, blocks side by side.
    pub fn to_dense(&self, f: &GaloisField) -> Matrix {
        let m = self.m;
        let dense: Vec<Matrix> = self.blocks.iter().map(|b| b.to_dense(f)).collect();
        Matrix::from_fn(m, m * self.ell(), |i, j| dense[j / m].get(i, j % m))
    }

    /// H x for x in block layout.
    pub fn syndrome(&self, f: &GaloisField, x: &[Gf]) -> Result<Vec<Gf>> {
        self.to_dense(f).mul_vec(f, x)
    }
}

/// Left-multiplies every block by the inverse of the first.
pub fn standard_form(f: &GaloisField, blocks: &[TwistulantMatrix]) -> Result<ParityCheckMatrix> {
    let lead = blocks.first().ok_or_else(|| Error::Shape("no blocks".into()))?;
    let lead_inv = lead.inv(f).map_err(|_| Error::SingularLeadBlock)?;
    let dense_inv = lead_inv.to_dense(f);
    let mut tail = Vec::with_capacity(blocks.len() - 1);
    for b in &blocks[1..] {
        let t = lead_inv.mul(f, b)?;
        let check = dense_inv.mul(f, &b.to_dense(f))?;
        if TwistulantMatrix::from_dense(f, &check, b.twist).as_ref() != Some(&t) {
            return Err(Error::Domain("standard-form block is not the expected twistulant".into()));
        }
        tail.push(t);
    }
    ParityCheckMatrix::new(lead.m, lead.twist, tail)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HConditionReport {
    pub valid: bool,
    /// Pairs (i, j) of non-identity blocks with the same defining polynomial.
    pub duplicate_blocks: Vec<(usize, usize)>,
    /// Whether the coefficient-uniqueness condition applies (twist 1 or q = 2).
    pub uniqueness_checked: bool,
    /// Blocks where no coefficient at index >= 1 differs from all others at index >= 1.
    pub no_unique_coefficient: Vec<usize>,
}

pub fn validate_h_conditions(f: &GaloisField, h: &ParityCheckMatrix) -> HConditionReport {
    let tail = &h.blocks[1..];
    let mut duplicate_blocks = Vec::new();
    for i in 0..tail.len() {
        for j in i + 1..tail.len() {
            if tail[i].row == tail[j].row {
                duplicate_blocks.push((i + 1, j + 1));
            }
        }
    }
    let uniqueness_checked = h.twist == Gf::ONE || f.q() == 2;
    let mut no_unique_coefficient = Vec::new();
    if uniqueness_checked {
        for (k, b) in tail.iter().enumerate() {
            let rest = &b.row[1..];
            let has_unique =
                (0..rest.len()).any(|i| rest.iter().filter(|&&c| c == rest[i]).count() == 1);
            if !has_unique {
                no_unique_coefficient.push(k + 1);
            }
        }
    }
    HConditionReport {
        valid: duplicate_blocks.is_empty() && no_unique_coefficient.is_empty(),
        duplicate_blocks,
        uniqueness_checked,
        no_unique_coefficient,
    }
}

/// The m-cycle matrix: `lambda` at (0, m-1) and ones on the subdiagonal.
pub fn cycle_matrix(m: usize, lambda: Gf) -> Matrix {
    Matrix::from_fn(m, m, |i, j| {
        if i == 0 && j == m - 1 {
            lambda
        } else if i == j + 1 {
            Gf::ONE
        } else {
            Gf::ZERO
        }
    })
}

/// Inverse of [`cycle_matrix`]: `lambda^-1` at (m-1, 0) and ones on the superdiagonal.
pub fn cycle_matrix_inverse(f: &GaloisField, m: usize, lambda: Gf) -> Matrix {
    let li = f.inv(lambda);
    Matrix::from_fn(m, m, |i, j| {
        if i == m - 1 && j == 0 {
            li
        } else if j == i + 1 {
            Gf::ONE
        } else {
            Gf::ZERO
        }
    })
}
