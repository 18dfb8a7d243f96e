//! Polynomials, the ring R = F_q[X]/(X^m - lambda) and the module R^ell.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{GaloisField, Gf};

/// Coefficients constant term first, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Gf>", into = "Vec<Gf>")]
pub struct Poly {
    coeffs: Vec<Gf>,
}

impl From<Vec<Gf>> for Poly {
    fn from(coeffs: Vec<Gf>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Gf> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Gf>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_u32s(c: &[u32]) -> Self {
        Poly::new(c.iter().map(|&x| Gf(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    pub fn one() -> Self {
        Poly { coeffs: vec![Gf::ONE] }
    }
    pub fn constant(c: Gf) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Gf, deg: usize) -> Self {
        let mut v = vec![Gf::ZERO; deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// X^m - lambda.
    pub fn twist_modulus(f: &GaloisField, m: usize, lambda: Gf) -> Self {
        let mut v = vec![Gf::ZERO; m + 1];
        v[0] = f.neg(lambda);
        v[m] = Gf::ONE;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Gf {
        self.coeffs.last().copied().unwrap_or(Gf::ZERO)
    }

    pub fn to_u32s(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    pub fn add(&self, f: &GaloisField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &GaloisField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &GaloisField) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, f: &GaloisField, c: Gf) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Multiplication by X^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Gf::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    pub fn mul(&self, f: &GaloisField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Gf::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::new(v)
    }

    pub fn divrem(&self, f: &GaloisField, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("polynomial division by zero".into()))?;
        let lead_inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Gf::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, dj));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, f: &GaloisField, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(f, d)?.1)
    }

    pub fn eval(&self, f: &GaloisField, x: Gf) -> Gf {
        self.coeffs.iter().rev().fold(Gf::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn monic(&self, f: &GaloisField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.leading()))
    }

    /// Monic gcd together with Bezout cofactors: g = u a + v b.
    pub fn ext_gcd(f: &GaloisField, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1).expect("nonzero divisor");
            let s = s0.sub(f, &q.mul(f, &s1));
            let t = t0.sub(f, &q.mul(f, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = f.inv(r0.leading());
        (r0.scale(f, c), s0.scale(f, c), t0.scale(f, c))
    }

    pub fn gcd(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
        Self::ext_gcd(f, a, b).0
    }

    /// Reduction by the rule X^m = lambda.
    pub fn reduce_twisted(&self, f: &GaloisField, m: usize, lambda: Gf) -> Poly {
        if self.coeffs.len() <= m {
            return self.clone();
        }
        let mut v = vec![Gf::ZERO; m];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let wraps = (i / m) as u64;
            let k = i % m;
            v[k] = f.add(v[k], f.mul(c, f.pow(lambda, wraps)));
        }
        Poly::new(v)
    }

    /// Coefficient vector of fixed length m.
    pub fn padded(&self, m: usize) -> Vec<Gf> {
        (0..m).map(|i| self.coeff(i)).collect()
    }
}

/// Product in F_q[X]/(X^m - lambda).
pub fn ring_mul(f: &GaloisField, a: &Poly, b: &Poly, m: usize, lambda: Gf) -> Poly {
    a.mul(f, b).reduce_twisted(f, m, lambda)
}

/// Cyclic shift of a length-n word by ell positions, the wrapped symbols scaled by lambda.
pub fn constashift(f: &GaloisField, word: &[Gf], lambda: Gf, ell: usize) -> Result<Vec<Gf>> {
    let n = word.len();
    if ell == 0 || !n.is_multiple_of(ell) {
        return Err(Error::Shape(format!("{ell} does not divide the length {n}")));
    }
    if lambda.is_zero() {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    let mut out = Vec::with_capacity(n);
    out.extend(word[n - ell..].iter().map(|&c| f.mul(lambda, c)));
    out.extend_from_slice(&word[..n - ell]);
    Ok(out)
}

/// Element of R^ell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientPolyVector {
    m: usize,
    lambda: Gf,
    comps: Vec<Poly>,
}

impl QuotientPolyVector {
    pub fn new(m: usize, lambda: Gf, comps: Vec<Poly>) -> Result<Self> {
        if let Some(j) = comps.iter().position(|c| c.degree().is_some_and(|d| d >= m)) {
            return Err(Error::Shape(format!("component {j} has degree >= m = {m}")));
        }
        Ok(QuotientPolyVector { m, lambda, comps })
    }

    pub fn zero(m: usize, ell: usize, lambda: Gf) -> Self {
        QuotientPolyVector { m, lambda, comps: vec![Poly::zero(); ell] }
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn ell(&self) -> usize {
        self.comps.len()
    }
    pub fn lambda(&self) -> Gf {
        self.lambda
    }
    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }
    pub fn comp(&self, j: usize) -> &Poly {
        &self.comps[j]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn weight(&self) -> usize {
        self.comps.iter().map(|c| c.coeffs().iter().filter(|x| !x.is_zero()).count()).sum()
    }

    pub fn add(&self, f: &GaloisField, other: &Self) -> Self {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(f, b)).collect();
        QuotientPolyVector { m: self.m, lambda: self.lambda, comps }
    }

    pub fn sub(&self, f: &GaloisField, other: &Self) -> Self {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(f, b)).collect();
        QuotientPolyVector { m: self.m, lambda: self.lambda, comps }
    }

    /// Componentwise product with a ring element.
    pub fn scale(&self, f: &GaloisField, a: &Poly) -> Self {
        let comps = self.comps.iter().map(|c| ring_mul(f, a, c, self.m, self.lambda)).collect();
        QuotientPolyVector { m: self.m, lambda: self.lambda, comps }
    }

    pub fn mul_x(&self, f: &GaloisField) -> Self {
        self.scale(f, &Poly::monomial(Gf::ONE, 1))
    }

    /// Evaluates every component at x.
    pub fn eval(&self, f: &GaloisField, x: Gf) -> Vec<Gf> {
        self.comps.iter().map(|c| c.eval(f, x)).collect()
    }

    /// Row-major m x ell layout: symbol (i, j) sits at i*ell + j.
    pub fn from_word(word: &[Gf], m: usize, ell: usize, lambda: Gf) -> Result<Self> {
        phi(word, m, ell, lambda)
    }

    pub fn to_word(&self) -> Vec<Gf> {
        phi_inv(self)
    }

    /// Block layout: component j occupies positions j*m .. (j+1)*m.
    pub fn from_blocks(word: &[Gf], m: usize, ell: usize, lambda: Gf) -> Result<Self> {
        if word.len() != m * ell {
            return Err(Error::Shape(format!("expected length {}, got {}", m * ell, word.len())));
        }
        let comps = word.chunks(m.max(1)).take(ell).map(|c| Poly::new(c.to_vec())).collect();
        Ok(QuotientPolyVector { m, lambda, comps })
    }

    pub fn to_blocks(&self) -> Vec<Gf> {
        self.comps.iter().flat_map(|c| c.padded(self.m)).collect()
    }
}

pub fn phi(word: &[Gf], m: usize, ell: usize, lambda: Gf) -> Result<QuotientPolyVector> {
    if word.len() != m * ell {
        return Err(Error::Shape(format!("expected length {}, got {}", m * ell, word.len())));
    }
    let comps = (0..ell)
        .map(|j| Poly::new((0..m).map(|i| word[i * ell + j]).collect()))
        .collect();
    Ok(QuotientPolyVector { m, lambda, comps })
}

pub fn phi_inv(v: &QuotientPolyVector) -> Vec<Gf> {
    let ell = v.ell();
    let mut word = vec![Gf::ZERO; v.m * ell];
    for (j, c) in v.comps.iter().enumerate() {
        for (i, &x) in c.coeffs().iter().enumerate() {
            word[i * ell + j] = x;
        }
    }
    word
}
