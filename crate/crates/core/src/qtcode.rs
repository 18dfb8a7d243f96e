//! Quasi-twisted codes given by a reduced Groebner basis of their F_q[X]-module.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{find_splitting_data, gcd, GaloisField, Gf, SplittingData};
use crate::linalg::{nullspace, Matrix};
use crate::polyring::{phi_inv, ring_mul, Poly, QuotientPolyVector};

/// Codes whose eigencode has more than this many words get a lower bound only.
pub const EIGENCODE_ENUMERATION_LIMIT: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn min_with(self, d: usize) -> usize {
        match self {
            Distance::Finite(x) => x.min(d),
            Distance::Infinite => d,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(x) => Some(x),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Upper-triangular ell x ell generator matrix over F_q[X].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerGenMatrix {
    field: GaloisField,
    m: usize,
    lambda: Gf,
    entries: Vec<Vec<Poly>>,
}

impl GroebnerGenMatrix {
    /// Wraps the entries as given. Properties are checked by [`QtCode::new`].
    pub fn new(field: &GaloisField, m: usize, lambda: Gf, entries: Vec<Vec<Poly>>) -> Result<Self> {
        let ell = entries.len();
        if ell == 0 || m == 0 {
            return Err(Error::Shape("need m >= 1 and ell >= 1".into()));
        }
        if entries.iter().any(|row| row.len() != ell) {
            return Err(Error::Shape("generator matrix must be square".into()));
        }
        let q = field.q();
        if entries.iter().flatten().flat_map(|p| p.coeffs()).any(|c| c.0 >= q) {
            return Err(Error::Domain(format!("basis coefficient outside F_{q}")));
        }
        if !field.is_base(lambda) || lambda.is_zero() {
            return Err(Error::Domain(format!("lambda must be a nonzero element of F_{q}")));
        }
        Ok(GroebnerGenMatrix { field: field.base_field()?, m, lambda, entries })
    }

    /// Hermite normal form of the module spanned by `rows` and (X^m - lambda) F_q[X]^ell.
    pub fn from_generators(
        field: &GaloisField,
        m: usize,
        lambda: Gf,
        rows: &[Vec<Poly>],
        ell: usize,
    ) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ell) {
            return Err(Error::Shape(format!("every generator needs {ell} components")));
        }
        let f = field.base_field()?;
        if !f.is_base(lambda) || lambda.is_zero() {
            return Err(Error::Domain("lambda must be a nonzero element of F_q".into()));
        }
        let modulus = Poly::twist_modulus(&f, m, lambda);
        let reduce = |p: &Poly| p.rem(&f, &modulus).expect("nonzero modulus");
        let mut pool: Vec<Vec<Poly>> =
            rows.iter().map(|r| r.iter().map(reduce).collect()).collect();
        let mut pivots: Vec<Vec<Poly>> = Vec::with_capacity(ell);
        for c in 0..ell {
            let mut implicit = vec![Poly::zero(); ell];
            implicit[c] = modulus.clone();
            pool.push(implicit);
            loop {
                let live: Vec<usize> = (0..pool.len()).filter(|&i| !pool[i][c].is_zero()).collect();
                if live.len() <= 1 {
                    break;
                }
                let piv = *live.iter().min_by_key(|&&i| pool[i][c].degree()).unwrap();
                let prow = pool[piv].clone();
                for &i in live.iter().filter(|&&i| i != piv) {
                    let (quot, rem) = pool[i][c].divrem(&f, &prow[c])?;
                    pool[i][c] = rem;
                    for j in c + 1..ell {
                        let v = pool[i][j].sub(&f, &quot.mul(&f, &prow[j]));
                        pool[i][j] = reduce(&v);
                    }
                }
            }
            let idx = (0..pool.len()).find(|&i| !pool[i][c].is_zero()).expect("implicit row");
            let row = pool.swap_remove(idx);
            let unit = f.inv(row[c].leading());
            let mut row: Vec<Poly> = row.iter().map(|p| p.scale(&f, unit)).collect();
            if row[c] == modulus {
                let mut residual = row.clone();
                residual[c] = Poly::zero();
                if residual.iter().any(|p| !p.is_zero()) {
                    pool.push(residual);
                }
                row = vec![Poly::zero(); ell];
                row[c] = modulus.clone();
            }
            pool.retain(|r| r.iter().any(|p| !p.is_zero()));
            pivots.push(row);
        }
        for j in 0..ell {
            for i in 0..j {
                let (quot, _) = pivots[i][j].divrem(&f, &pivots[j][j])?;
                if quot.is_zero() {
                    continue;
                }
                let pj = pivots[j].clone();
                for k in j..ell {
                    let v = pivots[i][k].sub(&f, &quot.mul(&f, &pj[k]));
                    pivots[i][k] = if k == j { v } else { reduce(&v) };
                }
            }
        }
        GroebnerGenMatrix::new(&f, m, lambda, pivots)
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn ell(&self) -> usize {
        self.entries.len()
    }
    pub fn lambda(&self) -> Gf {
        self.lambda
    }
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }
    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    /// Checks the four defining properties of a reduced basis.
    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        let ell = self.ell();
        let modulus = Poly::twist_modulus(f, self.m, self.lambda);
        for i in 0..ell {
            for j in 0..i {
                if !self.entries[i][j].is_zero() {
                    return Err(Error::InvalidBasis { property: 1, row: i, col: j });
                }
            }
        }
        for i in 0..ell {
            let g = &self.entries[i][i];
            if g.is_zero() || !modulus.rem(f, g)?.is_zero() {
                return Err(Error::InvalidBasis { property: 3, row: i, col: i });
            }
        }
        for j in 0..ell {
            let dj = self.entries[j][j].degree();
            for i in 0..j {
                if !self.entries[i][j].is_zero() && self.entries[i][j].degree() >= dj {
                    return Err(Error::InvalidBasis { property: 2, row: i, col: j });
                }
            }
        }
        for i in 0..ell {
            if self.entries[i][i].monic(f) == modulus {
                if let Some(j) = (0..ell).find(|&j| j != i && !self.entries[i][j].is_zero()) {
                    return Err(Error::InvalidBasis { property: 4, row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// m*ell minus the sum of the diagonal degrees.
    pub fn dimension(&self) -> usize {
        let used: usize = (0..self.ell()).map(|i| self.entries[i][i].degree().unwrap_or(0)).sum();
        self.m * self.ell() - used
    }

    /// Entry-wise evaluation at x.
    pub fn evaluate(&self, f: &GaloisField, x: Gf) -> Matrix {
        let ell = self.ell();
        Matrix::from_fn(ell, ell, |i, j| self.entries[i][j].eval(f, x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenData {
    pub index: usize,
    pub beta: Gf,
    /// Number of diagonal entries vanishing at beta.
    pub multiplicity: usize,
    pub basis: Vec<Vec<Gf>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundParams {
    pub a: usize,
    pub n1: usize,
    pub n2: usize,
    pub s: usize,
    pub delta: usize,
}

impl BoundParams {
    /// The index set {a + i1 n1 + i2 n2 mod m}, sorted and deduplicated.
    pub fn index_set(&self, m: usize) -> Vec<usize> {
        let mut set = BTreeSet::new();
        for i2 in 0..=self.s {
            for i1 in 0..self.delta.saturating_sub(1) {
                set.insert((self.a + i1 * self.n1 + i2 * self.n2) % m);
            }
        }
        set.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigencode {
    pub indices: Vec<usize>,
    /// Basis of the intersection eigenspace over the splitting field.
    pub subspace: Vec<Vec<Gf>>,
    /// Basis of the eigencode over F_q.
    pub code_basis: Vec<Vec<Gf>>,
    pub distance: Distance,
    /// False when the distance is only a lower bound.
    pub exact: bool,
}

impl Eigencode {
    /// Eigencode of an explicit subspace of F_{q^r}^ell.
    pub fn from_subspace(
        split_field: &GaloisField,
        indices: Vec<usize>,
        subspace: Vec<Vec<Gf>>,
        ell: usize,
    ) -> Result<Self> {
        let base = split_field.base_field()?;
        let r = split_field.r() as usize;
        let mut rows = Vec::with_capacity(subspace.len() * r);
        for v in &subspace {
            let coords: Vec<Vec<Gf>> = v.iter().map(|&x| split_field.base_coords(x)).collect();
            for k in 0..r {
                rows.push((0..ell).map(|j| coords[j][k]).collect());
            }
        }
        let parity = if rows.is_empty() { Matrix::zeros(0, ell) } else { Matrix::from_rows(rows)? };
        let code_basis = nullspace(&base, &parity);
        let (distance, exact) = min_weight(&base, &code_basis, ell);
        Ok(Eigencode { indices, subspace, code_basis, distance, exact })
    }

    /// True when some eigenvector has F_q-independent components.
    pub fn is_trivial(&self) -> bool {
        self.code_basis.is_empty()
    }
}

/// Minimum nonzero weight of the F_q-span of `basis`.
pub(crate) fn min_weight(f: &GaloisField, basis: &[Vec<Gf>], len: usize) -> (Distance, bool) {
    let k = basis.len();
    if k == 0 {
        return (Distance::Infinite, true);
    }
    let q = f.q() as u64;
    if (k as f64) * (q as f64).log2() > (EIGENCODE_ENUMERATION_LIMIT as f64).log2() {
        return (Distance::Finite(1), false);
    }
    let mut coeffs = vec![0u32; k];
    let mut word = vec![Gf::ZERO; len];
    let mut best = usize::MAX;
    // Odometer over coefficient vectors; each step adds one basis row.
    loop {
        let mut pos = 0;
        loop {
            if pos == k {
                return (Distance::Finite(best), true);
            }
            coeffs[pos] += 1;
            for (w, &b) in word.iter_mut().zip(&basis[pos]) {
                *w = f.add(*w, b);
            }
            if coeffs[pos] < q as u32 {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        let wt = word.iter().filter(|x| !x.is_zero()).count();
        if wt > 0 && wt < best {
            best = wt;
        }
    }
}

/// Result of the spectral bound for one parameter choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HtBound {
    pub params: BoundParams,
    pub d_star: usize,
    pub index_set: Vec<usize>,
    pub eigencode: Eigencode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundSearch {
    pub max_s: usize,
    pub max_delta: usize,
}

impl Default for BoundSearch {
    fn default() -> Self {
        BoundSearch { max_s: 2, max_delta: usize::MAX }
    }
}

#[derive(Clone, Debug)]
pub struct QtCode {
    basis: GroebnerGenMatrix,
    split: SplittingData,
    dimension: usize,
    eigen: Vec<EigenData>,
}

impl QtCode {
    pub fn new(basis: GroebnerGenMatrix) -> Result<Self> {
        basis.validate()?;
        let split = find_splitting_data(basis.field(), basis.m(), basis.lambda())?;
        let f = &split.field;
        let mut eigen = Vec::new();
        for i in 0..basis.m() {
            let beta = split.beta(i as i64);
            let multiplicity =
                (0..basis.ell()).filter(|&j| basis.entry(j, j).eval(f, beta).is_zero()).count();
            if multiplicity == 0 {
                continue;
            }
            let eb = nullspace(f, &basis.evaluate(f, beta));
            eigen.push(EigenData { index: i, beta, multiplicity, basis: eb });
        }
        let dimension = basis.dimension();
        Ok(QtCode { basis, split, dimension, eigen })
    }

    /// Hermite-reduces arbitrary generators, then builds the code.
    pub fn from_generators(
        field: &GaloisField,
        m: usize,
        lambda: Gf,
        rows: &[Vec<Poly>],
        ell: usize,
    ) -> Result<Self> {
        Self::new(GroebnerGenMatrix::from_generators(field, m, lambda, rows, ell)?)
    }

    pub fn basis(&self) -> &GroebnerGenMatrix {
        &self.basis
    }
    pub fn split(&self) -> &SplittingData {
        &self.split
    }
    /// The splitting field of X^m - lambda.
    pub fn field(&self) -> &GaloisField {
        &self.split.field
    }
    /// F_q.
    pub fn base_field(&self) -> &GaloisField {
        self.basis.field()
    }
    pub fn m(&self) -> usize {
        self.basis.m()
    }
    pub fn ell(&self) -> usize {
        self.basis.ell()
    }
    pub fn lambda(&self) -> Gf {
        self.basis.lambda()
    }
    pub fn len(&self) -> usize {
        self.m() * self.ell()
    }
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn eigen_indices(&self) -> Vec<usize> {
        self.eigen.iter().map(|e| e.index).collect()
    }

    pub fn is_eigen_index(&self, i: usize) -> bool {
        self.eigen.binary_search_by_key(&i, |e| e.index).is_ok()
    }

    pub fn eigen_data(&self, i: usize) -> Result<&EigenData> {
        self.eigen
            .binary_search_by_key(&i, |e| e.index)
            .map(|k| &self.eigen[k])
            .map_err(|_| Error::NotAnEigenvalue(i))
    }

    pub fn all_eigen_data(&self) -> &[EigenData] {
        &self.eigen
    }

    /// Basis of the intersection of the eigenspaces at `indices`.
    pub fn intersection_eigenspace(&self, indices: &[usize]) -> Result<Vec<Vec<Gf>>> {
        if indices.is_empty() {
            return Err(Error::Domain("empty eigenvalue index set".into()));
        }
        let f = self.field();
        let mut stacked = Matrix::zeros(0, self.ell());
        for &i in indices {
            let e = self.eigen_data(i)?;
            stacked = stacked.vstack(&self.basis.evaluate(f, e.beta))?;
        }
        Ok(nullspace(f, &stacked))
    }

    pub fn eigencode(&self, indices: &[usize]) -> Result<Eigencode> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let sub = self.intersection_eigenspace(&idx)?;
        Eigencode::from_subspace(self.field(), idx, sub, self.ell())
    }

    fn check_bound_params(&self, p: &BoundParams) -> Result<Vec<usize>> {
        let m = self.m() as u64;
        if p.delta < 2 {
            return Err(Error::InvalidBoundParams("delta must be at least 2".into()));
        }
        if p.n1 == 0 || p.n2 == 0 {
            return Err(Error::InvalidBoundParams("n1 and n2 must be positive".into()));
        }
        if gcd(m, p.n1 as u64) != 1 {
            return Err(Error::InvalidBoundParams(format!("gcd(m, n1) = gcd({m}, {}) != 1", p.n1)));
        }
        if gcd(m, p.n2 as u64) >= p.delta as u64 {
            return Err(Error::InvalidBoundParams(format!(
                "gcd(m, n2) = {} is not below delta = {}",
                gcd(m, p.n2 as u64),
                p.delta
            )));
        }
        let set = p.index_set(self.m());
        if let Some(bad) = set.iter().find(|&&i| !self.is_eigen_index(i)) {
            return Err(Error::BoundNotApplicable(format!("index {bad} is not an eigenvalue index")));
        }
        Ok(set)
    }

    /// d* = min(delta + s, d_C) for the given parameters.
    pub fn ht_bound(&self, params: BoundParams) -> Result<HtBound> {
        let set = self.check_bound_params(&params)?;
        let ec = self.eigencode(&set)?;
        if ec.subspace.is_empty() {
            return Err(Error::BoundNotApplicable("the intersection eigenspace is zero".into()));
        }
        let d_star = ec.distance.min_with(params.delta + params.s);
        Ok(HtBound { params, d_star, index_set: set, eigencode: ec })
    }

    /// Every applicable parameter choice within the limits.
    pub fn search_bounds(&self, limits: &BoundSearch) -> Vec<HtBound> {
        let m = self.m();
        let mut cache: HashMap<Vec<usize>, Option<Eigencode>> = HashMap::new();
        let mut out = Vec::new();
        for s in 0..=limits.max_s {
            let n2_range: Vec<usize> = if s == 0 { vec![1] } else { (1..m.max(2)).collect() };
            for &n2 in &n2_range {
                for n1 in (1..m.max(2)).filter(|&n| gcd(m as u64, n as u64) == 1) {
                    for a in self.eigen_indices() {
                        let max_delta = limits.max_delta.min(m + 1);
                        for delta in 2..=max_delta {
                            let params = BoundParams { a, n1, n2, s, delta };
                            if gcd(m as u64, n2 as u64) >= delta as u64 {
                                continue;
                            }
                            let set = params.index_set(m);
                            if set.iter().any(|&i| !self.is_eigen_index(i)) {
                                break;
                            }
                            let ec = cache
                                .entry(set.clone())
                                .or_insert_with(|| {
                                    self.eigencode(&set).ok().filter(|e| !e.subspace.is_empty())
                                })
                                .clone();
                            let Some(ec) = ec else { break };
                            let d_star = ec.distance.min_with(delta + s);
                            out.push(HtBound { params, d_star, index_set: set, eigencode: ec });
                        }
                    }
                }
            }
        }
        out
    }

    /// Largest d* found; ties go to the first candidate in search order.
    pub fn best_bound(&self, limits: &BoundSearch) -> Option<HtBound> {
        let mut best: Option<HtBound> = None;
        for b in self.search_bounds(limits) {
            if best.as_ref().is_none_or(|x| b.d_star > x.d_star) {
                best = Some(b);
            }
        }
        best
    }

    /// Number of free multiplier coefficients of each basis row.
    fn row_freedom(&self) -> Vec<usize> {
        (0..self.ell())
            .map(|i| self.m() - self.basis.entry(i, i).degree().unwrap_or(0))
            .collect()
    }

    pub fn encode_poly(&self, message: &[Gf]) -> Result<QuotientPolyVector> {
        if message.len() != self.dimension {
            return Err(Error::Shape(format!(
                "message length {} != dimension {}",
                message.len(),
                self.dimension
            )));
        }
        let f = self.base_field();
        if let Some(x) = message.iter().find(|x| !f.is_base(**x)) {
            return Err(Error::Domain(format!("message symbol {x} outside F_{}", f.q())));
        }
        let (m, ell, lambda) = (self.m(), self.ell(), self.lambda());
        let mut comps = vec![Poly::zero(); ell];
        let mut pos = 0;
        for (i, free) in self.row_freedom().into_iter().enumerate() {
            let mult = Poly::new(message[pos..pos + free].to_vec());
            pos += free;
            if mult.is_zero() {
                continue;
            }
            for (j, comp) in comps.iter_mut().enumerate().skip(i) {
                let g = self.basis.entry(i, j).reduce_twisted(f, m, lambda);
                *comp = comp.add(f, &ring_mul(f, &mult, &g, m, lambda));
            }
        }
        QuotientPolyVector::new(m, lambda, comps)
    }

    /// Row-major codeword of the message.
    pub fn encode(&self, message: &[Gf]) -> Result<Vec<Gf>> {
        Ok(phi_inv(&self.encode_poly(message)?))
    }

    pub fn contains_poly(&self, v: &QuotientPolyVector) -> bool {
        let f = self.base_field();
        let (m, lambda) = (self.m(), self.lambda());
        let modulus = Poly::twist_modulus(f, m, lambda);
        let mut c: Vec<Poly> = v.comps().to_vec();
        for j in 0..self.ell() {
            let g = self.basis.entry(j, j);
            let (quot, rem) = c[j].divrem(f, g).expect("nonzero diagonal");
            if !rem.is_zero() {
                return false;
            }
            for k in j + 1..self.ell() {
                let t = c[k].sub(f, &quot.mul(f, self.basis.entry(j, k)));
                c[k] = t.rem(f, &modulus).expect("nonzero modulus");
            }
        }
        true
    }

    pub fn contains(&self, word: &[Gf]) -> Result<bool> {
        let v = QuotientPolyVector::from_word(word, self.m(), self.ell(), self.lambda())?;
        Ok(self.contains_poly(&v))
    }

    /// F_q basis of the code as row-major words, in message order.
    pub fn generator_rows(&self) -> Vec<Vec<Gf>> {
        (0..self.dimension)
            .map(|i| {
                let mut msg = vec![Gf::ZERO; self.dimension];
                msg[i] = Gf::ONE;
                self.encode(&msg).expect("unit message")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> GaloisField {
        GaloisField::prime_power(3).unwrap()
    }

    fn p(c: &[u32]) -> Poly {
        Poly::from_u32s(c)
    }

    fn ternary_example() -> QtCode {
        let f = f3();
        let g01 = p(&[1, 0, 1, 2, 0, 1, 2, 2, 0, 2]);
        let g11 = p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let basis =
            GroebnerGenMatrix::new(&f, 10, Gf(2), vec![vec![Poly::one(), g01], vec![Poly::zero(), g11]])
                .unwrap();
        QtCode::new(basis).unwrap()
    }

    #[test]
    fn example_dimension_and_eigenvalues() {
        let c = ternary_example();
        assert_eq!(c.dimension(), 10);
        assert_eq!(c.eigen_indices(), (0..10).collect::<Vec<_>>());
        for e in c.all_eigen_data() {
            assert_eq!(e.basis.len(), e.multiplicity);
            assert_eq!(c.field().pow(e.beta, 10), Gf(2));
        }
    }

    #[test]
    fn example_eigenspace_at_six() {
        let c = ternary_example();
        let f = c.field();
        let e = c.eigen_data(6).unwrap();
        assert_eq!(f.power_form(e.beta), "a^52");
        assert_eq!(e.basis.len(), 1);
        let v = &e.basis[0];
        let g01 = c.basis().entry(0, 1).eval(f, e.beta);
        assert_eq!(f.mul(v[1], f.neg(g01)), v[0]);
    }

    #[test]
    fn example_eigencode_is_trivial() {
        let c = ternary_example();
        let ec = c.eigencode(&[6, 7, 8]).unwrap();
        assert_eq!(ec.distance, Distance::Infinite);
        let v = &ec.subspace[0];
        let f = c.field();
        let scaled: Vec<Gf> = v.iter().map(|&x| f.div(x, v[0])).collect();
        assert_eq!(f.power_form(scaled[1]), "a^50");
    }

    #[test]
    fn example_bound() {
        let c = ternary_example();
        let b = c.ht_bound(BoundParams { a: 6, n1: 1, n2: 1, s: 0, delta: 4 }).unwrap();
        assert_eq!(b.d_star, 4);
        assert_eq!(b.index_set, vec![6, 7, 8]);
    }

    #[test]
    fn bound_param_errors() {
        let c = ternary_example();
        let bad = |a, n1, n2, s, delta| c.ht_bound(BoundParams { a, n1, n2, s, delta }).unwrap_err();
        assert!(matches!(bad(6, 2, 1, 0, 4), Error::InvalidBoundParams(_)));
        assert!(matches!(bad(6, 1, 5, 1, 4), Error::InvalidBoundParams(_)));
        assert!(matches!(bad(6, 1, 1, 0, 1), Error::InvalidBoundParams(_)));
    }

    #[test]
    fn trivial_codes() {
        let f = f3();
        let full = QtCode::new(GroebnerGenMatrix::new(&f, 4, Gf(1), vec![vec![Poly::one()]]).unwrap())
            .unwrap();
        assert_eq!(full.dimension(), 4);
        assert!(full.eigen_indices().is_empty());
        assert!(matches!(full.eigen_data(0), Err(Error::NotAnEigenvalue(0))));

        let md = Poly::twist_modulus(&f, 4, Gf(1));
        let zero = QtCode::new(
            GroebnerGenMatrix::new(
                &f,
                4,
                Gf(1),
                vec![vec![md.clone(), Poly::zero()], vec![Poly::zero(), md]],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(zero.dimension(), 0);
    }

    #[test]
    fn constacyclic_eigenspace_is_everything() {
        let f = f3();
        // X^4 - 1 = (X - 1)(X + 1)(X^2 + 1); keep the root 1.
        let g = p(&[2, 1]);
        let c = QtCode::new(GroebnerGenMatrix::new(&f, 4, Gf(1), vec![vec![g]]).unwrap()).unwrap();
        assert_eq!(c.eigen_indices().len(), 1);
        let e = c.eigen_data(c.eigen_indices()[0]).unwrap();
        assert_eq!(e.basis, vec![vec![Gf::ONE]]);
    }

    #[test]
    fn eigencode_of_explicit_subspaces() {
        let f = f3().extension(2).unwrap();
        let ec = Eigencode::from_subspace(&f, vec![], vec![vec![Gf(1), Gf(1)]], 2).unwrap();
        assert_eq!(ec.distance, Distance::Finite(2));
        assert_eq!(ec.code_basis.len(), 1);
        let ec = Eigencode::from_subspace(&f, vec![], vec![], 2).unwrap();
        assert_eq!(ec.distance, Distance::Finite(1));
    }

    #[test]
    fn invalid_bases_report_property() {
        let f = f3();
        let md = Poly::twist_modulus(&f, 4, Gf(1));
        let mk = |e: Vec<Vec<Poly>>| {
            QtCode::new(GroebnerGenMatrix::new(&f, 4, Gf(1), e).unwrap()).unwrap_err()
        };
        let e = mk(vec![vec![Poly::one(), Poly::zero()], vec![Poly::one(), Poly::one()]]);
        assert_eq!(e, Error::InvalidBasis { property: 1, row: 1, col: 0 });
        let e = mk(vec![vec![Poly::one(), p(&[1, 1])], vec![Poly::zero(), p(&[2, 1])]]);
        assert_eq!(e, Error::InvalidBasis { property: 2, row: 0, col: 1 });
        let e = mk(vec![vec![p(&[1, 1, 1])]]);
        assert_eq!(e, Error::InvalidBasis { property: 3, row: 0, col: 0 });
        let e = mk(vec![vec![md.clone(), p(&[1])], vec![Poly::zero(), md]]);
        assert_eq!(e, Error::InvalidBasis { property: 4, row: 0, col: 1 });
    }

    #[test]
    fn hermite_form_recovers_example() {
        let c = ternary_example();
        let f = f3();
        let rows: Vec<Vec<Poly>> = c
            .generator_rows()
            .into_iter()
            .take(3)
            .map(|w| QuotientPolyVector::from_word(&w, 10, 2, Gf(2)).unwrap().comps().to_vec())
            .collect();
        let rebuilt = QtCode::from_generators(&f, 10, Gf(2), &rows, 2).unwrap();
        assert_eq!(rebuilt.basis(), c.basis());
    }

    #[test]
    fn encode_first_row() {
        let c = ternary_example();
        let mut msg = vec![Gf::ZERO; 10];
        msg[0] = Gf::ONE;
        let v = c.encode_poly(&msg).unwrap();
        assert_eq!(v.comp(0), &Poly::one());
        assert_eq!(v.comp(1), c.basis().entry(0, 1));
        assert!(c.encode(&[Gf::ZERO; 10]).unwrap().iter().all(|x| x.is_zero()));
        assert!(matches!(c.encode(&[Gf::ONE]), Err(Error::Shape(_))));
    }

    #[test]
    fn membership() {
        let c = ternary_example();
        for row in c.generator_rows() {
            assert!(c.contains(&row).unwrap());
        }
        let mut w = vec![Gf::ZERO; 20];
        w[17] = Gf::ONE;
        assert!(!c.contains(&w).unwrap());
    }
}
