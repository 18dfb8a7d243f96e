//! Syndrome decoding up to half the spectral bound.
//!
//! Pipeline: syndromes on the eigenvalue grid, one shared recurrence for all
//! s+1 syndrome sequences (multi-sequence Berlekamp-Massey), root search over
//! the m locations, a Vandermonde solve for the weighted error values and an
//! F_q decomposition against the eigenvector.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{gcd, GaloisField, Gf};
use crate::linalg::{rank, solve, Matrix};
use crate::polyring::{phi, phi_inv, Poly, QuotientPolyVector};
use crate::qtcode::{BoundParams, BoundSearch, Distance, Eigencode, QtCode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoderConfig {
    pub params: BoundParams,
    pub v: Vec<Gf>,
    pub d_star: usize,
    pub capacity: usize,
    m: usize,
    ell: usize,
    /// F_q-basis of {c : sum c_j v_j = 0}; empty when v has independent components.
    kernel: Vec<Vec<Gf>>,
    /// grid[t][k] = alpha xi^(a + k n1 + t n2)
    grid: Vec<Vec<Gf>>,
    /// log of alpha xi^a
    shift_log: u64,
    xi_log: u64,
    field_order: u32,
}

/// True when the components of `v` are linearly independent over F_q.
pub fn independent_over_base(f: &GaloisField, v: &[Gf]) -> bool {
    if v.len() > f.r() as usize {
        return false;
    }
    let base = f.base_field().expect("base field");
    let cols: Vec<Vec<Gf>> = v.iter().map(|&x| f.base_coords(x)).collect();
    let m = Matrix::from_fn(f.r() as usize, v.len(), |i, j| cols[j][i]);
    rank(&base, &m) == v.len()
}

/// Some vector of the span with F_q-independent components, if one is found.
pub fn find_independent_vector(f: &GaloisField, span: &[Vec<Gf>]) -> Option<Vec<Gf>> {
    span_candidates(f, span, 200_000).find(|v| independent_over_base(f, v))
}

/// The eigenvector of the span whose own eigencode has the largest distance.
/// Independent components (distance INFINITE) win immediately.
pub fn best_eigenvector(f: &GaloisField, span: &[Vec<Gf>]) -> Option<(Vec<Gf>, Distance)> {
    if let Some(v) = find_independent_vector(f, span) {
        return Some((v, Distance::Infinite));
    }
    let ell = span.first()?.len();
    let mut best: Option<(Vec<Gf>, Distance)> = None;
    for v in span_candidates(f, span, 512) {
        let Ok(ec) = Eigencode::from_subspace(f, Vec::new(), vec![v.clone()], ell) else {
            continue;
        };
        if best.as_ref().is_none_or(|(_, d)| ec.distance > *d) {
            best = Some((v, ec.distance));
        }
    }
    best
}

/// Nonzero combinations of the span with leading coefficient 1, first vector first.
fn span_candidates<'a>(
    f: &'a GaloisField,
    span: &'a [Vec<Gf>],
    limit: u64,
) -> impl Iterator<Item = Vec<Gf>> + 'a {
    let d = span.len();
    let order = f.order() as u64;
    let tries = if d == 0 { 0 } else { order.saturating_pow(d as u32 - 1).min(limit) };
    (0..tries).map(move |t| {
        let mut coeffs = vec![Gf::ONE];
        let mut rest = t;
        for _ in 1..d {
            coeffs.push(Gf((rest % order) as u32));
            rest /= order;
        }
        (0..span[0].len())
            .map(|j| {
                span.iter()
                    .zip(&coeffs)
                    .fold(Gf::ZERO, |acc, (w, &c)| f.add(acc, f.mul(c, w[j])))
            })
            .collect()
    })
}

impl DecoderConfig {
    pub fn new(code: &QtCode, params: BoundParams, v: Vec<Gf>) -> Result<Self> {
        let bound = code.ht_bound(params)?;
        let f = code.field();
        let (m, ell) = (code.m(), code.ell());
        if v.len() != ell {
            return Err(Error::InvalidConfig(format!("eigenvector needs {ell} components")));
        }
        if v.iter().any(|x| !f.contains(*x)) {
            return Err(Error::InvalidConfig("eigenvector component outside the field".into()));
        }
        for &i in &bound.index_set {
            let g = code.basis().evaluate(f, code.split().beta(i as i64));
            if g.mul_vec(f, &v)?.iter().any(|x| !x.is_zero()) {
                return Err(Error::InvalidConfig(format!("v is not an eigenvector at index {i}")));
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidConfig("eigenvector is zero".into()));
        }
        if params.s > 0 {
            if params.delta - 1 <= params.s {
                return Err(Error::InvalidConfig("need delta - 1 > s".into()));
            }
            if gcd(m as u64, params.n2 as u64) != 1 {
                return Err(Error::InvalidConfig("need gcd(m, n2) = 1 when s > 0".into()));
            }
        }
        // Dependent components are allowed: the per-location decomposition is
        // then only unique up to the eigencode of v, so its distance caps d*.
        let own = Eigencode::from_subspace(f, bound.index_set.clone(), vec![v.clone()], ell)?;
        let d_star = own.distance.min_with(params.delta + params.s);
        let split = code.split();
        let grid = (0..=params.s)
            .map(|t| {
                (0..params.delta - 1)
                    .map(|k| split.beta((params.a + k * params.n1 + t * params.n2) as i64))
                    .collect()
            })
            .collect();
        Ok(DecoderConfig {
            params,
            v,
            d_star,
            capacity: (d_star - 1) / 2,
            m,
            ell,
            kernel: own.code_basis,
            grid,
            shift_log: split.beta_log(params.a as i64),
            xi_log: split.xi_log,
            field_order: f.order(),
        })
    }

    /// Picks an admissible eigenvector automatically.
    pub fn with_auto_vector(code: &QtCode, params: BoundParams) -> Result<Self> {
        let set = params.index_set(code.m());
        let span = code.intersection_eigenspace(&set)?;
        let (v, _) = best_eigenvector(code.field(), &span)
            .ok_or_else(|| Error::InvalidConfig("empty eigenspace".into()))?;
        Self::new(code, params, v)
    }

    /// Largest-capacity configuration within the search limits.
    pub fn search(code: &QtCode, limits: &BoundSearch) -> Option<Self> {
        let mut best: Option<DecoderConfig> = None;
        let mut tried = std::collections::HashSet::new();
        for b in code.search_bounds(limits) {
            let p = b.params;
            let cap = (p.delta + p.s - 1) / 2;
            if best.as_ref().is_some_and(|x| x.capacity >= cap) {
                continue;
            }
            if !tried.insert((b.index_set.clone(), p.s, p.delta)) {
                continue;
            }
            let Some((v, _)) = best_eigenvector(code.field(), &b.eigencode.subspace) else {
                continue;
            };
            if let Ok(cfg) = Self::new(code, p, v) {
                if best.as_ref().is_none_or(|x| cfg.capacity > x.capacity) {
                    best = Some(cfg);
                }
            }
        }
        best
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn ell(&self) -> usize {
        self.ell
    }
    pub fn grid(&self) -> &[Vec<Gf>] {
        &self.grid
    }

    fn check_field(&self, f: &GaloisField) -> Result<()> {
        if f.order() != self.field_order {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn xi_pow(&self, f: &GaloisField, k: i64) -> Gf {
        f.exp(k.rem_euclid(self.m as i64) * self.xi_log as i64)
    }
}

/// s+1 syndrome sequences of length delta-1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyndromeSet {
    pub seqs: Vec<Vec<Gf>>,
}

impl SyndromeSet {
    pub fn is_zero(&self) -> bool {
        self.seqs.iter().flatten().all(|x| x.is_zero())
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.seqs.iter().map(|s| Poly::new(s.clone())).collect()
    }
}

pub fn compute_syndromes(
    f: &GaloisField,
    word: &QuotientPolyVector,
    cfg: &DecoderConfig,
) -> Result<SyndromeSet> {
    cfg.check_field(f)?;
    if word.m() != cfg.m || word.ell() != cfg.ell {
        return Err(Error::Shape(format!(
            "word has (m, ell) = ({}, {}), decoder expects ({}, {})",
            word.m(),
            word.ell(),
            cfg.m,
            cfg.ell
        )));
    }
    let seqs = cfg
        .grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|&beta| {
                    word.comps().iter().zip(&cfg.v).fold(Gf::ZERO, |acc, (c, &vj)| {
                        f.add(acc, f.mul(c.eval(f, beta), vj))
                    })
                })
                .collect()
        })
        .collect();
    Ok(SyndromeSet { seqs })
}

/// Shortest connection polynomial generating every sequence.
///
/// Returns (C, L) with C(0) = 1 and sum_j C_j S[n-j] = 0 for L <= n < len.
pub fn shortest_joint_recurrence(f: &GaloisField, seqs: &[Vec<Gf>]) -> (Poly, usize) {
    #[derive(Clone)]
    struct Aux {
        poly: Vec<Gf>,
        len: usize,
        pos: i64,
        disc: Gf,
    }
    let n_max = seqs.iter().map(Vec::len).max().unwrap_or(0);
    let mut c = vec![Gf::ONE];
    let mut l = 0usize;
    let mut aux: Vec<Option<Aux>> = vec![None; seqs.len()];
    for n in 0..n_max {
        for (h, s) in seqs.iter().enumerate() {
            if l > n || n >= s.len() {
                continue;
            }
            let d = c
                .iter()
                .enumerate()
                .filter(|(j, _)| *j <= n)
                .fold(Gf::ZERO, |acc, (j, &cj)| f.add(acc, f.mul(cj, s[n - j])));
            if d.is_zero() {
                continue;
            }
            let prev = aux[h].clone().unwrap_or(Aux { poly: vec![Gf::ONE], len: 0, pos: -1, disc: Gf::ONE });
            let shift = (n as i64 - prev.pos) as usize;
            let coef = f.div(d, prev.disc);
            let mut next = c.clone();
            if next.len() < prev.poly.len() + shift {
                next.resize(prev.poly.len() + shift, Gf::ZERO);
            }
            for (j, &b) in prev.poly.iter().enumerate() {
                next[j + shift] = f.sub(next[j + shift], f.mul(coef, b));
            }
            let next_l = l.max(prev.len + shift);
            if n as i64 - l as i64 > prev.pos - prev.len as i64 {
                aux[h] = Some(Aux { poly: c.clone(), len: l, pos: n as i64, disc: d });
            }
            c = next;
            l = next_l;
        }
    }
    (Poly::new(c), l)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorLocator {
    pub poly: Poly,
    /// Recurrence length; equals the degree unless too many errors occurred.
    pub length: usize,
}

pub fn solve_key_equations(f: &GaloisField, syn: &SyndromeSet) -> ErrorLocator {
    let (poly, length) = shortest_joint_recurrence(f, &syn.seqs);
    ErrorLocator { poly, length }
}

/// Locations i in [m] with Lambda(xi^(-i n1)) = 0.
pub fn chien_search(f: &GaloisField, loc: &ErrorLocator, cfg: &DecoderConfig) -> Vec<usize> {
    let n1 = cfg.params.n1 as i64;
    (0..cfg.m)
        .filter(|&i| loc.poly.eval(f, cfg.xi_pow(f, -(i as i64) * n1)).is_zero())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorEvaluation {
    pub locations: Vec<usize>,
    /// (alpha xi^a)^i E_i, the diagonal of the middle syndrome factor.
    pub weighted: Vec<Gf>,
    /// E_i = sum_j e_{i,j} v_j.
    pub values: Vec<Gf>,
    /// Per location, the ell coordinate errors over F_q.
    pub errors: Vec<Vec<Gf>>,
    pub omega0: Poly,
}

pub fn evaluate_errors(
    f: &GaloisField,
    syn: &SyndromeSet,
    loc: &ErrorLocator,
    locations: &[usize],
    cfg: &DecoderConfig,
) -> Result<ErrorEvaluation> {
    let p = &cfg.params;
    let len = p.delta - 1;
    let e = locations.len();
    let omega0 = {
        let prod = loc.poly.mul(f, &Poly::new(syn.seqs[0].clone()));
        Poly::new(prod.coeffs().iter().take(len).copied().collect())
    };
    if e > len {
        return Err(Error::EvaluationInconsistent(format!(
            "{e} locations exceed the {len} available syndromes"
        )));
    }
    let nodes: Vec<Gf> = locations.iter().map(|&i| cfg.xi_pow(f, (i * p.n1) as i64)).collect();
    let twists: Vec<Gf> = locations.iter().map(|&i| cfg.xi_pow(f, (i * p.n2) as i64)).collect();
    let vander = Matrix::from_fn(e, e, |w, k| f.pow(nodes[k], w as u64));
    let mut weighted = None;
    for t in 0..=p.s {
        let scale: Vec<Gf> = twists.iter().map(|&z| f.pow(z, t as u64)).collect();
        let a = Matrix::from_fn(e, e, |w, k| f.mul(vander.get(w, k), scale[k]));
        if let Some(y) = solve(f, &a, &syn.seqs[t][..e]) {
            if rank(f, &a) == e {
                weighted = Some(y);
                break;
            }
        }
    }
    let weighted = weighted
        .ok_or_else(|| Error::EvaluationInconsistent("no evaluator system is regular".into()))?;
    for t in 0..=p.s {
        for w in 0..len {
            let pred = (0..e).fold(Gf::ZERO, |acc, k| {
                let x = f.mul(f.pow(nodes[k], w as u64), f.pow(twists[k], t as u64));
                f.add(acc, f.mul(weighted[k], x))
            });
            if pred != syn.seqs[t][w] {
                return Err(Error::EvaluationInconsistent(format!(
                    "syndrome ({t}, {w}) is not explained by the located errors"
                )));
            }
        }
    }
    let base = f.base_field()?;
    let r = f.r() as usize;
    let vcoords: Vec<Vec<Gf>> = cfg.v.iter().map(|&x| f.base_coords(x)).collect();
    let vmat = Matrix::from_fn(r, cfg.ell, |i, j| vcoords[j][i]);
    let mut values = Vec::with_capacity(e);
    let mut errors = Vec::with_capacity(e);
    for (k, &i) in locations.iter().enumerate() {
        let shift = f.exp((cfg.shift_log as i64) * i as i64);
        let val = f.div(weighted[k], shift);
        let coords = f.base_coords(val);
        let ek = solve(&base, &vmat, &coords).ok_or_else(|| {
            Error::EvaluationInconsistent(format!(
                "error value at location {i} is not an F_q-combination of the eigenvector"
            ))
        })?;
        let ek = lightest_in_coset(&base, ek, &cfg.kernel).ok_or_else(|| {
            Error::EvaluationInconsistent(format!(
                "error value at location {i} has no unique lightest decomposition"
            ))
        })?;
        values.push(val);
        errors.push(ek);
    }
    Ok(ErrorEvaluation { locations: locations.to_vec(), weighted, values, errors, omega0 })
}

/// Unique minimum-weight element of x + span(kernel), or None on a tie.
fn lightest_in_coset(base: &GaloisField, x: Vec<Gf>, kernel: &[Vec<Gf>]) -> Option<Vec<Gf>> {
    if kernel.is_empty() {
        return Some(x);
    }
    let q = base.order() as u64;
    let total = q.checked_pow(kernel.len() as u32)?;
    let weight = |v: &[Gf]| v.iter().filter(|c| !c.is_zero()).count();
    let mut best = (weight(&x), x.clone(), false);
    for t in 1..total {
        let mut y = x.clone();
        let mut rest = t;
        for k in kernel {
            let c = Gf((rest % q) as u32);
            rest /= q;
            for (yj, &kj) in y.iter_mut().zip(k) {
                *yj = base.add(*yj, base.mul(c, kj));
            }
        }
        let w = weight(&y);
        if w < best.0 {
            best = (w, y, false);
        } else if w == best.0 {
            best.2 = true;
        }
    }
    (!best.2).then_some(best.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeTrace {
    pub syndromes: SyndromeSet,
    pub locator: ErrorLocator,
    pub roots: Vec<usize>,
    pub evaluation: Option<ErrorEvaluation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    /// Fewer locator roots than the recurrence length.
    MissingRoots { roots: usize, length: usize },
    Inconsistent(String),
    /// More errors than the decoder can see: the corrected word left the code.
    NotACodeword,
    /// The shortest recurrence is longer than the guaranteed radius.
    BeyondCapacity { length: usize, capacity: usize },
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FailureReason::MissingRoots { roots, length } => {
                write!(f, "locator of length {length} has only {roots} roots")
            }
            FailureReason::Inconsistent(msg) => write!(f, "{msg}"),
            FailureReason::BeyondCapacity { length, capacity } => {
                write!(f, "locator length {length} exceeds the decoding radius {capacity}")
            }
            FailureReason::NotACodeword => write!(f, "corrected word is not a codeword"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decoded {
    /// Row-major.
    pub codeword: Vec<Gf>,
    pub error: Vec<Gf>,
    pub locations: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DecodeOutcome {
    Decoded(Decoded),
    Failure(FailureReason),
}

impl DecodeOutcome {
    pub fn decoded(&self) -> Option<&Decoded> {
        match self {
            DecodeOutcome::Decoded(d) => Some(d),
            DecodeOutcome::Failure(_) => None,
        }
    }
}

/// Decodes a row-major received word; also returns the intermediate values.
pub fn decode_traced(
    word: &[Gf],
    code: &QtCode,
    cfg: &DecoderConfig,
) -> Result<(DecodeOutcome, DecodeTrace)> {
    let (m, ell) = (code.m(), code.ell());
    if word.len() != m * ell {
        return Err(Error::Shape(format!("expected {} symbols, got {}", m * ell, word.len())));
    }
    if let Some(x) = word.iter().find(|x| !code.base_field().is_base(**x)) {
        return Err(Error::Domain(format!("symbol {x} outside F_{}", code.base_field().q())));
    }
    let r = phi(word, m, ell, code.lambda())?;
    let (outcome, trace) = decode_poly(&r, code, cfg)?;
    let outcome = match outcome {
        PolyOutcome::Decoded { codeword, error, locations } => DecodeOutcome::Decoded(Decoded {
            codeword: phi_inv(&codeword),
            error: phi_inv(&error),
            locations,
        }),
        PolyOutcome::Failure(r) => DecodeOutcome::Failure(r),
    };
    Ok((outcome, trace))
}

pub fn decode(word: &[Gf], code: &QtCode, cfg: &DecoderConfig) -> Result<DecodeOutcome> {
    Ok(decode_traced(word, code, cfg)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOutcome {
    Decoded { codeword: QuotientPolyVector, error: QuotientPolyVector, locations: Vec<usize> },
    Failure(FailureReason),
}

pub fn decode_poly(
    r: &QuotientPolyVector,
    code: &QtCode,
    cfg: &DecoderConfig,
) -> Result<(PolyOutcome, DecodeTrace)> {
    let f = code.field();
    let syn = compute_syndromes(f, r, cfg)?;
    let locator = solve_key_equations(f, &syn);
    if locator.length > cfg.capacity {
        let reason = FailureReason::BeyondCapacity { length: locator.length, capacity: cfg.capacity };
        let trace = DecodeTrace { syndromes: syn, locator, roots: Vec::new(), evaluation: None };
        return Ok((PolyOutcome::Failure(reason), trace));
    }
    let roots = chien_search(f, &locator, cfg);
    let mut trace = DecodeTrace { syndromes: syn, locator, roots, evaluation: None };
    if trace.roots.len() < trace.locator.length {
        let reason = FailureReason::MissingRoots {
            roots: trace.roots.len(),
            length: trace.locator.length,
        };
        return Ok((PolyOutcome::Failure(reason), trace));
    }
    let eval = match evaluate_errors(f, &trace.syndromes, &trace.locator, &trace.roots, cfg) {
        Ok(e) => e,
        Err(Error::EvaluationInconsistent(msg)) => {
            return Ok((PolyOutcome::Failure(FailureReason::Inconsistent(msg)), trace));
        }
        Err(e) => return Err(e),
    };
    let (m, ell) = (code.m(), code.ell());
    let mut ecoef = vec![vec![Gf::ZERO; m]; ell];
    for (&i, errs) in eval.locations.iter().zip(&eval.errors) {
        for (j, &x) in errs.iter().enumerate() {
            ecoef[j][i] = x;
        }
    }
    let error = QuotientPolyVector::new(m, code.lambda(), ecoef.into_iter().map(Poly::new).collect())?;
    let base = code.base_field();
    let codeword = r.sub(base, &error);
    if !code.contains_poly(&codeword) {
        trace.evaluation = Some(eval);
        return Ok((PolyOutcome::Failure(FailureReason::NotACodeword), trace));
    }
    let locations = eval.locations.clone();
    trace.evaluation = Some(eval);
    Ok((PolyOutcome::Decoded { codeword, error, locations }, trace))
}

/// Stacked Hankel blocks (S_{i+j}^<t>), i < delta-1-eps, j <= eps.
pub fn build_syndrome_matrix(syn: &SyndromeSet, eps: usize) -> Result<Matrix> {
    let len = syn.seqs.first().map_or(0, Vec::len);
    if len <= eps {
        return Err(Error::Shape(format!(
            "delta - 1 - eps = {} leaves no rows",
            len as i64 - eps as i64
        )));
    }
    let h = len - eps;
    let rows = h * syn.seqs.len();
    Ok(Matrix::from_fn(rows, eps + 1, |row, j| syn.seqs[row / h][row % h + j]))
}

/// Row (i, j) of the result is the entrywise product of row i of `a` and row j of `b`.
pub fn star_product(f: &GaloisField, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols() != b.cols() {
        return Err(Error::Shape("star product needs equal column counts".into()));
    }
    let br = b.rows();
    Ok(Matrix::from_fn(a.rows() * br, a.cols(), |row, k| {
        f.mul(a.get(row / br, k), b.get(row % br, k))
    }))
}

/// The factors of S = X Y X~ for errors at `locations` with values E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeFactors {
    pub x: Matrix,
    pub y: Matrix,
    pub x_tilde: Matrix,
    /// X = A * B.
    pub a: Matrix,
    pub b: Matrix,
}

pub fn syndrome_factors(
    f: &GaloisField,
    cfg: &DecoderConfig,
    locations: &[usize],
    values: &[Gf],
) -> Result<SyndromeFactors> {
    let p = &cfg.params;
    let e = locations.len();
    if values.len() != e {
        return Err(Error::Shape("one error value per location".into()));
    }
    if p.delta - 1 <= e {
        return Err(Error::Shape("delta - 1 - eps leaves no rows".into()));
    }
    let h = p.delta - 1 - e;
    let exps: Vec<i64> = locations.iter().map(|&i| i as i64).collect();
    let (n1, n2) = (p.n1 as i64, p.n2 as i64);
    let x = Matrix::from_fn(h * (p.s + 1), e, |row, k| {
        let (t, w) = ((row / h) as i64, (row % h) as i64);
        cfg.xi_pow(f, (w * n1 + t * n2) * exps[k])
    });
    let mut y = Matrix::zeros(e, e);
    for k in 0..e {
        y.set(k, k, f.mul(f.exp(cfg.shift_log as i64 * exps[k]), values[k]));
    }
    let x_tilde = Matrix::from_fn(e, e + 1, |k, j| cfg.xi_pow(f, exps[k] * n1 * j as i64));
    let a = Matrix::from_fn(p.s + 1, e, |t, k| cfg.xi_pow(f, t as i64 * n2 * exps[k]));
    let b = Matrix::from_fn(h, e, |w, k| cfg.xi_pow(f, w as i64 * n1 * exps[k]));
    Ok(SyndromeFactors { x, y, x_tilde, a, b })
}
