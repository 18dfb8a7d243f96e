//! Niederreiter-style public-key scheme on quasi-twisted codes.
//!
//! The private code is the kernel of H = [I | T_1 | ... | T_{ell-1}] with
//! twistulant blocks of twist lambda^-1. Its eigenvector at a root beta is
//! (t_0(1/beta), ..., t_{ell-1}(1/beta)), so keygen picks a root set D, picks
//! the eigenvector values w first and interpolates each t_j through them. That
//! fixes the decoding radius before any random mixing is applied.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::decoder::{decode, DecodeOutcome, DecoderConfig};
use crate::error::{Error, Result};
use crate::galois::{find_splitting_data, gcd, prime_power_parts, GaloisField, Gf, SplittingData};
use crate::linalg::{inverse, Matrix};
use crate::polyring::{phi, phi_inv, Poly, QuotientPolyVector};
use crate::qtcode::{BoundParams, Distance, Eigencode, QtCode};
use crate::sample::{interpolate, orbit_representatives, random_poly, subfield_degree, subfield_elements};
use crate::twistulant::{standard_form, validate_h_conditions, ParityCheckMatrix, TwistulantMatrix};

pub const PRIVATE_KEY_HEADER: &str = "# NOT FOR PRODUCTION USE";
/// Attempts per decoding-radius level before keygen settles for a smaller one.
pub const KEYGEN_ATTEMPTS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyParams {
    pub q: u32,
    pub m: usize,
    pub ell: usize,
    pub lambda: u32,
}

impl KeyParams {
    /// The base field, after checking the parameter predicate.
    pub fn field(&self) -> Result<GaloisField> {
        let (p, _) = prime_power_parts(self.q)
            .ok_or_else(|| Error::UnsupportedParameters(format!("q = {} is not a prime power", self.q)))?;
        let (mp, _) = prime_power_parts(self.m as u32).ok_or_else(|| {
            Error::UnsupportedParameters(format!("m = {} is not a prime power", self.m))
        })?;
        if mp == p || gcd(self.m as u64, p as u64) != 1 {
            return Err(Error::UnsupportedParameters(format!(
                "m = {} shares the characteristic {p}",
                self.m
            )));
        }
        if self.ell < 2 {
            return Err(Error::UnsupportedParameters("ell must be at least 2".into()));
        }
        if self.lambda == 0 || self.lambda >= self.q {
            return Err(Error::UnsupportedParameters(format!(
                "lambda = {} is not a nonzero element of F_{}",
                self.lambda, self.q
            )));
        }
        GaloisField::prime_power(self.q)
    }

    pub fn len(&self) -> usize {
        self.m * self.ell
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicKey {
    pub params: KeyParams,
    pub t: usize,
    /// S H P, m rows of length m*ell.
    pub matrix: Vec<Vec<Gf>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct PrivateKeyData {
    params: KeyParams,
    t: usize,
    scrambler: Vec<Vec<Gf>>,
    /// Defining rows of the non-identity blocks of H.
    blocks: Vec<Vec<Gf>>,
    perm: Vec<usize>,
    bound: BoundParams,
    eigenvector: Vec<Gf>,
}

#[derive(Clone, Debug)]
pub struct PrivateKey {
    data: PrivateKeyData,
    parity: ParityCheckMatrix,
    code: QtCode,
    config: DecoderConfig,
    scrambler_inv: Matrix,
}

#[derive(Clone, Debug)]
pub struct KeyPair {
    pub public: PublicKey,
    pub private: PrivateKey,
}

/// The kernel of H as a quasi-twisted code with twist `lambda` (H carries lambda^-1).
///
/// x is in the kernel iff sum_j x_j(X) t_j(X^-1) = 0 in F_q[X]/(X^m - lambda), with
/// x_j the j-th block read as a polynomial; the rows e_j - t_j(X^-1) e_0 generate it.
pub fn code_from_parity(fq: &GaloisField, h: &ParityCheckMatrix, lambda: Gf) -> Result<QtCode> {
    let m = h.m();
    let ell = h.ell();
    let li = fq.inv(lambda);
    let reversed = |t: &Poly| {
        let mut c = vec![Gf::ZERO; m];
        c[0] = t.coeff(0);
        for u in 1..m {
            c[m - u] = fq.mul(li, t.coeff(u));
        }
        Poly::new(c)
    };
    let rows: Vec<Vec<Poly>> = (1..ell)
        .map(|j| {
            let mut row = vec![Poly::zero(); ell];
            row[0] = reversed(&h.blocks()[j].poly()).neg(fq);
            row[j] = Poly::one();
            row
        })
        .collect();
    QtCode::from_generators(fq, m, lambda, &rows, ell)
}

/// Block layout (block j = positions j*m .. j*m+m) to the code's word layout.
fn blocks_to_word(x: &[Gf], m: usize, ell: usize, lambda: Gf) -> Result<Vec<Gf>> {
    Ok(phi_inv(&QuotientPolyVector::from_blocks(x, m, ell, lambda)?))
}

fn word_to_blocks(w: &[Gf], m: usize, ell: usize, lambda: Gf) -> Result<Vec<Gf>> {
    Ok(phi(w, m, ell, lambda)?.to_blocks())
}

#[derive(Clone, Debug)]
struct Plan {
    params: BoundParams,
    set: Vec<usize>,
    subfield: u32,
    d_star: usize,
}

/// Every root set of bound shape, with the d* its best achievable eigenvector allows.
fn plans(split: &SplittingData, ell: usize) -> Vec<Plan> {
    let m = split.m;
    let coprime: Vec<usize> = (1..m.max(2)).filter(|&n| gcd(m as u64, n as u64) == 1).collect();
    let mut out = Vec::new();
    for s in 0..=2usize {
        let n2s: Vec<usize> = if s == 0 { vec![1] } else { coprime.clone() };
        for &n2 in &n2s {
            for &n1 in &coprime {
                for a in 0..m {
                    for delta in (s + 2).max(2)..=m {
                        let params = BoundParams { a, n1, n2, s, delta };
                        let set = params.index_set(m);
                        if set.len() != (delta - 1) * (s + 1) {
                            break;
                        }
                        let g = subfield_degree(split, &set);
                        // Singleton: the kernel of F_q^ell -> F_{q^g} has distance <= g + 1.
                        let dv = if g as usize >= ell { usize::MAX } else { g as usize + 1 };
                        let d_star = dv.min(delta + s);
                        out.push(Plan { params, set, subfield: g, d_star });
                    }
                }
            }
        }
    }
    out
}

fn eigencode_distance(f: &GaloisField, v: &[Gf]) -> Result<Distance> {
    Ok(Eigencode::from_subspace(f, Vec::new(), vec![v.to_vec()], v.len())?.distance)
}

fn random_invertible_twistulant<R: Rng>(rng: &mut R, fq: &GaloisField, m: usize, twist: Gf) -> TwistulantMatrix {
    loop {
        let t = TwistulantMatrix::from_poly(&random_poly(rng, fq, m), m, twist).expect("degree < m");
        if t.is_invertible(fq) {
            return t;
        }
    }
}

fn random_invertible_matrix<R: Rng>(rng: &mut R, fq: &GaloisField, m: usize) -> (Matrix, Matrix) {
    loop {
        let s = Matrix::from_fn(m, m, |_, _| Gf(rng.gen_range(0..fq.q())));
        if let Some(inv) = inverse(fq, &s) {
            return (s, inv);
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Rejections {
    eigenvector: usize,
    conditions: usize,
    radius: usize,
}

/// One key attempt for a fixed plan; None when the random choices do not work out.
fn try_plan<R: Rng>(
    rejected: &mut Rejections,
    rng: &mut R,
    fq: &GaloisField,
    split: &SplittingData,
    kp: &KeyParams,
    plan: &Plan,
) -> Result<Option<(ParityCheckMatrix, QtCode, DecoderConfig)>> {
    let f = &split.field;
    let (m, ell) = (kp.m, kp.ell);
    let lambda = Gf(kp.lambda);
    let twist = fq.inv(lambda);
    let values = subfield_elements(f, plan.subfield);
    let mut v = None;
    for _ in 0..256 {
        let mut cand = vec![Gf::ONE];
        cand.extend((1..ell).map(|_| values[rng.gen_range(0..values.len())]));
        if eigencode_distance(f, &cand)?.min_with(plan.d_star) >= plan.d_star {
            v = Some(cand);
            break;
        }
    }
    let Some(v) = v else {
        rejected.eigenvector += 1;
        return Ok(None);
    };
    let points: Vec<Gf> = orbit_representatives(split, &plan.set)
        .iter()
        .map(|&i| f.inv(split.beta(i as i64)))
        .collect();
    let lead = random_invertible_twistulant(rng, fq, m, twist);
    let mut blocks = vec![lead.clone()];
    for &w in &v[1..] {
        let t = interpolate(rng, f, m, &points, w)?;
        blocks.push(lead.mul(fq, &TwistulantMatrix::from_poly(&t, m, twist)?)?);
    }
    let h = standard_form(fq, &blocks)?;
    if !validate_h_conditions(fq, &h).valid {
        rejected.conditions += 1;
        return Ok(None);
    }
    let code = code_from_parity(fq, &h, lambda)?;
    let Ok(cfg) = DecoderConfig::new(&code, plan.params, v) else {
        rejected.radius += 1;
        return Ok(None);
    };
    if cfg.capacity == 0 {
        rejected.radius += 1;
        return Ok(None);
    }
    Ok(Some((h, code, cfg)))
}

pub fn keygen(kp: &KeyParams, seed: u64) -> Result<KeyPair> {
    let fq = kp.field()?;
    let split = find_splitting_data(&fq, kp.m, Gf(kp.lambda))?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let all = plans(&split, kp.ell);
    let best = all.iter().map(|p| p.d_star).max().unwrap_or(0);
    let mut attempts = 0;
    let mut rejected = Rejections::default();
    for d_star in (3..=best).rev() {
        let level: Vec<&Plan> = all.iter().filter(|p| p.d_star == d_star).collect();
        for _ in 0..KEYGEN_ATTEMPTS {
            attempts += 1;
            let plan = level[rng.gen_range(0..level.len())];
            if let Some((h, code, config)) = try_plan(&mut rejected, &mut rng, &fq, &split, kp, plan)? {
                return Ok(assemble(&mut rng, &fq, *kp, h, code, config));
            }
        }
    }
    Err(Error::KeygenRetryExhausted {
        attempts,
        reason: if best < 3 {
            format!("no root set supports d* >= 3 (best possible d* = {best})")
        } else {
            format!(
                "every sampled key was rejected ({} without a suitable eigenvector, \
                 {} failing the parity-check conditions, {} without a positive decoding radius)",
                rejected.eigenvector, rejected.conditions, rejected.radius
            )
        },
    })
}

fn assemble<R: Rng>(
    rng: &mut R,
    fq: &GaloisField,
    params: KeyParams,
    parity: ParityCheckMatrix,
    code: QtCode,
    config: DecoderConfig,
) -> KeyPair {
    let m = params.m;
    let (s, scrambler_inv) = random_invertible_matrix(rng, fq, m);
    let mut perm: Vec<usize> = (0..params.len()).collect();
    perm.shuffle(rng);
    let hp = permute_columns(&parity.to_dense(fq), &perm);
    let public = s.mul(fq, &hp).expect("shapes agree");
    let t = config.capacity;
    let data = PrivateKeyData {
        params,
        t,
        scrambler: s.to_rows(),
        blocks: parity.blocks()[1..].iter().map(|b| b.row().to_vec()).collect(),
        perm,
        bound: config.params,
        eigenvector: config.v.clone(),
    };
    KeyPair {
        public: PublicKey { params, t, matrix: public.to_rows() },
        private: PrivateKey { data, parity, code, config, scrambler_inv },
    }
}

/// Column perm[i] of the result is column i of `h`, i.e. the matrix of H P with (P x)_i = x_{perm[i]}.
fn permute_columns(h: &Matrix, perm: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(h.rows(), h.cols());
    for (i, &j) in perm.iter().enumerate() {
        for r in 0..h.rows() {
            out.set(r, j, h.get(r, i));
        }
    }
    out
}

fn weight(x: &[Gf]) -> usize {
    x.iter().filter(|c| !c.is_zero()).count()
}

pub fn encrypt(pk: &PublicKey, message: &[Gf]) -> Result<Vec<Gf>> {
    let fq = pk.params.field()?;
    if message.len() != pk.params.len() {
        return Err(Error::Shape(format!(
            "message length {} != {}",
            message.len(),
            pk.params.len()
        )));
    }
    if let Some(bad) = message.iter().find(|x| !fq.contains(**x)) {
        return Err(Error::Domain(format!("symbol {bad} is outside F_{}", fq.q())));
    }
    let wt = weight(message);
    if wt > pk.t {
        return Err(Error::WeightTooLarge { weight: wt, max: pk.t });
    }
    Matrix::from_rows(pk.matrix.clone())?.mul_vec(&fq, message)
}

pub fn decrypt(sk: &PrivateKey, ciphertext: &[Gf]) -> Result<Vec<Gf>> {
    let kp = &sk.data.params;
    let fq = kp.field()?;
    let (m, ell, lambda) = (kp.m, kp.ell, Gf(kp.lambda));
    if ciphertext.len() != m {
        return Err(Error::Shape(format!("ciphertext length {} != {m}", ciphertext.len())));
    }
    if let Some(bad) = ciphertext.iter().find(|x| !fq.contains(**x)) {
        return Err(Error::Domain(format!("symbol {bad} is outside F_{}", fq.q())));
    }
    let syndrome = sk.scrambler_inv.mul_vec(&fq, ciphertext)?;
    let mut lifted = syndrome.clone();
    lifted.resize(m * ell, Gf::ZERO);
    let word = blocks_to_word(&lifted, m, ell, lambda)?;
    let decoded = match decode(&word, &sk.code, &sk.config)? {
        DecodeOutcome::Decoded(d) => d,
        DecodeOutcome::Failure(reason) => return Err(Error::DecryptionFailure(reason.to_string())),
    };
    let error = word_to_blocks(&decoded.error, m, ell, lambda)?;
    if weight(&error) > sk.data.t || sk.parity.syndrome(&fq, &error)? != syndrome {
        return Err(Error::DecryptionFailure("decoded error does not match the syndrome".into()));
    }
    let mut message = vec![Gf::ZERO; m * ell];
    for (i, &j) in sk.data.perm.iter().enumerate() {
        message[j] = error[i];
    }
    Ok(message)
}

impl PublicKey {
    pub fn to_text(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let pk: PublicKey = serde_json::from_str(strip_comments(text).as_str())
            .map_err(|e| Error::Format(format!("public key: {e}")))?;
        let fq = pk.params.field()?;
        let ok = pk.matrix.len() == pk.params.m
            && pk.matrix.iter().all(|r| r.len() == pk.params.len() && r.iter().all(|x| fq.contains(*x)));
        if !ok {
            return Err(Error::Format("public key matrix has the wrong shape or symbols".into()));
        }
        Ok(pk)
    }
}

fn strip_comments(text: &str) -> String {
    text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join("\n")
}

impl PrivateKey {
    pub fn params(&self) -> &KeyParams {
        &self.data.params
    }
    pub fn t(&self) -> usize {
        self.data.t
    }
    pub fn parity(&self) -> &ParityCheckMatrix {
        &self.parity
    }
    pub fn code(&self) -> &QtCode {
        &self.code
    }
    pub fn config(&self) -> &DecoderConfig {
        &self.config
    }
    pub fn scrambler(&self) -> Matrix {
        Matrix::from_rows(self.data.scrambler.clone()).expect("square")
    }
    pub fn perm(&self) -> &[usize] {
        &self.data.perm
    }

    /// S H P recomputed from the private parts.
    pub fn public_matrix(&self) -> Result<Matrix> {
        let fq = self.data.params.field()?;
        let hp = permute_columns(&self.parity.to_dense(&fq), &self.data.perm);
        self.scrambler().mul(&fq, &hp)
    }

    pub fn to_text(&self) -> String {
        format!(
            "{PRIVATE_KEY_HEADER}\n{}\n",
            serde_json::to_string_pretty(&self.data).expect("plain data")
        )
    }

    pub fn from_text(text: &str) -> Result<Self> {
        if text.lines().next().map(str::trim_end) != Some(PRIVATE_KEY_HEADER) {
            return Err(Error::Format(format!("private key must start with '{PRIVATE_KEY_HEADER}'")));
        }
        let data: PrivateKeyData = serde_json::from_str(strip_comments(text).as_str())
            .map_err(|e| Error::Format(format!("private key: {e}")))?;
        let kp = data.params;
        let fq = kp.field()?;
        let (m, ell) = (kp.m, kp.ell);
        let shape_ok = data.scrambler.len() == m
            && data.scrambler.iter().all(|r| r.len() == m)
            && data.blocks.len() == ell - 1
            && data.blocks.iter().all(|b| b.len() == m)
            && {
                let mut p = data.perm.clone();
                p.sort_unstable();
                p == (0..m * ell).collect::<Vec<_>>()
            };
        if !shape_ok {
            return Err(Error::Format("private key parts have the wrong shape".into()));
        }
        let twist = fq.inv(Gf(kp.lambda));
        let tail = data
            .blocks
            .iter()
            .map(|r| TwistulantMatrix::from_row(r.clone(), twist))
            .collect::<Result<Vec<_>>>()?;
        let parity = ParityCheckMatrix::new(m, twist, tail)?;
        let code = code_from_parity(&fq, &parity, Gf(kp.lambda))?;
        let config = DecoderConfig::new(&code, data.bound, data.eigenvector.clone())?;
        if config.capacity != data.t {
            return Err(Error::Format("stored t does not match the decoder capacity".into()));
        }
        let scrambler = Matrix::from_rows(data.scrambler.clone())?;
        let scrambler_inv =
            inverse(&fq, &scrambler).ok_or_else(|| Error::Format("scrambler is singular".into()))?;
        Ok(PrivateKey { data, parity, code, config, scrambler_inv })
    }
}

/// True when every m x m block of `h` is a twistulant with the given twist.
pub fn is_block_twistulant(fq: &GaloisField, h: &Matrix, m: usize, twist: Gf) -> bool {
    (0..h.cols() / m).all(|b| {
        let block = Matrix::from_fn(m, m, |i, j| h.get(i, b * m + j));
        TwistulantMatrix::from_dense(fq, &block, twist).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::nullspace;

    fn params(q: u32, m: usize, ell: usize, lambda: u32) -> KeyParams {
        KeyParams { q, m, ell, lambda }
    }

    #[test]
    fn kernel_code_matches_parity_check() {
        let fq = GaloisField::prime_power(3).unwrap();
        let twist = fq.inv(Gf(2));
        let t1 = TwistulantMatrix::from_row(vec![Gf(1), Gf(2), Gf(0), Gf(1), Gf(1)], twist).unwrap();
        let t2 = TwistulantMatrix::from_row(vec![Gf(0), Gf(1), Gf(1), Gf(2), Gf(0)], twist).unwrap();
        let h = ParityCheckMatrix::new(5, twist, vec![t1, t2]).unwrap();
        let code = code_from_parity(&fq, &h, Gf(2)).unwrap();
        assert_eq!(code.dimension(), 10);
        assert_eq!(nullspace(&fq, &h.to_dense(&fq)).len(), 10);
        for row in code.generator_rows() {
            let x = word_to_blocks(&row, 5, 3, Gf(2)).unwrap();
            assert!(h.syndrome(&fq, &x).unwrap().iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn keygen_small_round_trip() {
        let kp = params(3, 5, 4, 2);
        let pair = keygen(&kp, 1).unwrap();
        assert_eq!(pair.public.matrix.len(), 5);
        assert_eq!(pair.public.matrix[0].len(), 20);
        assert!(pair.public.t >= 1);
        assert_eq!(pair.private.public_matrix().unwrap().to_rows(), pair.public.matrix);

        let mut msg = vec![Gf::ZERO; 20];
        msg[13] = Gf(2);
        let c = encrypt(&pair.public, &msg).unwrap();
        assert_eq!(decrypt(&pair.private, &c).unwrap(), msg);
        let zero = vec![Gf::ZERO; 20];
        assert_eq!(encrypt(&pair.public, &zero).unwrap(), vec![Gf::ZERO; 5]);
        assert_eq!(decrypt(&pair.private, &[Gf::ZERO; 5]).unwrap(), zero);
    }

    #[test]
    fn keygen_is_deterministic_and_serializes() {
        let kp = params(3, 7, 3, 2);
        let a = keygen(&kp, 42).unwrap();
        let b = keygen(&kp, 42).unwrap();
        assert_eq!(a.public.to_text(), b.public.to_text());
        assert_eq!(a.private.to_text(), b.private.to_text());
        assert!(a.private.to_text().starts_with(PRIVATE_KEY_HEADER));
        let back = PrivateKey::from_text(&a.private.to_text()).unwrap();
        assert_eq!(back.to_text(), a.private.to_text());
        assert_eq!(PublicKey::from_text(&a.public.to_text()).unwrap(), a.public);
    }

    #[test]
    fn parameter_and_weight_errors() {
        assert!(matches!(keygen(&params(9, 3, 2, 1), 0), Err(Error::UnsupportedParameters(_))));
        assert!(matches!(keygen(&params(3, 6, 2, 1), 0), Err(Error::UnsupportedParameters(_))));
        assert!(matches!(keygen(&params(3, 5, 1, 1), 0), Err(Error::UnsupportedParameters(_))));
        let pair = keygen(&params(3, 5, 4, 2), 5).unwrap();
        let mut msg = vec![Gf::ZERO; 20];
        for x in msg.iter_mut().take(pair.public.t + 1) {
            *x = Gf(1);
        }
        assert!(matches!(encrypt(&pair.public, &msg), Err(Error::WeightTooLarge { .. })));
    }
}
