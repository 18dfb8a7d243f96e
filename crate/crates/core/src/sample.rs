//! Random and designed quasi-twisted codes.
//!
//! Designed codes pin the eigenvector at a chosen set of roots: a polynomial
//! over F_q takes one common value w on a set of roots exactly when w lies in
//! the subfield fixed by the Frobenius powers linking those roots, so the
//! achievable eigenvectors are governed by [`subfield_degree`].

use rand::Rng;

use crate::decoder::DecoderConfig;
use crate::error::{Error, Result};
use crate::galois::{gcd, GaloisField, Gf, SplittingData};
use crate::linalg::{nullspace, solve, Matrix};
use crate::polyring::Poly;
use crate::qtcode::{BoundParams, QtCode};

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, f: &GaloisField) -> Gf {
    Gf(rng.gen_range(0..f.order()))
}

pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, f: &GaloisField) -> Gf {
    Gf(rng.gen_range(1..f.order()))
}

/// Uniform polynomial of degree < `len` over F_q.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, fq: &GaloisField, len: usize) -> Poly {
    Poly::new((0..len).map(|_| Gf(rng.gen_range(0..fq.q()))).collect())
}

/// Minimal polynomials over F_q of the roots of X^m - lambda, one per Frobenius orbit.
pub fn twist_factors(split: &SplittingData) -> Vec<(Vec<usize>, Poly)> {
    let f = &split.field;
    split
        .orbits()
        .into_iter()
        .map(|orbit| {
            let p = orbit.iter().fold(Poly::one(), |acc, &i| {
                acc.mul(f, &Poly::new(vec![f.neg(split.beta(i as i64)), Gf::ONE]))
            });
            (orbit, p)
        })
        .collect()
}

/// Random code whose diagonal entries are random products of the factors of X^m - lambda.
pub fn random_code<R: Rng + ?Sized>(
    rng: &mut R,
    fq: &GaloisField,
    m: usize,
    ell: usize,
    lambda: Gf,
) -> Result<QtCode> {
    let split = crate::galois::find_splitting_data(fq, m, lambda)?;
    let factors = twist_factors(&split);
    let base = fq.base_field()?;
    let rows: Vec<Vec<Poly>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| {
                    if j < i {
                        Poly::zero()
                    } else if j == i {
                        factors.iter().fold(Poly::one(), |acc, (_, p)| {
                            if rng.gen_bool(0.5) {
                                acc.mul(&base, p)
                            } else {
                                acc
                            }
                        })
                    } else {
                        random_poly(rng, &base, m)
                    }
                })
                .collect()
        })
        .collect();
    QtCode::from_generators(&base, m, lambda, &rows, ell)
}

/// Degree over F_q of the largest subfield whose elements a polynomial over F_q
/// can take as one common value on every root indexed by `set`.
pub fn subfield_degree(split: &SplittingData, set: &[usize]) -> u32 {
    let mut g = 0u64;
    for orbit in split.orbits() {
        let base = orbit[0];
        let mut steps = Vec::new();
        let mut j = base;
        for k in 0..orbit.len() {
            if set.contains(&j) {
                steps.push(k as u64);
            }
            j = split.frobenius_index(j);
        }
        if steps.is_empty() {
            continue;
        }
        let og = steps.iter().fold(orbit.len() as u64, |acc, &k| gcd(acc, k - steps[0]));
        g = gcd(g, og);
    }
    g as u32
}

/// Elements of the subfield of degree `g` over F_q (g must divide r).
pub fn subfield_elements(f: &GaloisField, g: u32) -> Vec<Gf> {
    let n = f.mult_order() as u64;
    let sub = (f.q() as u64).pow(g) - 1;
    let step = n / sub;
    std::iter::once(Gf::ZERO).chain((0..sub).map(|k| f.exp((k * step) as i64))).collect()
}

/// Random t over F_q with deg t < m and t(x) = value at every point, or an error if impossible.
pub fn interpolate<R: Rng + ?Sized>(
    rng: &mut R,
    f: &GaloisField,
    m: usize,
    points: &[Gf],
    value: Gf,
) -> Result<Poly> {
    let base = f.base_field()?;
    let r = f.r() as usize;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let target = f.base_coords(value);
    for &x in points {
        let powers: Vec<Vec<Gf>> = (0..m).map(|u| f.base_coords(f.pow(x, u as u64))).collect();
        for c in 0..r {
            rows.push((0..m).map(|u| powers[u][c]).collect::<Vec<_>>());
            rhs.push(target[c]);
        }
    }
    let a = Matrix::from_rows(rows)?;
    let mut t = solve(&base, &a, &rhs)
        .ok_or_else(|| Error::Domain("no polynomial over F_q takes that value".into()))?;
    for k in nullspace(&base, &a) {
        let c = random_element(rng, &base);
        for (tu, ku) in t.iter_mut().zip(k) {
            *tu = base.add(*tu, base.mul(c, ku));
        }
    }
    Ok(Poly::new(t))
}

/// One root per Frobenius orbit meeting `set`.
pub fn orbit_representatives(split: &SplittingData, set: &[usize]) -> Vec<usize> {
    split
        .orbits()
        .into_iter()
        .filter_map(|o| {
            let mut j = o[0];
            for _ in 0..o.len() {
                if set.contains(&j) {
                    return Some(j);
                }
                j = split.frobenius_index(j);
            }
            None
        })
        .collect()
}

/// One-generator code (1, h_1, ..., h_{ell-1}) with h constant and non-rational on
/// the index set of `params`, so its eigencode there is trivial.
pub fn designed_code<R: Rng + ?Sized>(
    rng: &mut R,
    fq: &GaloisField,
    m: usize,
    ell: usize,
    lambda: Gf,
    params: BoundParams,
) -> Result<QtCode> {
    if ell < 2 {
        return Err(Error::UnsupportedParameters("designed codes need ell >= 2".into()));
    }
    let split = crate::galois::find_splitting_data(fq, m, lambda)?;
    let f = &split.field;
    let set = params.index_set(m);
    let g = subfield_degree(&split, &set);
    if g < 2 {
        return Err(Error::UnsupportedParameters(
            "only F_q-rational common values exist on this index set".into(),
        ));
    }
    let values = subfield_elements(f, g);
    let points: Vec<Gf> =
        orbit_representatives(&split, &set).iter().map(|&i| split.beta(i as i64)).collect();
    let mut row = vec![Poly::one()];
    for j in 1..ell {
        let w = loop {
            let w = values[rng.gen_range(0..values.len())];
            if j > 1 || !f.is_base(w) {
                break w;
            }
        };
        row.push(interpolate(rng, f, m, &points, w)?);
    }
    let base = fq.base_field()?;
    QtCode::from_generators(&base, m, lambda, &[row], ell)
}

/// Every (a, n1, n2) for which a designed code with these delta and s exists.
pub fn designable_params(split: &SplittingData, delta: usize, s: usize) -> Vec<BoundParams> {
    let m = split.m;
    let coprime: Vec<usize> = (1..m.max(2)).filter(|&n| gcd(m as u64, n as u64) == 1).collect();
    let n2s: Vec<usize> = if s == 0 { vec![1] } else { coprime.clone() };
    let mut out = Vec::new();
    for &n2 in &n2s {
        for &n1 in &coprime {
            for a in 0..m {
                let params = BoundParams { a, n1, n2, s, delta };
                let set = params.index_set(m);
                if set.len() == (delta - 1) * (s + 1) && subfield_degree(split, &set) >= 2 {
                    out.push(params);
                }
            }
        }
    }
    out
}

/// Designed code for a random admissible (a, n1, n2) with the given delta and s,
/// together with a decoder configuration for it.
pub fn random_designed_code<R: Rng + ?Sized>(
    rng: &mut R,
    fq: &GaloisField,
    m: usize,
    ell: usize,
    lambda: Gf,
    delta: usize,
    s: usize,
) -> Result<(QtCode, DecoderConfig)> {
    let split = crate::galois::find_splitting_data(fq, m, lambda)?;
    let mut candidates = designable_params(&split, delta, s);
    while !candidates.is_empty() {
        let params = candidates.swap_remove(rng.gen_range(0..candidates.len()));
        let code = designed_code(rng, fq, m, ell, lambda, params)?;
        if let Ok(cfg) = DecoderConfig::with_auto_vector(&code, params) {
            return Ok((code, cfg));
        }
    }
    Err(Error::UnsupportedParameters(format!(
        "no designed code with delta = {delta}, s = {s} for q = {}, m = {m}",
        fq.q()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::find_splitting_data;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn factors_multiply_to_twist_polynomial() {
        let fq = GaloisField::prime_power(3).unwrap();
        let split = find_splitting_data(&fq, 10, Gf(2)).unwrap();
        let prod = twist_factors(&split).iter().fold(Poly::one(), |a, (_, p)| a.mul(&fq, p));
        assert_eq!(prod, Poly::twist_modulus(&fq, 10, Gf(2)));
    }

    #[test]
    fn subfield_degrees() {
        let fq = GaloisField::prime_power(3).unwrap();
        let split = find_splitting_data(&fq, 5, Gf(2)).unwrap();
        let orbit = split.orbits().into_iter().find(|o| o.len() == 4).unwrap();
        let b = orbit[0];
        let b2 = split.frobenius_index(split.frobenius_index(b));
        assert_eq!(subfield_degree(&split, &[b]), 4);
        assert_eq!(subfield_degree(&split, &[b, b2]), 2);
        assert_eq!(subfield_degree(&split, &[b, split.frobenius_index(b)]), 1);
        assert_eq!(subfield_elements(&split.field, 2).len(), 9);
    }

    #[test]
    fn interpolation_hits_the_value() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let fq = GaloisField::prime_power(3).unwrap();
        let split = find_splitting_data(&fq, 7, Gf(2)).unwrap();
        let f = &split.field;
        let x = split.beta(1);
        let w = f.exp(17);
        let t = interpolate(&mut rng, f, 7, &[x], w).unwrap();
        assert_eq!(t.eval(f, x), w);
    }

    #[test]
    fn designed_code_has_designed_bound() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let fq = GaloisField::prime_power(3).unwrap();
        let (code, cfg) = random_designed_code(&mut rng, &fq, 10, 2, Gf(2), 4, 0).unwrap();
        assert_eq!(code.dimension(), 10);
        assert_eq!(cfg.d_star, 4);
        assert_eq!(cfg.capacity, 1);
    }
}
