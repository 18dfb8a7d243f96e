#![allow(dead_code)]

use qtcodes::sample::random_designed_code;
use qtcodes::{DecoderConfig, GaloisField, Gf, QtCode};
use rand::Rng;

/// (q, m, ell, lambda, delta, s) families with designed codes whose dimension
/// stays within the brute-force budget.
pub const ORACLE_FAMILIES: &[(u32, usize, usize, u32, usize, usize)] = &[
    (2, 13, 2, 1, 5, 0),
    (2, 15, 2, 1, 5, 0),
    (2, 17, 2, 1, 5, 0),
    (2, 15, 2, 1, 3, 1),
    (3, 10, 2, 2, 4, 0),
    (3, 10, 2, 1, 3, 0),
    (2, 7, 3, 1, 3, 0),
];

/// Larger families for properties that need no exhaustive search.
pub const LARGE_FAMILIES: &[(u32, usize, usize, u32, usize, usize)] = &[
    (3, 20, 2, 1, 5, 0),
    (3, 26, 2, 1, 6, 0),
    (3, 28, 2, 1, 7, 0),
    (2, 17, 2, 1, 4, 1),
    (5, 13, 2, 1, 4, 1),
    (5, 13, 2, 1, 5, 0),
    (2, 21, 2, 1, 5, 0),
];

pub fn designed<R: Rng>(
    rng: &mut R,
    family: (u32, usize, usize, u32, usize, usize),
) -> (QtCode, DecoderConfig) {
    let (q, m, ell, lambda, delta, s) = family;
    let fq = GaloisField::prime_power(q).unwrap();
    random_designed_code(rng, &fq, m, ell, Gf(lambda), delta, s)
        .unwrap_or_else(|e| panic!("no designed code for {family:?}: {e}"))
}

/// Random error of exact Hamming weight `w` over F_q.
pub fn random_error<R: Rng>(rng: &mut R, q: u32, n: usize, w: usize) -> Vec<Gf> {
    let mut e = vec![Gf::ZERO; n];
    let mut placed = 0;
    while placed < w {
        let i = rng.gen_range(0..n);
        if e[i].is_zero() {
            e[i] = Gf(rng.gen_range(1..q));
            placed += 1;
        }
    }
    e
}

/// Symbols at which a row-major word of ell-tuples is nonzero.
pub fn symbol_support(word: &[Gf], ell: usize) -> Vec<usize> {
    word.chunks(ell).enumerate().filter(|(_, c)| c.iter().any(|x| !x.is_zero())).map(|(i, _)| i).collect()
}

pub fn random_codeword<R: Rng>(rng: &mut R, code: &QtCode) -> Vec<Gf> {
    let q = code.base_field().q();
    let msg: Vec<Gf> = (0..code.dimension()).map(|_| Gf(rng.gen_range(0..q))).collect();
    code.encode(&msg).unwrap()
}

pub fn add_words(f: &GaloisField, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}
