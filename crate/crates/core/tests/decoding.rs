mod common;

use common::{add_words, designed, random_codeword, random_error, symbol_support, LARGE_FAMILIES, ORACLE_FAMILIES};
use qtcodes::catalog::ternary_20_10_4;
use qtcodes::decoder::{build_syndrome_matrix, decode_traced, star_product, syndrome_factors};
use qtcodes::linalg::rank;
use qtcodes::oracle::nearest_codeword;
use qtcodes::{decode, DecodeOutcome, DecoderConfig, Error, Gf, OracleBudget, QtCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn weighted_values(code: &QtCode, cfg: &DecoderConfig, error: &[Gf], locations: &[usize]) -> Vec<Gf> {
    let f = code.field();
    let ell = code.ell();
    locations
        .iter()
        .map(|&i| (0..ell).fold(Gf::ZERO, |acc, j| f.add(acc, f.mul(cfg.v[j], error[i * ell + j]))))
        .collect()
}

#[test]
fn planted_errors_decode_to_the_nearest_codeword() {
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let budget = OracleBudget::default();
    let mut trials = 0;
    for &family in ORACLE_FAMILIES {
        for _ in 0..2 {
            let (code, cfg) = designed(&mut rng, family);
            let q = code.base_field().q();
            for _ in 0..8 {
                let c = random_codeword(&mut rng, &code);
                let w = rng.gen_range(1..=cfg.capacity);
                let e = random_error(&mut rng, q, code.len(), w);
                let r = add_words(code.base_field(), &c, &e);
                let (nearest, dist) = nearest_codeword(&code, &r, &budget).unwrap();
                assert_eq!(nearest, c);
                assert_eq!(dist, w);
                let out = decode(&r, &code, &cfg).unwrap();
                assert_eq!(out.decoded().map(|d| &d.codeword), Some(&nearest), "{family:?}");
                trials += 1;
            }
        }
    }
    assert!(trials >= 100);
}

#[test]
fn every_single_symbol_error_on_the_example_is_corrected() {
    let (code, cfg) = ternary_20_10_4();
    let mut count = 0;
    for pos in 0..20 {
        for val in 1..3 {
            let mut word = vec![Gf::ZERO; 20];
            word[pos] = Gf(val);
            let d = decode(&word, &code, &cfg).unwrap();
            let d = d.decoded().expect("decoded");
            assert!(d.codeword.iter().all(|x| x.is_zero()));
            assert_eq!(d.error, word);
            assert_eq!(d.locations, vec![pos / 2]);
            count += 1;
        }
    }
    assert_eq!(count, 40);
}

#[test]
fn syndrome_matrix_rank_equals_error_count() {
    let mut rng = ChaCha20Rng::seed_from_u64(77);
    let mut instances = 0;
    let mut factored = 0;
    for &family in LARGE_FAMILIES.iter().chain(ORACLE_FAMILIES) {
        let (code, cfg) = designed(&mut rng, family);
        let f = code.field();
        for _ in 0..12 {
            let w = rng.gen_range(1..=cfg.capacity);
            let e = random_error(&mut rng, code.base_field().q(), code.len(), w);
            let locations = symbol_support(&e, code.ell());
            let eps = locations.len();
            let (_, trace) = decode_traced(&e, &code, &cfg).unwrap();
            let s = build_syndrome_matrix(&trace.syndromes, eps).unwrap();
            assert_eq!(rank(f, &s), eps, "{family:?}");
            instances += 1;
            let values = weighted_values(&code, &cfg, &e, &locations);
            let fac = syndrome_factors(f, &cfg, &locations, &values).unwrap();
            let prod = fac.x.mul(f, &fac.y).unwrap().mul(f, &fac.x_tilde).unwrap();
            assert_eq!(prod, s);
            assert_eq!(star_product(f, &fac.a, &fac.b).unwrap(), fac.x);
            factored += 1;
        }
    }
    assert!(instances >= 100 && factored >= 20);
}

#[test]
fn codewords_decode_to_themselves() {
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for &family in LARGE_FAMILIES {
        let (code, cfg) = designed(&mut rng, family);
        let c = random_codeword(&mut rng, &code);
        let d = decode(&c, &code, &cfg).unwrap();
        let d = d.decoded().unwrap();
        assert_eq!(d.codeword, c);
        assert!(d.locations.is_empty());
    }
}

#[test]
fn large_codes_correct_up_to_capacity() {
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    for &family in LARGE_FAMILIES {
        let (code, cfg) = designed(&mut rng, family);
        for _ in 0..10 {
            let c = random_codeword(&mut rng, &code);
            let e = random_error(&mut rng, code.base_field().q(), code.len(), cfg.capacity);
            let r = add_words(code.base_field(), &c, &e);
            let d = decode(&r, &code, &cfg).unwrap();
            assert_eq!(d.decoded().unwrap().codeword, c, "{family:?}");
        }
    }
}

#[test]
fn heavy_errors_never_yield_non_codewords() {
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    for &family in ORACLE_FAMILIES {
        let (code, cfg) = designed(&mut rng, family);
        for _ in 0..20 {
            let w = rng.gen_range(cfg.capacity + 1..=cfg.capacity + 3);
            let e = random_error(&mut rng, code.base_field().q(), code.len(), w);
            match decode(&e, &code, &cfg).unwrap() {
                DecodeOutcome::Decoded(d) => {
                    assert!(code.contains(&d.codeword).unwrap());
                    assert!(symbol_support(&d.error, code.ell()).len() <= cfg.capacity);
                    assert_eq!(add_words(code.base_field(), &d.codeword, &d.error), e);
                }
                DecodeOutcome::Failure(_) => {}
            }
        }
    }
}

#[test]
fn malformed_words_are_rejected() {
    let (code, cfg) = ternary_20_10_4();
    assert!(matches!(decode(&[Gf::ZERO; 19], &code, &cfg), Err(Error::Shape(_))));
    let mut w = vec![Gf::ZERO; 20];
    w[3] = Gf(5);
    assert!(matches!(decode(&w, &code, &cfg), Err(Error::Domain(_))));
}
