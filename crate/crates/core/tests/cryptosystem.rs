mod common;

use common::random_error;
use qtcodes::cryptosystem::{
    decrypt, encrypt, is_block_twistulant, keygen, KeyParams, PrivateKey, PublicKey, PRIVATE_KEY_HEADER,
};
use qtcodes::{Error, GaloisField, Gf, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn kp(q: u32, m: usize, ell: usize, lambda: u32) -> KeyParams {
    KeyParams { q, m, ell, lambda }
}

#[test]
fn round_trips_across_parameter_sets() {
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    for params in [kp(3, 5, 4, 2), kp(3, 7, 3, 2), kp(4, 5, 3, 3), kp(5, 7, 3, 2), kp(7, 4, 3, 3)] {
        let pair = keygen(&params, rng.gen()).unwrap_or_else(|e| panic!("{params:?}: {e}"));
        assert!(pair.public.t >= 1);
        for _ in 0..10 {
            let w = rng.gen_range(0..=pair.public.t);
            let msg = random_error(&mut rng, params.q, params.len(), w);
            let c = encrypt(&pair.public, &msg).unwrap();
            assert_eq!(decrypt(&pair.private, &c).unwrap(), msg, "{params:?}");
        }
    }
}

#[test]
fn every_low_weight_message_decrypts() {
    let params = kp(3, 5, 4, 2);
    let pair = keygen(&params, 3).unwrap();
    let n = params.len();
    let mut count = 0;
    for i in 0..n {
        for a in 1..3 {
            let mut msg = vec![Gf::ZERO; n];
            msg[i] = Gf(a);
            assert_eq!(decrypt(&pair.private, &encrypt(&pair.public, &msg).unwrap()).unwrap(), msg);
            count += 1;
            if pair.public.t < 2 {
                continue;
            }
            for j in i + 1..n {
                for b in 1..3 {
                    msg[j] = Gf(b);
                    assert_eq!(decrypt(&pair.private, &encrypt(&pair.public, &msg).unwrap()).unwrap(), msg);
                    msg[j] = Gf::ZERO;
                    count += 1;
                }
            }
        }
    }
    assert!(count >= 40);
}

#[test]
fn keys_are_reproducible_from_the_seed() {
    let params = kp(3, 7, 3, 2);
    let a = keygen(&params, 1234).unwrap();
    let b = keygen(&params, 1234).unwrap();
    let c = keygen(&params, 1235).unwrap();
    assert_eq!(a.public.to_text().as_bytes(), b.public.to_text().as_bytes());
    assert_eq!(a.private.to_text().as_bytes(), b.private.to_text().as_bytes());
    assert_ne!(a.public.to_text(), c.public.to_text());
}

#[test]
fn public_matrix_hides_the_block_structure() {
    for seed in 0..20 {
        let params = kp(3, 5, 4, 2);
        let fq = GaloisField::prime_power(3).unwrap();
        let pair = keygen(&params, seed).unwrap();
        let twist = fq.inv(Gf(2));
        let private = pair.private.parity().to_dense(&fq);
        assert!(is_block_twistulant(&fq, &private, 5, twist));
        let public = Matrix::from_rows(pair.public.matrix.clone()).unwrap();
        assert!(!is_block_twistulant(&fq, &public, 5, twist), "seed {seed}");
    }
}

#[test]
fn key_files_parse_back_and_reject_tampering() {
    let pair = keygen(&kp(3, 5, 4, 2), 8).unwrap();
    let text = pair.private.to_text();
    assert_eq!(text.lines().next(), Some(PRIVATE_KEY_HEADER));
    let back = PrivateKey::from_text(&text).unwrap();
    assert_eq!(back.to_text(), text);
    assert_eq!(PublicKey::from_text(&pair.public.to_text()).unwrap(), pair.public);

    let without_header: String = text.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert!(PrivateKey::from_text(&without_header).is_err());
    let mut json: serde_json::Value = serde_json::from_str(&without_header).unwrap();
    json["perm"][0] = json["perm"][1].clone();
    let tampered = format!("{PRIVATE_KEY_HEADER}\n{json}");
    assert!(PrivateKey::from_text(&tampered).is_err());
    assert!(PublicKey::from_text("{}").is_err());
}

#[test]
fn invalid_inputs_are_reported() {
    let pair = keygen(&kp(3, 5, 4, 2), 4).unwrap();
    let t = pair.public.t;
    let heavy = vec![Gf(1); 20];
    assert!(matches!(encrypt(&pair.public, &heavy), Err(Error::WeightTooLarge { weight: 20, max }) if max == t));
    assert!(matches!(encrypt(&pair.public, &[Gf::ZERO; 3]), Err(Error::Shape(_))));
    assert!(matches!(decrypt(&pair.private, &[Gf::ZERO; 4]), Err(Error::Shape(_))));
    assert!(matches!(keygen(&kp(3, 6, 2, 1), 0), Err(Error::UnsupportedParameters(_))));
    assert!(matches!(keygen(&kp(3, 5, 2, 0), 0), Err(Error::UnsupportedParameters(_))));
}

#[test]
fn heavy_ciphertexts_fail_or_decrypt_consistently() {
    let mut rng = ChaCha20Rng::seed_from_u64(12);
    let pair = keygen(&kp(3, 7, 3, 2), 5).unwrap();
    let public = Matrix::from_rows(pair.public.matrix.clone()).unwrap();
    let fq = GaloisField::prime_power(3).unwrap();
    let mut failures = 0;
    for _ in 0..50 {
        let msg = random_error(&mut rng, 3, 21, pair.public.t + 2);
        let c = public.mul_vec(&fq, &msg).unwrap();
        match decrypt(&pair.private, &c) {
            Ok(back) => {
                assert!(back.iter().filter(|x| !x.is_zero()).count() <= pair.public.t);
                assert_eq!(encrypt(&pair.public, &back).unwrap(), c);
            }
            Err(Error::DecryptionFailure(_)) => failures += 1,
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    assert!(failures > 0);
}

/// Over F_2 the twist is 1, so every tail row must have a coefficient that is
/// unique among positions 1..m-1: t = c + X^k or its complement. Such a t cannot
/// take one value outside F_2 on two designed roots, so no key reaches d* >= 3.
#[test]
fn binary_keys_are_rejected_by_the_parity_check_conditions() {
    for params in [kp(2, 9, 2, 1), kp(2, 11, 2, 1), kp(2, 7, 3, 1)] {
        match keygen(&params, 0) {
            Err(Error::KeygenRetryExhausted { reason, .. }) => assert!(reason.contains("parity-check"), "{reason}"),
            other => panic!("{params:?}: {other:?}"),
        }
    }
}
