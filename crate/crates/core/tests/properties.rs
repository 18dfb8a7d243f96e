use proptest::prelude::*;
use qtcodes::analysis::qfs_check;
use qtcodes::sample::random_code;
use qtcodes::twistulant::{cycle_matrix, cycle_matrix_inverse};
use qtcodes::{constashift, phi, phi_inv, ring_mul, GaloisField, Gf, Matrix, Poly, QtCode, TwistulantMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

const FIELDS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 256];

fn field(q: u32) -> GaloisField {
    GaloisField::prime_power(q).unwrap()
}

fn elems(q: u32, len: usize) -> impl Strategy<Value = Vec<Gf>> {
    prop::collection::vec((0..q).prop_map(Gf), len)
}

/// Dense product of two polynomials reduced by hand, one coefficient at a time.
fn naive_twisted_product(f: &GaloisField, a: &[Gf], b: &[Gf], lambda: Gf) -> Vec<Gf> {
    let m = a.len();
    let mut out = vec![Gf::ZERO; m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let mut c = f.mul(x, y);
            if i + j >= m {
                c = f.mul(c, lambda);
            }
            out[(i + j) % m] = f.add(out[(i + j) % m], c);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(qi in 0..FIELDS.len(), a in 0u32..256, b in 0u32..256, c in 0u32..256) {
        let q = FIELDS[qi];
        let f = field(q);
        let (a, b, c) = (Gf(a % q), Gf(b % q), Gf(c % q));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Gf::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.mul(a, Gf::ONE), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Gf::ONE);
            prop_assert_eq!(f.pow(a, (q - 1) as u64), Gf::ONE);
            prop_assert_eq!(f.exp(f.log(a).unwrap() as i64), a);
        }
        prop_assert_eq!(f.pow(a, q as u64), a);
    }

    #[test]
    fn ring_product_matches_naive(
        (q, m, a, b, lambda) in (0..6usize).prop_flat_map(|qi| {
            let q = FIELDS[qi];
            (1usize..12).prop_flat_map(move |m| (Just(q), Just(m), elems(q, m), elems(q, m), 1..q))
        })
    ) {
        let f = field(q);
        let lambda = Gf(lambda);
        let got = ring_mul(&f, &Poly::new(a.clone()), &Poly::new(b.clone()), m, lambda).padded(m);
        prop_assert_eq!(got, naive_twisted_product(&f, &a, &b, lambda));
    }

    #[test]
    fn twistulant_algebra_matches_dense(
        (q, m, a, b, twist) in (0..6usize).prop_flat_map(|qi| {
            let q = FIELDS[qi];
            (1usize..10).prop_flat_map(move |m| (Just(q), Just(m), elems(q, m), elems(q, m), 1..q))
        })
    ) {
        let f = field(q);
        let ta = TwistulantMatrix::from_row(a, Gf(twist)).unwrap();
        let tb = TwistulantMatrix::from_row(b, Gf(twist)).unwrap();
        let (da, db) = (ta.to_dense(&f), tb.to_dense(&f));
        prop_assert_eq!(ta.mul(&f, &tb).unwrap().to_dense(&f), da.mul(&f, &db).unwrap());
        match ta.inv(&f) {
            Ok(inv) => prop_assert_eq!(da.mul(&f, &inv.to_dense(&f)).unwrap(), Matrix::identity(m)),
            Err(_) => prop_assert!(qtcodes::linalg::inverse(&f, &da).is_none()),
        }
        prop_assert_eq!(TwistulantMatrix::from_dense(&f, &da, Gf(twist)), Some(ta));
    }

    #[test]
    fn cycle_conjugation_fixes_twistulants(
        (q, m, row, lambda) in (0..6usize).prop_flat_map(|qi| {
            let q = FIELDS[qi];
            (1usize..12).prop_flat_map(move |m| (Just(q), Just(m), elems(q, m), 1..q))
        })
    ) {
        let f = field(q);
        let lambda = Gf(lambda);
        let g = TwistulantMatrix::from_row(row, f.inv(lambda)).unwrap().to_dense(&f);
        let b = cycle_matrix(m, lambda);
        let bi = cycle_matrix_inverse(&f, m, lambda);
        prop_assert_eq!(bi.mul(&f, &g).unwrap().mul(&f, &b).unwrap(), g);
    }

    #[test]
    fn phi_round_trips(
        (_q, m, ell, word) in (0..4usize).prop_flat_map(|qi| {
            let q = FIELDS[qi];
            (1usize..8, 1usize..4).prop_flat_map(move |(m, ell)| (Just(q), Just(m), Just(ell), elems(q, m * ell)))
        })
    ) {
        let v = phi(&word, m, ell, Gf(1)).unwrap();
        prop_assert_eq!(phi_inv(&v), word);
    }

    #[test]
    fn codes_are_closed_under_the_constashift(seed in any::<u64>(), qi in 0..3usize, m in 2usize..12, ell in 1usize..4) {
        let q = [2u32, 3, 4][qi];
        let f = field(q);
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let lambda = Gf(1 + (seed % (q as u64 - 1)) as u32);
        let Ok(code) = random_code(&mut rng, &f, m, ell, lambda) else { return Ok(()) };
        let msg: Vec<Gf> = (0..code.dimension()).map(|i| Gf(((seed >> (i % 60)) as u32 + i as u32) % q)).collect();
        let c = code.encode(&msg).unwrap();
        prop_assert!(code.contains(&c).unwrap());
        let shifted = constashift(&f, &c, lambda, ell).unwrap();
        prop_assert!(code.contains(&shifted).unwrap());
        let rebuilt = QtCode::from_generators(&f, m, lambda, code.basis().entries(), ell).unwrap();
        prop_assert_eq!(rebuilt.basis(), code.basis());
    }
}

#[test]
fn qfs_agrees_with_floating_point() {
    use rand::Rng;
    let mut rng = ChaCha20Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 1000 {
        let q = rng.gen_range(2u64..50);
        let m = rng.gen_range(1u64..200);
        let ell = rng.gen_range(1u64..200);
        let lhs = 4.0 * m as f64 * (q as f64).ln();
        let rhs = ell as f64 * ((m * ell) as f64).ln();
        if (lhs - rhs).abs() < 1e-9 * lhs.max(rhs) {
            continue;
        }
        assert_eq!(qfs_check(q, m, ell).unwrap().satisfied, lhs < rhs, "q={q} m={m} ell={ell}");
        checked += 1;
    }
}
