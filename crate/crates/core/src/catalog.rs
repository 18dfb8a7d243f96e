//! Small reference instances.

use crate::decoder::DecoderConfig;
use crate::galois::{GaloisField, Gf};
use crate::polyring::Poly;
use crate::qtcode::{BoundParams, GroebnerGenMatrix, QtCode};

/// The [20, 10, 4] ternary (2, 2)-quasi-twisted code with m = 10, and its
/// decoder for eigenvalue indices {6, 7, 8} with v = (1, a^50).
pub fn ternary_20_10_4() -> (QtCode, DecoderConfig) {
    let f = GaloisField::prime_power(3).expect("F_3");
    let g01 = Poly::from_u32s(&[1, 0, 1, 2, 0, 1, 2, 2, 0, 2]);
    let g11 = Poly::from_u32s(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
    let entries = vec![vec![Poly::one(), g01], vec![Poly::zero(), g11]];
    let basis = GroebnerGenMatrix::new(&f, 10, Gf(2), entries).expect("shape");
    let code = QtCode::new(basis).expect("valid basis");
    let params = BoundParams { a: 6, n1: 1, n2: 1, s: 0, delta: 4 };
    let v = vec![Gf::ONE, code.field().exp(50)];
    let cfg = DecoderConfig::new(&code, params, v).expect("valid configuration");
    (code, cfg)
}
