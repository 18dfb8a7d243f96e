//! Exact information-set-decoding work factors and the QFS parameter predicate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn log2_uint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return (x.to_u64_digits().first().copied().unwrap_or(0) as f64).log2();
    }
    let shift = bits - 52;
    let top: BigUint = x >> shift;
    (top.to_u64_digits()[0] as f64).log2() + shift as f64
}

/// log2 of a positive rational.
pub fn log2_rational(x: &BigRational) -> f64 {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    log2_uint(num) - log2_uint(den)
}

/// Which binomial the success probabilities Q_i use for the remaining columns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum QiVariant {
    /// C(m*ell - 2, m - i), evaluated as written in the source formula.
    #[default]
    Verbatim,
    /// C(m*ell - eps, m - i), the classical Lee-Brickell form.
    Classical,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WorkFactor {
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub log2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsdReport {
    pub m: u64,
    pub ell: u64,
    pub eps: u64,
    pub variant: QiVariant,
    pub w: WorkFactor,
    pub w_min: WorkFactor,
    #[serde(serialize_with = "ser_rational")]
    pub t2: BigRational,
    #[serde(serialize_with = "ser_rationals")]
    pub q: Vec<BigRational>,
    #[serde(serialize_with = "ser_uint")]
    pub n2: BigUint,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_rationals<S: serde::Serializer>(
    x: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(x.iter().map(|v| v.to_string()))
}

fn ser_uint<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn check_eps(m: u64, ell: u64, eps: u64) -> Result<()> {
    if m == 0 || ell == 0 {
        return Err(Error::Domain("m and ell must be positive".into()));
    }
    if eps > m * ell - m {
        return Err(Error::Domain(format!("eps = {eps} exceeds m*ell - m = {}", m * ell - m)));
    }
    Ok(())
}

/// W = alpha m^3 C(m ell, m) / C(m ell - eps, m).
pub fn work_factor(m: u64, ell: u64, eps: u64, alpha: &BigRational) -> Result<WorkFactor> {
    check_eps(m, ell, eps)?;
    let n = (m * ell) as i64;
    let cubic = BigRational::from_integer(BigInt::from(m).pow(3u32));
    let value = alpha * cubic * ratio(binomial(n, m as i64), binomial(n - eps as i64, m as i64));
    if value <= BigRational::zero() {
        return Err(Error::Domain("alpha must be positive".into()));
    }
    let log2 = log2_rational(&value);
    Ok(WorkFactor { value, log2 })
}

/// W_min = T_2 (m^3 + N_2 m) with T_2 = 1 / (Q_0 + Q_1 + Q_2).
pub fn min_work_factor(m: u64, ell: u64, eps: u64, variant: QiVariant) -> Result<IsdReport> {
    check_eps(m, ell, eps)?;
    let n = (m * ell) as i64;
    let rest = match variant {
        QiVariant::Verbatim => n - 2,
        QiVariant::Classical => n - eps as i64,
    };
    let total = binomial(n, m as i64);
    let q: Vec<BigRational> = (0..=2i64)
        .map(|i| ratio(binomial(eps as i64, i) * binomial(rest, m as i64 - i), total.clone()))
        .collect();
    let sum: BigRational = q.iter().cloned().fold(BigRational::zero(), |a, b| a + b);
    if sum.is_zero() {
        return Err(Error::Domain("the success probabilities Q_0..Q_2 sum to zero".into()));
    }
    let t2 = sum.recip();
    let n2: BigUint = (0..=2).map(|i| binomial(m as i64, i)).sum();
    let cost = BigInt::from(m).pow(3u32) + BigInt::from(n2.clone()) * BigInt::from(m);
    let value = &t2 * BigRational::from_integer(cost);
    let w_min = WorkFactor { log2: log2_rational(&value), value };
    let w = work_factor(m, ell, eps, &BigRational::one())?;
    Ok(IsdReport { m, ell, eps, variant, w, w_min, t2, q, n2 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QfsCheck {
    pub satisfied: bool,
    /// q^(4m)
    #[serde(serialize_with = "ser_uint")]
    pub lhs: BigUint,
    /// (m ell)^ell
    #[serde(serialize_with = "ser_uint")]
    pub rhs: BigUint,
}

/// m < (ell/4) log_q(m ell), decided exactly as q^(4m) < (m ell)^ell.
pub fn qfs_check(q: u64, m: u64, ell: u64) -> Result<QfsCheck> {
    if q < 2 || m == 0 || ell == 0 {
        return Err(Error::Domain("need q >= 2 and m, ell >= 1".into()));
    }
    let exp = |b: u64, e: u64| -> Result<BigUint> {
        let e = u32::try_from(e).map_err(|_| Error::Domain("exponent too large".into()))?;
        Ok(BigUint::from(b).pow(e))
    };
    let lhs = exp(q, 4 * m)?;
    let rhs = exp(m * ell, ell)?;
    Ok(QfsCheck { satisfied: lhs < rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn work_factor_examples() {
        assert_eq!(work_factor(2, 2, 1, &int(1)).unwrap().value, int(16));
        assert_eq!(work_factor(5, 3, 0, &int(1)).unwrap().value, int(125));
        let w = work_factor(10, 2, 1, &int(1)).unwrap();
        assert_eq!(w.value, int(2000));
        assert!((w.log2 - 2000f64.log2()).abs() < 1e-9);
        assert!(matches!(work_factor(2, 2, 3, &int(1)), Err(Error::Domain(_))));
    }

    #[test]
    fn min_work_factor_examples() {
        let r = min_work_factor(2, 2, 1, QiVariant::Verbatim).unwrap();
        assert_eq!(r.w_min.value, int(32));
        assert_eq!(r.t2, int(2));
        assert_eq!(r.n2, BigUint::from(4u32));
        assert_eq!(r.q[2], int(0));

        let r0 = min_work_factor(3, 3, 0, QiVariant::Verbatim).unwrap();
        let t2 = ratio(binomial(9, 3), binomial(7, 3));
        assert_eq!(r0.t2, t2);

        // With the C(m*ell - 2, .) term, raising eps raises Q_1 and Q_2, so W_min drops.
        let two = min_work_factor(4, 4, 2, QiVariant::Verbatim).unwrap();
        let one = min_work_factor(4, 4, 1, QiVariant::Verbatim).unwrap();
        assert_eq!(one.w_min.value, int(144));
        assert_eq!(two.w_min.value, int(108));
    }

    #[test]
    fn classical_variant_differs() {
        let v = min_work_factor(4, 4, 3, QiVariant::Verbatim).unwrap();
        let c = min_work_factor(4, 4, 3, QiVariant::Classical).unwrap();
        assert_ne!(v.w_min.value, c.w_min.value);
    }

    #[test]
    fn qfs_examples() {
        assert!(qfs_check(3, 5, 100).unwrap().satisfied);
        assert!(!qfs_check(3, 100, 2).unwrap().satisfied);
        for m in 1..30 {
            assert!(!qfs_check(2, m, 1).unwrap().satisfied);
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(1, 2), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(20, 10), BigUint::from(184756u32));
    }
}
