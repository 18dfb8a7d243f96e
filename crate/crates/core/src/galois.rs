//! Finite fields F_q = F_p[y]/(mu) and towers F_{q^r} = F_q[z]/(nu).
//!
//! Elements are plain integers in [0, q^r): the base-p digits of the
//! coefficient vector, least significant first. The subfield F_q is exactly
//! the set of indices below q, and the F_q-coordinates of an element are its
//! base-q digits.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables are built eagerly, so keep fields at desk scale.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub s: u32,
    /// Monic modulus of F_q over F_p, constant term first.
    pub modulus: Vec<u32>,
    pub r: u32,
    /// Monic modulus of F_{q^r} over F_q, constant term first, coefficients as F_q indices.
    pub ext_modulus: Vec<u32>,
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    order: u32,
    digits: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Cheap-to-clone handle on shared arithmetic tables.
#[derive(Clone)]
pub struct GaloisField(Arc<Tables>);

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.q, self.0.spec.r)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for GaloisField {}

const NO_LOG: u32 = u32::MAX;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into (p, s).
pub fn prime_power_parts(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut rest, mut s) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p, s))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn checked_pow(base: u32, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(base as u64)?;
        if acc > MAX_FIELD_ORDER {
            return None;
        }
    }
    Some(acc)
}

/// Walks the powers of a candidate generator. Returns the power table when
/// the walk visits every nonzero element exactly once.
fn power_cycle(order: u32, step: impl Fn(u32) -> u32) -> Option<Vec<u32>> {
    let n = order - 1;
    let mut exp = Vec::with_capacity(n as usize);
    let mut x = 1u32;
    for i in 0..n {
        exp.push(x);
        x = step(x);
        if x == 0 || (x == 1 && i + 1 != n) {
            return None;
        }
    }
    (x == 1).then_some(exp)
}

fn digit_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut res, mut pw) = (0u32, 1u32);
    while a != 0 || b != 0 {
        res += ((a % p + b % p) % p) * pw;
        pw *= p;
        a /= p;
        b /= p;
    }
    res
}

fn digit_neg(p: u32, mut a: u32) -> u32 {
    if p == 2 {
        return a;
    }
    let (mut res, mut pw) = (0u32, 1u32);
    while a != 0 {
        res += ((p - a % p) % p) * pw;
        pw *= p;
        a /= p;
    }
    res
}

/// Arithmetic in F_q alone, used while building the tower.
struct BaseOps {
    p: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl BaseOps {
    fn build(p: u32, modulus: &[u32]) -> Option<BaseOps> {
        let s = modulus.len() as u32 - 1;
        let q = p.pow(s);
        let step = |x: u32| {
            let mut d: Vec<u32> = (0..s).map(|u| (x / p.pow(u)) % p).collect();
            let top = d[s as usize - 1];
            for u in (1..s as usize).rev() {
                d[u] = d[u - 1];
            }
            d[0] = 0;
            let mut out = 0;
            for u in 0..s as usize {
                let v = (d[u] + p * p - (top * modulus[u]) % p) % p;
                out += v * p.pow(u as u32);
            }
            out
        };
        let exp = power_cycle(q, step)?;
        let mut log = vec![NO_LOG; q as usize];
        for (k, &x) in exp.iter().enumerate() {
            log[x as usize] = k as u32;
        }
        Some(BaseOps { p, q, exp, log })
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }
}

fn ext_step(base: &BaseOps, ext: &[u32], x: u32) -> u32 {
    let r = ext.len() - 1;
    let q = base.q;
    let mut d: Vec<u32> = (0..r).map(|k| (x / q.pow(k as u32)) % q).collect();
    let top = d[r - 1];
    for k in (1..r).rev() {
        d[k] = d[k - 1];
    }
    d[0] = 0;
    let mut out = 0;
    for k in 0..r {
        let v = digit_add(base.p, d[k], digit_neg(base.p, base.mul(top, ext[k])));
        out += v * q.pow(k as u32);
    }
    out
}

/// Enumerates monic degree-`deg` polynomials over a field of size `size` in
/// lexicographic order of (c_0, ..., c_{deg-1}), constant term most significant.
fn lex_candidates(size: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (size as u64).pow(deg);
    (0..total).map(move |n| {
        let mut c = vec![0u32; deg as usize + 1];
        let mut rest = n;
        for u in (0..deg as usize).rev() {
            c[u] = (rest % size as u64) as u32;
            rest /= size as u64;
        }
        c[deg as usize] = 1;
        c
    })
}

/// Smallest monic primitive polynomial of degree `s` over F_p.
pub fn default_modulus(p: u32, s: u32) -> Result<Vec<u32>> {
    if !is_prime(p) || s == 0 {
        return Err(Error::UnsupportedParameters(format!("F_{p}^{s} is not a field")));
    }
    if checked_pow(p, s).is_none() {
        return Err(Error::UnsupportedParameters(format!("F_{p}^{s} is too large")));
    }
    lex_candidates(p, s)
        .find(|c| BaseOps::build(p, c).is_some())
        .ok_or_else(|| Error::UnsupportedParameters(format!("no primitive modulus for F_{p}^{s}")))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// a * b mod the monic `modulus`, coefficients over F_q as digit-packed indices.
fn ext_mulmod(base: &BaseOps, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * r - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = digit_add(base.p, prod[i + j], base.mul(x, y));
        }
    }
    for k in (r..prod.len()).rev() {
        let top = prod[k];
        if top == 0 {
            continue;
        }
        for u in 0..r {
            let t = digit_neg(base.p, base.mul(top, modulus[u]));
            prod[k - r + u] = digit_add(base.p, prod[k - r + u], t);
        }
        prod[k] = 0;
    }
    prod.truncate(r);
    prod
}

fn x_power_is_one(base: &BaseOps, modulus: &[u32], mut e: u64) -> bool {
    let r = modulus.len() - 1;
    let mut acc = vec![0u32; r];
    acc[0] = 1;
    let mut sq = vec![0u32; r];
    if r == 1 {
        sq[0] = digit_neg(base.p, modulus[0]);
    } else {
        sq[1] = 1;
    }
    while e > 0 {
        if e & 1 == 1 {
            acc = ext_mulmod(base, &acc, &sq, modulus);
        }
        sq = ext_mulmod(base, &sq, &sq, modulus);
        e >>= 1;
    }
    acc[0] == 1 && acc[1..].iter().all(|&c| c == 0)
}

fn default_ext_modulus(base: &BaseOps, r: u32) -> Result<Vec<u32>> {
    let order = checked_pow(base.q, r)
        .ok_or_else(|| Error::UnsupportedParameters(format!("F_{}^{} is too large", base.q, r)))?
        as u32;
    let n = order as u64 - 1;
    let cofactors: Vec<u64> = prime_factors(n).into_iter().map(|p| n / p).collect();
    lex_candidates(base.q, r)
        .filter(|c| c[0] != 0)
        .find(|c| {
            // X has order exactly q^r - 1 only when c is irreducible and primitive.
            x_power_is_one(base, c, n) && cofactors.iter().all(|&e| !x_power_is_one(base, c, e))
        })
        .ok_or_else(|| {
            Error::UnsupportedParameters(format!("no primitive modulus of degree {r} over F_{}", base.q))
        })
}

fn field_cache() -> &'static Mutex<HashMap<FieldSpec, GaloisField>> {
    static CACHE: OnceLock<Mutex<HashMap<FieldSpec, GaloisField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ext_cache() -> &'static Mutex<HashMap<(u32, Vec<u32>, u32), Vec<u32>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, Vec<u32>, u32), Vec<u32>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Every field built so far in this process, in a stable order.
pub fn constructed_fields() -> Vec<FieldSpec> {
    let mut specs: Vec<FieldSpec> = field_cache().lock().unwrap().keys().cloned().collect();
    specs.sort_by(|a, b| {
        (a.p, a.s, a.r, &a.modulus, &a.ext_modulus).cmp(&(b.p, b.s, b.r, &b.modulus, &b.ext_modulus))
    });
    specs
}

impl GaloisField {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        if let Some(f) = field_cache().lock().unwrap().get(&spec) {
            return Ok(f.clone());
        }
        let f = GaloisField(Arc::new(Self::build(&spec)?));
        field_cache().lock().unwrap().insert(spec, f.clone());
        Ok(f)
    }

    fn build(spec: &FieldSpec) -> Result<Tables> {
        let p = spec.p;
        if !is_prime(p) {
            return Err(Error::UnsupportedParameters(format!("{p} is not prime")));
        }
        let s = spec.s;
        if s == 0 || spec.modulus.len() != s as usize + 1 || spec.modulus[s as usize] != 1 {
            return Err(Error::UnsupportedParameters("base modulus must be monic of degree s".into()));
        }
        if spec.modulus.iter().any(|&c| c >= p) {
            return Err(Error::UnsupportedParameters("base modulus coefficient out of range".into()));
        }
        let q = checked_pow(p, s)
            .ok_or_else(|| Error::UnsupportedParameters("base field too large".into()))?
            as u32;
        let r = spec.r;
        if r == 0 || spec.ext_modulus.len() != r as usize + 1 || spec.ext_modulus[r as usize] != 1 {
            return Err(Error::UnsupportedParameters(
                "extension modulus must be monic of degree r".into(),
            ));
        }
        if spec.ext_modulus.iter().any(|&c| c >= q) {
            return Err(Error::UnsupportedParameters(
                "extension modulus coefficient out of range".into(),
            ));
        }
        let order = checked_pow(q, r).ok_or_else(|| {
            Error::UnsupportedParameters(format!("F_{q}^{r} exceeds {MAX_FIELD_ORDER} elements"))
        })? as u32;
        let base = BaseOps::build(p, &spec.modulus).ok_or_else(|| {
            Error::UnsupportedParameters("base modulus is not primitive".into())
        })?;
        let powers = power_cycle(order, |x| ext_step(&base, &spec.ext_modulus, x))
            .ok_or_else(|| Error::UnsupportedParameters("extension modulus is not primitive".into()))?;
        let n = order as usize - 1;
        let mut exp = Vec::with_capacity(2 * n);
        exp.extend_from_slice(&powers);
        exp.extend_from_slice(&powers);
        let mut log = vec![NO_LOG; order as usize];
        for (k, &x) in powers.iter().enumerate() {
            log[x as usize] = k as u32;
        }
        Ok(Tables { spec: spec.clone(), q, order, digits: s * r, exp, log })
    }

    /// F_q with the default primitive moduli.
    pub fn prime_power(q: u32) -> Result<Self> {
        let (p, s) = prime_power_parts(q)
            .ok_or_else(|| Error::UnsupportedParameters(format!("{q} is not a prime power")))?;
        Self::with_modulus(p, default_modulus(p, s)?)
    }

    /// F_q for an explicit modulus over F_p.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::UnsupportedParameters("modulus must have degree at least 1".into()));
        }
        Self::tower(p, modulus, 1)
    }

    fn tower(p: u32, modulus: Vec<u32>, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::UnsupportedParameters(format!("{p} is not prime")));
        }
        let s = modulus.len() as u32 - 1;
        let key = (p, modulus.clone(), r);
        let cached = ext_cache().lock().unwrap().get(&key).cloned();
        let ext_modulus = match cached {
            Some(e) => e,
            None => {
                if modulus.iter().any(|&c| c >= p) || modulus.last() != Some(&1) {
                    return Err(Error::UnsupportedParameters("malformed base modulus".into()));
                }
                let base = BaseOps::build(p, &modulus).ok_or_else(|| {
                    Error::UnsupportedParameters("base modulus is not primitive".into())
                })?;
                let e = default_ext_modulus(&base, r)?;
                ext_cache().lock().unwrap().insert(key, e.clone());
                e
            }
        };
        Self::new(FieldSpec { p, s, modulus, r, ext_modulus })
    }

    /// F_{q^r} over the same F_q, with the default extension modulus.
    pub fn extension(&self, r: u32) -> Result<Self> {
        let spec = &self.0.spec;
        Self::tower(spec.p, spec.modulus.clone(), r)
    }

    /// The subfield F_q as a field of its own.
    pub fn base_field(&self) -> Result<Self> {
        self.extension(1)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }
    pub fn p(&self) -> u32 {
        self.0.spec.p
    }
    pub fn s(&self) -> u32 {
        self.0.spec.s
    }
    pub fn q(&self) -> u32 {
        self.0.q
    }
    /// Degree over F_q.
    pub fn r(&self) -> u32 {
        self.0.spec.r
    }
    pub fn order(&self) -> u32 {
        self.0.order
    }
    /// Order of the multiplicative group.
    pub fn mult_order(&self) -> u32 {
        self.0.order - 1
    }

    pub fn contains(&self, x: Gf) -> bool {
        x.0 < self.0.order
    }
    pub fn is_base(&self, x: Gf) -> bool {
        x.0 < self.0.q
    }

    pub fn generator(&self) -> Gf {
        Gf(self.0.exp[1 % self.0.exp.len()])
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        Gf(digit_add(self.0.spec.p, a.0, b.0))
    }
    pub fn neg(&self, a: Gf) -> Gf {
        Gf(digit_neg(self.0.spec.p, a.0))
    }
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        if self.0.spec.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let t = &self.0;
        Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    /// Panics on zero; callers check first. See [`GaloisField::checked_div`].
    pub fn inv(&self, a: Gf) -> Gf {
        assert!(a.0 != 0, "inverse of zero");
        let t = &self.0;
        let n = t.order - 1;
        Gf(t.exp[((n - t.log[a.0 as usize]) % n) as usize])
    }

    pub fn div(&self, a: Gf, b: Gf) -> Gf {
        self.mul(a, self.inv(b))
    }

    pub fn checked_div(&self, a: Gf, b: Gf) -> Result<Gf> {
        if b.0 == 0 {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(self.div(a, b))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if a.0 == 0 {
            return if e == 0 { Gf::ONE } else { Gf::ZERO };
        }
        let t = &self.0;
        let n = (t.order - 1) as u64;
        Gf(t.exp[((t.log[a.0 as usize] as u64 * (e % n)) % n) as usize])
    }

    /// Generator raised to an arbitrary (possibly negative) exponent.
    pub fn exp(&self, k: i64) -> Gf {
        let n = self.mult_order() as i64;
        Gf(self.0.exp[k.rem_euclid(n) as usize])
    }

    pub fn log(&self, a: Gf) -> Option<u32> {
        match self.0.log.get(a.0 as usize) {
            Some(&l) if l != NO_LOG => Some(l),
            _ => None,
        }
    }

    pub fn element_order(&self, a: Gf) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.mult_order() as u64;
        Some(n / gcd(l, n))
    }

    /// The r coordinates of `a` over F_q.
    pub fn base_coords(&self, a: Gf) -> Vec<Gf> {
        let q = self.0.q;
        let mut x = a.0;
        (0..self.r())
            .map(|_| {
                let d = x % q;
                x /= q;
                Gf(d)
            })
            .collect()
    }

    pub fn from_base_coords(&self, coords: &[Gf]) -> Gf {
        let q = self.0.q;
        Gf(coords.iter().rev().fold(0, |acc, d| acc * q + d.0))
    }

    /// Base-p digit vector of length s·r.
    pub fn coefficients(&self, a: Gf) -> Vec<u32> {
        let p = self.p();
        let mut x = a.0;
        (0..self.0.digits)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.0.order).map(Gf)
    }

    pub fn base_elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.0.q).map(Gf)
    }

    /// "0", "1" or "a^k" with respect to the generator.
    pub fn power_form(&self, a: Gf) -> String {
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(k) => format!("a^{k}"),
        }
    }
}

/// Field element bound to its field; arithmetic checks membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: GaloisField,
    value: Gf,
}

impl FieldElement {
    pub fn new(field: &GaloisField, value: u32) -> Result<Self> {
        if value >= field.order() {
            return Err(Error::Domain(format!("{value} is not an element of {field:?}")));
        }
        Ok(FieldElement { field: field.clone(), value: Gf(value) })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }
    pub fn value(&self) -> Gf {
        self.value
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: Gf) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.field.checked_div(self.value, other.value)?))
    }
    pub fn inverse(&self) -> Result<Self> {
        Ok(self.wrap(self.field.checked_div(Gf::ONE, self.value)?))
    }
    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.field.pow(self.value, e))
    }
    pub fn coefficients(&self) -> Vec<u32> {
        self.field.coefficients(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.power_form(self.value))
    }
}

/// Where the roots of X^m - lambda live.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub field: GaloisField,
    pub m: usize,
    pub lambda: Gf,
    pub r: u32,
    /// Smallest-exponent root of X^m - lambda.
    pub alpha: Gf,
    /// Primitive m-th root of unity.
    pub xi: Gf,
    pub alpha_log: u64,
    pub xi_log: u64,
}

impl SplittingData {
    /// log of alpha * xi^i.
    pub fn beta_log(&self, i: i64) -> u64 {
        let n = self.field.mult_order() as i64;
        (self.alpha_log as i64 + i.rem_euclid(self.m as i64) * self.xi_log as i64).rem_euclid(n)
            as u64
    }

    pub fn beta(&self, i: i64) -> Gf {
        self.field.exp(self.beta_log(i) as i64)
    }

    pub fn xi_pow(&self, k: i64) -> Gf {
        self.field.exp(k.rem_euclid(self.m as i64) * self.xi_log as i64)
    }

    /// Index j with beta_j = beta_i^q.
    pub fn frobenius_index(&self, i: usize) -> usize {
        let n = self.field.mult_order() as u64;
        let target = (self.beta_log(i as i64) * self.field.q() as u64) % n;
        let diff = (target + n - self.alpha_log) % n;
        (diff / self.xi_log) as usize % self.m
    }

    /// Frobenius orbits of the root indices, each sorted, in order of smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.m];
        let mut out = Vec::new();
        for i in 0..self.m {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![];
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                orbit.push(j);
                j = self.frobenius_index(j);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// Minimal splitting field of X^m - lambda over the F_q of `base`.
pub fn find_splitting_data(base: &GaloisField, m: usize, lambda: Gf) -> Result<SplittingData> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if lambda.is_zero() {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    if !base.is_base(lambda) {
        return Err(Error::Domain(format!("lambda = {lambda} is not in F_{}", base.q())));
    }
    let p = base.p() as u64;
    if gcd(m as u64, p) != 1 {
        return Err(Error::UnsupportedParameters(format!(
            "gcd(m, p) = gcd({m}, {p}) must be 1"
        )));
    }
    let fq = base.base_field()?;
    let lambda_order = fq.element_order(lambda).expect("nonzero");
    let modulus = m as u64 * lambda_order;
    let q = base.q() as u64;
    let mut r = 1u32;
    let mut acc = q % modulus;
    while acc != 1 % modulus {
        acc = acc * q % modulus;
        r += 1;
        if r > 64 {
            return Err(Error::UnsupportedParameters("splitting field degree too large".into()));
        }
    }
    let field = base.extension(r)?;
    let n = field.mult_order() as u64;
    let l = field.log(lambda).expect("nonzero") as u64;
    debug_assert_eq!(l % m as u64, 0);
    let alpha_log = (l / m as u64) % (n / m as u64);
    let xi_log = n / m as u64;
    Ok(SplittingData {
        alpha: field.exp(alpha_log as i64),
        xi: field.exp(xi_log as i64),
        field,
        m,
        lambda,
        r,
        alpha_log,
        xi_log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f81() -> GaloisField {
        GaloisField::prime_power(3).unwrap().extension(4).unwrap()
    }

    #[test]
    fn prime_field_products() {
        let f = GaloisField::prime_power(3).unwrap();
        assert_eq!(f.mul(Gf(2), Gf(2)), Gf(1));
        assert_eq!(f.add(Gf(2), Gf(2)), Gf(1));
        assert_eq!(f.neg(Gf(1)), Gf(2));
        assert_eq!(f.generator(), Gf(2));
    }

    #[test]
    fn f81_generator_order() {
        let f = f81();
        let a = f.generator();
        assert_eq!(f.mul(a, f.pow(a, 79)), Gf::ONE);
        assert_eq!(f.pow(a, 40), Gf(2));
        assert_eq!(f.spec().ext_modulus, vec![2, 0, 0, 1, 1]);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 1).unwrap(), vec![1, 1]);
        assert_eq!(default_modulus(3, 1).unwrap(), vec![1, 1]);
        assert_eq!(default_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        let f4 = GaloisField::prime_power(4).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.element_order(f4.generator()), Some(3));
    }

    #[test]
    fn splitting_examples() {
        let f3 = GaloisField::prime_power(3).unwrap();
        let sd = find_splitting_data(&f3, 10, Gf(2)).unwrap();
        assert_eq!(sd.r, 4);
        assert_eq!(sd.field.power_form(sd.alpha), "a^4");
        assert_eq!(sd.field.power_form(sd.xi), "a^8");

        let sd = find_splitting_data(&f3, 2, Gf(1)).unwrap();
        assert_eq!((sd.r, sd.xi, sd.alpha), (1, Gf(2), Gf(1)));

        let f2 = GaloisField::prime_power(2).unwrap();
        let sd = find_splitting_data(&f2, 3, Gf(1)).unwrap();
        assert_eq!(sd.r, 2);
        assert_eq!(sd.field.element_order(sd.xi), Some(3));
    }

    #[test]
    fn splitting_errors() {
        let f3 = GaloisField::prime_power(3).unwrap();
        assert!(matches!(
            find_splitting_data(&f3, 6, Gf(1)),
            Err(Error::UnsupportedParameters(_))
        ));
        assert!(matches!(find_splitting_data(&f3, 4, Gf(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn checked_elements() {
        let f = f81();
        let g = GaloisField::prime_power(3).unwrap();
        let x = FieldElement::new(&f, 5).unwrap();
        let y = FieldElement::new(&g, 1).unwrap();
        assert_eq!(x.add(&y), Err(Error::FieldMismatch));
        let zero = FieldElement::new(&f, 0).unwrap();
        assert!(matches!(x.div(&zero), Err(Error::Domain(_))));
        assert!(FieldElement::new(&f, 81).is_err());
        assert_eq!(x.mul(&x.inverse().unwrap()).unwrap().value(), Gf::ONE);
    }

    #[test]
    fn frobenius_orbits_cover_roots() {
        let f3 = GaloisField::prime_power(3).unwrap();
        let sd = find_splitting_data(&f3, 10, Gf(2)).unwrap();
        let orbits = sd.orbits();
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), 10);
        for o in &orbits {
            for &i in o {
                let b = sd.beta(i as i64);
                assert_eq!(sd.field.pow(b, 3), sd.beta(sd.frobenius_index(i) as i64));
            }
        }
    }
}
