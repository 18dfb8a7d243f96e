//! Exhaustive reference computations. Deliberately naive.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{GaloisField, Gf};
use crate::qtcode::{Distance, QtCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_codewords: u128,
    pub max_len: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_codewords: 1 << 22, max_len: 4096 }
    }
}

impl OracleBudget {
    fn admit(&self, q: u32, k: usize, len: usize) -> Result<()> {
        if len > self.max_len {
            return Err(Error::BudgetExceeded { needed: len as u128, budget: self.max_len as u128 });
        }
        let needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if needed > self.max_codewords {
            return Err(Error::BudgetExceeded { needed, budget: self.max_codewords });
        }
        Ok(())
    }
}

/// Calls `visit` on every F_q-combination of `rows` (including zero), each exactly once.
fn for_each_combination(f: &GaloisField, rows: &[Vec<Gf>], len: usize, mut visit: impl FnMut(&[Gf])) {
    let q = f.q();
    let mut digits = vec![0u32; rows.len()];
    let mut word = vec![Gf::ZERO; len];
    visit(&word);
    loop {
        let mut i = 0;
        while i < digits.len() && digits[i] == q - 1 {
            let delta = f.neg(Gf(q - 1));
            add_scaled(f, &mut word, &rows[i], delta);
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            return;
        }
        let delta = f.sub(Gf(digits[i] + 1), Gf(digits[i]));
        add_scaled(f, &mut word, &rows[i], delta);
        digits[i] += 1;
        visit(&word);
    }
}

fn add_scaled(f: &GaloisField, word: &mut [Gf], row: &[Gf], c: Gf) {
    for (w, &r) in word.iter_mut().zip(row) {
        if !r.is_zero() {
            *w = f.add(*w, f.mul(c, r));
        }
    }
}

fn weight(w: &[Gf]) -> usize {
    w.iter().filter(|x| !x.is_zero()).count()
}

/// Minimum Hamming weight over nonzero codewords; INFINITE for the zero code.
pub fn min_distance_bruteforce(code: &QtCode, budget: &OracleBudget) -> Result<Distance> {
    let f = code.base_field();
    budget.admit(f.q(), code.dimension(), code.len())?;
    let rows = code.generator_rows();
    let mut best: Option<usize> = None;
    for_each_combination(f, &rows, code.len(), |w| {
        let wt = weight(w);
        if wt > 0 && best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    });
    Ok(best.map_or(Distance::Infinite, Distance::Finite))
}

/// Closest codeword; ties go to the lexicographically smallest codeword.
pub fn nearest_codeword(code: &QtCode, word: &[Gf], budget: &OracleBudget) -> Result<(Vec<Gf>, usize)> {
    if word.len() != code.len() {
        return Err(Error::Shape(format!("word length {} != {}", word.len(), code.len())));
    }
    let f = code.base_field();
    budget.admit(f.q(), code.dimension(), code.len())?;
    let rows = code.generator_rows();
    let mut best: Option<(usize, Vec<Gf>)> = None;
    for_each_combination(f, &rows, code.len(), |c| {
        let d = c.iter().zip(word).filter(|(a, b)| a != b).count();
        let better = match &best {
            None => true,
            Some((bd, bc)) => d < *bd || (d == *bd && c < bc.as_slice()),
        };
        if better {
            best = Some((d, c.to_vec()));
        }
    });
    let (d, c) = best.expect("the zero codeword is always visited");
    Ok((c, d))
}

/// Distance of {c in F_q^ell : sum_j c_j v_j = 0 for every v in `basis`}.
pub fn eigencode_distance_bruteforce(
    split_field: &GaloisField,
    basis: &[Vec<Gf>],
    ell: usize,
    budget: &OracleBudget,
) -> Result<Distance> {
    let base = split_field.base_field()?;
    budget.admit(base.q(), ell, ell)?;
    let unit_rows: Vec<Vec<Gf>> = (0..ell)
        .map(|i| (0..ell).map(|j| if i == j { Gf::ONE } else { Gf::ZERO }).collect())
        .collect();
    let mut best: Option<usize> = None;
    for_each_combination(&base, &unit_rows, ell, |c| {
        let wt = weight(c);
        if wt == 0 || best.is_some_and(|b| wt >= b) {
            return;
        }
        let orthogonal = basis.iter().all(|v| {
            v.iter().zip(c).fold(Gf::ZERO, |acc, (&x, &y)| split_field.add(acc, split_field.mul(x, y)))
                == Gf::ZERO
        });
        if orthogonal {
            best = Some(wt);
        }
    });
    Ok(best.map_or(Distance::Infinite, Distance::Finite))
}
