//! Text formats for codes, decoder configurations and words.
//!
//! A code file lists generator rows as coefficient arrays (constant term first);
//! rows are Hermite-reduced on load, so any generating set works. Field elements
//! of the splitting field are written as "0", "1" or "a^k".

use serde::{Deserialize, Serialize};

use crate::decoder::DecoderConfig;
use crate::error::{Error, Result};
use crate::galois::{GaloisField, Gf};
use crate::polyring::Poly;
use crate::qtcode::{BoundParams, QtCode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    /// Modulus of F_q over F_p, constant term first; default when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub m: usize,
    pub ell: usize,
    pub lambda: u32,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl CodeFile {
    pub fn from_code(code: &QtCode) -> Self {
        let f = code.base_field();
        CodeFile {
            q: f.q(),
            modulus: (f.s() > 1).then(|| f.spec().modulus.clone()),
            m: code.m(),
            ell: code.ell(),
            lambda: code.lambda().0,
            generators: code
                .basis()
                .entries()
                .iter()
                .map(|row| row.iter().map(Poly::to_u32s).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> Result<GaloisField> {
        match &self.modulus {
            None => GaloisField::prime_power(self.q),
            Some(modulus) => {
                let (p, _) = crate::galois::prime_power_parts(self.q)
                    .ok_or_else(|| Error::Domain(format!("q = {} is not a prime power", self.q)))?;
                let f = GaloisField::with_modulus(p, modulus.clone())?;
                if f.q() != self.q {
                    return Err(Error::Format("modulus degree does not match q".into()));
                }
                Ok(f)
            }
        }
    }

    pub fn build(&self) -> Result<QtCode> {
        let f = self.field()?;
        let rows = self
            .generators
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        if let Some(bad) = c.iter().find(|&&x| x >= self.q) {
                            return Err(Error::Format(format!("coefficient {bad} is outside F_{}", self.q)));
                        }
                        Ok(Poly::from_u32s(c))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QtCode::from_generators(&f, self.m, Gf(self.lambda), &rows, self.ell)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    #[serde(flatten)]
    pub params: BoundParams,
    /// Eigenvector in power form; chosen automatically when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<String>>,
}

impl ConfigFile {
    pub fn from_config(code: &QtCode, cfg: &DecoderConfig) -> Self {
        let f = code.field();
        ConfigFile { params: cfg.params, v: Some(cfg.v.iter().map(|&x| f.power_form(x)).collect()) }
    }

    pub fn build(&self, code: &QtCode) -> Result<DecoderConfig> {
        match &self.v {
            None => DecoderConfig::with_auto_vector(code, self.params),
            Some(v) => {
                let f = code.field();
                let v = v.iter().map(|s| parse_power_form(f, s)).collect::<Result<Vec<_>>>()?;
                DecoderConfig::new(code, self.params, v)
            }
        }
    }
}

/// Parses "0", "1", "a^k" or "a" relative to the field's generator.
pub fn parse_power_form(f: &GaloisField, s: &str) -> Result<Gf> {
    let t = s.trim();
    match t {
        "0" => Ok(Gf::ZERO),
        "1" => Ok(Gf::ONE),
        "a" => Ok(f.generator()),
        _ => {
            let k = t
                .strip_prefix("a^")
                .and_then(|k| k.trim().parse::<i64>().ok())
                .ok_or_else(|| Error::Format(format!("'{s}' is not 0, 1 or a^k")))?;
            Ok(f.exp(k))
        }
    }
}

/// Hex digits per symbol for alphabet size q.
pub fn hex_width(q: u32) -> usize {
    let mut w = 1;
    while 16u64.pow(w as u32) < q as u64 {
        w += 1;
    }
    w
}

/// Integer list ("1,0,2", "[1, 0, 2]") or fixed-width hex ("0x102", "102").
///
/// Anything containing a comma, a bracket or whitespace between digits is read
/// as integers; otherwise the text is hex with `hex_width(q)` digits per symbol.
pub fn parse_word(text: &str, q: u32) -> Result<Vec<Gf>> {
    let t = text.trim();
    let is_list = t.contains(',') || t.starts_with('[') || t.split_whitespace().count() > 1;
    let word: Vec<u32> = if is_list {
        t.trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u32>().map_err(|_| Error::Format(format!("'{s}' is not an integer"))))
            .collect::<Result<_>>()?
    } else {
        let hex = t.strip_prefix("0x").unwrap_or(t);
        let w = hex_width(q);
        if !hex.len().is_multiple_of(w) {
            return Err(Error::Format(format!("hex length {} is not a multiple of {w}", hex.len())));
        }
        (0..hex.len() / w)
            .map(|i| {
                let s = &hex[i * w..(i + 1) * w];
                u32::from_str_radix(s, 16).map_err(|_| Error::Format(format!("'{s}' is not hex")))
            })
            .collect::<Result<_>>()?
    };
    if let Some(bad) = word.iter().find(|&&x| x >= q) {
        return Err(Error::Format(format!("symbol {bad} is outside F_{q}")));
    }
    Ok(word.into_iter().map(Gf).collect())
}

pub fn format_word_hex(word: &[Gf], q: u32) -> String {
    let w = hex_width(q);
    word.iter().map(|x| format!("{:0w$x}", x.0)).collect()
}

pub fn format_word_ints(word: &[Gf]) -> String {
    word.iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(",")
}
