use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use qtcodes::analysis::{min_work_factor, qfs_check, QiVariant};
use qtcodes::catalog::ternary_20_10_4;
use qtcodes::cryptosystem::{decrypt, encrypt, keygen, KeyParams, PrivateKey, PublicKey};
use qtcodes::decoder::{decode_traced, DecodeOutcome};
use qtcodes::io::{format_word_hex, parse_word, CodeFile, ConfigFile};
use qtcodes::oracle::{eigencode_distance_bruteforce, min_distance_bruteforce, nearest_codeword};
use qtcodes::{constashift, BoundParams, BoundSearch, DecoderConfig, Gf, OracleBudget, QtCode};
use serde_json::{json, Value};

use crate::report::{read_file, CliError, CliResult, Report};

fn ints(w: &[Gf]) -> Value {
    json!(w.iter().map(|x| x.0).collect::<Vec<_>>())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn params_json(p: &BoundParams) -> Value {
    json!({"a": p.a, "n1": p.n1, "n2": p.n2, "s": p.s, "delta": p.delta})
}

fn params_text(p: &BoundParams) -> String {
    format!("a={} n1={} n2={} s={} delta={}", p.a, p.n1, p.n2, p.s, p.delta)
}

pub fn load_code(path: &Path) -> CliResult<QtCode> {
    let file: CodeFile = serde_json::from_str(&read_file(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(file.build()?)
}

fn load_config(code: &QtCode, path: Option<&Path>) -> CliResult<DecoderConfig> {
    match path {
        Some(path) => {
            let file: ConfigFile = serde_json::from_str(&read_file(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok(file.build(code)?)
        }
        None => DecoderConfig::search(code, &BoundSearch::default()).ok_or_else(|| {
            CliError::Lib(qtcodes::Error::BoundNotApplicable("no decoder configuration for this code".into()))
        }),
    }
}

fn field_json(code: &QtCode) -> Value {
    let spec = code.field().spec();
    json!({"p": spec.p, "s": spec.s, "modulus": spec.modulus, "r": spec.r, "ext_modulus": spec.ext_modulus})
}

pub fn code_info(path: &Path) -> CliResult<Report> {
    let code = load_code(path)?;
    code.basis().validate()?;
    let q = code.base_field().q();
    let closed = code
        .generator_rows()
        .iter()
        .map(|row| constashift(code.base_field(), row, code.lambda(), code.ell()).and_then(|s| code.contains(&s)))
        .collect::<qtcodes::Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let eigen = code.eigen_indices();
    let best = code.best_bound(&BoundSearch::default());
    let mut text = String::new();
    writeln!(text, "q = {q}, m = {}, ell = {}, lambda = {}", code.m(), code.ell(), code.lambda().0).unwrap();
    writeln!(text, "length n = {}, dimension k = {}", code.len(), code.dimension()).unwrap();
    writeln!(text, "splitting field: F_{}^{}", q, code.field().r()).unwrap();
    writeln!(text, "eigenvalue indices: {}", join(&eigen)).unwrap();
    writeln!(text, "reduced basis: valid").unwrap();
    writeln!(text, "closed under the constashift: {}", if closed { "yes" } else { "NO" }).unwrap();
    match &best {
        Some(b) => writeln!(text, "best bound: d* = {} ({})", b.d_star, params_text(&b.params)).unwrap(),
        None => writeln!(text, "best bound: not applicable").unwrap(),
    }
    let json = json!({
        "q": q, "m": code.m(), "ell": code.ell(), "lambda": code.lambda().0,
        "n": code.len(), "k": code.dimension(),
        "field": field_json(&code),
        "eigen_indices": eigen,
        "basis_valid": true,
        "constashift_closed": closed,
        "best_bound": best.as_ref().map(|b| json!({"d_star": b.d_star, "params": params_json(&b.params)})),
    });
    Ok(Report::ok(text, json))
}

pub fn code_example(out_code: Option<PathBuf>, out_config: Option<PathBuf>) -> CliResult<Report> {
    let (code, cfg) = ternary_20_10_4();
    let code_text = serde_json::to_string_pretty(&CodeFile::from_code(&code)).expect("plain data") + "\n";
    let cfg_text =
        serde_json::to_string_pretty(&ConfigFile::from_config(&code, &cfg)).expect("plain data") + "\n";
    let mut files = Vec::new();
    let mut text = String::new();
    match out_code {
        Some(p) => {
            writeln!(text, "code written to {}", p.display()).unwrap();
            files.push((p, code_text.clone()));
        }
        None => text.push_str(&code_text),
    }
    if let Some(p) = out_config {
        writeln!(text, "decoder configuration written to {}", p.display()).unwrap();
        files.push((p, cfg_text.clone()));
    }
    let json = json!({
        "code": serde_json::from_str::<Value>(&code_text).expect("valid"),
        "config": serde_json::from_str::<Value>(&cfg_text).expect("valid"),
    });
    Ok(Report { text, json, status: 0, files })
}

pub fn code_encode(path: &Path, msg: &str) -> CliResult<Report> {
    let code = load_code(path)?;
    let q = code.base_field().q();
    let m = parse_word(msg, q)?;
    let c = code.encode(&m)?;
    let text = format!("codeword: {}\n", format_word_hex(&c, q));
    Ok(Report::ok(text, json!({"codeword": ints(&c)})))
}

pub struct BoundRequest {
    pub params: Option<BoundParams>,
    pub max_s: usize,
    pub max_delta: Option<usize>,
    pub all: bool,
}

pub fn bound(path: &Path, req: BoundRequest) -> CliResult<Report> {
    let code = load_code(path)?;
    let describe = |b: &qtcodes::HtBound| {
        json!({
            "d_star": b.d_star,
            "params": params_json(&b.params),
            "index_set": b.index_set,
            "eigencode_distance": b.eigencode.distance,
            "eigencode_exact": b.eigencode.exact,
        })
    };
    let line = |b: &qtcodes::HtBound| {
        format!(
            "d* = {} ({}; index set {}; eigencode distance {}{})\n",
            b.d_star,
            params_text(&b.params),
            join(&b.index_set),
            b.eigencode.distance,
            if b.eigencode.exact { "" } else { ", lower bound" }
        )
    };
    if let Some(p) = req.params {
        let b = code.ht_bound(p)?;
        return Ok(Report::ok(line(&b), describe(&b)));
    }
    let limits = BoundSearch { max_s: req.max_s, max_delta: req.max_delta.unwrap_or(usize::MAX) };
    if req.all {
        let all = code.search_bounds(&limits);
        let text: String = all.iter().map(line).collect();
        let text = if text.is_empty() { "no applicable parameters\n".to_string() } else { text };
        return Ok(Report::ok(text, json!(all.iter().map(describe).collect::<Vec<_>>())));
    }
    match code.best_bound(&limits) {
        Some(b) => Ok(Report::ok(line(&b), describe(&b))),
        None => Err(qtcodes::Error::BoundNotApplicable("no parameters within the search limits".into()).into()),
    }
}

pub fn decode(code_path: &Path, config: Option<&Path>, word: &str) -> CliResult<Report> {
    let code = load_code(code_path)?;
    let cfg = load_config(&code, config)?;
    let q = code.base_field().q();
    let r = parse_word(word, q)?;
    let (outcome, _) = decode_traced(&r, &code, &cfg)?;
    let config_json = json!({"params": params_json(&cfg.params), "d_star": cfg.d_star, "capacity": cfg.capacity});
    Ok(match outcome {
        DecodeOutcome::Decoded(d) => {
            let text = format!(
                "codeword: {}\nerror: {}\nlocations: {}\n",
                format_word_hex(&d.codeword, q),
                format_word_hex(&d.error, q),
                if d.locations.is_empty() { "none".to_string() } else { join(&d.locations) }
            );
            let json = json!({
                "status": "decoded",
                "codeword": ints(&d.codeword),
                "error": ints(&d.error),
                "locations": d.locations,
                "config": config_json,
            });
            Report::ok(text, json)
        }
        DecodeOutcome::Failure(reason) => Report {
            text: format!("DECODING FAILURE: {reason}\n"),
            json: json!({"status": "failure", "reason": reason.to_string(), "config": config_json}),
            status: 1,
            files: Vec::new(),
        },
    })
}

pub fn parse_key_params(s: &str) -> Result<KeyParams, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [q, m, ell, lambda] = parts.as_slice() else {
        return Err("expected Q,M,ELL,LAMBDA".into());
    };
    let num = |x: &str| x.parse::<u64>().map_err(|_| format!("'{x}' is not a number"));
    Ok(KeyParams { q: num(q)? as u32, m: num(m)? as usize, ell: num(ell)? as usize, lambda: num(lambda)? as u32 })
}

pub fn keygen_cmd(params: KeyParams, seed: u64, out_pub: PathBuf, out_priv: PathBuf) -> CliResult<Report> {
    let pair = keygen(&params, seed)?;
    let cfg = pair.private.config();
    let text = format!(
        "parameters: q={} m={} ell={} lambda={}\nn = {}, t = {}, d* = {} ({})\npublic key: {}\nprivate key: {}\n",
        params.q,
        params.m,
        params.ell,
        params.lambda,
        params.len(),
        pair.public.t,
        cfg.d_star,
        params_text(&cfg.params),
        out_pub.display(),
        out_priv.display()
    );
    let json = json!({
        "params": params, "seed": seed, "n": params.len(), "t": pair.public.t,
        "d_star": cfg.d_star, "bound": params_json(&cfg.params),
        "public_key": out_pub.display().to_string(), "private_key": out_priv.display().to_string(),
    });
    Ok(Report { text, json, status: 0, files: vec![(out_pub, pair.public.to_text()), (out_priv, pair.private.to_text())] })
}

pub fn encrypt_cmd(public: &Path, msg: &str) -> CliResult<Report> {
    let pk = PublicKey::from_text(&read_file(public)?)?;
    let m = parse_word(msg, pk.params.q)?;
    let c = encrypt(&pk, &m)?;
    let text = format!("ciphertext: {}\n", format_word_hex(&c, pk.params.q));
    Ok(Report::ok(text, json!({"ciphertext": ints(&c)})))
}

pub fn decrypt_cmd(private: &Path, ct: &str) -> CliResult<Report> {
    let sk = PrivateKey::from_text(&read_file(private)?)?;
    let q = sk.params().q;
    let c = parse_word(ct, q)?;
    let m = decrypt(&sk, &c)?;
    let text = format!("message: {}\n", format_word_hex(&m, q));
    Ok(Report::ok(text, json!({"message": ints(&m)})))
}

/// "5", "2,3,7" or the inclusive range "2..6".
pub fn parse_grid(s: &str) -> Result<Vec<u64>, String> {
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| format!("'{x}' is not a number"));
    let out: Vec<u64> = if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if out.is_empty() {
        return Err("no values".into());
    }
    Ok(out)
}

fn parse_alpha(s: &str) -> CliResult<BigRational> {
    let alpha = parse_rational(s)?;
    if alpha <= BigRational::from_integer(BigInt::from(0)) {
        return Err(CliError::Input(format!("alpha must be positive, got {s}")));
    }
    Ok(alpha)
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    let bad = || CliError::Input(format!("alpha '{s}' is not a positive rational such as 1, 3/2 or 0.5"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((i, frac)) = s.split_once('.') {
        let digits = format!("{i}{frac}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        return Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)));
    }
    Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?))
}

pub struct WorkfactorRequest {
    pub m: Vec<u64>,
    pub ell: Vec<u64>,
    pub eps: Vec<u64>,
    pub alpha: String,
    pub classical: bool,
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII")
}

pub fn workfactor(req: WorkfactorRequest) -> CliResult<Report> {
    let alpha = parse_alpha(&req.alpha)?;
    let variant = if req.classical { QiVariant::Classical } else { QiVariant::Verbatim };
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for &m in &req.m {
        for &ell in &req.ell {
            for &eps in &req.eps {
                let mut r = min_work_factor(m, ell, eps, variant)?;
                r.w = qtcodes::analysis::work_factor(m, ell, eps, &alpha)?;
                rows.push(vec![
                    m.to_string(),
                    ell.to_string(),
                    eps.to_string(),
                    r.w.value.to_string(),
                    format!("{:.4}", r.w.log2),
                    r.w_min.value.to_string(),
                    format!("{:.4}", r.w_min.log2),
                ]);
                reports.push(r);
            }
        }
    }
    let json = serde_json::to_value(&reports).expect("plain data");
    if reports.len() == 1 {
        let r = &reports[0];
        let label = if req.classical { " (classical Q_i, not the reference formula)" } else { "" };
        let text = format!(
            "W={} (log2 {:.4})\nW_min={} (log2 {:.4}){label}\nT_2={}\n",
            r.w.value, r.w.log2, r.w_min.value, r.w_min.log2, r.t2
        );
        return Ok(Report::ok(text, json));
    }
    let text = csv_text(&["m", "ell", "eps", "W", "log2_W", "W_min", "log2_W_min"], rows);
    Ok(Report::ok(text, json))
}

pub fn qfs(q: Vec<u64>, m: Vec<u64>, ell: Vec<u64>) -> CliResult<Report> {
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for &q in &q {
        for &m in &m {
            for &ell in &ell {
                let c = qfs_check(q, m, ell)?;
                rows.push(vec![q.to_string(), m.to_string(), ell.to_string(), c.satisfied.to_string()]);
                out.push(json!({"q": q, "m": m, "ell": ell, "satisfied": c.satisfied,
                    "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string()}));
            }
        }
    }
    if out.len() == 1 {
        let sat = out[0]["satisfied"].as_bool().unwrap_or(false);
        let text = format!(
            "q^(4m) = {} {} (m ell)^ell = {}: {}\n",
            out[0]["lhs"].as_str().unwrap_or_default(),
            if sat { "<" } else { ">=" },
            out[0]["rhs"].as_str().unwrap_or_default(),
            if sat { "satisfied" } else { "not satisfied" }
        );
        return Ok(Report::ok(text, out.remove(0)));
    }
    Ok(Report::ok(csv_text(&["q", "m", "ell", "satisfied"], rows), json!(out)))
}

pub fn oracle_distance(path: &Path, budget: OracleBudget) -> CliResult<Report> {
    let code = load_code(path)?;
    let d = min_distance_bruteforce(&code, &budget)?;
    Ok(Report::ok(format!("minimum distance: {d}\n"), json!({"distance": d})))
}

pub fn oracle_nearest(path: &Path, word: &str, budget: OracleBudget) -> CliResult<Report> {
    let code = load_code(path)?;
    let q = code.base_field().q();
    let r = parse_word(word, q)?;
    let (c, d) = nearest_codeword(&code, &r, &budget)?;
    let text = format!("nearest codeword: {}\ndistance: {d}\n", format_word_hex(&c, q));
    Ok(Report::ok(text, json!({"codeword": ints(&c), "distance": d})))
}

pub fn oracle_eigencode(path: &Path, indices: &[usize], budget: OracleBudget) -> CliResult<Report> {
    let code = load_code(path)?;
    let space = code.intersection_eigenspace(indices)?;
    let d = eigencode_distance_bruteforce(code.field(), &space, code.ell(), &budget)?;
    let text = format!("eigenspace dimension: {}\neigencode distance: {d}\n", space.len());
    Ok(Report::ok(text, json!({"indices": indices, "eigenspace_dimension": space.len(), "distance": d})))
}

pub fn paper_example() -> CliResult<Report> {
    let (code, cfg) = ternary_20_10_4();
    let f = code.field();
    let mut word = vec![Gf::ZERO; 20];
    word[17] = Gf::ONE;
    let (outcome, trace) = decode_traced(&word, &code, &cfg)?;
    let syndromes: Vec<String> = trace.syndromes.seqs[0].iter().map(|&x| f.power_form(x)).collect();
    let lambda1 = f.power_form(f.neg(trace.locator.poly.coeff(1)));
    let eval = trace.evaluation.as_ref();
    let values: Vec<String> = eval.map(|e| e.values.iter().map(|&x| f.power_form(x)).collect()).unwrap_or_default();
    let decoded = outcome.decoded();
    let checks = [
        ("syndromes", syndromes == ["a^66", "a^50", "a^34"]),
        ("locator", trace.locator.length == 1 && lambda1 == "a^64"),
        ("locations", trace.roots == [8]),
        ("codeword", decoded.is_some_and(|d| d.codeword.iter().all(|x| x.is_zero()))),
        ("error", decoded.is_some_and(|d| d.error == word)),
    ];
    let ok = checks.iter().all(|(_, c)| *c);
    let mut text = String::new();
    writeln!(text, "code: [20, {}] over F_3, m = 10, ell = 2, lambda = 2", code.dimension()).unwrap();
    writeln!(text, "received: (0, X^8)").unwrap();
    writeln!(text, "syndromes: {}", syndromes.join(", ")).unwrap();
    writeln!(text, "Lambda_1 = {lambda1}").unwrap();
    writeln!(text, "error locations: {{{}}}", join(&trace.roots)).unwrap();
    writeln!(text, "error values: {}", values.join(", ")).unwrap();
    if ok {
        writeln!(text, "decoded: zero codeword; e_{{8,1}}=1").unwrap();
    } else {
        let failed: Vec<&str> = checks.iter().filter(|(_, c)| !c).map(|(n, _)| *n).collect();
        writeln!(text, "MISMATCH in {}", failed.join(", ")).unwrap();
    }
    let json = json!({
        "syndromes": syndromes,
        "lambda_1": lambda1,
        "locations": trace.roots,
        "error_values": values,
        "codeword": decoded.map(|d| ints(&d.codeword)),
        "error": decoded.map(|d| ints(&d.error)),
        "checks": checks.iter().map(|(n, c)| json!({"name": n, "ok": c})).collect::<Vec<_>>(),
        "ok": ok,
    });
    Ok(Report { text, json, status: if ok { 0 } else { 1 }, files: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("5").unwrap(), vec![5]);
        assert_eq!(parse_grid("2,3").unwrap(), vec![2, 3]);
        assert_eq!(parse_grid("2..4").unwrap(), vec![2, 3, 4]);
        assert!(parse_grid("4..2").is_err());
        assert!(parse_grid("x").is_err());
    }

    #[test]
    fn alphas() {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(parse_alpha("1").unwrap(), r(1, 1));
        assert_eq!(parse_alpha("3/2").unwrap(), r(3, 2));
        assert_eq!(parse_alpha("0.25").unwrap(), r(1, 4));
        assert!(parse_alpha("0").is_err());
        assert!(parse_alpha("-1/2").is_err());
        assert!(parse_alpha("1/0").is_err());
    }

    #[test]
    fn key_params() {
        let p = parse_key_params("3, 5, 4, 2").unwrap();
        assert_eq!((p.q, p.m, p.ell, p.lambda), (3, 5, 4, 2));
        assert!(parse_key_params("3,5,4").is_err());
    }
}
