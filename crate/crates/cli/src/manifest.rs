//! Run manifests: enough to re-execute a command and check the bytes it produced.

use std::path::{Path, PathBuf};

use qtcodes::galois::{constructed_fields, FieldSpec};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::{read_file, CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Arguments after the program name, without `--manifest`.
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub version: String,
    pub fields: Vec<FieldSpec>,
    pub stdout_sha256: String,
    pub exit_code: u8,
    /// SHA-256 of every file the command wrote.
    pub files: Vec<(PathBuf, String)>,
}

fn sha256(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn strip_manifest_flag(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--manifest" {
            skip = true;
            continue;
        }
        if a.starts_with("--manifest=") {
            continue;
        }
        out.push(a.clone());
    }
    out
}

pub fn write_files(files: &[(PathBuf, String)]) -> CliResult<()> {
    for (path, text) in files {
        std::fs::write(path, text)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    }
    Ok(())
}

fn file_hashes(paths: impl Iterator<Item = PathBuf>) -> CliResult<Vec<(PathBuf, String)>> {
    paths
        .map(|p| {
            let bytes = std::fs::read(&p)
                .map_err(|e| CliError::Io { path: p.display().to_string(), message: e.to_string() })?;
            Ok((p, sha256(&bytes)))
        })
        .collect()
}

fn written_files(argv: &[String]) -> Vec<PathBuf> {
    argv.windows(2)
        .filter(|w| matches!(w[0].as_str(), "--out-pub" | "--out-priv" | "--out-code" | "--out-config"))
        .map(|w| PathBuf::from(&w[1]))
        .collect()
}

pub fn record(path: &Path, argv: &[String], seed: Option<u64>, stdout: &str, exit_code: u8) -> CliResult<()> {
    let args = strip_manifest_flag(argv);
    let files = if exit_code == 0 { file_hashes(written_files(&args).into_iter())? } else { Vec::new() };
    let manifest = RunManifest {
        command: args.iter().find(|a| !a.starts_with('-')).cloned().unwrap_or_default(),
        argv: args,
        seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        fields: constructed_fields(),
        stdout_sha256: sha256(stdout.as_bytes()),
        exit_code,
        files,
    };
    let text = serde_json::to_string_pretty(&manifest).expect("plain data") + "\n";
    std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Re-runs the recorded arguments; exit 1 with a report on stderr when anything differs.
pub fn replay(path: &Path, _json: bool) -> (String, String, u8) {
    let manifest: RunManifest = match read_file(path).and_then(|t| {
        serde_json::from_str(&t).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }) {
        Ok(m) => m,
        Err(e) => return (String::new(), format!("error: {e}\n"), 1),
    };
    let mut argv = vec!["qtc".to_string()];
    argv.extend(manifest.argv.iter().cloned());
    let (stdout, stderr, code) = crate::run(&argv);
    let mut problems = Vec::new();
    if manifest.version != env!("CARGO_PKG_VERSION") {
        problems.push(format!("recorded with version {}", manifest.version));
    }
    if sha256(stdout.as_bytes()) != manifest.stdout_sha256 {
        problems.push("output differs".to_string());
    }
    if code != manifest.exit_code {
        problems.push(format!("exit code {code} != recorded {}", manifest.exit_code));
    }
    match file_hashes(manifest.files.iter().map(|(p, _)| p.clone())) {
        Ok(now) if now == manifest.files => {}
        _ => problems.push("written files differ".to_string()),
    }
    if constructed_fields().iter().any(|f| !manifest.fields.contains(f)) {
        problems.push("field moduli differ".to_string());
    }
    if problems.is_empty() {
        (stdout, stderr, code)
    } else {
        (stdout, format!("{stderr}replay mismatch: {}\n", problems.join("; ")), 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_flag_is_dropped() {
        let argv: Vec<String> =
            ["qtc", "--manifest", "m.json", "--json", "bound", "--manifest=x", "--code", "c"].map(String::from).into();
        assert_eq!(strip_manifest_flag(&argv), ["--json", "bound", "--code", "c"]);
        assert_eq!(written_files(&["--out-pub".into(), "p".into()]), [PathBuf::from("p")]);
    }
}
