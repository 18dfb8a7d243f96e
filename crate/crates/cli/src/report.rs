use std::path::PathBuf;

use serde_json::Value;

/// What a command produced. Commands never touch stdout or the file system
/// themselves, so a run can be hashed and replayed.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// 0 on success, 1 when the command ran but the answer is a failure (e.g. decoding).
    pub status: i32,
    pub files: Vec<(PathBuf, String)>,
}

impl Report {
    pub fn ok(text: String, json: Value) -> Self {
        Report { text, json, status: 0, files: Vec::new() }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            format!("{}\n", serde_json::to_string_pretty(&self.json).expect("plain JSON"))
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] qtcodes::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Input(_) => "input",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}
