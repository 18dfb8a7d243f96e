mod commands;
mod manifest;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qtcodes::cryptosystem::KeyParams;
use qtcodes::{BoundParams, OracleBudget};

use commands::{parse_grid, parse_key_params, BoundRequest, WorkfactorRequest};
use report::{CliError, CliResult, Report};

/// A single value, a comma list or an inclusive range `lo..hi`; clap must see it as one value.
type Grid = Vec<u64>;

#[derive(Parser, Debug)]
#[command(name = "qtc", version, about = "Quasi-twisted codes: bounds, decoding and a toy cryptosystem")]
struct Cli {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write a run manifest that `qtc replay` can re-execute.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect, encode with, or emit code description files.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Spectral lower bound on the minimum distance.
    Bound(BoundArgs),
    /// Decode a received word.
    Decode {
        #[arg(long)]
        code: PathBuf,
        /// Decoder configuration; the best one found by search when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Hex string (one fixed-width group per symbol) or comma-separated integers.
        #[arg(long)]
        word: String,
    },
    /// Generate a key pair.
    Keygen {
        /// Q,M,ELL,LAMBDA
        #[arg(long, value_parser = parse_key_params)]
        params: KeyParams,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out_pub: PathBuf,
        #[arg(long)]
        out_priv: PathBuf,
    },
    /// Encrypt a low-weight message with a public key.
    Encrypt {
        #[arg(long = "pub", value_name = "PATH")]
        public: PathBuf,
        #[arg(long)]
        msg: String,
    },
    /// Decrypt a ciphertext with a private key.
    Decrypt {
        #[arg(long = "priv", value_name = "PATH")]
        private: PathBuf,
        #[arg(long)]
        ct: String,
    },
    /// Information-set-decoding work factors; grids give CSV.
    Workfactor {
        #[arg(long, value_parser = parse_grid)]
        m: Grid,
        #[arg(long, value_parser = parse_grid)]
        ell: Grid,
        #[arg(long, value_parser = parse_grid)]
        eps: Grid,
        #[arg(long, default_value = "1")]
        alpha: String,
        /// Use C(m ell - eps, m - i) in Q_i instead of the reference C(m ell - 2, m - i).
        #[arg(long)]
        classical: bool,
    },
    /// Check q^(4m) < (m ell)^ell; grids give CSV.
    QfsCheck {
        #[arg(long, value_parser = parse_grid)]
        q: Grid,
        #[arg(long, value_parser = parse_grid)]
        m: Grid,
        #[arg(long, value_parser = parse_grid)]
        ell: Grid,
    },
    /// Exhaustive reference computations for small codes.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Decode the reference [20, 10, 4] ternary example and check every step.
    PaperExample,
    /// Re-run a manifest and check that the output is byte-identical.
    Replay { manifest: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    Info {
        #[arg(long)]
        code: PathBuf,
    },
    Encode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        msg: String,
    },
    /// Print (or write) the reference ternary code and its decoder configuration.
    Example {
        #[arg(long)]
        out_code: Option<PathBuf>,
        #[arg(long)]
        out_config: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    code: PathBuf,
    /// Evaluate one parameter choice instead of searching (needs all of a, n1, delta).
    #[arg(long, requires_all = ["n1", "delta"])]
    a: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long, default_value_t = 1)]
    n2: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 2)]
    max_s: usize,
    #[arg(long)]
    max_delta: Option<usize>,
    /// List every applicable choice, not just the best.
    #[arg(long)]
    all: bool,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest number of codewords the oracle may enumerate.
    #[arg(long, default_value_t = 1 << 22)]
    max_codewords: u128,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    Distance {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    Nearest {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    Eigencode {
        #[arg(long)]
        code: PathBuf,
        /// Comma-separated eigenvalue indices.
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn budget(b: &BudgetArgs) -> OracleBudget {
    OracleBudget { max_codewords: b.max_codewords, ..OracleBudget::default() }
}

fn execute(command: Command) -> CliResult<Report> {
    match command {
        Command::Code(CodeCommand::Info { code }) => commands::code_info(&code),
        Command::Code(CodeCommand::Encode { code, msg }) => commands::code_encode(&code, &msg),
        Command::Code(CodeCommand::Example { out_code, out_config }) => commands::code_example(out_code, out_config),
        Command::Bound(b) => {
            let params = b.a.map(|a| BoundParams {
                a,
                n1: b.n1.unwrap_or(1),
                n2: b.n2,
                s: b.s,
                delta: b.delta.unwrap_or(2),
            });
            commands::bound(&b.code, BoundRequest { params, max_s: b.max_s, max_delta: b.max_delta, all: b.all })
        }
        Command::Decode { code, config, word } => commands::decode(&code, config.as_deref(), &word),
        Command::Keygen { params, seed, out_pub, out_priv } => commands::keygen_cmd(params, seed, out_pub, out_priv),
        Command::Encrypt { public, msg } => commands::encrypt_cmd(&public, &msg),
        Command::Decrypt { private, ct } => commands::decrypt_cmd(&private, &ct),
        Command::Workfactor { m, ell, eps, alpha, classical } => {
            commands::workfactor(WorkfactorRequest { m, ell, eps, alpha, classical })
        }
        Command::QfsCheck { q, m, ell } => commands::qfs(q, m, ell),
        Command::Oracle(OracleCommand::Distance { code, budget: b }) => commands::oracle_distance(&code, budget(&b)),
        Command::Oracle(OracleCommand::Nearest { code, word, budget: b }) => {
            commands::oracle_nearest(&code, &word, budget(&b))
        }
        Command::Oracle(OracleCommand::Eigencode { code, indices, budget: b }) => {
            commands::oracle_eigencode(&code, &indices, budget(&b))
        }
        Command::PaperExample => commands::paper_example(),
        Command::Replay { .. } => unreachable!("handled before dispatch"),
    }
}

/// Parses and runs one invocation; returns (stdout, stderr, exit code) without printing.
pub fn run(argv: &[String]) -> (String, String, u8) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if e.use_stderr() { (String::new(), rendered, code) } else { (rendered, String::new(), code) };
        }
    };
    if let Command::Replay { manifest } = &cli.command {
        return manifest::replay(manifest, cli.json);
    }
    let json = cli.json;
    let manifest_path = cli.manifest.clone();
    let seed = match &cli.command {
        Command::Keygen { seed, .. } => Some(*seed),
        _ => None,
    };
    let (stdout, stderr, code) = match execute(cli.command) {
        Ok(report) => match manifest::write_files(&report.files) {
            Ok(()) => (report.render(json), String::new(), report.status as u8),
            Err(e) => error_output(&e, json),
        },
        Err(e) => error_output(&e, json),
    };
    if let Some(path) = manifest_path {
        if let Err(e) = manifest::record(&path, argv, seed, &stdout, code) {
            let (_, err, c) = error_output(&e, json);
            return (stdout, stderr + &err, c);
        }
    }
    (stdout, stderr, code)
}

fn error_output(e: &CliError, json: bool) -> (String, String, u8) {
    let err = if json {
        format!("{}\n", serde_json::json!({"error": {"kind": e.kind(), "message": e.to_string()}}))
    } else {
        format!("error: {e}\n")
    };
    (String::new(), err, 1)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (stdout, stderr, code) = run(&argv);
    print!("{stdout}");
    eprint!("{stderr}");
    ExitCode::from(code)
}
