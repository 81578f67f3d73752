//! `hg`: batch front end for the hypertree library.
//!
//! Every command prints one JSON report on stdout:
//! `{"command": .., "inputs_digest": .., "results": .., "timing": ..}`.
//! Diagnostics go to stderr. Exit codes: 0 pass, 1 a verified property failed,
//! 2 usage, parse or precondition errors.

mod commands;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "hg",
    version,
    about = "Hypergraph trees, cross-cuts and Turán numbers"
)]
struct Cli {
    /// Node budget for searches.
    #[arg(long, global = true, env = "HG_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for randomized extraction.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Render results as a two-column table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Uniformity, tree certificate, τ, σ, reducibility and r-partition.
    Analyze {
        file: PathBuf,
        /// Also check the certificate and report the first-edge facts.
        #[arg(long)]
        certify: bool,
    },
    /// Build a named standard family.
    Construct {
        #[arg(long)]
        family: String,
        /// Integer parameters as `key=value`, comma separated or repeated.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        /// Also write the hypergraph JSON to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for a copy of H in F.
    Embed { h: PathBuf, f: PathBuf },
    /// Cross-cut number and all minimum cross-cuts.
    Sigma { file: PathBuf },
    /// Vertex-cover number with a lex-least witness.
    Tau { file: PathBuf },
    /// Exact Turán number for tiny n.
    Turan {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        forbid: PathBuf,
    },
    /// p-shadow, with the Kruskal–Katona comparison when it applies.
    Shadow {
        file: PathBuf,
        #[arg(short)]
        p: usize,
    },
    /// Largest homogeneous subfamily found by randomized extraction.
    Homogeneous {
        file: PathBuf,
        #[arg(short, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 20)]
        tries: usize,
    },
    /// Check one of the structural inequalities; exit 1 if it fails.
    Verify {
        #[arg(long, value_enum)]
        prop: Prop,
        /// Forbidden graph H (cover, crosscut), the tree H (tree-shadow) or the pattern M (missing).
        #[arg(long)]
        h: Option<PathBuf>,
        /// Host family F (tree-shadow, kk) or G (missing).
        #[arg(long)]
        f: Option<PathBuf>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        p: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Prop {
    /// Cover construction is H-free.
    #[value(name = "cover")]
    Cover,
    /// Cross-cut construction is H-free.
    #[value(name = "crosscut")]
    CrossCut,
    /// Tree-shadow bound.
    #[value(name = "tree-shadow")]
    TreeShadow,
    /// Missing edges against edges outside copies of M.
    #[value(name = "missing")]
    Missing,
    /// Kruskal–Katona.
    #[value(name = "kk")]
    Kk,
}

/// A command failure; always exit code 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<hypertree::Error> for Failure {
    fn from(e: hypertree::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Outcome of a command: its results and whether a checked property held.
pub struct Outcome {
    pub results: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(results: Value) -> Self {
        Outcome {
            results,
            passed: true,
        }
    }
}

/// Reads the given files, keeping the raw bytes for the digest.
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn new() -> Self {
        Inputs {
            hasher: Sha256::new(),
        }
    }

    pub fn load(&mut self, path: &Path) -> Result<hypertree::Hypergraph, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        let text =
            String::from_utf8(bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        hypertree::Hypergraph::from_json(&text)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))
    }

    fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Construct { .. } => "construct",
        Command::Embed { .. } => "embed",
        Command::Sigma { .. } => "sigma",
        Command::Tau { .. } => "tau",
        Command::Turan { .. } => "turan",
        Command::Shadow { .. } => "shadow",
        Command::Homogeneous { .. } => "homogeneous",
        Command::Verify { .. } => "verify",
    }
}

fn run(cli: &Cli, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    let budget = Some(cli.budget);
    match &cli.command {
        Command::Analyze { file, certify } => commands::analyze(&inputs.load(file)?, *certify),
        Command::Construct {
            family,
            params,
            output,
        } => commands::construct(family, params, output.as_deref()),
        Command::Embed { h, f } => {
            let h = inputs.load(h)?;
            commands::embed(&h, &inputs.load(f)?, budget)
        }
        Command::Sigma { file } => commands::sigma(&inputs.load(file)?),
        Command::Tau { file } => commands::tau(&inputs.load(file)?),
        Command::Turan { n, r, forbid } => commands::turan(*n, *r, &inputs.load(forbid)?, budget),
        Command::Shadow { file, p } => commands::shadow(&inputs.load(file)?, *p),
        Command::Homogeneous { file, s, tries } => {
            commands::homogeneous(&inputs.load(file)?, *s, *tries, cli.seed)
        }
        Command::Verify { prop, h, f, n, p } => {
            let need = |x: &Option<PathBuf>, flag: &str| {
                x.clone()
                    .ok_or_else(|| Failure(format!("verify {prop:?} needs --{flag}")))
            };
            match prop {
                Prop::Cover | Prop::CrossCut => {
                    let h = inputs.load(&need(h, "h")?)?;
                    let n = n.ok_or_else(|| Failure("verify needs -n".into()))?;
                    commands::verify_construction(&h, n, *prop)
                }
                Prop::TreeShadow => {
                    let f = inputs.load(&need(f, "f")?)?;
                    commands::verify_tree_shadow(&f, &inputs.load(&need(h, "h")?)?)
                }
                Prop::Missing => {
                    let g = inputs.load(&need(f, "f")?)?;
                    commands::verify_missing(&g, &inputs.load(&need(h, "h")?)?, budget)
                }
                Prop::Kk => {
                    let f = inputs.load(&need(f, "f")?)?;
                    let p = p.ok_or_else(|| Failure("verify kk needs -p".into()))?;
                    commands::verify_kk(&f, p)
                }
            }
        }
    }
}

fn render_table(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_table(x, &key, out);
            }
        }
        other => out.push_str(&format!("{prefix:<32} {other}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut inputs = Inputs::new();
    let outcome = match run(&cli, &mut inputs) {
        Ok(o) => o,
        Err(Failure(msg)) => {
            eprintln!("hg {}: {msg}", command_name(&cli.command));
            return ExitCode::from(2);
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let report = json!({
        "command": {
            "name": command_name(&cli.command),
            "argv": argv,
            "budget": cli.budget,
            "seed": cli.seed,
        },
        "inputs_digest": inputs.digest(),
        "results": outcome.results,
        "passed": outcome.passed,
        "timing": { "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 },
    });
    let text = if cli.table {
        let mut out = String::new();
        render_table(&report, "", &mut out);
        out
    } else {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
