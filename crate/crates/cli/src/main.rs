//! `dg`: command-line front end for diagram groups.
//!
//! Every run ends with one status line `OK|FAIL|UNKNOWN <detail>`. Exit
//! codes: 0 success, 1 negative result, 2 usage or input error, 3 caps or
//! bounds exhausted.

mod commands;
mod dot;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "dg", version, about = "Diagram groups over semigroup presentations")]
pub struct Cli {
    /// Presentation file (`letters:` / `rule:` lines).
    #[arg(short = 'p', long = "presentation", global = true)]
    pub presentation: Option<PathBuf>,
    /// Base word, whitespace-separated symbols; `%` is the empty word.
    #[arg(short = 'w', long = "word", global = true, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Longest intermediate word explored by word-problem searches.
    #[arg(long = "max-len", global = true)]
    pub max_len: Option<usize>,
    /// Node budget for word-problem searches.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Compare diagrams up to isotopy only, without cancelling dipoles.
    #[arg(long = "strict-isotopy", global = true)]
    pub strict_isotopy: bool,
    /// Write the payload here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced form of a diagram.
    Reduce { diagram: PathBuf },
    /// Normal form under interchange, without cancelling dipoles.
    Nf { diagram: PathBuf },
    /// Whether two diagrams are equal in the diagram groupoid.
    Eq { first: PathBuf, second: PathBuf },
    /// Reduced composite `first ∘ second` (first on top).
    Mul { first: PathBuf, second: PathBuf },
    /// Side-by-side sum.
    Sum { first: PathBuf, second: PathBuf },
    /// Mirror image.
    Inv { diagram: PathBuf },
    /// Reduced `g⁻¹ ∘ d ∘ g`.
    Conj { diagram: PathBuf, conjugator: PathBuf },
    /// Number of nontrivial components of an absolutely reduced conjugate.
    Comp { diagram: PathBuf },
    /// Sum decomposition of a spherical diagram.
    Components { diagram: PathBuf },
    /// Absolutely reduced conjugate and its conjugator.
    Absred { diagram: PathBuf },
    /// Label of a positive path between two vertices. Vertices are ids,
    /// `t<k>` (k-th vertex of the top path) or `b<k>` (of the bottom path).
    Mu { diagram: PathBuf, from: String, to: String },
    /// Checks `μ(o, o1) = μ(o, o2)` around the split after `split` letters.
    Lemma1 { diagram: PathBuf, split: usize },
    /// Word problem: are `u` and `v` equal in the presented monoid?
    Wp { u: String, v: String },
    /// Knuth–Bendix completion under shortlex.
    Kb,
    /// Idempotents up to the given length.
    Idem {
        #[arg(default_value_t = 4)]
        max_len: usize,
    },
    /// Presentation with fresh letters a, b and relations a·x = a, x·b = b.
    Qof,
    /// Searches for a copy of Thompson's group F in `D(P, w)`.
    EmbedF {
        /// Longest idempotent tried.
        #[arg(long = "idem-len", default_value_t = 4)]
        idem_len: usize,
    },
    /// Re-checks a witness written by `embed-f` or `gen-f`.
    VerifyF { witness: PathBuf },
    /// Witness for the standard copy of F over the Dunce hat at base `x`.
    GenF,
    /// Compares reduction and equality against brute-force enumeration.
    OracleCheck { first: PathBuf, second: Option<PathBuf> },
    /// Graphviz rendering of a diagram.
    Dot { diagram: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Usage,
    Unknown,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Usage => 2,
            Status::Unknown => 3,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Fail | Status::Usage => "FAIL",
            Status::Unknown => "UNKNOWN",
        }
    }
}

/// What a command produced: a payload (written to `-o` or stdout) and the
/// final status.
pub struct Outcome {
    pub payload: String,
    pub status: Status,
    pub detail: String,
}

impl Outcome {
    pub fn new(payload: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Self { payload: payload.into(), status, detail: detail.into() }
    }

    pub fn ok(payload: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(payload, Status::Ok, detail)
    }
}

fn finish(status: Status, detail: &str) -> ExitCode {
    // a closed pipe (e.g. `dg ... | head`) is not worth a panic
    let _ = writeln!(std::io::stdout(), "{} {}", status.tag(), detail);
    ExitCode::from(status.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if info { finish(Status::Ok, "help") } else { finish(Status::Usage, "usage") };
        }
    };
    let out = commands::run(&cli);
    let mut status = out.status;
    let mut detail = out.detail;
    if !out.payload.is_empty() {
        match &cli.output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &out.payload) {
                    status = Status::Usage;
                    detail = format!("cannot write {}: {e}", path.display());
                }
            }
            None => {
                let _ = std::io::stdout().write_all(out.payload.as_bytes());
            }
        }
    }
    finish(status, &detail)
}
