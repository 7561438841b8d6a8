use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "cactus", version, about = "Cactus groups of Coxeter systems: word problem and representations")]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Named type (A3, B2, I2(5), A1*A1, ...) or a path to a Coxeter JSON file
    #[arg(long, global = true, default_value = "A2")]
    pub system: String,

    /// Parameter t as an exact rational, e.g. 2, 5/2, -1/3
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    pub t: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Maximum word length for enumeration commands
    #[arg(long, global = true, default_value_t = 4)]
    pub max_len: usize,

    /// Generator family instead of the connected subsets, e.g. "{a};{b};{a,b}"
    #[arg(long, global = true)]
    pub family: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// Representation on the span of the generator family
    #[value(name = "rho")]
    Rho,
    /// Geometric representation of W on the simple roots
    #[value(name = "pi")]
    Pi,
    /// Representation through the right-angled Coxeter group
    #[value(name = "Pi")]
    BigPi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the generator family (connected subsets by default)
    Fset,
    /// Reduced word of the longest element of W_I
    Longest { subset: String },
    /// List the parabolic conjugates and their commutation matrix
    Sset,
    /// Image of a cactus word in W
    Eval { word: String },
    /// Whether a cactus word lies in the pure cactus group
    Pure { word: String },
    /// Decide equality of two cactus words
    Equal { left: String, right: String },
    /// Canonical form of a cactus word in the semidirect product
    Normalize { word: String },
    /// Generator matrices of a representation
    Rep {
        #[arg(value_enum)]
        kind: RepKind,
    },
    /// Gram matrix of the invariant form as CSV
    Gram {
        #[arg(value_enum)]
        kind: RepKind,
    },
    /// Check the cactus relations on generator matrices
    CheckRelations {
        #[arg(value_enum)]
        kind: RepKind,
    },
    /// Common ±1 eigenspaces of all generators
    StableLines {
        #[arg(value_enum)]
        kind: RepKind,
    },
    /// Action on span(within) / span(subspace)
    Quotient {
        #[arg(value_enum, default_value = "Pi")]
        kind: RepKind,
        /// Vectors spanning the subspace to factor out, separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        subspace: String,
        /// Invariant space containing the subspace; the whole space if omitted
        #[arg(long, allow_hyphen_values = true)]
        within: Option<String>,
        /// Basis of a complement to the subspace inside `within`
        #[arg(long, allow_hyphen_values = true)]
        complement: Option<String>,
    },
    /// Commutation graph of the parabolic conjugates in DOT
    Diagram,
    /// Translate between s_{p,q} words and cactus words in type A
    DictA {
        #[arg(required = true, allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Distinct cactus group elements among words up to --max-len
    Elements,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = match cli.config.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values always serialize");
                    s.push('\n');
                    s
                }
                Format::Text => out.text,
            };
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let ctx = commands::Context::load(&cli.config)?;
    match &cli.command {
        Command::Fset => commands::fset(&ctx),
        Command::Longest { subset } => commands::longest(&ctx, subset),
        Command::Sset => commands::sset(&ctx),
        Command::Eval { word } => commands::eval(&ctx, word),
        Command::Pure { word } => commands::pure(&ctx, word),
        Command::Equal { left, right } => commands::equal(&ctx, left, right),
        Command::Normalize { word } => commands::normalize(&ctx, word),
        Command::Rep { kind } => commands::rep(&ctx, *kind),
        Command::Gram { kind } => commands::gram(&ctx, *kind),
        Command::CheckRelations { kind } => commands::check_relations(&ctx, *kind),
        Command::StableLines { kind } => commands::stable_lines(&ctx, *kind),
        Command::Quotient {
            kind,
            subspace,
            within,
            complement,
        } => commands::quotient(&ctx, *kind, subspace, within.as_deref(), complement.as_deref()),
        Command::Diagram => commands::diagram(&ctx),
        Command::DictA { word } => commands::dict_a(&ctx, &word.join(" ")),
        Command::Elements => commands::elements(&ctx, cli.config.max_len),
    }
}
