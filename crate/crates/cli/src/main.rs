//! `hhq`: Hochschild cohomology, brackets and admissible cycles of bound
//! quivers from the command line.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hhquiver::selftest::SelftestConfig;
use hhquiver::{Fp, Rational};

use commands::{execute, selftest, Output, Task};
use input::{parse_input, Field, InputError, InputSpec};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NON_ADMISSIBLE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_INVARIANT: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: String, source: InputError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Domain(#[from] hhquiver::Error),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input { source: InputError::NonAdmissible(_), .. } => EXIT_NON_ADMISSIBLE,
            CliError::Input { .. } | CliError::Io { .. } => EXIT_PARSE,
            CliError::Domain(hhquiver::Error::NonAdmissible(_)) => EXIT_NON_ADMISSIBLE,
            CliError::Domain(hhquiver::Error::Invariant(_) | hhquiver::Error::LiftInfeasible) => EXIT_INVARIANT,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hhq", version, about = "Hochschild cohomology and admissible cycles of monomial quadratic algebras")]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for per-degree computations.
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputFile {
    /// A `.quiv` file.
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quiver, relations and dimension.
    Info(InputFile),
    /// The path basis of the algebra.
    Basis(InputFile),
    /// Gamma-paths of one degree.
    Gamma {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Hochschild cohomology dimensions.
    Hh {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        max: Option<usize>,
        /// Print cocycle representatives.
        #[arg(long)]
        reps: bool,
    },
    /// Basis of Ext between simple modules.
    Ext {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// The (s, r) composition of Gamma-paths.
    Bypass {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
    },
    /// `f o g`, or `f o_i g` with `--i`; cochains are written `value|gamma`.
    Circ {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long = "i")]
        i: Option<usize>,
    },
    /// The bracket `[f, g]`.
    Bracket {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// The admissible cycle of `(u, p)`.
    Cycle {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        u: String,
        #[arg(long)]
        p: String,
        /// Also show the cycle anchored at the simple module of this vertex.
        #[arg(long)]
        at: Option<String>,
    },
    /// Compose two admissible cycles given as `p|u` and `q|v`.
    ComposeCycles {
        #[command(flatten)]
        input: InputFile,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        s: usize,
    },
    /// Run every acceptance criterion.
    Selftest {
        /// Instances per property suite.
        #[arg(long, default_value_t = 100)]
        fuzz: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load(path: &PathBuf) -> Result<InputSpec, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: shown.clone(), message: e.to_string() })?;
    parse_input(&text).map_err(|source| CliError::Input { path: shown, source })
}

macro_rules! for_field {
    ($field:expr, $f:ident, $a:ident, $b:ident, [$($p:literal),*]) => {
        match $field {
            Field::Rational => $f::<Rational>($a, $b),
            $(Field::Prime($p) => $f::<Fp<$p>>($a, $b),)*
            Field::Prime(p) => Err(CliError::Usage(format!("unsupported field F{p}"))),
        }
    };
}

fn run_task(spec: &InputSpec, task: &Task) -> Result<Output, CliError> {
    for_field!(spec.field, execute, spec, task, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 32003])
}

fn run(cli: Cli) -> Result<Output, CliError> {
    if let Some(k) = cli.jobs {
        if k == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        // Only fails if a pool already exists, which keeps its own size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let (file, task) = match cli.command {
        Command::Selftest { fuzz, seed } => {
            let mut cfg = SelftestConfig { fuzz, ..SelftestConfig::default() };
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            return Ok(selftest(&cfg));
        }
        Command::Info(i) => (i.file, Task::Info),
        Command::Basis(i) => (i.file, Task::Basis),
        Command::Gamma { input, deg, from, to } => (input.file, Task::Gamma { degree: deg, from, to }),
        Command::Hh { input, max, reps } => (input.file, Task::Hh { max, reps }),
        Command::Ext { input, deg, from, to } => (input.file, Task::Ext { degree: deg, from, to }),
        Command::Bypass { input, u, v, s, r } => (input.file, Task::Bypass { u, v, s, r }),
        Command::Circ { input, f, g, i } => (input.file, Task::Circ { f, g, i }),
        Command::Bracket { input, f, g } => (input.file, Task::Bracket { f, g }),
        Command::Cycle { input, u, p, at } => (input.file, Task::Cycle { u, p, at }),
        Command::ComposeCycles { input, left, right, s } => (input.file, Task::ComposeCycles { left, right, s }),
    };
    let spec = load(&file)?;
    run_task(&spec, &task)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.status.unwrap_or(0) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
