//! Command-line interface: generate, compose, classify, and verify sign
//! matrices.
//!
//! Exit codes: 0 for success or a clean verification, 1 for a failed
//! verification or a matrix that does not parse, 2 for usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use orthokit::{
    all_ones, assemble_blocks, circulant_table, cycled_family, exhaustive_semi_split,
    formula_conformance, gram_structure_check, hadamard_order_guard, juxtapose, kronecker,
    m_matrix, mixed_block, permutation_census, spectrum_report, sylvester, type_ii_table, Error,
    MMatrixKind, MixedOrder, SignMatrix, SignRule, DEFAULT_MAX_CENSUS_ORDER,
};
use orthokit_cli::format::{parse_sign_matrix, serialize_sign_matrix};
use orthokit_cli::report::{
    census_document, classification_document, conformance_document, gram_document, order_document,
};

const CENSUS_ENV: &str = "ORTHOKIT_MAX_CENSUS_ORDER";

#[derive(Parser)]
#[command(
    name = "orthokit",
    version,
    about = "Exact-integer sign-matrix toolkit: generate, compose, classify, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a base matrix
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Combine matrices read from files
    Compose {
        #[command(subcommand)]
        what: ComposeCommand,
    },
    /// Classify a matrix and report spectra, labels, and witnesses
    Classify {
        /// Matrix file, or "-" for stdin
        file: String,
        /// Also search all column subsets for an orthogonal half
        #[arg(long)]
        exhaustive_split: bool,
    },
    /// Run a verification and exit 0 only if it is clean
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Sylvester-type matrix of order 2^k
    Hadamard {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All-ones matrix of order m
    Ones {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign-mapped residue table of type I, II, or III
    Mmatrix {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "parity")]
        rule: RuleArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ComposeCommand {
    /// Kronecker product of two matrices
    Kron {
        a: String,
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Horizontal juxtaposition of two or more matrices
    Juxt {
        #[arg(required = true, num_args = 1..)]
        parts: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The block pattern [A A; A -A]
    Double {
        a: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The sixteen-block pattern, order-4 Sylvester signs over the operand
    Fourblock {
        a: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The block mix [A B; B -A] (hm) or [B A; A -B] (mh)
    Mixed {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        order: MixedArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Block assembly of the cyclically shifted family of a square seed
    Assemble {
        #[arg(long, value_enum)]
        table: TableArg,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check the residue-family value formula on an M-matrix spectrum
    Mmatrix {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "parity")]
        rule: RuleArg,
    },
    /// Check the repeated-block Gram identities for m copies of a seed
    Gram {
        #[arg(long)]
        m: usize,
        file: String,
    },
    /// Enumerate all row and column permutation images
    Census { file: String },
    /// Check the necessary order condition for orthogonality
    Order { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    Ii,
    #[value(name = "III")]
    Iii,
}

impl From<KindArg> for MMatrixKind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::I => MMatrixKind::TypeI,
            KindArg::Ii => MMatrixKind::TypeII,
            KindArg::Iii => MMatrixKind::TypeIII,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Parity,
    Threshold,
}

impl From<RuleArg> for SignRule {
    fn from(value: RuleArg) -> Self {
        match value {
            RuleArg::Parity => SignRule::Parity,
            RuleArg::Threshold => SignRule::Threshold,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MixedArg {
    Hm,
    Mh,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Circulant,
    Type2,
}

/// Failures with their exit code: parse failures exit 1, usage errors 2.
enum CliError {
    Parse(String),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Usage(m) => m,
        }
    }
}

fn usage(err: impl std::fmt::Display) -> CliError {
    CliError::Usage(err.to_string())
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            process::exit(e.exit_code());
        }
    }
}

fn read_matrix(path: &str) -> Result<SignMatrix, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
    };
    parse_sign_matrix(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn write_matrix(m: &SignMatrix, out: &Option<PathBuf>) -> Result<(), CliError> {
    let text = serialize_sign_matrix(m);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen { what } => run_gen(what),
        Command::Compose { what } => run_compose(what),
        Command::Classify {
            file,
            exhaustive_split,
        } => run_classify(&file, exhaustive_split),
        Command::Verify { what } => run_verify(what),
    }
}

fn run_gen(cmd: GenCommand) -> Result<i32, CliError> {
    match cmd {
        GenCommand::Hadamard { k, out } => {
            let m = sylvester(k).map_err(usage)?;
            write_matrix(&m, &out)?;
        }
        GenCommand::Ones { m, out } => {
            if m == 0 {
                return Err(usage("m must be at least 1"));
            }
            write_matrix(&all_ones(m), &out)?;
        }
        GenCommand::Mmatrix { kind, n, rule, out } => {
            let m = m_matrix(kind.into(), n, rule.into()).map_err(usage)?;
            write_matrix(&m, &out)?;
        }
    }
    Ok(0)
}

fn run_compose(cmd: ComposeCommand) -> Result<i32, CliError> {
    match cmd {
        ComposeCommand::Kron { a, b, out } => {
            let left = read_matrix(&a)?;
            let right = read_matrix(&b)?;
            write_matrix(&kronecker(&left, &right), &out)?;
        }
        ComposeCommand::Juxt { parts, out } => {
            let matrices = parts
                .iter()
                .map(|p| read_matrix(p))
                .collect::<Result<Vec<_>, _>>()?;
            let joined = juxtapose(&matrices).map_err(|e| match e {
                Error::RowCountMismatch { index, .. } => {
                    usage(format!("{e} (operand {})", parts[index]))
                }
                other => usage(other),
            })?;
            write_matrix(&joined, &out)?;
        }
        ComposeCommand::Double { a, out } => {
            let m = read_matrix(&a)?;
            write_matrix(&orthokit::doubling(&m), &out)?;
        }
        ComposeCommand::Fourblock { a, out } => {
            let m = read_matrix(&a)?;
            write_matrix(&orthokit::four_block(&m), &out)?;
        }
        ComposeCommand::Mixed { a, b, order, out } => {
            let left = read_matrix(&a)?;
            let right = read_matrix(&b)?;
            let which = match order {
                MixedArg::Hm => MixedOrder::Hm,
                MixedArg::Mh => MixedOrder::Mh,
            };
            let mixed = mixed_block(&left, &right, which)
                .map_err(|e| usage(format!("{e} (operands {a}, {b})")))?;
            write_matrix(&mixed, &out)?;
        }
        ComposeCommand::Assemble { table, seed, out } => {
            let seed_matrix = read_matrix(&seed)?;
            let family = cycled_family(&seed_matrix)
                .map_err(|e| usage(format!("{e} (seed {seed})")))?;
            let n = family.len();
            let index_table = match table {
                TableArg::Circulant => circulant_table(n),
                TableArg::Type2 => type_ii_table(n).map_err(usage)?,
            };
            let assembled = assemble_blocks(&index_table, &family).map_err(usage)?;
            write_matrix(&assembled, &out)?;
        }
    }
    Ok(0)
}

fn run_classify(file: &str, exhaustive: bool) -> Result<i32, CliError> {
    let m = read_matrix(file)?;
    let report = spectrum_report(&m);
    let split = if exhaustive {
        Some(exhaustive_semi_split(&m).map_err(usage)?)
    } else {
        None
    };
    let doc = classification_document(&m, &report, split.as_ref());
    println!("{}", doc.to_json());
    Ok(0)
}

fn census_order_limit() -> Result<usize, CliError> {
    match std::env::var(CENSUS_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| usage(format!("{CENSUS_ENV} must be a positive integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_MAX_CENSUS_ORDER),
    }
}

fn run_verify(cmd: VerifyCommand) -> Result<i32, CliError> {
    match cmd {
        VerifyCommand::Mmatrix { kind, n, rule } => {
            let report = formula_conformance(kind.into(), n, rule.into()).map_err(usage)?;
            println!("{}", conformance_document(&report).to_json());
            if report.all_conforming {
                Ok(0)
            } else {
                eprintln!(
                    "verification failed: {} pair(s) violate {}",
                    report.pairs.iter().filter(|p| !p.conforming).count(),
                    report.claimed_form
                );
                Ok(1)
            }
        }
        VerifyCommand::Gram { m, file } => {
            if m == 0 {
                return Err(usage("m must be at least 1"));
            }
            let seed = read_matrix(&file)?;
            let check = gram_structure_check(&seed, m).map_err(usage)?;
            println!("{}", gram_document(&check).to_json());
            if check.holds {
                Ok(0)
            } else {
                eprintln!("verification failed: the repeated-block Gram identities do not hold");
                Ok(1)
            }
        }
        VerifyCommand::Census { file } => {
            let seed = read_matrix(&file)?;
            let limit = census_order_limit()?;
            let report = permutation_census(&seed, limit).map_err(usage)?;
            println!("{}", census_document(&report).to_json());
            if report.all_same_class {
                Ok(0)
            } else {
                eprintln!("verification failed: some permutation image changes class");
                Ok(1)
            }
        }
        VerifyCommand::Order { n } => {
            let ok = hadamard_order_guard(n);
            println!("{}", order_document(n, ok).to_json());
            if ok {
                Ok(0)
            } else {
                eprintln!("verification failed: n ≢ 0 (mod 4) and n is not 1 or 2 (n = {n})");
                Ok(1)
            }
        }
    }
}
