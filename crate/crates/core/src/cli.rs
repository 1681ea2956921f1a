//! Command-line driver.
//!
//! Exit codes: 0 success, 1 internal failure, 2 usage or parse error,
//! 3 domain error, 4 enumeration budget exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::apps::{self, CompositionSpec};
use crate::cgd::{self, DecompositionReport, DecompositionTable, Method};
use crate::error::{Error, Result};
use crate::oracle::{self, EnumerationBudget};
use crate::qpoly::{q_binomial, restricted_partitions};
use crate::spinset::{format_twice, parse_twice_spin, SpinMultiset};
use crate::symcomp::{self, IdenticalSystem};
use crate::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "su2-compose", version, about = "Exact SU(2) Clebsch-Gordan decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct SpinsArgs {
    /// Spin multiset, e.g. "1/2^2,1^4".
    #[arg(long)]
    spins: String,
}

#[derive(Debug, Args)]
struct IdenticalArgs {
    /// Spin of each particle, e.g. "3/2".
    #[arg(long = "j")]
    j: String,
    /// Number of particles.
    #[arg(long = "num")]
    num: u64,
}

#[derive(Debug, Args)]
struct MethodArg {
    #[arg(long, default_value = "genfunc")]
    method: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clebsch-Gordan decomposition of a spin multiset.
    Cgd {
        #[command(flatten)]
        spins: SpinsArgs,
        #[command(flatten)]
        method: MethodArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Number of states with a given total occupation, or the whole table.
    Omega {
        #[command(flatten)]
        spins: SpinsArgs,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[command(flatten)]
        method: MethodArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Generating-function coefficients.
    Genfunc {
        #[command(flatten)]
        spins: SpinsArgs,
        /// Multiply by (1 - q) to get the multiplicity generating function.
        #[arg(long)]
        lambda: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Symmetric composition of identical spins.
    Sym {
        #[command(flatten)]
        system: IdenticalArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Antisymmetric composition of identical spins.
    Antisym {
        #[command(flatten)]
        system: IdenticalArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Gaussian polynomial [a choose b]_q.
    Qbinom {
        #[arg(long)]
        a: u64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Partitions of K into at most M parts, each at most P.
    Partitions {
        #[arg(long = "max-part")]
        max_part: u64,
        #[arg(long = "max-parts")]
        max_parts: u64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Compositions with per-slot bounds, e.g. --parts "2^5,4^3".
    Compose {
        #[arg(long)]
        parts: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long = "allow-zero")]
        allow_zero: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Probability that N six-sided dice sum to S.
    Dice {
        #[arg(long)]
        dice: u64,
        #[arg(long, allow_negative_numbers = true)]
        sum: i64,
        /// Also print a decimal rendering with this many digits.
        #[arg(long)]
        digits: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The first K Catalan numbers.
    Catalan {
        #[arg(long)]
        count: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The first K Riordan numbers.
    Riordan {
        #[arg(long)]
        count: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Isotropic tensors of rank R in D dimensions.
    Isotropic {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        rank: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Brute-force enumeration of the same tables.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
}

#[derive(Debug, Subcommand)]
enum OracleTarget {
    Cgd {
        #[command(flatten)]
        spins: SpinsArgs,
        #[arg(long, default_value_t = EnumerationBudget::default().max_states)]
        budget: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    Sym {
        #[command(flatten)]
        system: IdenticalArgs,
        #[arg(long, default_value_t = EnumerationBudget::default().max_states)]
        budget: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    Antisym {
        #[command(flatten)]
        system: IdenticalArgs,
        #[arg(long, default_value_t = EnumerationBudget::default().max_states)]
        budget: u64,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::Domain(_) | Error::DivisionByZero { .. } => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::Internal(_) => 1,
    }
}

fn parse_method(text: &str) -> Result<Method> {
    text.parse()
}

fn system(args: &IdenticalArgs) -> Result<IdenticalSystem> {
    IdenticalSystem::new(parse_twice_spin(&args.j)?, args.num)
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json value serializes")
}

fn render_table(table: &DecompositionTable, report: DecompositionReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => {
            if table.is_empty() {
                return "no states (exclusion)".to_string();
            }
            let mut lines = vec![table.to_string()];
            for t in table.terms() {
                lines.push(format!("J = {:<6} multiplicity {}", format_twice(t.twice_j), t.multiplicity));
            }
            lines.join("\n")
        }
    }
}

fn render_polynomial(p: &IntPolynomial, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty(&json!({ "coefficients": p.to_decimal_strings() })),
        OutputFormat::Text => p.to_string(),
    }
}

fn render_value(key: &str, value: String, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty(&json!({ key: value })),
        OutputFormat::Text => value,
    }
}

fn render_sequence(name: &str, values: &[BigInt], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty(&json!({ name: strings(values) })),
        OutputFormat::Text => strings(values).join(", "),
    }
}

fn composed_report(s: &IdenticalSystem, kind: &str, table: &DecompositionTable) -> DecompositionReport {
    DecompositionReport::composed(&s.as_multiset(), kind, table)
}

fn execute(command: Command) -> Result<String> {
    Ok(match command {
        Command::Cgd { spins, method, format } => {
            let spins: SpinMultiset = spins.spins.parse()?;
            let table = cgd::decompose(&spins, parse_method(&method.method)?)?;
            render_table(&table, DecompositionReport::full(&spins, &table), format.format)
        }
        Command::Omega { spins, n, method, format } => {
            let spins: SpinMultiset = spins.spins.parse()?;
            let method = parse_method(&method.method)?;
            match n {
                Some(n) => {
                    let value = match method {
                        Method::Genfunc => {
                            let table = cgd::omega_genfunc(&spins);
                            usize::try_from(n).ok().filter(|&i| i < table.len()).map(|i| table.get(i)).unwrap_or_default()
                        }
                        Method::Binomial => cgd::omega_binomial(&spins, n),
                        Method::Composition => cgd::omega_composition(&spins, n),
                    };
                    render_value("omega", value.to_string(), format.format)
                }
                None => {
                    let table = cgd::omega_table(&spins, method);
                    render_sequence("omega", table.values(), format.format)
                }
            }
        }
        Command::Genfunc { spins, lambda, format } => {
            let spins: SpinMultiset = spins.spins.parse()?;
            let p = if lambda {
                cgd::lambda_genfunc(&spins)
            } else {
                cgd::omega_genfunc(&spins).to_polynomial()
            };
            render_polynomial(&p, format.format)
        }
        Command::Sym { system: args, format } => {
            let s = system(&args)?;
            let table = symcomp::sym_decomposition(&s)?;
            render_table(&table, composed_report(&s, "symmetric", &table), format.format)
        }
        Command::Antisym { system: args, format } => {
            let s = system(&args)?;
            let table = symcomp::antisym_decomposition(&s)?;
            render_table(&table, composed_report(&s, "antisymmetric", &table), format.format)
        }
        Command::Qbinom { a, b, format } => render_polynomial(&q_binomial(a, b), format.format),
        Command::Partitions {
            max_part,
            max_parts,
            k,
            format,
        } => render_value(
            "count",
            restricted_partitions(max_part, max_parts, k).to_string(),
            format.format,
        ),
        Command::Compose {
            parts,
            n,
            allow_zero,
            format,
        } => {
            let spec = CompositionSpec::parse(&parts, allow_zero)?;
            render_value("count", apps::count_compositions(&spec, n).to_string(), format.format)
        }
        Command::Dice {
            dice,
            sum,
            digits,
            format,
        } => {
            let p = apps::dice_probability(dice, sum)?;
            let decimal = digits.map(|d| apps::to_decimal(&p, d));
            match format.format {
                OutputFormat::Json => {
                    let mut obj = json!({ "probability": p.to_string() });
                    if let Some(d) = decimal {
                        obj["decimal"] = Value::String(d);
                    }
                    pretty(&obj)
                }
                OutputFormat::Text => match decimal {
                    Some(d) => format!("{p}\n{d}"),
                    None => p.to_string(),
                },
            }
        }
        Command::Catalan { count, format } => {
            let values: Vec<BigInt> = (0..count).map(apps::catalan).collect();
            render_sequence("catalan", &values, format.format)
        }
        Command::Riordan { count, format } => {
            let values: Vec<BigInt> = (0..count).map(apps::riordan).collect();
            render_sequence("riordan", &values, format.format)
        }
        Command::Isotropic { dim, rank, format } => render_value(
            "count",
            apps::isotropic_isomers(dim, rank)?.to_string(),
            format.format,
        ),
        Command::Oracle { target } => match target {
            OracleTarget::Cgd { spins, budget, format } => {
                let spins: SpinMultiset = spins.spins.parse()?;
                let omega = oracle::oracle_omega(&spins, &EnumerationBudget::new(budget)?)?;
                let table = cgd::lambda_from_omega(&omega)?;
                render_table(&table, DecompositionReport::full(&spins, &table), format.format)
            }
            OracleTarget::Sym { system: args, budget, format } => {
                let s = system(&args)?;
                let omega = oracle::oracle_sym(s.twice_j.get(), s.count, &EnumerationBudget::new(budget)?)?;
                let table = symcomp::decomposition_from_omega(&s, &omega)?;
                render_table(&table, composed_report(&s, "symmetric", &table), format.format)
            }
            OracleTarget::Antisym { system: args, budget, format } => {
                let s = system(&args)?;
                let omega = oracle::oracle_antisym(s.twice_j.get(), s.count, &EnumerationBudget::new(budget)?)?;
                let table = symcomp::decomposition_from_omega(&s, &omega)?;
                render_table(&table, composed_report(&s, "antisymmetric", &table), format.format)
            }
        },
    })
}
