//! `bicx`: exact bicomplex arithmetic, conjugation tables, inverse
//! formulas, reflection geometry, and a verification suite, from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when evaluation or verification fails,
//! 2 for usage and syntax errors.

mod eval;
mod expr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bicx_core::geometry::{reflect_hyperplane, Axis, Hyperplane};
use bicx_core::group::{cayley_table, d8_subgroups, d8_table, subgroups};
use bicx_core::invert::inverse_via_conjugates;
use bicx_core::involution::apply;
use bicx_core::verify::{check_names, run_all, run_check, CheckConfig, CheckOutcome,
    DEFAULT_SAMPLES, DEFAULT_SEED};
use bicx_core::{Bicomplex, ConjTag, ConjugateProductKind, Scalar, Vec4};

use eval::{display_form, eval, DisplayForm, Mode};

#[derive(Parser)]
#[command(name = "bicx", version, about = "Exact bicomplex number algebra and verification")]
struct Cli {
    /// Arithmetic backend for expressions.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Md,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableWhich {
    /// Composition table of the eight conjugations.
    Conj,
    /// Multiplication table of the dihedral group of order eight.
    D8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InverseKind {
    /// Componentwise reciprocal in the idempotent representation.
    Idempotent,
    /// Product over all eight conjugates.
    Full,
    /// Product over the first-conjugate subgroup.
    Sub123,
    /// Product over the mixed-conjugate subgroup.
    Sub345,
    /// Product over the pseudoconjugate subgroup.
    Sub367,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    I1,
    I2,
    J1,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply one conjugation (dag0..dag5, pdag6, pdag7) to an expression.
    Conj {
        tag: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Invert an expression, directly or through a conjugate-product formula.
    Inverse {
        #[arg(long, value_enum, default_value_t = InverseKind::Idempotent)]
        kind: InverseKind,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// All square roots of an expression (exact mode only).
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Reflect the coordinate vector of an expression across a mirror.
    Reflect {
        /// Coordinate mirror: negates the named coordinate.
        #[arg(long, value_enum, conflicts_with = "normal")]
        axis: Option<AxisArg>,
        /// Hyperplane mirror given by four comma-separated rational
        /// components of its normal vector.
        #[arg(long, allow_hyphen_values = true)]
        normal: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print a composition table.
    Table {
        #[arg(long, value_enum, default_value_t = TableWhich::Conj)]
        which: TableWhich,
    },
    /// List every subgroup of a composition table.
    Subgroups {
        #[arg(long, value_enum, default_value_t = TableWhich::Conj)]
        which: TableWhich,
    },
    /// Re-derive the catalogued results and report pass/fail per check.
    Verify {
        /// Run every check (the default).
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        /// Run a single named check.
        #[arg(long)]
        theorem: Option<String>,
        /// Sample count for the randomized checks.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

/// Write one line to stdout. When the reading end of a pipe goes away
/// mid-output, stop like a signal-terminated process instead of
/// panicking.
fn outln(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(141);
    }
}

/// Write already newline-terminated text to stdout.
fn out(text: &str) {
    use std::io::Write;
    if write!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(141);
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn runtime(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Eval { expr } => {
            let (value, form) = evaluate(expr, cli.mode)?;
            print_value(&value, form, cli.format)?;
            Ok(0)
        }
        Command::Conj { tag, expr } => {
            let tag = ConjTag::from_name(tag).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown conjugation '{tag}'; expected one of {}",
                    ConjTag::ALL.map(|t| t.name()).join(", ")
                ))
            })?;
            let (value, form) = evaluate(expr, cli.mode)?;
            print_value(&apply(tag, &value), form, cli.format)?;
            Ok(0)
        }
        Command::Inverse { kind, expr } => {
            let (value, form) = evaluate(expr, cli.mode)?;
            let inverse = match kind {
                InverseKind::Idempotent => value.inverse_idempotent(),
                InverseKind::Full => inverse_via_conjugates(&value, ConjugateProductKind::Full),
                InverseKind::Sub123 => inverse_via_conjugates(&value, ConjugateProductKind::Sub123),
                InverseKind::Sub345 => inverse_via_conjugates(&value, ConjugateProductKind::Sub345),
                InverseKind::Sub367 => inverse_via_conjugates(&value, ConjugateProductKind::Sub367),
            }
            .map_err(|e| Failure::runtime(e.to_string()))?;
            print_value(&inverse, form, cli.format)?;
            Ok(0)
        }
        Command::Roots { expr } => {
            if cli.mode == Mode::Float {
                return Err(Failure::runtime(
                    "square roots are exact-only; run without --mode float",
                ));
            }
            let (value, _) = evaluate(expr, Mode::Exact)?;
            let roots = value
                .square_roots()
                .map_err(|e| Failure::runtime(e.to_string()))?;
            match cli.format {
                Format::Text => {
                    for root in &roots {
                        outln(&root.to_string());
                    }
                }
                Format::Json => {
                    let rendered: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
                    outln(&json!({ "roots": rendered }).to_string());
                }
                _ => return Err(unsupported_format()),
            }
            Ok(0)
        }
        Command::Reflect { axis, normal, expr } => {
            let (value, _) = evaluate(expr, cli.mode)?;
            let vector = value.to_vec4();
            let image = match (axis, normal) {
                (Some(axis), None) => {
                    let axis = match axis {
                        AxisArg::I1 => Axis::I1,
                        AxisArg::I2 => Axis::I2,
                        AxisArg::J1 => Axis::J1,
                    };
                    bicx_core::geometry::reflect_axis(axis, &vector)
                }
                (None, Some(normal)) => {
                    let normal = parse_normal(normal)?;
                    let mirror = Hyperplane::new(normal)
                        .map_err(|_| Failure::usage("normal must be nonzero"))?;
                    reflect_hyperplane(&mirror, &vector)
                }
                _ => return Err(Failure::usage("provide exactly one of --axis or --normal")),
            };
            match cli.format {
                Format::Text => outln(&image.to_string()),
                Format::Json => {
                    let coords: Vec<String> =
                        image.coords().iter().map(|s| s.to_string()).collect();
                    outln(&json!({ "vector": image.to_string(), "coords": coords }).to_string());
                }
                _ => return Err(unsupported_format()),
            }
            Ok(0)
        }
        Command::Table { which } => {
            match which {
                TableWhich::Conj => {
                    let table = cayley_table().map_err(|e| Failure::runtime(e.to_string()))?;
                    match cli.format {
                        Format::Text | Format::Md => out(&table.to_markdown()),
                        Format::Csv => out(&table.to_csv()),
                        Format::Json => outln(&table.to_json().to_string()),
                    }
                }
                TableWhich::D8 => {
                    let table = d8_table();
                    match cli.format {
                        Format::Text | Format::Md => out(&table.to_markdown()),
                        Format::Csv => out(&table.to_csv()),
                        Format::Json => outln(&table.to_json().to_string()),
                    }
                }
            }
            Ok(0)
        }
        Command::Subgroups { which } => {
            let groups: Vec<Vec<String>> = match which {
                TableWhich::Conj => {
                    let table = cayley_table().map_err(|e| Failure::runtime(e.to_string()))?;
                    subgroups(&table)
                        .iter()
                        .map(|sub| sub.iter().map(|t| t.name().to_string()).collect())
                        .collect()
                }
                TableWhich::D8 => d8_subgroups()
                    .iter()
                    .map(|sub| sub.iter().map(|e| e.name().to_string()).collect())
                    .collect(),
            };
            match cli.format {
                Format::Text => {
                    for sub in &groups {
                        outln(&format!("{{{}}}", sub.join(", ")));
                    }
                }
                Format::Md => {
                    for sub in &groups {
                        outln(&format!("- {{{}}}", sub.join(", ")));
                    }
                }
                Format::Csv => {
                    for sub in &groups {
                        outln(&sub.join(","));
                    }
                }
                Format::Json => outln(&json!({ "subgroups": groups }).to_string()),
            }
            Ok(0)
        }
        Command::Verify {
            all: _,
            theorem,
            samples,
        } => {
            let config = CheckConfig {
                seed: seed_from_env()?,
                samples: *samples,
            };
            let outcomes = match theorem {
                Some(name) => match run_check(name, &config) {
                    Some(outcome) => vec![outcome],
                    None => {
                        return Err(Failure::usage(format!(
                            "unknown check '{name}'; expected one of {}",
                            check_names().join(", ")
                        )))
                    }
                },
                None => run_all(&config),
            };
            report_outcomes(&outcomes, cli.format)
        }
    }
}

fn evaluate(source: &str, mode: Mode) -> Result<(Bicomplex, DisplayForm), Failure> {
    let tree = expr::parse(source).map_err(|e| Failure::usage(e.to_string()))?;
    let form = display_form(&tree);
    let value = eval(&tree, mode).map_err(|e| Failure::runtime(e.to_string()))?;
    Ok((value, form))
}

fn print_value(value: &Bicomplex, form: DisplayForm, format: Format) -> Result<(), Failure> {
    let rendered = match form {
        DisplayForm::Cartesian => value.to_string(),
        DisplayForm::Idempotent => value.to_idempotent().to_string(),
        DisplayForm::Vector => value.to_vec4().to_string(),
    };
    match format {
        Format::Text => outln(&rendered),
        Format::Json => {
            let coords: Vec<String> = value
                .to_vec4()
                .coords()
                .iter()
                .map(|s| s.to_string())
                .collect();
            outln(&json!({ "form": form.name(), "value": rendered, "coords": coords }).to_string());
        }
        _ => return Err(unsupported_format()),
    }
    Ok(())
}

fn unsupported_format() -> Failure {
    Failure::usage("this command supports --format text or json")
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var("BICX_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("BICX_SEED must be an unsigned integer, got '{text}'"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Parse `a,b,c,d` where each component is an exact real expression.
fn parse_normal(text: &str) -> Result<Vec4, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::usage(format!(
            "normal must have 4 comma-separated components, got {}",
            parts.len()
        )));
    }
    let mut coords: Vec<Scalar> = Vec::new();
    for part in parts {
        let (value, _) = evaluate(part, Mode::Exact)?;
        let scalar = value.as_real_scalar().ok_or_else(|| {
            Failure::usage(format!("normal component '{part}' is not a real number"))
        })?;
        coords.push(scalar);
    }
    Ok(Vec4::new(
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    ))
}

fn report_outcomes(outcomes: &[CheckOutcome], format: Format) -> Result<i32, Failure> {
    let failed: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    match format {
        Format::Text => {
            for outcome in outcomes {
                outln(&format!(
                    "{} {}",
                    if outcome.passed { "PASS" } else { "FAIL" },
                    outcome.name
                ));
                for detail in &outcome.details {
                    outln(&format!("  - {detail}"));
                }
            }
            outln(&format!(
                "{} passed, {} failed",
                outcomes.len() - failed.len(),
                failed.len()
            ));
        }
        Format::Json => {
            let checks: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| json!({ "name": o.name, "passed": o.passed, "details": o.details }))
                .collect();
            outln(
                &json!({
                    "checks": checks,
                    "passed": outcomes.len() - failed.len(),
                    "failed": failed.len(),
                })
                .to_string(),
            );
        }
        _ => return Err(unsupported_format()),
    }
    if let Some(first) = failed.first() {
        eprintln!("error: verification failed at check '{}'", first.name);
        Ok(1)
    } else {
        Ok(0)
    }
}
