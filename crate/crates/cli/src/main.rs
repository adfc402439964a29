use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use similar::TextDiff;

use invol_core::involution::{
    conjugator_from_involution, involution_check_report, involution_from_conjugator,
    involution_from_even_seeds,
};
use invol_core::json::{series_from_json, Convention, PolyJson, SeriesJson, TableEntryJson, TableJson};
use invol_core::rational::{display_rational, parse_rational};
use invol_core::verify::parse_suites;
use invol_core::{expr, Families, Family, Fixtures, Rational, SeedSpec, Series, VerifyConfig};

#[derive(Parser)]
#[command(name = "invol", version, about = "Exact Bell, Stirling and Lah polynomial families and involutory power series")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for every randomized check.
    #[arg(long, default_value_t = 1, global = true)]
    rng_seed: u64,
    /// Largest n (tables default to 6, symbolic verification to 8).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Random points per numeric check.
    #[arg(long, default_value_t = 25, global = true)]
    trials: usize,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Partial Bell polynomials B[n,k].
    BellTable,
    /// Multivariate Stirling polynomials of the first kind A[n,k].
    StirlingTable,
    /// Multivariable Lah polynomials L[n,k].
    LahTable,
    /// Run identity suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Generate, check and decompose involutions.
    #[command(subcommand)]
    Involution(InvolutionCmd),
    /// Expand closed-form expressions.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Recompute the bundled reference values and diff them against fixtures.
    ReproducePaper(ReproduceArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, comma-separated list, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest n for numeric checks and random series orders.
    #[arg(long, default_value_t = 12)]
    numeric_max_n: usize,
    /// Table JSON whose entries replace the computed polynomials.
    #[arg(long, value_name = "FILE")]
    table_file: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum InvolutionCmd {
    /// Involution with the given even coefficients f_2, f_4, ...
    Gen {
        #[arg(long, value_name = "A1,A2,...", allow_hyphen_values = true)]
        even_seeds: String,
        #[arg(long)]
        order: usize,
    },
    /// Check f o f = id coefficientwise; exits 1 if not.
    Check {
        #[arg(long, value_name = "FILE")]
        series_file: PathBuf,
    },
    /// The involution g o (-id) o inverse(g).
    Conjugate {
        #[arg(long, value_name = "FILE")]
        g_file: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// A conjugator g for the involution f.
    Decompose {
        #[arg(long, value_name = "FILE")]
        series_file: PathBuf,
        /// g_1, g_3, ...; missing ones are zero.
        #[arg(long, value_name = "G1,G3,...", default_value = "1", allow_hyphen_values = true)]
        odd_seeds: String,
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SeriesCmd {
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "exponential")]
        convention: Convention,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    /// Only this item.
    #[arg(long)]
    item: Option<String>,
    /// Fixture file to compare against instead of the bundled one.
    #[arg(long, value_name = "FILE")]
    fixtures: Option<PathBuf>,
}

struct Output {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(cli.global.out.as_deref(), &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::BellTable => table(Family::Bell, g),
        Command::StirlingTable => table(Family::StirlingFirst, g),
        Command::LahTable => table(Family::Lah, g),
        Command::Verify(args) => verify(args, g),
        Command::Involution(cmd) => involution(cmd, g),
        Command::Series(SeriesCmd::Eval { expr, order, convention }) => {
            let s = expr::series_from_text(expr, *order)?;
            Ok(Output {
                text: render_series(&s, *convention, g.format),
                ok: true,
            })
        }
        Command::ReproducePaper(args) => reproduce(args, g),
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn table(family: Family, g: &Global) -> Result<Output> {
    let max_n = g.max_n.unwrap_or(6);
    let rows = Families::shared().triangle(family, max_n)?;
    let text = match g.format {
        Format::Text => rows
            .iter()
            .map(|(n, k, p)| format!("{}[{n},{k}] = {p}\n", family.tag()))
            .collect(),
        Format::Json => json_line(&TableJson {
            family: family.tag().to_string(),
            max_n,
            entries: rows
                .iter()
                .map(|(n, k, p)| TableEntryJson {
                    n: *n,
                    k: *k,
                    poly: PolyJson::from(&**p),
                })
                .collect(),
        }),
    };
    Ok(Output { text, ok: true })
}

fn verify(args: &VerifyArgs, g: &Global) -> Result<Output> {
    let suites = parse_suites(&args.suite).map_err(anyhow::Error::msg)?;
    let config = VerifyConfig {
        max_n: g.max_n.unwrap_or(8),
        numeric_max_n: args.numeric_max_n,
        trials: g.trials,
        seed: g.rng_seed,
    };
    let fam = Families::new();
    for path in &args.table_file {
        let text = read(path)?;
        let table: TableJson =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let family = table.family()?;
        for (n, k, poly) in table.polys()? {
            fam.table(family).insert(n, k, poly);
        }
    }
    let report = invol_core::run_suites(&fam, &suites, &config);
    let text = match g.format {
        Format::Text => format!("{report}\n"),
        Format::Json => json_line(&report),
    };
    Ok(Output {
        text,
        ok: report.passed,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_series(path: &Path) -> Result<Series> {
    series_from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rational(s.trim()).map_err(anyhow::Error::from))
        .collect()
}

fn truncated(s: Series, order: Option<usize>) -> Result<Series> {
    match order {
        Some(n) => Ok(s.truncate(n)?),
        None => Ok(s),
    }
}

fn render_series(s: &Series, convention: Convention, format: Format) -> String {
    match format {
        Format::Json => json_line(&SeriesJson::encode(s, convention)),
        Format::Text => {
            let values = match convention {
                Convention::Exponential => s.coeffs().to_vec(),
                Convention::Ordinary => s.to_ordinary(),
            };
            values
                .iter()
                .enumerate()
                .map(|(n, v)| format!("f[{n}] = {}\n", display_rational(v)))
                .collect()
        }
    }
}

fn involution(cmd: &InvolutionCmd, g: &Global) -> Result<Output> {
    let series_out = |s: Series| Output {
        text: render_series(&s, Convention::Exponential, g.format),
        ok: true,
    };
    match cmd {
        InvolutionCmd::Gen { even_seeds, order } => {
            let seeds = SeedSpec::even(parse_list(even_seeds)?);
            Ok(series_out(involution_from_even_seeds(&seeds, *order)?))
        }
        InvolutionCmd::Check { series_file } => {
            let report = involution_check_report(&read_series(series_file)?)?;
            let text = match g.format {
                Format::Text => format!("{report}\n"),
                Format::Json => json_line(&report),
            };
            Ok(Output {
                text,
                ok: report.passed(),
            })
        }
        InvolutionCmd::Conjugate { g_file, order } => {
            let conj = truncated(read_series(g_file)?, *order)?;
            Ok(series_out(involution_from_conjugator(&conj)?))
        }
        InvolutionCmd::Decompose {
            series_file,
            odd_seeds,
            order,
        } => {
            let f = truncated(read_series(series_file)?, *order)?;
            let seeds = SeedSpec::odd(parse_list(odd_seeds)?)?;
            Ok(series_out(conjugator_from_involution(&f, &seeds)?))
        }
    }
}

fn reproduce(args: &ReproduceArgs, g: &Global) -> Result<Output> {
    let fixtures = match &args.fixtures {
        Some(path) => Fixtures::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))?,
        None => Fixtures::builtin(),
    };
    let outcomes = invol_core::reproduce::reproduce(Families::shared(), &fixtures, args.item.as_deref())?;
    let ok = outcomes.iter().all(|o| o.passed);
    if outcomes.is_empty() {
        bail!("no items to reproduce");
    }
    let text = match g.format {
        Format::Json => json_line(&serde_json::json!({ "passed": ok, "items": outcomes })),
        Format::Text => {
            let mut out = String::new();
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", o.id, o.description).unwrap();
                if !o.passed {
                    let diff = TextDiff::from_lines(&o.expected, &o.actual);
                    let (old, new) = (format!("fixture/{}", o.id), format!("computed/{}", o.id));
                    write!(out, "{}", diff.unified_diff().header(&old, &new)).unwrap();
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            writeln!(out, "{passed} of {} items reproduced", outcomes.len()).unwrap();
            out
        }
    };
    Ok(Output { text, ok })
}
