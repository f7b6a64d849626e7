//! Command-line front end.
//!
//! Exit statuses: 0 when every check passes, 1 when a check fails, 2 on
//! usage, input or output errors.

pub mod bfile;
pub mod oeis;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use bfile::{parse_bfile, BFile};
pub use oeis::{bundled_bfile, oeis_check, Family};
pub use report::{Format, Report, Summary};

use crate::catalog::{self, check_spec, Grid, IdentitySpec};
use crate::check::CheckResult;
use crate::egf::{
    check_definition, check_gf_equation_with, GfEquation, GfName, GfOptions, Perturbation,
};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::sequences::SequenceCache;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lucas-euler",
    version,
    about = "Exact verification of Lucas-Euler identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check catalog identities on a parameter grid.
    Verify(VerifyArgs),
    /// List catalog identities.
    List {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a sequence or polynomial family for 0 <= n <= N.
    Table(TableArgs),
    /// Check generating-function equations coefficientwise.
    GfCheck(GfArgs),
    /// Compare integer sequences against OEIS b-files.
    OeisCheck(OeisArgs),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity ids, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    ids: Vec<String>,
    #[arg(long)]
    n_max: Option<i64>,
    #[arg(long)]
    j_max: Option<i64>,
    #[arg(long)]
    s_max: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    q_set: Option<Vec<i64>>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum TableFamily {
    Fibonacci,
    Lucas,
    Balancing,
    LucasBalancing,
    Bernoulli,
    Euler,
    BernoulliPoly,
    EulerPoly,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    family: TableFamily,
    #[arg(long, default_value_t = 10)]
    n_max: i64,
    /// Evaluate polynomial families at this rational point.
    #[arg(long)]
    x: Option<Rational>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct GfArgs {
    /// Equation ids (`thm1_tanh`, ..., `def_c2`), comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    ids: Vec<String>,
    #[arg(long, default_value_t = crate::egf::DEFAULT_ORDER)]
    order: usize,
    #[arg(long, default_value_t = crate::egf::DEFAULT_J_MAX)]
    j_max: i64,
    /// Zero the z^K coefficient of c2 before checking (negative control).
    #[arg(long, value_name = "K")]
    drop_c2_term: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct OeisArgs {
    /// Family to check; all four when omitted.
    #[arg(long)]
    family: Option<String>,
    /// A user-supplied b-file instead of the vendored fixture.
    #[arg(long, requires = "family")]
    bfile: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

/// Catalog identities and negative controls, by id.
fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    catalog::find(id).or_else(|e| {
        catalog::negative_controls()
            .iter()
            .find(|s| s.id == id)
            .ok_or(e)
    })
}

/// Checks the selected identities (`all` for the whole catalog) on `grid`.
pub fn run_verify(selection: &[String], grid: &Grid) -> Result<Report> {
    let specs: Vec<&IdentitySpec> = if selection.is_empty() || selection.iter().any(|s| s == "all")
    {
        catalog::list_identities().iter().collect()
    } else {
        selection
            .iter()
            .map(|id| lookup(id))
            .collect::<Result<_>>()?
    };
    let mut cache = SequenceCache::new();
    let results = specs
        .into_iter()
        .map(|spec| check_spec(spec, grid, &mut cache))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(results))
}

enum GfTarget {
    Equation(GfEquation),
    Definition(GfName),
}

fn gf_targets(selection: &[String]) -> Result<Vec<GfTarget>> {
    if selection.is_empty() || selection.iter().any(|s| s == "all") {
        let mut all: Vec<GfTarget> = GfEquation::ALL
            .into_iter()
            .map(GfTarget::Equation)
            .collect();
        all.extend(GfName::ALL.into_iter().map(GfTarget::Definition));
        return Ok(all);
    }
    selection
        .iter()
        .map(|id| match id.strip_prefix("def_") {
            Some(name) => name
                .parse()
                .map(GfTarget::Definition)
                .map_err(|_| Error::UnknownEquation(id.clone())),
            None => id.parse().map(GfTarget::Equation),
        })
        .collect()
}

/// Per-order verdicts `0..=order` for one equation id.
pub type OrderVerdicts = (String, Vec<bool>);

/// Runs generating-function checks; returns the report and per-order verdicts.
pub fn run_gf_check(
    selection: &[String],
    order: usize,
    opts: &GfOptions,
) -> Result<(Report, Vec<OrderVerdicts>)> {
    let mut results = Vec::new();
    let mut per_order = Vec::new();
    for target in gf_targets(selection)? {
        let check = match target {
            GfTarget::Equation(eq) => check_gf_equation_with(eq, order, opts)?,
            GfTarget::Definition(name) => check_definition(name, order, opts.j_max)?,
        };
        per_order.push((check.id.clone(), check.per_order()));
        results.push(check.to_check_result());
    }
    Ok((Report::new(results), per_order))
}

/// Cross-checks one family against a b-file, or all four against the
/// vendored fixtures.
pub fn run_oeis_check(family: Option<Family>, bfile: Option<BFile>) -> Result<Report> {
    let results: Vec<CheckResult> = match (family, bfile) {
        (Some(f), Some(b)) => vec![oeis_check(f, &b)?],
        (Some(f), None) => vec![oeis_check(f, &bundled_bfile(f))?],
        (None, _) => Family::ALL
            .into_iter()
            .map(|f| oeis_check(f, &bundled_bfile(f)))
            .collect::<Result<_>>()?,
    };
    Ok(Report::new(results))
}

/// Rows `(n, value)` of a family table.
pub fn table_rows(
    family: TableFamily,
    n_max: i64,
    x: Option<&Rational>,
) -> Result<Vec<(i64, String)>> {
    let mut c = SequenceCache::new();
    let poly = |p: crate::poly::Poly| match x {
        Some(x) => p.eval(x).to_string(),
        None => p.to_string(),
    };
    (0..=n_max)
        .map(|n| {
            let v = match family {
                TableFamily::Fibonacci => c.fibonacci(n)?.to_string(),
                TableFamily::Lucas => c.lucas(n)?.to_string(),
                TableFamily::Balancing => poly(c.balancing_poly(n)?),
                TableFamily::LucasBalancing => poly(c.lucas_balancing_poly(n)?),
                TableFamily::Bernoulli => c.bernoulli_number(n)?.to_string(),
                TableFamily::Euler => c.euler_number(n)?.to_string(),
                TableFamily::BernoulliPoly => poly(c.bernoulli_poly(n)?),
                TableFamily::EulerPoly => poly(c.euler_poly(n)?),
            };
            Ok((n, v))
        })
        .collect()
}

fn render_rows(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Json => {
            let objs: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|row| {
                    header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                        .collect()
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&objs).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).expect("in-memory write");
            for row in rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
        }
        Format::Text => {
            let mut out = String::new();
            for row in rows {
                let _ = writeln!(out, "{}", row.join("  "));
            }
            out
        }
    }
}

fn list_rows() -> Vec<Vec<String>> {
    catalog::list_identities()
        .iter()
        .map(|s| {
            vec![
                s.id.to_string(),
                s.ring_description(),
                s.domain_description(),
                s.statement.to_string(),
            ]
        })
        .collect()
}

fn emit(report: &Report, output: &Output) -> Result<u8> {
    match &output.out {
        Some(path) => {
            report.write(path, output.format)?;
            print!("{}", report.to_text());
        }
        None => print!("{}", report.render(output.format)),
    }
    Ok(if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify(a) => {
            let mut grid = Grid::default();
            if let Some(n) = a.n_max {
                grid.n_max = n;
            }
            if let Some(j) = a.j_max {
                grid.j_max = j;
            }
            if let Some(s) = a.s_max {
                grid.s_max = s;
            }
            if let Some(q) = a.q_set {
                grid.q_set = q;
            }
            emit(&run_verify(&a.ids, &grid)?, &a.output)
        }
        Command::List { format } => {
            let header = ["id", "ring", "domain", "statement"];
            print!("{}", render_rows(&header, &list_rows(), format));
            Ok(EXIT_PASS)
        }
        Command::Table(a) => {
            let rows: Vec<Vec<String>> = table_rows(a.family, a.n_max, a.x.as_ref())?
                .into_iter()
                .map(|(n, v)| vec![n.to_string(), v])
                .collect();
            print!("{}", render_rows(&["n", "value"], &rows, a.format));
            Ok(EXIT_PASS)
        }
        Command::GfCheck(a) => {
            let opts = GfOptions {
                j_max: a.j_max,
                perturbation: a.drop_c2_term.map(Perturbation::DropC2Term),
            };
            let (report, per_order) = run_gf_check(&a.ids, a.order, &opts)?;
            if a.output.format == Format::Text {
                let width = per_order.iter().map(|(id, _)| id.len()).max().unwrap_or(0);
                for (id, marks) in &per_order {
                    let marks: String =
                        marks.iter().map(|&ok| if ok { '+' } else { '-' }).collect();
                    println!("{id:<width$}  orders 0..={}: {marks}", a.order);
                }
            }
            emit(&report, &a.output)
        }
        Command::OeisCheck(a) => {
            let family = a.family.as_deref().map(str::parse::<Family>).transpose()?;
            let bfile = match &a.bfile {
                Some(path) => {
                    let bytes = std::fs::read(path).map_err(|e| Error::Io {
                        path: path.display().to_string(),
                        reason: e.to_string(),
                    })?;
                    Some(parse_bfile(bytes)?)
                }
                None => None,
            };
            emit(&run_oeis_check(family, bfile)?, &a.output)
        }
    }
}

/// Parses `args` (program name first) and runs the selected subcommand.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            });
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
