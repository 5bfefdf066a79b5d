//! The `fsig` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::analysis::grid::{evaluate_grid, GridRow, GridSpec};
use crate::analysis::report::ReportSet;
use crate::analysis::suites::{run_suite, SuiteOptions};
use crate::error::{Error, Result};
use crate::fsignature::{convergence_report, fsignature};
use crate::geometry::rational::to_decimal;
use crate::geometry::{format_rational, parse_rational, Rational};
use crate::toric::catalog::{parse_rational_list, BUILTIN_NAMES};
use crate::toric::divisor::format_divisor;
use crate::toric::{divisor_polytope, is_nef, volume_of_divisor, Fan, NSBasis, TDivisor, Variety};

/// Digits after the point in decimal annotations.
pub const DECIMAL_DIGITS: u32 = 12;

#[derive(Debug, Parser)]
#[command(name = "fsig", version, about = "Exact F-signature of polarized toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact F-signature and volume of an ample class.
    Eval(DivisorArgs),
    /// Volume and section count of a divisor.
    Volume(DivisorArgs),
    /// Free ranks a_e against the F-signature, as CSV.
    Freerank {
        #[command(flatten)]
        divisor: DivisorArgs,
        #[arg(long)]
        p: u64,
        /// Largest level e.
        #[arg(long)]
        e: u32,
    },
    /// Evaluate a rectangular grid of classes, as CSV.
    Grid(GridArgs),
    /// Grid coordinates and decimal F-signature for plotting tools.
    Plotdata(GridArgs),
    /// Run verification suites; JSON report on stdout.
    Check {
        /// formulas, scaling, degrees, convergence, bounds, boundary,
        /// lipschitz, key-inequality, ratio or all.
        #[arg(long)]
        suite: String,
        /// Primes for the degree suite.
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u64>>,
        /// Largest level for the degree suite.
        #[arg(long)]
        e: Option<u32>,
    },
    /// Builtin varieties and their class dictionaries.
    List,
}

#[derive(Debug, Args)]
struct DivisorArgs {
    /// Builtin name or path to a fan JSON file.
    #[arg(long)]
    variety: String,
    /// Ray coefficients; a list as long as the class rank is read as class
    /// coordinates.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "class", required_unless_present = "class")]
    divisor: Option<String>,
    /// Class in the builtin dictionary, e.g. 2H-1E or 1,2.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    variety: String,
    /// `standard`, `ample`, or classes separated by `;`.
    #[arg(long, default_value = "standard")]
    basis: String,
    /// One `lo:hi` per basis class.
    #[arg(long = "range", required = true, allow_hyphen_values = true)]
    ranges: Vec<String>,
    #[arg(long, default_value = "1")]
    step: String,
}

/// Input errors exit with 2; everything else that fails exits with 1.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::NotIntegral(_)
        | Error::NotPrime(_)
        | Error::InvalidFan(_)
        | Error::ZeroVector
        | Error::NonPositiveScale(_)
        | Error::DeficientBasis(_) => 2,
        _ => 1,
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e}");
        return exit_code(&e);
    }
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("FSIG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("FSIG_THREADS must be a positive integer, got {value:?}")))?;
    // the global pool can only be set once per process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("write failed: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval(args) => {
            let (variety, d) = load_divisor(&args)?;
            let s = fsignature(&variety.fan, &d)?;
            let vol = volume_of_divisor(&variety.fan, &d)?;
            writeln!(out, "s = {}", annotated(&s)).map_err(io)?;
            writeln!(out, "vol = {}", annotated(&vol)).map_err(io)?;
        }
        Command::Volume(args) => {
            let (variety, d) = load_divisor(&args)?;
            let vol = volume_of_divisor(&variety.fan, &d)?;
            writeln!(out, "vol = {}", annotated(&vol)).map_err(io)?;
            if d.is_integral() && is_nef(&variety.fan, &d)? {
                let h0 = divisor_polytope(&variety.fan, &d)?.count_lattice_points()?;
                writeln!(out, "h0 = {h0}").map_err(io)?;
            }
        }
        Command::Freerank { divisor, p, e } => {
            let (variety, d) = load_divisor(&divisor)?;
            if !d.is_integral() {
                return Err(Error::NotIntegral(format_divisor(&d)));
            }
            let report = convergence_report(&variety.fan, &d, p, e)?;
            let mut csv = String::from("e,a_e,normalized,error\n");
            for row in &report.rows {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    row.report.e,
                    row.report.a_e,
                    format_rational(&row.report.normalized),
                    format_rational(&row.error)
                ));
            }
            out.write_all(csv.as_bytes()).map_err(io)?;
        }
        Command::Grid(args) => {
            let (grid, rows) = grid_rows(&args)?;
            out.write_all(grid_csv(&grid, &rows).as_bytes()).map_err(io)?;
        }
        Command::Plotdata(args) => {
            let (grid, rows) = grid_rows(&args)?;
            out.write_all(plot_csv(&grid, &rows).as_bytes()).map_err(io)?;
        }
        Command::Check { suite, p, e } => {
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                primes: p.unwrap_or(defaults.primes),
                e_max: e.unwrap_or(defaults.e_max),
            };
            if opts.e_max == 0 {
                return Err(Error::Parse("--e must be positive".into()));
            }
            if let Some(&q) = opts.primes.iter().find(|&&q| !crate::fsignature::is_prime(q)) {
                return Err(Error::NotPrime(q));
            }
            let set = ReportSet::new(run_suite(&suite, &opts)?);
            writeln!(out, "{}", set.to_json()).map_err(io)?;
            for r in &set.suites {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                writeln!(err, "{}: {verdict} ({} checks)", r.suite, r.checks.len()).map_err(io)?;
                for c in r.failures() {
                    writeln!(err, "  failed {}: {} vs {} at {}", c.name, c.lhs, c.rhs, c.witness).map_err(io)?;
                }
            }
            writeln!(err, "overall: {}", if set.pass { "PASS" } else { "FAIL" }).map_err(io)?;
            return Ok(if set.pass { 0 } else { 1 });
        }
        Command::List => {
            for name in BUILTIN_NAMES {
                let v = Variety::builtin(name)?;
                let gens: Vec<String> = v
                    .symbols
                    .iter()
                    .zip(&v.generators)
                    .map(|(s, g)| format!("{s}={}", format_divisor(g)))
                    .collect();
                writeln!(
                    out,
                    "{name}\tdim {}\trays {:?}\tclasses {}",
                    v.dim(),
                    v.fan.rays,
                    gens.join(" ")
                )
                .map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn annotated(q: &Rational) -> String {
    if q.is_integer() {
        format_rational(q)
    } else {
        format!("{} ≈ {}", format_rational(q), to_decimal(q, DECIMAL_DIGITS))
    }
}

/// A builtin name, or a path to a fan JSON file.
pub fn load_variety(spec: &str) -> Result<Variety> {
    if BUILTIN_NAMES.contains(&spec) {
        return Variety::builtin(spec);
    }
    let path = std::path::Path::new(spec);
    if !path.exists() {
        return Err(Error::Parse(format!(
            "{spec:?} is neither a builtin ({}) nor a file",
            BUILTIN_NAMES.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    Ok(Variety::from_fan(Fan::from_json(&text)?))
}

fn load_divisor(args: &DivisorArgs) -> Result<(Variety, TDivisor)> {
    let variety = load_variety(&args.variety)?;
    let d = match (&args.divisor, &args.class) {
        (Some(text), _) => {
            let coeffs = parse_rational_list(text)?;
            let n = variety.fan.num_rays();
            if coeffs.len() == n {
                TDivisor::new(coeffs)
            } else if !variety.generators.is_empty() && coeffs.len() == variety.generators.len() {
                variety.class(&coeffs)?
            } else {
                return Err(Error::Parse(format!(
                    "expected {n} ray coefficients for {}, got {}",
                    variety.name(),
                    coeffs.len()
                )));
            }
        }
        (None, Some(text)) => variety.parse_class(text)?,
        (None, None) => return Err(Error::Parse("give --divisor or --class".into())),
    };
    Ok((variety, d))
}

fn parse_basis(variety: &Variety, text: &str) -> Result<NSBasis> {
    match text {
        "standard" => variety.standard_basis(),
        "ample" => variety.ample_basis(),
        list => {
            let classes = list
                .split(';')
                .map(|c| variety.parse_class(c))
                .collect::<Result<Vec<_>>>()?;
            NSBasis::new(&variety.fan, classes)
        }
    }
}

fn parse_range(text: &str) -> Result<(Rational, Rational)> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("range {text:?} is not lo:hi")))?;
    Ok((parse_rational(lo)?, parse_rational(hi)?))
}

fn grid_rows(args: &GridArgs) -> Result<(GridSpec, Vec<GridRow>)> {
    let variety = load_variety(&args.variety)?;
    let basis = parse_basis(&variety, &args.basis)?;
    let ranges = args.ranges.iter().map(|r| parse_range(r)).collect::<Result<Vec<_>>>()?;
    let grid = GridSpec::new(basis.clone(), ranges, parse_rational(&args.step)?)?;
    let norm_basis = variety.ample_basis().unwrap_or(basis);
    let rows = evaluate_grid(&variety.fan, &grid, &norm_basis)?;
    Ok((grid, rows))
}

fn coord_header(grid: &GridSpec) -> Vec<String> {
    (1..=grid.basis.rank()).map(|i| format!("x{i}")).collect()
}

fn optional(q: &Option<Rational>) -> String {
    q.as_ref().map(format_rational).unwrap_or_default()
}

/// Exact rows in grid order.
pub fn grid_csv(grid: &GridSpec, rows: &[GridRow]) -> String {
    let mut header = coord_header(grid);
    header.extend(["kind", "norm", "s", "vol", "bound", "ratio"].map(String::from));
    let mut csv = header.join(",") + "\n";
    for row in rows {
        let mut fields: Vec<String> = row.coords.iter().map(format_rational).collect();
        fields.push(row.kind.label().to_string());
        fields.push(format_rational(&row.norm));
        fields.push(format_rational(&row.s));
        fields.push(format_rational(&row.vol));
        fields.push(optional(&row.bound));
        fields.push(optional(&row.ratio));
        csv.push_str(&fields.join(","));
        csv.push('\n');
    }
    csv
}

/// Decimal coordinates and `z = s`, one row per grid point.
pub fn plot_csv(grid: &GridSpec, rows: &[GridRow]) -> String {
    let mut header = coord_header(grid);
    header.extend(["z", "kind"].map(String::from));
    let mut csv = header.join(",") + "\n";
    for row in rows {
        let mut fields: Vec<String> = row.coords.iter().map(|q| to_decimal(q, DECIMAL_DIGITS)).collect();
        fields.push(to_decimal(&row.s, DECIMAL_DIGITS));
        fields.push(row.kind.label().to_string());
        csv.push_str(&fields.join(","));
        csv.push('\n');
    }
    csv
}
