//! Command line front end: evaluate functions at a point, tabulate them over
//! grids, run the identity verification suite, print exact constants.
//!
//! Exit codes: 0 success (or suite pass), 1 verification failure, 2 usage
//! error, 3 domain error.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use altgamma::alt_zeta::{
    alt_hurwitz_zeta, alt_zeta_deriv0, alt_zeta_deriv0_const, eta, euler_constant_tilde,
};
use altgamma::classical::{beta_function, digamma, gauss_2f1_unit, hurwitz_zeta, log_gamma, polygamma};
use altgamma::tilde_digamma::{tilde_digamma, tilde_digamma_integer, tilde_polygamma};
use altgamma::tilde_gamma::{
    log_tilde_gamma, tilde_gamma, tilde_gamma_extended, tilde_gamma_integer, ExtendedPoint,
};
use altgamma::verify::{default_grids, run_suite, GridSpec};
use altgamma::{Error, EvalConfig, EvalResult};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;

/// Largest argument routed through the exact integer special values.
const EXACT_INTEGER_MAX: f64 = 512.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Parser)]
#[command(
    name = "altgamma",
    version,
    about = "Alternating Hurwitz zeta function and its gamma-type companions"
)]
struct Cli {
    /// Output format (also via ALTGAMMA_FORMAT)
    #[arg(long, global = true, value_enum, env = "ALTGAMMA_FORMAT", default_value = "plain")]
    format: Format,

    /// Target absolute error for evaluation
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Series/summation term budget
    #[arg(long, global = true)]
    max_terms: Option<usize>,

    /// Quadrature refinement level cap
    #[arg(long, global = true)]
    quad_levels: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at a point
    Eval {
        /// One of: tilde-gamma, log-tilde-gamma, tilde-gamma-extended,
        /// tilde-digamma, tilde-polygamma, alt-zeta, alt-zeta-deriv0, eta,
        /// hurwitz-zeta, log-gamma, digamma, polygamma, beta, 2f1-unit
        function: String,
        /// Function arguments, in order
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<f64>,
    },
    /// Tabulate a single-variable function over a grid
    Table {
        function: String,
        /// Grid spacing: linear or logarithmic
        spacing: String,
        #[arg(allow_negative_numbers = true)]
        start: f64,
        #[arg(allow_negative_numbers = true)]
        stop: f64,
        count: usize,
    },
    /// Run identity checks and print the report as JSON
    Verify {
        /// Identity ids to run (all when omitted)
        identities: Vec<String>,
    },
    /// Print the exact constants with numeric renderings
    Constants,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let cfg = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let rendered = match cli.command {
        Command::Eval { ref function, ref args } => cmd_eval(function, args, cli.format, &cfg),
        Command::Table {
            ref function,
            ref spacing,
            start,
            stop,
            count,
        } => cmd_table(function, spacing, start, stop, count, cli.format, &cfg),
        Command::Verify { ref identities } => return cmd_verify(identities, &cfg),
        Command::Constants => Ok(render_constants(cli.format)),
    };
    match rendered {
        Ok(out) => {
            write_stdout(&out);
            0
        }
        Err(e) => fail(&e),
    }
}

/// Writes the payload; a consumer that stopped reading is not an error.
fn write_stdout(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let r = out.write_all(s.as_bytes()).and_then(|_| out.flush());
    if let Err(e) = r {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(EXIT_USAGE);
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    match e {
        Error::Domain(_) | Error::Pole(_) => EXIT_DOMAIN,
        Error::Parameter(_) => EXIT_USAGE,
    }
}

fn build_config(cli: &Cli) -> Result<EvalConfig, Error> {
    let mut cfg = EvalConfig::default();
    if let Some(tol) = cli.tol {
        cfg = cfg.with_target_abs_error(tol)?;
    }
    if let Some(mt) = cli.max_terms {
        cfg = cfg.with_max_terms(mt)?;
    }
    if let Some(ql) = cli.quad_levels {
        cfg = cfg.with_quadrature_levels(ql)?;
    }
    Ok(cfg)
}

/// Result of one function evaluation: a plain value or an extended-plane
/// point that may be a pole or a zero.
enum Outcome {
    Value(EvalResult),
    Extended(ExtendedPoint),
}

fn arity_error(function: &str, want: usize, got: usize) -> Error {
    Error::Parameter(format!("{function} takes {want} argument(s), got {got}"))
}

fn nonneg_integer_arg(function: &str, name: &str, v: f64) -> Result<usize, Error> {
    if v < 0.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
        return Err(Error::Parameter(format!(
            "{function} needs nonnegative integer {name}, got {v}"
        )));
    }
    Ok(v as usize)
}

/// Exact special-value routing for integer arguments keeps e.g.
/// `eval tilde-gamma 1` bit-identical to the rational-times-pi constant.
fn exact_integer(x: f64) -> Option<u32> {
    if x >= 1.0 && x <= EXACT_INTEGER_MAX && x.fract() == 0.0 {
        Some(x as u32)
    } else {
        None
    }
}

fn evaluate(function: &str, args: &[f64], cfg: &EvalConfig) -> Result<Outcome, Error> {
    let need = |want: usize| -> Result<(), Error> {
        if args.len() != want {
            Err(arity_error(function, want, args.len()))
        } else {
            Ok(())
        }
    };
    let value = |r: EvalResult| Ok(Outcome::Value(r));
    match function {
        "tilde-gamma" => {
            need(1)?;
            if let Some(n) = exact_integer(args[0]) {
                let v = tilde_gamma_integer(n)?.numeric();
                return value(EvalResult::exact(v));
            }
            value(tilde_gamma(args[0])?)
        }
        "log-tilde-gamma" => {
            need(1)?;
            value(log_tilde_gamma(args[0])?)
        }
        "tilde-gamma-extended" => {
            need(1)?;
            Ok(Outcome::Extended(tilde_gamma_extended(args[0])))
        }
        "tilde-digamma" => {
            need(1)?;
            if let Some(n) = exact_integer(args[0]) {
                let v = tilde_digamma_integer(n)?.numeric();
                return value(EvalResult::exact(v));
            }
            value(tilde_digamma(args[0])?)
        }
        "tilde-polygamma" => {
            need(2)?;
            let n = nonneg_integer_arg(function, "order", args[0])?;
            value(tilde_polygamma(n, args[1], cfg)?)
        }
        "alt-zeta" => {
            need(2)?;
            value(alt_hurwitz_zeta(args[0], args[1], cfg)?)
        }
        "alt-zeta-deriv0" => {
            need(1)?;
            value(alt_zeta_deriv0(args[0])?)
        }
        "eta" => {
            need(1)?;
            value(eta(args[0], cfg)?)
        }
        "hurwitz-zeta" => {
            need(2)?;
            value(hurwitz_zeta(args[0], args[1], cfg)?)
        }
        "log-gamma" => {
            need(1)?;
            value(log_gamma(args[0])?)
        }
        "digamma" => {
            need(1)?;
            value(digamma(args[0])?)
        }
        "polygamma" => {
            need(2)?;
            let n = nonneg_integer_arg(function, "order", args[0])?;
            value(polygamma(n, args[1], cfg)?)
        }
        "beta" => {
            need(2)?;
            value(beta_function(args[0], args[1])?)
        }
        "2f1-unit" => {
            need(3)?;
            value(gauss_2f1_unit(args[0], args[1], args[2])?)
        }
        other => Err(Error::Parameter(format!("unknown function: {other}"))),
    }
}

fn cmd_eval(function: &str, args: &[f64], format: Format, cfg: &EvalConfig) -> Result<String, Error> {
    Ok(match evaluate(function, args, cfg)? {
        Outcome::Value(r) => render_eval(&r, format),
        Outcome::Extended(p) => render_extended(&p, format),
    })
}

fn render_eval(r: &EvalResult, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(r).expect("serializable")),
        Format::Csv => format!(
            "value,abs_error_estimate,method,terms_used\n{},{:e},{},{}\n",
            r.value, r.abs_error_estimate, r.method, r.terms_used
        ),
        Format::Plain => format!(
            "value = {}\nabs_error_estimate = {:e}\nmethod = {}\nterms_used = {}\n",
            r.value, r.abs_error_estimate, r.method, r.terms_used
        ),
    }
}

fn render_extended(p: &ExtendedPoint, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(p).expect("serializable")),
        Format::Csv => {
            let header = "kind,value,abs_error_estimate,method,terms_used\n";
            match p {
                ExtendedPoint::Pole => format!("{header}pole,,,,\n"),
                ExtendedPoint::Zero => format!("{header}zero,0,0,,\n"),
                ExtendedPoint::Finite(r) => format!(
                    "{header}finite,{},{:e},{},{}\n",
                    r.value, r.abs_error_estimate, r.method, r.terms_used
                ),
            }
        }
        Format::Plain => match p {
            ExtendedPoint::Pole => "kind = pole\n".to_string(),
            ExtendedPoint::Zero => "kind = zero\nvalue = 0\n".to_string(),
            ExtendedPoint::Finite(r) => format!("kind = finite\n{}", render_eval(r, Format::Plain)),
        },
    }
}

/// Functions of one variable, eligible for `table`.
const TABLE_FUNCTIONS: &[&str] = &[
    "tilde-gamma",
    "log-tilde-gamma",
    "tilde-gamma-extended",
    "tilde-digamma",
    "alt-zeta-deriv0",
    "eta",
    "log-gamma",
    "digamma",
];

fn cmd_table(
    function: &str,
    spacing: &str,
    start: f64,
    stop: f64,
    count: usize,
    format: Format,
    cfg: &EvalConfig,
) -> Result<String, Error> {
    if !TABLE_FUNCTIONS.contains(&function) {
        return Err(Error::Parameter(format!(
            "table supports single-variable functions {TABLE_FUNCTIONS:?}, got {function}"
        )));
    }
    let grid = match spacing {
        "linear" => GridSpec::linear(start, stop, count)?,
        "logarithmic" => GridSpec::logarithmic(start, stop, count)?,
        other => {
            return Err(Error::Parameter(format!(
                "spacing must be linear or logarithmic, got {other}"
            )))
        }
    };
    let mut rows = Vec::with_capacity(count);
    for x in grid.points() {
        rows.push((x, evaluate(function, &[x], cfg)?));
    }

    let mut out = String::new();
    match format {
        Format::Json => {
            let cells: Vec<serde_json::Value> = rows
                .iter()
                .map(|(x, outcome)| match outcome {
                    Outcome::Value(r) | Outcome::Extended(ExtendedPoint::Finite(r)) => {
                        serde_json::json!({
                            "x": x,
                            "value": r.value,
                            "abs_error_estimate": r.abs_error_estimate,
                        })
                    }
                    Outcome::Extended(ExtendedPoint::Pole) => {
                        serde_json::json!({ "x": x, "value": "pole" })
                    }
                    Outcome::Extended(ExtendedPoint::Zero) => {
                        serde_json::json!({ "x": x, "value": 0.0, "abs_error_estimate": 0.0 })
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::to_string(&cells).expect("serializable"));
        }
        Format::Csv | Format::Plain => {
            let sep = if format == Format::Csv { "," } else { " " };
            if format == Format::Csv {
                out.push_str("x,value,abs_error_estimate\n");
            }
            for (x, outcome) in &rows {
                match outcome {
                    Outcome::Value(r) | Outcome::Extended(ExtendedPoint::Finite(r)) => {
                        let _ = writeln!(out, "{x}{sep}{}{sep}{:e}", r.value, r.abs_error_estimate);
                    }
                    Outcome::Extended(ExtendedPoint::Pole) => {
                        let _ = writeln!(out, "{x}{sep}pole{sep}");
                    }
                    Outcome::Extended(ExtendedPoint::Zero) => {
                        let _ = writeln!(out, "{x}{sep}0{sep}0");
                    }
                }
            }
        }
    }
    Ok(out)
}

fn cmd_verify(identities: &[String], cfg: &EvalConfig) -> i32 {
    let all = default_grids();
    let selection: BTreeMap<String, GridSpec> = if identities.is_empty() {
        all
    } else {
        let mut sel = BTreeMap::new();
        for id in identities {
            match all.get(id) {
                Some(grid) => {
                    sel.insert(id.clone(), *grid);
                }
                None => {
                    eprintln!("error: unknown identity id: {id}");
                    return EXIT_USAGE;
                }
            }
        }
        sel
    };
    match run_suite(&selection, cfg) {
        Ok(report) => {
            let payload = serde_json::to_string(&report).expect("serializable");
            write_stdout(&format!("{payload}\n"));
            if report.pass {
                0
            } else {
                EXIT_VERIFY_FAIL
            }
        }
        Err(e) => fail(&e),
    }
}

fn render_constants(format: Format) -> String {
    let consts = [
        ("alt-euler-constant", euler_constant_tilde()),
        ("alt-zeta-deriv0(at 1)", alt_zeta_deriv0_const()),
        ("tilde-gamma(1)", tilde_gamma_integer(1).expect("static")),
        ("tilde-gamma(2)", tilde_gamma_integer(2).expect("static")),
    ];
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = consts
                .iter()
                .map(|(name, sv)| {
                    serde_json::json!({
                        "name": name,
                        "exact": sv.to_string(),
                        "value": sv.numeric(),
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable"));
        }
        Format::Csv => {
            out.push_str("name,exact,value\n");
            for (name, sv) in &consts {
                let _ = writeln!(out, "{name},{sv},{}", sv.numeric());
            }
        }
        Format::Plain => {
            for (name, sv) in &consts {
                let _ = writeln!(out, "{name} = {sv} = {}", sv.numeric());
            }
        }
    }
    out
}
