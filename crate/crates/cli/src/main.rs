//! `borwein`: exact coefficients, asymptotic estimates and the verification
//! suites from the command line.
//!
//! Exit status: 0 on success, 1 if an asserted check fails, 2 on usage or
//! hypothesis errors.

mod report;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use borwein_core::asymptotics::estimate_report;
use borwein_core::series::{borwein_coeffs, format_rational};
use borwein_core::{parse_rational, Rational, Variant, DEFAULT_PRECISION};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use report::{decimal, emit, Config, Format, Report, TextRow, Verdicts};
use verify::{Check, Suite};

#[derive(Parser)]
#[command(name = "borwein", version, about = "Coefficients, estimates and identity checks for Borwein products")]
struct Cli {
    /// Working precision in bits for floating-point evaluations.
    #[arg(long, global = true, env = "BORWEIN_PRECISION", default_value_t = DEFAULT_PRECISION,
          value_parser = clap::value_parser!(u32).range(53..))]
    precision: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for independent items; output order never changes.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallelism: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients of G_p(q)^δ.
    Coeffs(CoeffsArgs),
    /// Asymptotic main term and error bound per n.
    Estimate(EstimateArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long)]
    p: u64,
    /// Exact rational: "a/b", integer or decimal.
    #[arg(long, value_parser = rational_arg)]
    delta: Rational,
    #[arg(long)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    ProofGeneral,
    AsStated,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, value_parser = rational_arg)]
    delta: Rational,
    /// A single n or an inclusive range "a..b".
    #[arg(long, value_parser = range_arg)]
    n: (u64, u64),
    /// Number of terms N in the main sum.
    #[arg(long = "big-n", short = 'N')]
    big_n: u64,
    #[arg(long, value_enum, default_value_t = VariantArg::ProofGeneral)]
    variant: VariantArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Overrides every suite's default order.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_parser = rational_arg)]
    delta: Option<Rational>,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn range_arg(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct CoeffRow {
    n: usize,
    numerator: String,
    denominator: String,
}

impl TextRow for CoeffRow {
    fn text(&self) -> String {
        if self.denominator == "1" {
            format!("{} {}", self.n, self.numerator)
        } else {
            format!("{} {}/{}", self.n, self.numerator, self.denominator)
        }
    }
}

#[derive(Serialize)]
struct EstimateRow {
    p: u64,
    delta: String,
    n: u64,
    big_n: u64,
    variant: Variant,
    exact_coeff: String,
    main_term: String,
    error_bound: String,
    within_bound: bool,
    predicted_sign: i8,
    actual_sign: i8,
}

impl TextRow for EstimateRow {
    fn text(&self) -> String {
        format!(
            "n={} exact={} main={} bound={} within={} sign={}/{}",
            self.n,
            self.exact_coeff,
            self.main_term,
            self.error_bound,
            self.within_bound,
            self.predicted_sign,
            self.actual_sign
        )
    }
}

/// A usage or hypothesis error (exit status 2).
struct Failure(String);

fn config(cli: &Cli, params: serde_json::Value) -> Config {
    Config { precision_bits: cli.precision, format: cli.format, parallelism: cli.parallelism as usize, params }
}

fn pool(cli: &Cli) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(cli.parallelism as usize).build().expect("thread pool")
}

fn coeffs(cli: &Cli, args: &CoeffsArgs) -> Result<(Report<CoeffRow>, bool), Failure> {
    let series = borwein_coeffs(args.p, &args.delta, args.order).map_err(|e| Failure(e.to_string()))?;
    let rows = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| CoeffRow { n, numerator: c.numer().to_string(), denominator: c.denom().to_string() })
        .collect();
    let params = json!({ "p": args.p, "delta": format_rational(&args.delta), "order": args.order });
    let report = Report {
        command: "coeffs",
        config: config(cli, params),
        rows: Some(rows),
        checks: None,
        verdicts: Verdicts { all_passed: true, failed: Vec::new() },
    };
    Ok((report, true))
}

fn estimate(cli: &Cli, args: &EstimateArgs) -> Result<(Report<EstimateRow>, bool), Failure> {
    let variant = match args.variant {
        VariantArg::ProofGeneral => Variant::ProofGeneral,
        VariantArg::AsStated => Variant::AsStated,
    };
    let (from, to) = args.n;
    let prec = cli.precision;
    let usage = |e: borwein_core::Error| Failure(e.to_string());
    // hypotheses are checked on the whole range before any work
    for n in [from, to] {
        estimate_report(args.p, &args.delta, n, args.big_n, &Rational::new(), variant, 53).map_err(usage)?;
    }
    let series = borwein_coeffs(args.p, &args.delta, to as usize).map_err(usage)?;
    let reports = pool(cli).install(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| estimate_report(args.p, &args.delta, n, args.big_n, &series.coeffs()[n as usize], variant, prec))
            .collect::<borwein_core::Result<Vec<_>>>()
    });
    let reports = reports.map_err(usage)?;
    let rows: Vec<EstimateRow> = reports
        .into_iter()
        .map(|r| EstimateRow {
            p: r.p,
            delta: format_rational(&r.delta),
            n: r.n,
            big_n: r.big_n,
            variant: r.variant,
            exact_coeff: format_rational(&r.exact_coeff),
            main_term: decimal(&r.main_term),
            error_bound: decimal(&r.error_bound),
            within_bound: r.within_bound,
            predicted_sign: r.predicted_sign,
            actual_sign: r.actual_sign,
        })
        .collect();
    // the bound is only asserted for the general reading
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| variant == Variant::ProofGeneral && !r.within_bound)
        .map(|r| format!("n={}", r.n))
        .collect();
    let ok = failed.is_empty();
    let params = json!({
        "p": args.p,
        "delta": format_rational(&args.delta),
        "n_from": from,
        "n_to": to,
        "big_n": args.big_n,
        "variant": variant,
    });
    let report = Report {
        command: "estimate",
        config: config(cli, params),
        rows: Some(rows),
        checks: None,
        verdicts: Verdicts { all_passed: ok, failed },
    };
    Ok((report, ok))
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<(Report<Check>, bool), Failure> {
    let params = verify::Params {
        order: args.order,
        k: args.k,
        p: args.p,
        delta: args.delta.clone(),
        precision: cli.precision,
    };
    let usage = |e: borwein_core::Error| Failure(e.to_string());
    let jobs = verify::plan(args.suite, &params).map_err(usage)?;
    let checks = pool(cli).install(|| jobs.par_iter().map(|job| job()).collect::<borwein_core::Result<Vec<_>>>());
    let checks = checks.map_err(usage)?;
    let failed: Vec<String> =
        checks.iter().filter(|c| c.asserted && !c.passed).map(|c| format!("{}: {}", c.suite, c.name)).collect();
    let ok = failed.is_empty();
    let json_params = json!({
        "suite": args.suite,
        "order": args.order,
        "k": args.k,
        "p": args.p,
        "delta": args.delta.as_ref().map(format_rational),
    });
    let report = Report {
        command: "verify",
        config: config(cli, json_params),
        rows: None,
        checks: Some(checks),
        verdicts: Verdicts { all_passed: ok, failed },
    };
    Ok((report, ok))
}

fn finish<R: Serialize + TextRow>(result: Result<(Report<R>, bool), Failure>) -> ExitCode {
    match result {
        Ok((report, ok)) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if let Err(e) = emit(&report, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Coeffs(a) => finish(coeffs(&cli, a)),
        Command::Estimate(a) => finish(estimate(&cli, a)),
        Command::Verify(a) => finish(verify(&cli, a)),
    }
}
