//! Command-line front end: compute single quantities, run the identity
//! catalog, and dump exact q-expansions.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use mlab::lvalues::{f_cube_with_progress, f_integral, l_elliptic, LatticeSumSpec};
use mlab::mahler::{evaluate, Family, MahlerQuery, Route};
use mlab::qseries::{parse_expr, series_of};
use mlab::verify::{list_identities, run, run_all, Status, VerifyReport};

#[derive(Parser)]
#[command(
    name = "mlab",
    about = "Mahler measures, lattice sums and elliptic L-values",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single quantity.
    Compute {
        #[command(subcommand)]
        what: ComputeCommand,
    },
    /// Run identity checks from the catalog.
    Verify(VerifyArgs),
    /// Expand an eta-quotient expression as an exact q-series.
    Series {
        /// Expression over eta(q^j), phi, phineg, psi, psineg, a, b, c, L,
        /// qpow(r) with + - * / and integer ^.
        #[arg(long)]
        expr: String,
        /// Truncation order: coefficients are exact below this exponent.
        #[arg(long, default_value_t = 20)]
        terms: i64,
    },
    /// List catalog identities.
    List {
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ComputeCommand {
    /// Mahler measure of one of the three polynomial families.
    Mahler {
        /// m: alpha + X + 1/X + Y + 1/Y; g: (1+X)(1+Y)(X+Y) - alpha XY;
        /// n: X^3 + Y^3 + 1 - alpha XY
        #[arg(long)]
        family: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Quadruple lattice sum F(b,c).
    Lattice {
        /// positive rational, e.g. 2 or 3/2
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value = "integral")]
        method: String,
        /// cube half-width for --method cube (capped at 60)
        #[arg(long, default_value_t = 10)]
        n: u32,
    },
    /// L(E, 2) for a supported conductor.
    Lvalue {
        #[arg(long)]
        conductor: u32,
    },
    /// Generalized hypergeometric series pFq.
    Hyper {
        /// comma-separated upper parameters, e.g. 1/2,1/2,1/2
        #[arg(long)]
        upper: String,
        /// comma-separated lower parameters
        #[arg(long)]
        lower: String,
        #[arg(long)]
        z: f64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single identity by id.
    #[arg(long, conflicts_with_all = ["tag", "all"])]
    id: Option<String>,
    /// Run every identity carrying this tag.
    #[arg(long, conflicts_with = "all")]
    tag: Option<String>,
    /// Run the whole catalog.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override every selected record's tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Worker threads; defaults to MLAB_PARALLELISM or 1.
    #[arg(long)]
    parallelism: Option<usize>,
}

/// Report shape emitted by `verify --format json`.
#[derive(Serialize, Deserialize)]
struct ReportRow {
    id: String,
    description: String,
    reference: String,
    lhs: f64,
    rhs: f64,
    abs_err: f64,
    tol: f64,
    status: String,
    seconds: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                mlab::Error::Parse { .. }
                | mlab::Error::Domain(_)
                | mlab::Error::UnknownIdentity(_) => ExitCode::from(2),
                mlab::Error::Convergence { .. } => ExitCode::from(1),
            }
        }
    }
}

fn dispatch(cli: Cli) -> mlab::Result<ExitCode> {
    match cli.command {
        Command::Compute { what } => compute(what),
        Command::Verify(args) => verify(args),
        Command::Series { expr, terms } => series(&expr, terms),
        Command::List { tag, format } => list(tag.as_deref(), format),
    }
}

fn parse_rational(s: &str) -> mlab::Result<Rational64> {
    let parts: Vec<&str> = s.split('/').collect();
    let bad = || mlab::Error::Parse {
        position: 0,
        message: format!("expected a rational like 3 or 3/2, got '{s}'"),
    };
    match parts.as_slice() {
        [n] => Ok(Rational64::new(n.trim().parse().map_err(|_| bad())?, 1)),
        [n, d] => Ok(Rational64::new(
            n.trim().parse().map_err(|_| bad())?,
            d.trim().parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn parse_f64_list(s: &str) -> mlab::Result<Vec<f64>> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            let bad = || mlab::Error::Parse {
                position: 0,
                message: format!("bad parameter '{p}'"),
            };
            if let Some((n, d)) = p.split_once('/') {
                let n: f64 = n.trim().parse().map_err(|_| bad())?;
                let d: f64 = d.trim().parse().map_err(|_| bad())?;
                Ok(n / d)
            } else {
                p.parse().map_err(|_| bad())
            }
        })
        .collect()
}

fn compute(what: ComputeCommand) -> mlab::Result<ExitCode> {
    match what {
        ComputeCommand::Mahler {
            family,
            alpha,
            route,
        } => {
            let family = match family.as_str() {
                "m" | "M" => Family::M,
                "g" | "G" => Family::G,
                "n" | "N" => Family::N,
                other => {
                    return Err(mlab::Error::Parse {
                        position: 0,
                        message: format!("unknown family '{other}', expected m, g or n"),
                    })
                }
            };
            let route = match route.as_str() {
                "auto" => Route::Auto,
                "direct" => Route::Direct,
                "hyper" => Route::Hyper,
                "j" | "j_integral" => Route::JIntegral,
                other => {
                    return Err(mlab::Error::Parse {
                        position: 0,
                        message: format!("unknown route '{other}'"),
                    })
                }
            };
            let value = evaluate(&MahlerQuery {
                family,
                alpha,
                route,
            })?;
            println!("{value:.15}");
        }
        ComputeCommand::Lattice { b, c, method, n } => {
            let spec = LatticeSumSpec::new(parse_rational(&b)?, parse_rational(&c)?)?;
            match method.as_str() {
                "integral" => {
                    let v = f_integral(&spec)?;
                    println!("{v:.15}");
                }
                "cube" => {
                    let n = n.min(60);
                    let mut last = 0;
                    let v = f_cube_with_progress(&spec, n, &mut |done, total| {
                        let pct = done * 100 / total;
                        if pct >= last + 25 && total > 8 {
                            eprintln!("cube summation: {pct}%");
                            last = pct;
                        }
                    });
                    println!("{v:.15}");
                }
                other => {
                    return Err(mlab::Error::Parse {
                        position: 0,
                        message: format!("unknown method '{other}', expected integral or cube"),
                    })
                }
            }
        }
        ComputeCommand::Lvalue { conductor } => {
            let v = l_elliptic(conductor)?;
            println!("{v:.15}");
        }
        ComputeCommand::Hyper { upper, lower, z } => {
            let v =
                mlab::hypergeo::pfq_eval(&parse_f64_list(&upper)?, &parse_f64_list(&lower)?, z)?;
            println!("{v:.15}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn row(report: &VerifyReport) -> ReportRow {
    let rec = list_identities(Some(report.id.as_str())).into_iter().next();
    let (description, reference) = rec
        .map(|r| (r.description, r.reference))
        .unwrap_or_default();
    ReportRow {
        id: report.id.clone(),
        description,
        reference,
        lhs: report.lhs,
        rhs: report.rhs,
        abs_err: report.abs_diff,
        tol: report.tolerance,
        status: match report.status {
            Status::Pass => "pass".into(),
            Status::Fail => "fail".into(),
            Status::Error => "error".into(),
        },
        seconds: report.seconds,
    }
}

fn print_reports(reports: &[VerifyReport], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                let status = match r.status {
                    Status::Pass => "pass ",
                    Status::Fail => "FAIL ",
                    Status::Error => "ERROR",
                };
                println!(
                    "{status} {:28} |lhs-rhs| = {:10.3e}  tol = {:8.1e}  ({:.2}s){}",
                    r.id,
                    r.abs_diff,
                    r.tolerance,
                    r.seconds,
                    r.message
                        .as_deref()
                        .map(|m| format!("  [{m}]"))
                        .unwrap_or_default()
                );
            }
            let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
            println!("{pass}/{} pass", reports.len());
        }
        Format::Json => {
            let rows: Vec<ReportRow> = reports.iter().map(row).collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("id,description,reference,lhs,rhs,abs_err,tol,status,seconds");
            for r in reports {
                let row = row(r);
                println!(
                    "{},{:?},{:?},{},{},{},{},{},{}",
                    row.id,
                    row.description,
                    row.reference,
                    row.lhs,
                    row.rhs,
                    row.abs_err,
                    row.tol,
                    row.status,
                    row.seconds
                );
            }
        }
    }
}

fn verify(args: VerifyArgs) -> mlab::Result<ExitCode> {
    let parallelism = args
        .parallelism
        .or_else(|| {
            std::env::var("MLAB_PARALLELISM")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);

    let mut reports = if let Some(id) = &args.id {
        vec![run(id)?]
    } else if let Some(tag) = &args.tag {
        let reports = run_all(Some(tag), parallelism);
        if reports.is_empty() {
            return Err(mlab::Error::UnknownIdentity(format!("tag '{tag}'")));
        }
        reports
    } else {
        run_all(None, parallelism)
    };

    if let Some(tol) = args.tolerance {
        for r in reports.iter_mut() {
            r.tolerance = tol;
            if r.status != Status::Error {
                r.status = if r.abs_diff <= tol {
                    Status::Pass
                } else {
                    Status::Fail
                };
            }
        }
    }
    print_reports(&reports, args.format);

    // Nonzero exit if an explicitly selected id fails, or if any non-control
    // record of a tag/all selection fails.
    let controls: std::collections::HashSet<String> = list_identities(None)
        .into_iter()
        .filter(|r| r.control)
        .map(|r| r.id)
        .collect();
    let bad = if args.id.is_some() {
        reports.iter().any(|r| r.status != Status::Pass)
    } else {
        reports
            .iter()
            .any(|r| r.status != Status::Pass && !controls.contains(&r.id))
    };
    Ok(if bad {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn series(expr: &str, terms: i64) -> mlab::Result<ExitCode> {
    if terms <= 0 {
        return Err(mlab::Error::Parse {
            position: 0,
            message: "--terms must be positive".into(),
        });
    }
    let tree = parse_expr(expr)?;
    let s = series_of(&tree, Rational64::new(terms, 1))?;
    print!("{s}");
    Ok(ExitCode::SUCCESS)
}

fn list(tag: Option<&str>, format: Format) -> mlab::Result<ExitCode> {
    let records = list_identities(tag);
    match format {
        Format::Text => {
            for r in &records {
                let kind = match r.kind {
                    mlab::verify::Kind::ExactSeries => "exact",
                    mlab::verify::Kind::Numeric => "numeric",
                };
                println!(
                    "{:28} {:7} [{}] {}",
                    r.id,
                    kind,
                    r.tags.join(","),
                    r.description
                );
            }
            println!("{} identities", records.len());
        }
        Format::Json | Format::Csv => {
            println!("{}", serde_json::to_string_pretty(&records).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
