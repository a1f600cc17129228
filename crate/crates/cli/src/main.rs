//! `snr`: batch front-end for the snr-lattice crate.
//!
//! Exit status: 0 success, 2 usage error, 3 domain error, 4 resource cap or
//! size guard, 5 internal error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use snr_lattice::boolmaps::{analyze, EnumerationLimits};
use snr_lattice::counting::{count_table, write_csv};
use snr_lattice::hasse::{build, to_dot, GenOrder};
use snr_lattice::{enumerate, enumerate_d_slice, ErrorKind, Label, LatticeParams, WeightFunction};

const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "snr",
    version,
    about = "Lattices S(n,r), weight functions and weighted boolean maps"
)]
struct Cli {
    /// Upper bound on worker threads; outputs do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the words of S(n,r), or of S(n,d,r) with --d, in canonical order.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the Hasse diagram and write it as DOT (and optionally JSON).
    Hasse {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = OrderArg::Outin)]
        order: OrderArg,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// CSV of s(n,r,k) computed three ways, for every n <= n-max.
    Count {
        #[arg(long = "n-max")]
        n_max: u32,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a function description file on every word.
    WeightsEval {
        #[arg(long = "fn")]
        function: PathBuf,
        #[arg(long)]
        d: u32,
    },
    /// Extremal counts over weighted boolean maps, as a JSON report.
    Gamma {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: Option<u32>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Census of weighted boolean maps versus numerically represented ones.
    Report {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(clap::Args, Debug)]
struct LimitArgs {
    /// Maximum number of maps to enumerate.
    #[arg(long, default_value_t = EnumerationLimits::default().cap)]
    cap: u64,
    /// Largest n to attempt.
    #[arg(long = "max-n", default_value_t = EnumerationLimits::default().max_n)]
    max_n: u32,
}

impl From<&LimitArgs> for EnumerationLimits {
    fn from(a: &LimitArgs) -> Self {
        EnumerationLimits {
            cap: a.cap,
            max_n: a.max_n,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Outin,
    Leftright,
}

impl From<OrderArg> for GenOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Outin => GenOrder::OutIn,
            OrderArg::Leftright => GenOrder::LeftRight,
        }
    }
}

#[derive(Serialize)]
struct SigmaRow {
    word: String,
    sigma: String,
    label: Label,
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    match cli.command {
        Command::Enumerate { n, r, d, format } => {
            let params = LatticeParams::new(n, r)?;
            let words = match d {
                Some(d) => enumerate_d_slice(params, d)?,
                None => enumerate(params),
            };
            match format {
                Format::Text => {
                    let mut out = io::stdout().lock();
                    for w in &words {
                        writeln!(out, "{w}")?;
                    }
                }
                Format::Json => {
                    let mut value = json!({ "n": n, "r": r, "words": words });
                    if let Some(d) = d {
                        value["d"] = json!(d);
                    }
                    print_json(&value)?;
                }
            }
        }
        Command::Hasse {
            n,
            r,
            order,
            dot,
            json,
        } => {
            let params = LatticeParams::new(n, r)?;
            let diagram = build(params, order.into());
            fs::write(&dot, to_dot(&diagram))
                .with_context(|| format!("writing {}", dot.display()))?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&diagram.to_dump())?;
                fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Count { n_max, out } => {
            let rows = count_table(n_max)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_csv(&rows, io::BufWriter::new(file))?;
                }
                None => write_csv(&rows, io::stdout().lock())?,
            }
        }
        Command::WeightsEval { function, d } => {
            let text = fs::read_to_string(&function)
                .with_context(|| format!("reading {}", function.display()))?;
            let f = WeightFunction::from_json_str(&text)?;
            let phi = f.phi_count(d)?;
            let induced = f.induced_map();
            let sigma: Vec<SigmaRow> = f
                .sigma_table()
                .into_iter()
                .map(|(w, s)| SigmaRow {
                    word: w.to_string(),
                    label: induced.label(&w),
                    sigma: s.to_string(),
                })
                .collect();
            let p = f.params();
            print_json(&json!({
                "n": p.n(),
                "r": p.r(),
                "d": d,
                "is_weight": f.is_weight(),
                "total": f.total().to_string(),
                "alpha_count": f.alpha_count(),
                "phi_count": phi,
                "sigma": sigma,
            }))?;
        }
        Command::Gamma { n, r, d, limits } => {
            let params = LatticeParams::new(n, r)?;
            let report = analyze(params, d, (&limits).into())?;
            print_json(&report.to_json())?;
        }
        Command::Report { n, r, limits } => {
            let params = LatticeParams::new(n, r)?;
            let report = analyze(params, None, (&limits).into())?;
            print_json(&report.to_json())?;
        }
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<snr_lattice::Error>() {
        Some(e) => match e.kind() {
            ErrorKind::Domain => EXIT_DOMAIN,
            ErrorKind::Resource => EXIT_RESOURCE,
        },
        None if err.downcast_ref::<io::Error>().is_some() => EXIT_DOMAIN,
        None => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal error: {info}");
        std::process::exit(i32::from(EXIT_INTERNAL));
    }));
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
