use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use chromroot::experiments::{
    identify_h, kn_minus_2k2, minq, rootcloud_graphs, rootcloud_order, verify_coeffs, verify_coeffs_random, verify_n3,
    verify_quartic, ExperimentReport, Settings,
};
use chromroot::graph::{parse_graph6, read_graph6_lines, write_graph6};
use chromroot::rootfind::{DEFAULT_PRECISION_BITS, DEFAULT_REAL_TOL, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "chromroot", version, about = "Chromatic polynomials and the real parts of their roots")]
struct Cli {
    /// Working precision of the root finder, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION_BITS)]
    precision_bits: usize,
    /// Imaginary parts up to this count as real.
    #[arg(long, global = true, default_value_t = DEFAULT_REAL_TOL)]
    tol: f64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record wall-clock time in the report (makes it non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Smallest q with pi(K_{p,q}, x + p) not quasi-stable.
    Minq {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 200)]
        q_max: usize,
    },
    /// Roots of every distinct chromatic polynomial of an order or a graph6 file.
    Rootcloud {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        order: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Quasi-stability of pi(G, x + n - 1) when chi >= n - 3.
    VerifyN3 {
        #[arg(long)]
        n: usize,
    },
    /// Non-real roots of K_n minus two disjoint edges.
    #[command(name = "kn-minus-2k2")]
    KnMinus2k2 {
        #[arg(long, default_value_t = 4)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Coefficients by every available route.
    VerifyCoeffs {
        #[arg(long)]
        n: usize,
        /// Random graphs of order at most n instead of all labeled graphs.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Random edge orderings for the broken-cycle oracle.
        #[arg(long, default_value_t = 5)]
        orderings: usize,
        /// graph6 of H; found by identify-h when absent.
        #[arg(long)]
        h: Option<String>,
    },
    /// Search for the pattern H of the h_(n-4) formula.
    #[command(name = "identify-h")]
    IdentifyH {
        #[arg(long, default_value_t = 500)]
        corpus_size: usize,
    },
    /// The quartic identity on a grid.
    VerifyQuartic {
        #[arg(long, default_value_t = 6)]
        p_max: usize,
        #[arg(long, default_value_t = 50)]
        q_max: usize,
    },
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

/// Items as CSV; columns are the keys of the first item.
fn items_csv(report: &ExperimentReport) -> String {
    let Some(Value::Object(first)) = report.items.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(",");
    out.push('\n');
    for it in &report.items {
        let row: Vec<String> = keys.iter().map(|k| cell(it.get(k.as_str()).unwrap_or(&Value::Null))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global()?;
    }
    let settings = Settings { precision_bits: cli.precision_bits, tol: cli.tol, seed: cli.seed };
    let start = Instant::now();
    let mut csv = None;
    let mut report = match &cli.command {
        Command::Minq { p, q_max } => minq(*p, *q_max, &settings)?,
        Command::Rootcloud { order, file } => {
            let cloud = match (order, file) {
                (Some(n), _) => rootcloud_order(*n, &settings)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    rootcloud_graphs(&read_graph6_lines(&text)?, &settings)?
                }
                (None, None) => bail!("rootcloud needs --order or --file"),
            };
            csv = Some(cloud.to_csv());
            cloud.report
        }
        Command::VerifyN3 { n } => verify_n3(*n)?,
        Command::KnMinus2k2 { from, to } => kn_minus_2k2(*from, *to, &settings)?,
        Command::VerifyCoeffs { n, random, count, orderings, h } => {
            let h = match h {
                Some(text) => parse_graph6(text)?,
                None => {
                    let found = identify_h(200, cli.seed)?;
                    let Some(h) = found.unique().cloned() else {
                        bail!("identify-h did not pin a unique H; pass --h");
                    };
                    eprintln!("using H = {}", write_graph6(&h)?);
                    h
                }
            };
            if *random {
                verify_coeffs_random(*n, *count, Some(&h), *orderings, cli.seed)?
            } else {
                verify_coeffs(*n, Some(&h), *orderings, cli.seed)?
            }
        }
        Command::IdentifyH { corpus_size } => identify_h(*corpus_size, cli.seed)?.report,
        Command::VerifyQuartic { p_max, q_max } => verify_quartic(*p_max, *q_max)?,
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => csv.unwrap_or_else(|| items_csv(&report)),
    };
    emit(cli, &text)?;
    if cli.format == Format::Csv {
        let v = report.violations();
        eprintln!("{}: {}", report.experiment, if v.is_empty() { "all checks passed".into() } else { format!("{} violation(s)", v.len()) });
    }
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
