//! `logconcave`: exact coefficient rows of `prod (1-q^n)^{-n^{d-1}}`,
//! their log-concavity landscape, envelope bounds, threshold constants,
//! and the built-in verification suites.
//!
//! Exit codes: 0 = success / all suites pass, 1 = a suite failed or found
//! a counterexample, 2 = usage or input error.

mod emit;

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use emit::{effective_format, Format, Table};
use logconcave::bounds::{figure2_csv, figure2_data, pd_bounds, threshold_constants};
use logconcave::cache::{file_cached_row, RowCache};
use logconcave::maxprod::product_spectrum;
use logconcave::series::{compute_row, delta, CustomRule, ExponentSequence};
use logconcave::verify::{
    self, boundary_case_suite, conjecture_scan, corollary_suite, landscape, table1_suite,
    table2_suite, table3_suite, table4_suite, theorem1_suite, VerificationReport,
};

#[derive(Parser)]
#[command(name = "logconcave", version, about)]
struct Cli {
    /// Worker threads for grid and suite computations (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for persisted coefficient rows.
    #[arg(
        long,
        global = true,
        env = "LOGCONCAVE_CACHE",
        default_value = ".logconcave-cache"
    )]
    cache_dir: PathBuf,

    /// Output format; defaults to markdown on a terminal, CSV when piped.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print p_d(0..=n) and persist the row in the cache directory.
    Compute {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    /// Print Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1) and its class.
    Delta {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u64,
    },
    /// Print the exception grid for d <= dmax, n <= nmax.
    Landscape {
        #[arg(long)]
        dmax: u32,
        #[arg(long)]
        nmax: u64,
    },
    /// Print the largest product values over partitions of n, with
    /// complete witness lists.
    Maxprod {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        top: usize,
    },
    /// Print the exact-rational envelope for p_d(n).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u32,
    },
    /// Print the threshold constants applicable at n, with ceilings.
    Constants {
        #[arg(long)]
        n: u64,
    },
    /// Emit the threshold comparison series as CSV.
    Figure2 {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
    },
    /// Run verification suites; exit 1 on any failure or counterexample.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Override the n cap (table1 default 2000, conjectures default 200).
        #[arg(long)]
        nmax: Option<u64>,
        /// Override the d cap (theorem1 default 200, conjectures default 60).
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Compute a row for a custom exponent rule read from a file of
    /// whitespace-separated integers alpha_1 alpha_2 ... (never cached).
    CustomAlpha {
        #[arg(long)]
        rule_file: PathBuf,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Table1,
    Table2,
    Table3,
    Table4,
    Theorem1,
    Corollary,
    Boundary,
    Conjectures,
    All,
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    init_pool(cli.jobs);
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

#[cfg(feature = "parallel")]
fn init_pool(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn init_pool(jobs: Option<usize>) {
    if jobs.is_some() {
        eprintln!("note: built without the parallel feature; --jobs is ignored");
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let format = effective_format(cli.format);
    let cache_dir = cli.cache_dir.as_path();
    match cli.command {
        Command::Compute { d, n } => {
            if d < 1 {
                bail!("--d must be >= 1");
            }
            let row = file_cached_row(cache_dir, d, n)?;
            let mut table = Table::new(&["n", "p"]);
            for (i, c) in row.coeffs().iter().take(n + 1).enumerate() {
                table.push(vec![i.to_string(), c.to_string()]);
            }
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Delta { d, n } => {
            if d < 1 || n < 1 {
                bail!("--d and --n must be >= 1");
            }
            // The classification at n needs the row out to n + 1.
            let row = file_cached_row(cache_dir, d, n as usize + 1)?;
            let dc = delta(d, n, &row)?;
            let mut table = Table::new(&["n", "d", "delta", "class"]);
            table.push(vec![
                n.to_string(),
                d.to_string(),
                dc.delta.to_string(),
                dc.class.to_string(),
            ]);
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Landscape { dmax, nmax } => {
            if dmax < 1 || nmax < 1 {
                bail!("--dmax and --nmax must be >= 1");
            }
            let grid = landscape(&RowCache::new(), dmax, nmax);
            let text = match format {
                Format::Md => verify::landscape_markdown(&grid),
                Format::Csv => verify::landscape_csv(&grid),
                Format::Tsv => verify::landscape_csv(&grid).replace(',', "\t"),
                Format::Json => {
                    let columns: Vec<String> = std::iter::once("n".to_string())
                        .chain((1..=dmax).map(|d| format!("d{d}")))
                        .collect();
                    let mut table = Table::from_columns(columns);
                    for n in 1..=nmax {
                        let mut row = vec![n.to_string()];
                        for d in 1..=dmax {
                            row.push(if grid.is_exception(n, d) { "1" } else { "0" }.into());
                        }
                        table.push(row);
                    }
                    table.render(Format::Json)
                }
            };
            print!("{text}");
            Ok(0)
        }
        Command::Maxprod { n, top } => {
            let records = product_spectrum(n, top)?;
            let mut table = Table::new(&["rank", "value", "multiplicity", "witnesses"]);
            for r in &records {
                let witnesses = r
                    .witnesses
                    .iter()
                    .map(|w| {
                        w.iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join("+")
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                table.push(vec![
                    r.rank.to_string(),
                    r.value.to_string(),
                    r.witnesses.len().to_string(),
                    witnesses,
                ]);
            }
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Bounds { n, d } => {
            let p1 = file_cached_row(cache_dir, 1, n as usize)?;
            let b = pd_bounds(n, d, &p1)?;
            let mut table = Table::new(&["quantity", "value"]);
            table.push(vec!["n".into(), b.n.to_string()]);
            table.push(vec!["d".into(), b.d.to_string()]);
            table.push(vec!["residue".into(), b.residue.to_string()]);
            table.push(vec!["lower".into(), b.lower.to_string()]);
            table.push(vec!["upper".into(), b.upper.to_string()]);
            if let Some(improved) = &b.improved_upper {
                table.push(vec!["improved_upper".into(), improved.to_string()]);
            }
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Constants { n } => {
            let tc = threshold_constants(n)?;
            let mut table = Table::new(&["constant", "value", "ceiling"]);
            for (kind, value) in tc.entries() {
                table.push(vec![
                    kind.name().to_string(),
                    value.value.to_string(),
                    value.ceiling.to_string(),
                ]);
            }
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Figure2 { from, to, step } => {
            let rows = figure2_data(from, to, step)?;
            print!("{}", figure2_csv(&rows));
            Ok(0)
        }
        Command::Verify { suite, nmax, dmax } => run_verify(suite, nmax, dmax, format),
        Command::CustomAlpha { rule_file, n } => {
            let seq = load_custom_rule(&rule_file, n)?;
            let row = compute_row(&seq, n)?;
            let mut table = Table::new(&["n", "p"]);
            for (i, c) in row.coeffs().iter().enumerate() {
                table.push(vec![i.to_string(), c.to_string()]);
            }
            print!("{}", table.render(format));
            Ok(0)
        }
    }
}

fn load_custom_rule(path: &Path, n: usize) -> anyhow::Result<ExponentSequence> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("--rule-file {}", path.display()))?;
    let terms = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<num_bigint::BigInt>()
                .with_context(|| format!("--rule-file: bad integer {tok:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    if terms.len() < n {
        bail!(
            "--rule-file provides {} terms but --n {} needs alpha_1..alpha_{}",
            terms.len(),
            n,
            n
        );
    }
    Ok(ExponentSequence::Custom(CustomRule::from_terms(terms)))
}

fn run_verify(
    suite: Suite,
    nmax: Option<u64>,
    dmax: Option<u32>,
    format: Format,
) -> anyhow::Result<i32> {
    let cache = RowCache::new();
    let selected: Vec<Suite> = if suite == Suite::All {
        vec![
            Suite::Table2,
            Suite::Table3,
            Suite::Table4,
            Suite::Theorem1,
            Suite::Corollary,
            Suite::Boundary,
            Suite::Table1,
            Suite::Conjectures,
        ]
    } else {
        vec![suite]
    };
    let mut all_passed = true;
    for s in selected {
        let report: VerificationReport = match s {
            Suite::Table1 => table1_suite(&cache, nmax.unwrap_or(2000))?,
            Suite::Table2 => table2_suite(&cache),
            Suite::Table3 => table3_suite(),
            Suite::Table4 => table4_suite(&cache),
            Suite::Theorem1 => theorem1_suite(&cache, dmax.unwrap_or(200))?,
            Suite::Corollary => corollary_suite(&cache),
            Suite::Boundary => boundary_case_suite(&cache),
            Suite::Conjectures => conjecture_scan(&cache, nmax.unwrap_or(200), dmax.unwrap_or(60))?,
            Suite::All => unreachable!(),
        };
        match format {
            Format::Md => print!("{}", report.to_markdown()),
            _ => println!("{}", report.to_json()),
        }
        eprintln!("suite {}: {:?}", report.suite, report.status);
        all_passed &= report.passed();
    }
    Ok(if all_passed { 0 } else { 1 })
}
