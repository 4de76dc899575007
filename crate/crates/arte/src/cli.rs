//! Command-line pipeline front end.
//!
//! One binary, six subcommands mirroring the pipeline stages:
//! `ingest`, `report`, `index`, `backtest`, `synth`, `run-all`.
//!
//! Exit codes are uniform across subcommands: 0 success, 2 usage or input
//! error, 3 valid-but-empty result (no eligible artists, no data in the
//! requested window, insufficient series overlap). Values are resolved as
//! CLI flag, then `--config` file key, then built-in default; `ARTE_OUT_DIR`
//! supplies the output directory when `--out-dir` is absent.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::artist_stats::{self, YearlyStats, period_endpoints, yearly_stats};
use crate::backtest::{
    self, BacktestConfig, RebalancePolicy, run_experiment, write_fig1_csv, write_fig2_csv,
    write_fig3_csv, write_summary,
};
use crate::config::KvConfig;
use crate::error::{Error, Result};
use crate::index::{IndexConfig, IndexSeries, build_index, write_index_csv, write_snapshots_csv};
use crate::ingest::{
    self, FilterConfig, filter_eligible_artists, filter_medium, parse_transactions,
};
use crate::metrics::{PerformanceReport, ReturnSeries, write_report_csv};
use crate::synth::{SynthSpec, generate, generate_benchmark, write_ground_truth_csv};

#[derive(Parser, Debug)]
#[command(
    name = "arte",
    version,
    about = "Blue-chip art index pipeline: ingest auction data, build artist statistics, \
             construct an annually rebalanced index, and run portfolio backtests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a raw transactions CSV and write a reject report
    Ingest(IngestArgs),
    /// Per-artist IRR/MOIC performance table over a holding period
    Report(ReportArgs),
    /// Build the annually rebalanced index with weight snapshots
    Index(IndexArgs),
    /// Smooth the index, blend with a benchmark, sweep the frontier
    Backtest(BacktestArgs),
    /// Generate a deterministic synthetic dataset with ground truth
    Synth(SynthArgs),
    /// Full pipeline: ingest, stats, report, index, backtest
    RunAll(RunAllArgs),
}

#[derive(Args, Debug)]
struct IngestArgs {
    /// Raw transactions CSV
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Flat key-value config file
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Transactions CSV
    #[arg(long)]
    input: Option<PathBuf>,
    /// First year of the holding period
    #[arg(long)]
    start_year: Option<i32>,
    /// Last year of the holding period
    #[arg(long)]
    end_year: Option<i32>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Flat key-value config file
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IndexArgs {
    /// Transactions CSV
    #[arg(long)]
    input: Option<PathBuf>,
    /// Maximum number of constituents
    #[arg(long)]
    cap: Option<usize>,
    /// Ranking lookback window in years
    #[arg(long)]
    lookback: Option<i32>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Flat key-value config file
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BacktestArgs {
    /// Index levels CSV (`date,level`)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Benchmark levels CSV (`date,level`)
    #[arg(long)]
    benchmark: Option<PathBuf>,
    /// Fraction allocated to the art index, in [0, 1]
    #[arg(long)]
    allocation: Option<f64>,
    /// Smoothing window in trading days
    #[arg(long)]
    window: Option<usize>,
    /// Annual risk-free rate for Sharpe ratios
    #[arg(long)]
    risk_free: Option<f64>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Flat key-value config file
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SynthArgs {
    /// Generator seed (overrides the config file)
    #[arg(long)]
    seed: Option<u64>,
    /// Synthetic dataset spec file; the built-in demo spec when absent
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunAllArgs {
    /// Raw transactions CSV
    #[arg(long)]
    input: Option<PathBuf>,
    /// Benchmark levels CSV (`date,level`)
    #[arg(long)]
    benchmark: Option<PathBuf>,
    /// First year of the report holding period (defaults to the data span)
    #[arg(long)]
    start_year: Option<i32>,
    /// Last year of the report holding period (defaults to the data span)
    #[arg(long)]
    end_year: Option<i32>,
    /// Fraction allocated to the art index, in [0, 1]
    #[arg(long)]
    allocation: Option<f64>,
    /// Smoothing window in trading days
    #[arg(long)]
    window: Option<usize>,
    /// Maximum number of constituents
    #[arg(long)]
    cap: Option<usize>,
    /// Ranking lookback window in years
    #[arg(long)]
    lookback: Option<i32>,
    /// Annual risk-free rate for Sharpe ratios
    #[arg(long)]
    risk_free: Option<f64>,
    /// Output directory
    #[arg(long, env = "ARTE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    /// Flat key-value config file
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version print to stdout and exit 0; usage errors
            // print to stderr and exit 2.
            let _ = err.print();
            return err.exit_code();
        }
    };
    let outcome = match &cli.command {
        Command::Ingest(args) => cmd_ingest(args),
        Command::Report(args) => cmd_report(args),
        Command::Index(args) => cmd_index(args),
        Command::Backtest(args) => cmd_backtest(args),
        Command::Synth(args) => cmd_synth(args),
        Command::RunAll(args) => cmd_run_all(args),
    };
    match outcome {
        Ok(()) => 0,
        // A consumer closing stdout early (e.g. piping into `head`) is not
        // a failure; output files are written before the summary prints.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::EmptyResult(_) => 3,
                _ => 2,
            }
        }
    }
}

fn load_kv(config: &Option<PathBuf>) -> Result<KvConfig> {
    match config {
        Some(path) => KvConfig::load(path),
        None => Ok(KvConfig::default()),
    }
}

fn resolve_input(flag: &Option<PathBuf>, kv: &KvConfig, key: &str) -> Result<PathBuf> {
    flag.clone()
        .or_else(|| kv.get(key).map(PathBuf::from))
        .ok_or_else(|| {
            Error::arg(format!(
                "missing --{} (or config key `{key}`)",
                key.replace('_', "-")
            ))
        })
}

fn resolve_out_dir(flag: &Option<PathBuf>, kv: &KvConfig) -> PathBuf {
    flag.clone()
        .or_else(|| kv.get("out_dir").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn open_input(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::arg(format!("cannot read `{}`: {e}", path.display())))
}

fn create_output(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    File::create(&path)
        .map(BufWriter::new)
        .map_err(|e| Error::arg(format!("cannot write `{}`: {e}", path.display())))
}

fn check_allocation(allocation: Option<f64>) -> Result<Option<f64>> {
    if let Some(w) = allocation
        && !((0.0..=1.0).contains(&w) && w.is_finite())
    {
        return Err(Error::arg(format!(
            "--allocation must lie in [0, 1], got {w}"
        )));
    }
    Ok(allocation)
}

/// Filtered records and per-artist-year stats for one input file.
struct Pipeline {
    outcome: ingest::ParseOutcome,
    eligible_records: Vec<ingest::AuctionRecord>,
    stats: YearlyStats,
}

fn load_pipeline(input: &Path, filter: &FilterConfig) -> Result<Pipeline> {
    let outcome = parse_transactions(open_input(input)?, filter)?;
    let by_medium = filter_medium(outcome.records.clone(), filter);
    let eligibility = filter_eligible_artists(by_medium, filter);
    let stats = yearly_stats(&eligibility.records);
    Ok(Pipeline {
        outcome,
        eligible_records: eligibility.records,
        stats,
    })
}

fn build_reports(
    stats: &YearlyStats,
    start_year: i32,
    end_year: i32,
) -> Result<Vec<PerformanceReport>> {
    if start_year >= end_year {
        return Err(Error::arg(format!(
            "start_year {start_year} must precede end_year {end_year}"
        )));
    }
    let mut artists: Vec<&str> = stats.stats.iter().map(|s| s.artist.as_str()).collect();
    artists.sort_unstable();
    artists.dedup();
    let mut reports = Vec::new();
    for artist in artists {
        if let Some((initial, terminal)) =
            period_endpoints(&stats.stats, artist, start_year, end_year)
        {
            reports.push(PerformanceReport::new(
                artist, start_year, end_year, initial, terminal,
            )?);
        }
    }
    if reports.is_empty() {
        return Err(Error::empty(format!(
            "no artists with data in {start_year}..{end_year}"
        )));
    }
    // Table ordering: best IRR first, names as a deterministic tiebreak.
    reports.sort_by(|a, b| b.irr.total_cmp(&a.irr).then(a.artist.cmp(&b.artist)));
    Ok(reports)
}

fn backtest_config(
    kv: &KvConfig,
    allocation: Option<f64>,
    window: Option<usize>,
    risk_free: Option<f64>,
) -> Result<BacktestConfig> {
    let mut config = BacktestConfig::default();
    if let Some(v) = kv.get_parsed("allocation")? {
        config.art_allocation = v;
    }
    if let Some(v) = kv.get_parsed("window")? {
        config.smoothing_window = v;
    }
    if let Some(v) = kv.get_parsed("risk_free")? {
        config.risk_free_rate = v;
    }
    if let Some(v) = kv.get_parsed("rebalance_interval")? {
        config.rebalance_interval = v;
    }
    if let Some(policy) = kv.get("rebalance_policy") {
        config.rebalance_policy = match policy.to_lowercase().as_str() {
            "buy-and-hold" => RebalancePolicy::BuyAndHold,
            "periodic-to-target" => RebalancePolicy::PeriodicToTarget,
            other => {
                return Err(Error::arg(format!(
                    "rebalance_policy must be `buy-and-hold` or `periodic-to-target`, found `{other}`"
                )));
            }
        };
    }
    if let Some(v) = kv.get_parsed("periods_per_year")? {
        config.periods_per_year = v;
    }
    if let Some(w) = check_allocation(allocation)? {
        config.art_allocation = w;
    }
    if let Some(v) = window {
        config.smoothing_window = v;
    }
    if let Some(v) = risk_free {
        config.risk_free_rate = v;
    }
    config.validate()?;
    Ok(config)
}

fn index_config(kv: &KvConfig, cap: Option<usize>, lookback: Option<i32>) -> Result<IndexConfig> {
    let mut config = IndexConfig::default();
    if let Some(v) = kv.get_parsed("cap")? {
        config.cap = v;
    }
    if let Some(v) = kv.get_parsed("lookback")? {
        config.lookback_years = v;
    }
    if let Some(v) = kv.get_parsed("base_year")? {
        config.base_year = Some(v);
    }
    if let Some(v) = cap {
        config.cap = v;
    }
    if let Some(v) = lookback {
        config.lookback_years = v;
    }
    config.validate()?;
    Ok(config)
}

fn cmd_ingest(args: &IngestArgs) -> Result<()> {
    let kv = load_kv(&args.config)?;
    let filter = kv.filter_config()?;
    let input = resolve_input(&args.input, &kv, "input")?;
    let out_dir = resolve_out_dir(&args.out_dir, &kv);

    let outcome = parse_transactions(open_input(&input)?, &filter)?;
    ingest::write_transactions_csv(
        create_output(&out_dir, "transactions.csv")?,
        &outcome.records,
    )?;
    ingest::write_rejects_csv(create_output(&out_dir, "rejects.csv")?, &outcome.rejects)?;
    println!(
        "ingest: {} records accepted, {} rejected -> {}",
        outcome.records.len(),
        outcome.rejects.len(),
        out_dir.display()
    );
    Ok(())
}

fn cmd_report(args: &ReportArgs) -> Result<()> {
    let kv = load_kv(&args.config)?;
    let filter = kv.filter_config()?;
    let input = resolve_input(&args.input, &kv, "input")?;
    let out_dir = resolve_out_dir(&args.out_dir, &kv);
    let start_year = args
        .start_year
        .or(kv.get_parsed("start_year")?)
        .ok_or_else(|| Error::arg("missing --start-year"))?;
    let end_year = args
        .end_year
        .or(kv.get_parsed("end_year")?)
        .ok_or_else(|| Error::arg("missing --end-year"))?;

    let pipeline = load_pipeline(&input, &filter)?;
    let reports = build_reports(&pipeline.stats, start_year, end_year)?;
    write_report_csv(create_output(&out_dir, "report.csv")?, &reports)?;
    println!(
        "report: {} artists over {start_year}..{end_year} -> {}",
        reports.len(),
        out_dir.join("report.csv").display()
    );
    Ok(())
}

fn cmd_index(args: &IndexArgs) -> Result<()> {
    let kv = load_kv(&args.config)?;
    let filter = kv.filter_config()?;
    let input = resolve_input(&args.input, &kv, "input")?;
    let out_dir = resolve_out_dir(&args.out_dir, &kv);
    let config = index_config(&kv, args.cap, args.lookback)?;

    let pipeline = load_pipeline(&input, &filter)?;
    let index = build_index(&pipeline.stats.stats, &config)?;
    write_index_csv(create_output(&out_dir, "index.csv")?, &index)?;
    write_snapshots_csv(create_output(&out_dir, "snapshots.csv")?, &index.snapshots)?;
    println!(
        "index: {} annual levels, {} snapshots -> {}",
        index.levels.len(),
        index.snapshots.len(),
        out_dir.display()
    );
    Ok(())
}

fn cmd_backtest(args: &BacktestArgs) -> Result<()> {
    let kv = load_kv(&args.config)?;
    let input = resolve_input(&args.input, &kv, "input")?;
    let benchmark_path = resolve_input(&args.benchmark, &kv, "benchmark")?;
    let out_dir = resolve_out_dir(&args.out_dir, &kv);
    let config = backtest_config(&kv, args.allocation, args.window, args.risk_free)?;

    let annual = ReturnSeries::read_csv(open_input(&input)?)?;
    let index = IndexSeries::from_levels(annual.dates().to_vec(), annual.values().to_vec())?;
    let benchmark = ReturnSeries::read_csv(open_input(&benchmark_path)?)?;
    let output = run_experiment(&index, &benchmark, &config)?;
    write_experiment(&out_dir, &output)?;
    let mut stdout = std::io::stdout().lock();
    write_summary(&mut stdout, &output)?;
    Ok(())
}

fn cmd_synth(args: &SynthArgs) -> Result<()> {
    let mut spec = match &args.config {
        Some(path) => KvConfig::load(path)?.synth_spec()?,
        None => SynthSpec::demo(),
    };
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    let out_dir = resolve_out_dir(&args.out_dir, &KvConfig::default());

    let (records, truth) = generate(&spec)?;
    let benchmark = generate_benchmark(&spec)?;
    ingest::write_transactions_csv(create_output(&out_dir, "transactions.csv")?, &records)?;
    write_ground_truth_csv(create_output(&out_dir, "ground_truth.csv")?, &truth)?;
    benchmark.write_csv(create_output(&out_dir, "benchmark.csv")?)?;
    println!(
        "synth: {} records for {} artists ({}..{}), seed {} -> {}",
        records.len(),
        spec.artists.len(),
        spec.start_year,
        spec.end_year,
        spec.seed,
        out_dir.display()
    );
    Ok(())
}

fn cmd_run_all(args: &RunAllArgs) -> Result<()> {
    let kv = load_kv(&args.config)?;
    let filter = kv.filter_config()?;
    let input = resolve_input(&args.input, &kv, "input")?;
    let benchmark_path = resolve_input(&args.benchmark, &kv, "benchmark")?;
    let out_dir = resolve_out_dir(&args.out_dir, &kv);
    let index_cfg = index_config(&kv, args.cap, args.lookback)?;
    let backtest_cfg = backtest_config(&kv, args.allocation, args.window, args.risk_free)?;

    let pipeline = load_pipeline(&input, &filter)?;
    ingest::write_transactions_csv(
        create_output(&out_dir, "transactions.csv")?,
        &pipeline.outcome.records,
    )?;
    ingest::write_rejects_csv(
        create_output(&out_dir, "rejects.csv")?,
        &pipeline.outcome.rejects,
    )?;
    artist_stats::write_stats_csv(create_output(&out_dir, "stats.csv")?, &pipeline.stats.stats)?;

    if pipeline.eligible_records.is_empty() {
        return Err(Error::empty("no eligible artists after filtering"));
    }

    // Report window defaults to the filtered data span.
    let data_years: Vec<i32> = pipeline.stats.stats.iter().map(|s| s.year).collect();
    let start_year = args
        .start_year
        .or(kv.get_parsed("start_year")?)
        .or_else(|| data_years.iter().min().copied())
        .ok_or_else(|| Error::empty("no stats to report on"))?;
    let end_year = args
        .end_year
        .or(kv.get_parsed("end_year")?)
        .or_else(|| data_years.iter().max().copied())
        .ok_or_else(|| Error::empty("no stats to report on"))?;
    let reports = build_reports(&pipeline.stats, start_year, end_year)?;
    write_report_csv(create_output(&out_dir, "report.csv")?, &reports)?;

    let index = build_index(&pipeline.stats.stats, &index_cfg)?;
    write_index_csv(create_output(&out_dir, "index.csv")?, &index)?;
    write_snapshots_csv(create_output(&out_dir, "snapshots.csv")?, &index.snapshots)?;

    let benchmark = ReturnSeries::read_csv(open_input(&benchmark_path)?)?;
    let output = run_experiment(&index, &benchmark, &backtest_cfg)?;
    write_experiment(&out_dir, &output)?;
    let mut stdout = std::io::stdout().lock();
    write_summary(&mut stdout, &output)?;
    Ok(())
}

fn write_experiment(out_dir: &Path, output: &backtest::ExperimentOutput) -> Result<()> {
    write_fig1_csv(create_output(out_dir, "fig1_cumulative.csv")?, output)?;
    write_fig2_csv(create_output(out_dir, "fig2_annual.csv")?, output)?;
    write_fig3_csv(
        create_output(out_dir, "fig3_frontier.csv")?,
        &output.frontier,
    )?;
    let mut summary = create_output(out_dir, "summary.txt")?;
    write_summary(&mut summary, output)?;
    summary.flush()?;
    Ok(())
}
