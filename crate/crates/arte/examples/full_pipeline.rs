//! Every stage end to end, in memory: synthesize -> ingest -> filter ->
//! stats -> index -> backtest.
//!
//! ```bash
//! cargo run -p arte --example full_pipeline
//! ```

use arte::backtest::{BacktestConfig, run_experiment};
use arte::ingest::{FilterConfig, filter_eligible_artists, filter_medium, parse_transactions};
use arte::synth::{SynthSpec, generate, generate_benchmark};
use arte::{IndexConfig, build_index, yearly_stats};

fn main() -> arte::Result<()> {
    // 1. Synthesize a dataset with known ground truth.
    let spec = SynthSpec::demo();
    let (records, _) = generate(&spec)?;
    let benchmark = generate_benchmark(&spec)?;
    println!(
        "1. synth:    {} transactions, {} benchmark days",
        records.len(),
        benchmark.len()
    );

    // 2. Round-trip through CSV to exercise the ingest path.
    let mut csv = Vec::new();
    arte::ingest::write_transactions_csv(&mut csv, &records)?;
    let filter = FilterConfig::default();
    let parsed = parse_transactions(csv.as_slice(), &filter)?;
    println!(
        "2. ingest:   {} accepted, {} rejected",
        parsed.records.len(),
        parsed.rejects.len()
    );

    // 3. Medium and eligibility filters.
    let outcome = filter_eligible_artists(filter_medium(parsed.records, &filter), &filter);
    println!(
        "3. filter:   {} eligible artists, {} records",
        outcome.eligible.len(),
        outcome.records.len()
    );

    // 4. Per-artist-year statistics.
    let stats = yearly_stats(&outcome.records);
    println!("4. stats:    {} artist-year rows", stats.stats.len());

    // 5. Annual index.
    let index = build_index(&stats.stats, &IndexConfig::default())?;
    println!(
        "5. index:    {} levels, {:.2} -> {:.2}",
        index.levels.len(),
        index.levels[0],
        index.levels.last().unwrap()
    );

    // 6. Blend and frontier.
    let output = run_experiment(&index, &benchmark, &BacktestConfig::default())?;
    println!(
        "6. backtest: cumulative {:.2}%, volatility {:.2}%, Sharpe {}, min-vol allocation {:.0}%",
        output.result.cumulative_return * 100.0,
        output.result.volatility * 100.0,
        output
            .result
            .sharpe
            .map_or("n/a".to_string(), |s| format!("{s:.4}")),
        output.frontier.min_volatility_allocation * 100.0
    );
    Ok(())
}
