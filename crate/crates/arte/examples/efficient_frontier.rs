//! Sweep art allocations from 0% to 100% and print the efficient frontier
//! with its minimum-volatility and maximum-Sharpe points.
//!
//! ```bash
//! cargo run -p arte --example efficient_frontier
//! ```

use arte::backtest::{BacktestConfig, efficient_frontier, rolling_average};
use arte::index::to_daily;
use arte::synth::{SynthSpec, generate, generate_benchmark};
use arte::{IndexConfig, build_index, yearly_stats};

fn main() -> arte::Result<()> {
    let spec = SynthSpec::demo();
    let (records, _) = generate(&spec)?;
    let benchmark = generate_benchmark(&spec)?;
    let index = build_index(&yearly_stats(&records).stats, &IndexConfig::default())?;

    let config = BacktestConfig::default();
    let art_daily = to_daily(&index, benchmark.dates())?;
    let art = rolling_average(&art_daily, config.smoothing_window)?;
    let benchmark = benchmark.restricted_to(art.dates())?;

    let frontier = efficient_frontier(&art, &benchmark, &config, 0.05)?;

    println!(
        "{:>10} {:>14} {:>12} {:>8}",
        "art alloc", "annual return", "volatility", "Sharpe"
    );
    for p in &frontier.points {
        println!(
            "{:>9.0}% {:>13.2}% {:>11.2}% {:>8}",
            p.art_allocation * 100.0,
            p.annual_return * 100.0,
            p.volatility * 100.0,
            p.sharpe.map_or("n/a".to_string(), |s| format!("{s:.4}")),
        );
    }
    println!(
        "\nminimum volatility at {:.0}% art",
        frontier.min_volatility_allocation * 100.0
    );
    if let Some(w) = frontier.max_sharpe_allocation {
        println!("maximum Sharpe at {:.0}% art", w * 100.0);
    }
    Ok(())
}
