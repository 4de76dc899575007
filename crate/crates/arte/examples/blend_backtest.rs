//! The portfolio experiment: interpolate the annual index onto the
//! benchmark calendar, smooth it over 680 trading days, and hold a 20/80
//! art/benchmark blend.
//!
//! ```bash
//! cargo run -p arte --example blend_backtest
//! ```

use arte::backtest::{BacktestConfig, run_experiment, write_summary};
use arte::synth::{SynthSpec, generate, generate_benchmark};
use arte::{IndexConfig, build_index, yearly_stats};

fn main() -> arte::Result<()> {
    let spec = SynthSpec::demo();
    let (records, _) = generate(&spec)?;
    let benchmark = generate_benchmark(&spec)?;
    let index = build_index(&yearly_stats(&records).stats, &IndexConfig::default())?;

    let config = BacktestConfig::default(); // 20% art, 680-day smoothing
    let output = run_experiment(&index, &benchmark, &config)?;

    println!(
        "blend: {:.0}% art / {:.0}% benchmark, {}-day smoothing, {} trading days\n",
        config.art_allocation * 100.0,
        (1.0 - config.art_allocation) * 100.0,
        config.smoothing_window,
        output.result.portfolio.len()
    );
    let mut stdout = std::io::stdout().lock();
    write_summary(&mut stdout, &output)?;

    println!("\nannual returns:");
    for (year, ret) in &output.result.annual_returns {
        println!("  {year}  {:>7.2}%", ret * 100.0);
    }
    Ok(())
}
