//! Build the annually rebalanced index: trailing-performance ranking,
//! price-share weights, chained levels from base 100.
//!
//! ```bash
//! cargo run -p arte --example build_index
//! ```

use arte::synth::{SynthSpec, generate};
use arte::{IndexConfig, build_index, yearly_stats};

fn main() -> arte::Result<()> {
    let spec = SynthSpec::demo();
    let (records, _) = generate(&spec)?;
    let stats = yearly_stats(&records);

    let config = IndexConfig {
        cap: 100,
        lookback_years: 5,
        base_year: None,
    };
    let index = build_index(&stats.stats, &config)?;

    println!("index levels (base 100):");
    for (date, level) in index.dates.iter().zip(&index.levels) {
        println!("  {date}  {level:>10.2}");
    }

    let last = index.snapshots.last().expect("snapshots exist");
    println!(
        "\n{} constituents at the {} rebalance:",
        last.constituents.len(),
        last.year
    );
    let mut weights = last.constituents.clone();
    weights.sort_by(|a, b| b.1.total_cmp(&a.1));
    for (artist, weight) in &weights {
        println!("  {:<18} {:>6.2}%", artist, weight * 100.0);
    }
    let total: f64 = weights.iter().map(|(_, w)| w).sum();
    println!("  {:<18} {:>6.2}%", "total", total * 100.0);
    Ok(())
}
