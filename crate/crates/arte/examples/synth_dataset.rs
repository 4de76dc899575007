//! Generate the built-in demo dataset: transactions, ground truth, and a
//! synthetic benchmark, written under `target/synth-demo/`.
//!
//! ```bash
//! cargo run -p arte --example synth_dataset
//! ```

use std::fs::{self, File};

use arte::synth::{SynthSpec, generate, generate_benchmark, write_ground_truth_csv};

fn main() -> arte::Result<()> {
    let spec = SynthSpec::demo();
    let (records, truth) = generate(&spec)?;
    let benchmark = generate_benchmark(&spec)?;

    let out = std::path::Path::new("target/synth-demo");
    fs::create_dir_all(out)?;
    arte::ingest::write_transactions_csv(File::create(out.join("transactions.csv"))?, &records)?;
    write_ground_truth_csv(File::create(out.join("ground_truth.csv"))?, &truth)?;
    benchmark.write_csv(File::create(out.join("benchmark.csv"))?)?;

    println!(
        "generated {} transactions for {} artists over {}..{} (seed {})",
        records.len(),
        spec.artists.len(),
        spec.start_year,
        spec.end_year,
        spec.seed
    );
    println!("benchmark: {} trading days", benchmark.len());
    println!("\nfirst transactions:");
    for r in records.iter().take(5) {
        println!(
            "  {} | {} | {:>12.2} USD | {:.0}x{:.0} cm | {}",
            r.sale_date,
            r.artist,
            r.price_usd,
            r.height_cm.unwrap_or(0.0),
            r.width_cm.unwrap_or(0.0),
            r.medium.as_str(),
        );
    }
    println!(
        "\nwrote transactions.csv, ground_truth.csv, benchmark.csv -> {}",
        out.display()
    );
    Ok(())
}
