//! Blue-chip art auction analytics: price-normalized artist statistics, an
//! annually rebalanced top-100 index, and two-asset portfolio backtests.
//!
//! The pipeline runs in five stages, each usable on its own:
//!
//! 1. [`ingest`] — parse auction-transaction CSVs, validate rows, and apply
//!    the medium and artist-eligibility filters (a decade of history,
//!    $500K average hammer price by default).
//! 2. [`artist_stats`] — normalize prices by artwork area and aggregate
//!    per-artist, per-year estimated actual prices.
//! 3. [`metrics`] — IRR, MOIC, return series, volatility, Sharpe, and
//!    correlation arithmetic.
//! 4. [`index`] — rank artists on trailing performance, select up to 100,
//!    weight by price share, and chain annual index levels from base 100.
//! 5. [`backtest`] — smooth the index over a 680-trading-day window, blend
//!    it with a benchmark (20/80 by default), and sweep the efficient
//!    frontier.
//!
//! [`synth`] generates deterministic datasets with known ground truth so
//! every stage can be exercised without proprietary auction data.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p arte --example synth_dataset       # generate a dataset + benchmark
//! cargo run -p arte --example ingest_and_filter   # parse, validate, filter
//! cargo run -p arte --example artist_performance  # IRR/MOIC holding-period table
//! cargo run -p arte --example build_index         # index levels + 2022-style weights
//! cargo run -p arte --example blend_backtest      # 20/80 blend with smoothing
//! cargo run -p arte --example efficient_frontier  # allocation sweep
//! cargo run -p arte --example full_pipeline       # everything end to end
//! ```
//!
//! The same stages are exposed as `arte` CLI subcommands (`ingest`,
//! `report`, `index`, `backtest`, `synth`, `run-all`); see the README.

pub mod artist_stats;
pub mod backtest;
pub mod calendar;
pub mod cli;
pub mod config;
mod error;
pub mod index;
pub mod ingest;
pub mod metrics;
pub mod synth;

pub use artist_stats::{
    ArtistYearStat, YearlyStats, normalize_price, period_endpoints, yearly_stats,
};
pub use backtest::{
    BacktestConfig, BacktestResult, ExperimentOutput, Frontier, FrontierPoint, RebalancePolicy,
    blend_portfolio, efficient_frontier, rolling_average, run_experiment,
};
pub use error::{Error, Result};
pub use index::{
    IndexConfig, IndexSeries, RebalanceSnapshot, build_index, compute_weights, rank_artists,
    select_constituents, to_daily,
};
pub use ingest::{
    AuctionRecord, EligibilityOutcome, EligibleArtist, FilterConfig, Medium, MediumAliases,
    ParseOutcome, RejectReport, filter_eligible_artists, filter_medium, parse_transactions,
};
pub use metrics::{
    PerformanceReport, ReturnSeries, annualized_volatility, cumulative_return, irr, moic,
    period_returns, rolling_correlation, sharpe_ratio, yearly_correlation,
};
pub use synth::{ArtistSpec, GroundTruth, SplitMix64, SynthSpec, generate, generate_benchmark};
