//! Portfolio experiments: rolling-window smoothing of the art index, a
//! two-asset blend against a benchmark, and an efficient-frontier sweep.
//!
//! The art series is smoothed with a trailing 680-trading-day moving average
//! before blending; the benchmark is never smoothed. The default policy is
//! buy-and-hold from the initial allocation; a periodic reset to target
//! weights is available for stable-allocation comparisons.

use std::io;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};
use crate::index::{IndexSeries, to_daily};
use crate::metrics::{
    ReturnSeries, annualized_volatility, cumulative_return, mean, period_returns, sharpe_ratio,
    yearly_correlation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RebalancePolicy {
    /// Sleeves drift with returns from the initial allocation.
    BuyAndHold,
    /// Sleeves reset to the target allocation every `rebalance_interval`
    /// trading days.
    PeriodicToTarget,
}

#[derive(Debug, Clone)]
pub struct BacktestConfig {
    /// Fraction of capital allocated to the art index, in [0, 1].
    pub art_allocation: f64,
    /// Trailing smoothing window for the art series, in trading days.
    pub smoothing_window: usize,
    pub rebalance_policy: RebalancePolicy,
    /// Trading days between resets under `PeriodicToTarget`.
    pub rebalance_interval: usize,
    /// Annual risk-free rate used in Sharpe ratios.
    pub risk_free_rate: f64,
    pub periods_per_year: f64,
}

impl Default for BacktestConfig {
    fn default() -> Self {
        BacktestConfig {
            art_allocation: 0.20,
            smoothing_window: 680,
            rebalance_policy: RebalancePolicy::BuyAndHold,
            rebalance_interval: 252,
            risk_free_rate: 0.0,
            periods_per_year: 252.0,
        }
    }
}

impl BacktestConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.art_allocation) || !self.art_allocation.is_finite() {
            return Err(Error::arg("art_allocation must lie in [0, 1]"));
        }
        if self.smoothing_window < 1 {
            return Err(Error::arg("smoothing_window must be >= 1"));
        }
        if self.rebalance_interval < 1 {
            return Err(Error::arg("rebalance_interval must be >= 1"));
        }
        if !self.periods_per_year.is_finite() || self.periods_per_year <= 0.0 {
            return Err(Error::arg("periods_per_year must be positive"));
        }
        Ok(())
    }

    fn with_allocation(&self, w: f64) -> BacktestConfig {
        BacktestConfig {
            art_allocation: w,
            ..self.clone()
        }
    }
}

/// Blended-portfolio outcome with the metrics behind the figures.
#[derive(Debug, Clone)]
pub struct BacktestResult {
    /// Portfolio value path, starting from capital 1.
    pub portfolio: ReturnSeries,
    pub cumulative_return: f64,
    pub annual_returns: Vec<(i32, f64)>,
    pub volatility: f64,
    /// `None` when volatility is zero (undefined Sharpe).
    pub sharpe: Option<f64>,
    /// Calendar-year Pearson correlation between the art and benchmark
    /// return series that entered the blend.
    pub correlation_by_year: Vec<(i32, Option<f64>)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrontierPoint {
    pub art_allocation: f64,
    /// Mean period return scaled to a year (the Sharpe numerator before
    /// subtracting the risk-free rate).
    pub annual_return: f64,
    pub volatility: f64,
    pub sharpe: Option<f64>,
}

/// Allocation sweep output with its two distinguished points.
#[derive(Debug, Clone)]
pub struct Frontier {
    pub points: Vec<FrontierPoint>,
    pub min_volatility_allocation: f64,
    /// `None` when no point has a defined Sharpe ratio.
    pub max_sharpe_allocation: Option<f64>,
}

/// Everything `run_experiment` produces: the blend at the configured
/// allocation, the frontier sweep, and the aligned inputs for figure export.
#[derive(Debug, Clone)]
pub struct ExperimentOutput {
    pub result: BacktestResult,
    pub frontier: Frontier,
    /// Smoothed daily art series on the common calendar.
    pub art_smoothed: ReturnSeries,
    /// Benchmark restricted to the common calendar.
    pub benchmark: ReturnSeries,
    /// The configuration the experiment ran with.
    pub config: BacktestConfig,
}

/// Trailing moving average, truncated at the start: the value at `t` is the
/// mean of the last `window` values up to and including `t`. Dates are
/// unchanged; `window == 1` is the identity.
pub fn rolling_average(series: &ReturnSeries, window: usize) -> Result<ReturnSeries> {
    if window < 1 {
        return Err(Error::arg("window must be >= 1"));
    }
    if window == 1 {
        return Ok(series.clone());
    }
    let values = series.values();
    let mut prefix = Vec::with_capacity(values.len() + 1);
    prefix.push(0.0);
    for v in values {
        prefix.push(prefix.last().unwrap() + v);
    }
    let averaged: Vec<f64> = (0..values.len())
        .map(|t| {
            let start = t.saturating_sub(window - 1);
            (prefix[t + 1] - prefix[start]) / (t + 1 - start) as f64
        })
        .collect();
    ReturnSeries::new(series.dates().to_vec(), averaged)
}

/// Simulate a two-sleeve portfolio of the art series and the benchmark.
///
/// Both sleeves start from common capital 1 split `art_allocation` /
/// `1 - art_allocation` and evolve with their asset's returns. Under
/// `BuyAndHold` the sleeve values are exactly proportional to the level
/// paths; under `PeriodicToTarget` the sleeves are stepped and reset to the
/// target split every `rebalance_interval` days.
pub fn blend_portfolio(
    art: &ReturnSeries,
    benchmark: &ReturnSeries,
    config: &BacktestConfig,
) -> Result<BacktestResult> {
    config.validate()?;
    if art.dates() != benchmark.dates() {
        return Err(Error::arg(
            "art and benchmark series must share identical dates",
        ));
    }
    if art.len() < 2 {
        return Err(Error::arg("blend needs at least two data points"));
    }

    let w = config.art_allocation;
    let n = art.len();
    let mut values = Vec::with_capacity(n);
    match config.rebalance_policy {
        RebalancePolicy::BuyAndHold => {
            let a0 = art.values()[0];
            let b0 = benchmark.values()[0];
            for t in 0..n {
                values.push(w * (art.values()[t] / a0) + (1.0 - w) * (benchmark.values()[t] / b0));
            }
        }
        RebalancePolicy::PeriodicToTarget => {
            let mut art_sleeve = w;
            let mut bench_sleeve = 1.0 - w;
            values.push(1.0);
            for t in 1..n {
                art_sleeve *= art.values()[t] / art.values()[t - 1];
                bench_sleeve *= benchmark.values()[t] / benchmark.values()[t - 1];
                values.push(art_sleeve + bench_sleeve);
                if t % config.rebalance_interval == 0 {
                    let total = art_sleeve + bench_sleeve;
                    art_sleeve = w * total;
                    bench_sleeve = (1.0 - w) * total;
                }
            }
        }
    }

    let portfolio = ReturnSeries::new(art.dates().to_vec(), values)?;
    let returns = period_returns(&portfolio)?;
    let volatility = annualized_volatility(&returns, config.periods_per_year)?;
    let sharpe = match sharpe_ratio(&returns, config.risk_free_rate, config.periods_per_year) {
        Ok(s) => Some(s),
        Err(Error::UndefinedSharpe) => None,
        Err(e) => return Err(e),
    };
    Ok(BacktestResult {
        cumulative_return: cumulative_return(&portfolio)?,
        annual_returns: annual_returns(&portfolio),
        volatility,
        sharpe,
        correlation_by_year: yearly_correlation(art, benchmark)?,
        portfolio,
    })
}

/// Calendar-year returns: last level of each year over the last level of the
/// prior year; the first year is measured from the series' first level.
pub fn annual_returns(series: &ReturnSeries) -> Vec<(i32, f64)> {
    let mut out = Vec::new();
    let mut base = series.values()[0];
    let mut current_year = series.dates()[0].year();
    let mut last_in_year = base;
    for (d, v) in series.dates().iter().zip(series.values()) {
        if d.year() != current_year {
            out.push((current_year, last_in_year / base - 1.0));
            base = last_in_year;
            current_year = d.year();
        }
        last_in_year = *v;
    }
    out.push((current_year, last_in_year / base - 1.0));
    out
}

/// Sweep allocations `0, grid_step, ..., 1` through [`blend_portfolio`] and
/// report the per-allocation statistics plus the minimum-volatility and
/// maximum-Sharpe allocations.
pub fn efficient_frontier(
    art: &ReturnSeries,
    benchmark: &ReturnSeries,
    config: &BacktestConfig,
    grid_step: f64,
) -> Result<Frontier> {
    if !(grid_step > 0.0 && grid_step <= 0.5) {
        return Err(Error::arg("grid_step must lie in (0, 0.5]"));
    }
    let steps = (1.0 / grid_step).round() as usize;
    let mut points = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let w = i as f64 / steps as f64;
        let result = blend_portfolio(art, benchmark, &config.with_allocation(w))?;
        let returns = period_returns(&result.portfolio)?;
        points.push(FrontierPoint {
            art_allocation: w,
            annual_return: mean(&returns) * config.periods_per_year,
            volatility: result.volatility,
            sharpe: result.sharpe,
        });
    }
    let min_volatility_allocation = points
        .iter()
        .min_by(|a, b| a.volatility.total_cmp(&b.volatility))
        .expect("non-empty grid")
        .art_allocation;
    let max_sharpe_allocation = points
        .iter()
        .filter_map(|p| p.sharpe.map(|s| (s, p.art_allocation)))
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, w)| w);
    Ok(Frontier {
        points,
        min_volatility_allocation,
        max_sharpe_allocation,
    })
}

/// The end-to-end experiment: interpolate the annual art index onto the
/// benchmark's calendar, smooth it, blend at the configured allocation, and
/// sweep the frontier.
pub fn run_experiment(
    art_annual: &IndexSeries,
    benchmark: &ReturnSeries,
    config: &BacktestConfig,
) -> Result<ExperimentOutput> {
    config.validate()?;
    let start = art_annual.first_date().max(benchmark.first_date());
    let end = art_annual.last_date().min(benchmark.last_date());
    if (end - start).num_days() < 730 {
        return Err(Error::empty(format!(
            "insufficient overlap between index ({}..{}) and benchmark ({}..{}): need at least 2 years",
            art_annual.first_date(),
            art_annual.last_date(),
            benchmark.first_date(),
            benchmark.last_date(),
        )));
    }
    let calendar: Vec<NaiveDate> = benchmark
        .dates()
        .iter()
        .copied()
        .filter(|d| *d >= start && *d <= end)
        .collect();
    let art_daily = to_daily(art_annual, &calendar)?;
    let art_smoothed = rolling_average(&art_daily, config.smoothing_window)?;
    let benchmark = benchmark.restricted_to(art_smoothed.dates())?;
    let result = blend_portfolio(&art_smoothed, &benchmark, config)?;
    let frontier = efficient_frontier(&art_smoothed, &benchmark, config, 0.01)?;
    Ok(ExperimentOutput {
        result,
        frontier,
        art_smoothed,
        benchmark,
        config: config.clone(),
    })
}

/// `date,portfolio,benchmark,art`: growth-of-1 paths on the common calendar.
pub fn write_fig1_csv<W: io::Write>(writer: W, output: &ExperimentOutput) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["date", "portfolio", "benchmark", "art"])?;
    let b0 = output.benchmark.values()[0];
    let a0 = output.art_smoothed.values()[0];
    for (i, d) in output.result.portfolio.dates().iter().enumerate() {
        w.write_record([
            d.format("%Y-%m-%d").to_string(),
            format!("{:.6}", output.result.portfolio.values()[i]),
            format!("{:.6}", output.benchmark.values()[i] / b0),
            format!("{:.6}", output.art_smoothed.values()[i] / a0),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `year,portfolio_return,benchmark_return,art_return` as fractions.
pub fn write_fig2_csv<W: io::Write>(writer: W, output: &ExperimentOutput) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["year", "portfolio_return", "benchmark_return", "art_return"])?;
    let bench = annual_returns(&output.benchmark);
    let art = annual_returns(&output.art_smoothed);
    for (i, (year, portfolio_return)) in output.result.annual_returns.iter().enumerate() {
        w.write_record([
            year.to_string(),
            format!("{portfolio_return:.4}"),
            format!("{:.4}", bench[i].1),
            format!("{:.4}", art[i].1),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `allocation,annual_return,volatility,sharpe`; an undefined Sharpe is an
/// empty field.
pub fn write_fig3_csv<W: io::Write>(writer: W, frontier: &Frontier) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["allocation", "annual_return", "volatility", "sharpe"])?;
    for p in &frontier.points {
        w.write_record([
            format!("{:.2}", p.art_allocation),
            format!("{:.4}", p.annual_return),
            format!("{:.4}", p.volatility),
            p.sharpe.map(|s| format!("{s:.4}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Flat key-value run summary.
pub fn write_summary<W: io::Write>(mut writer: W, output: &ExperimentOutput) -> Result<()> {
    let r = &output.result;
    let bench_returns = period_returns(&output.benchmark)?;
    let art_returns = period_returns(&output.art_smoothed)?;
    writeln!(
        writer,
        "portfolio_cumulative_return_pct = {:.2}",
        r.cumulative_return * 100.0
    )?;
    writeln!(
        writer,
        "benchmark_cumulative_return_pct = {:.2}",
        (cumulative_return(&output.benchmark)?) * 100.0
    )?;
    writeln!(
        writer,
        "art_cumulative_return_pct = {:.2}",
        (cumulative_return(&output.art_smoothed)?) * 100.0
    )?;
    writeln!(
        writer,
        "portfolio_volatility_pct = {:.2}",
        r.volatility * 100.0
    )?;
    writeln!(
        writer,
        "benchmark_volatility_pct = {:.2}",
        annualized_volatility(&bench_returns, output.config.periods_per_year)? * 100.0
    )?;
    writeln!(
        writer,
        "art_volatility_pct = {:.2}",
        annualized_volatility(&art_returns, output.config.periods_per_year)? * 100.0
    )?;
    match r.sharpe {
        Some(s) => writeln!(writer, "portfolio_sharpe = {s:.4}")?,
        None => writeln!(writer, "portfolio_sharpe = undefined Sharpe")?,
    }
    let defined: Vec<f64> = r
        .correlation_by_year
        .iter()
        .filter_map(|(_, c)| *c)
        .collect();
    if defined.is_empty() {
        writeln!(writer, "mean_correlation = undefined")?;
    } else {
        writeln!(writer, "mean_correlation = {:.4}", mean(&defined))?;
    }
    for (year, corr) in &r.correlation_by_year {
        match corr {
            Some(c) => writeln!(writer, "correlation_{year} = {c:.4}")?,
            None => writeln!(writer, "correlation_{year} = undefined")?,
        }
    }
    writeln!(
        writer,
        "min_volatility_allocation = {:.2}",
        output.frontier.min_volatility_allocation
    )?;
    match output.frontier.max_sharpe_allocation {
        Some(w) => writeln!(writer, "max_sharpe_allocation = {w:.2}")?,
        None => writeln!(writer, "max_sharpe_allocation = undefined")?,
    }
    Ok(())
}
