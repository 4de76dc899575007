//! Performance arithmetic shared by artist reports and portfolio analytics:
//! MOIC, IRR, return series, volatility, Sharpe ratio, and correlation.
//!
//! IRR here is the two-cash-flow geometric rate
//! `(terminal / initial)^(1/years) - 1`: the methodology has a single buy at
//! the period start and a single sell at the end, so no root finding is
//! needed. Holding-period length is `period_end - period_start` in calendar
//! years (2005–2015 is a 10-year hold).

use std::collections::HashSet;
use std::io;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

/// A dated series of strictly positive levels (index values or prices) on a
/// strictly increasing date axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnSeries {
    dates: Vec<NaiveDate>,
    values: Vec<f64>,
}

impl ReturnSeries {
    pub fn new(dates: Vec<NaiveDate>, values: Vec<f64>) -> Result<Self> {
        if dates.is_empty() {
            return Err(Error::arg("series must contain at least one point"));
        }
        if dates.len() != values.len() {
            return Err(Error::arg(format!(
                "series length mismatch: {} dates vs {} values",
                dates.len(),
                values.len()
            )));
        }
        if dates.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::arg("series dates must be strictly increasing"));
        }
        if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::arg("series values must be positive and finite"));
        }
        Ok(ReturnSeries { dates, values })
    }

    pub fn dates(&self) -> &[NaiveDate] {
        &self.dates
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.dates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dates.is_empty()
    }

    pub fn first_date(&self) -> NaiveDate {
        self.dates[0]
    }

    pub fn last_date(&self) -> NaiveDate {
        *self.dates.last().expect("non-empty by construction")
    }

    /// Sub-series containing exactly the given dates.
    ///
    /// Errors if any requested date is missing from the series.
    pub fn restricted_to(&self, dates: &[NaiveDate]) -> Result<ReturnSeries> {
        let index: HashSet<NaiveDate> = self.dates.iter().copied().collect();
        if let Some(missing) = dates.iter().find(|d| !index.contains(d)) {
            return Err(Error::arg(format!("date {missing} not present in series")));
        }
        let wanted: HashSet<NaiveDate> = dates.iter().copied().collect();
        let (dates, values) = self
            .dates
            .iter()
            .zip(&self.values)
            .filter(|(d, _)| wanted.contains(d))
            .map(|(d, v)| (*d, *v))
            .unzip();
        ReturnSeries::new(dates, values)
    }

    /// Read a `date,level` CSV.
    pub fn read_csv<R: io::Read>(reader: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().from_reader(reader);
        let headers: Vec<&str> = r.headers()?.iter().map(str::trim).collect();
        if headers != ["date", "level"] {
            return Err(Error::MalformedHeader {
                expected: "date,level".to_string(),
                found: headers.join(","),
            });
        }
        let mut dates = Vec::new();
        let mut values = Vec::new();
        for row in r.records() {
            let row = row?;
            let date = row.get(0).unwrap_or("").trim();
            let level = row.get(1).unwrap_or("").trim();
            dates.push(
                NaiveDate::parse_from_str(date, "%Y-%m-%d")
                    .map_err(|_| Error::arg(format!("invalid date `{date}`")))?,
            );
            values.push(
                level
                    .parse::<f64>()
                    .map_err(|_| Error::arg(format!("invalid level `{level}`")))?,
            );
        }
        ReturnSeries::new(dates, values)
    }

    /// Write the `date,level` CSV.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["date", "level"])?;
        for (d, v) in self.dates.iter().zip(&self.values) {
            w.write_record([d.format("%Y-%m-%d").to_string(), v.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Multiple of invested capital: `terminal / initial`.
pub fn moic(initial: f64, terminal: f64) -> Result<f64> {
    if !initial.is_finite() || initial <= 0.0 {
        return Err(Error::arg("moic requires a positive initial price"));
    }
    if !terminal.is_finite() || terminal < 0.0 {
        return Err(Error::arg("moic requires a non-negative terminal price"));
    }
    Ok(terminal / initial)
}

/// Geometric annual rate: `(terminal / initial)^(1/years) - 1`.
pub fn irr(initial: f64, terminal: f64, years: f64) -> Result<f64> {
    if !initial.is_finite() || initial <= 0.0 {
        return Err(Error::arg("irr requires a positive initial price"));
    }
    if !terminal.is_finite() || terminal <= 0.0 {
        return Err(Error::arg("irr requires a positive terminal price"));
    }
    if !years.is_finite() || years <= 0.0 {
        return Err(Error::arg("irr requires a positive number of years"));
    }
    Ok((terminal / initial).powf(1.0 / years) - 1.0)
}

/// Total return over the whole series: `last / first - 1`.
pub fn cumulative_return(series: &ReturnSeries) -> Result<f64> {
    if series.len() < 2 {
        return Err(Error::arg("cumulative return needs at least two points"));
    }
    Ok(series.values[series.len() - 1] / series.values[0] - 1.0)
}

/// Per-period simple returns `v[t]/v[t-1] - 1`, length `n - 1`.
pub fn period_returns(series: &ReturnSeries) -> Result<Vec<f64>> {
    if series.len() < 2 {
        return Err(Error::arg("period returns need at least two points"));
    }
    Ok(series
        .values
        .windows(2)
        .map(|w| w[1] / w[0] - 1.0)
        .collect())
}

/// Sample standard deviation of period returns, scaled by
/// `sqrt(periods_per_year)`.
pub fn annualized_volatility(returns: &[f64], periods_per_year: f64) -> Result<f64> {
    if returns.len() < 2 {
        return Err(Error::arg("volatility needs at least two returns"));
    }
    if !periods_per_year.is_finite() || periods_per_year <= 0.0 {
        return Err(Error::arg("periods_per_year must be positive"));
    }
    Ok(sample_std(returns) * periods_per_year.sqrt())
}

/// Annualized excess return over annualized volatility.
///
/// Errors with [`Error::UndefinedSharpe`] when volatility is zero.
pub fn sharpe_ratio(returns: &[f64], risk_free_rate: f64, periods_per_year: f64) -> Result<f64> {
    let vol = annualized_volatility(returns, periods_per_year)?;
    if vol == 0.0 {
        return Err(Error::UndefinedSharpe);
    }
    Ok((mean(returns) * periods_per_year - risk_free_rate) / vol)
}

/// Pearson correlation of the two series' period returns over each trailing
/// window of `window` returns.
///
/// Each result is dated at the window's last return date. A window in which
/// either side has zero variance yields `None`.
pub fn rolling_correlation(
    a: &ReturnSeries,
    b: &ReturnSeries,
    window: usize,
) -> Result<Vec<(NaiveDate, Option<f64>)>> {
    if a.dates != b.dates {
        return Err(Error::arg(
            "rolling correlation requires identical date vectors",
        ));
    }
    if window < 2 {
        return Err(Error::arg("correlation window must be >= 2"));
    }
    let ra = period_returns(a)?;
    let rb = period_returns(b)?;
    let mut out = Vec::new();
    if ra.len() < window {
        return Ok(out);
    }
    for end in window..=ra.len() {
        let start = end - window;
        let corr = pearson(&ra[start..end], &rb[start..end]);
        // return k (0-based) is dated at dates[k + 1]
        out.push((a.dates[end], corr));
    }
    Ok(out)
}

/// Pearson correlation of period returns grouped by calendar year.
///
/// Years with fewer than two returns, or zero variance on either side,
/// yield `None`.
pub fn yearly_correlation(a: &ReturnSeries, b: &ReturnSeries) -> Result<Vec<(i32, Option<f64>)>> {
    if a.dates != b.dates {
        return Err(Error::arg(
            "yearly correlation requires identical date vectors",
        ));
    }
    let ra = period_returns(a)?;
    let rb = period_returns(b)?;
    let mut out: Vec<(i32, Option<f64>)> = Vec::new();
    let mut bucket_a: Vec<f64> = Vec::new();
    let mut bucket_b: Vec<f64> = Vec::new();
    let mut current_year: Option<i32> = None;
    for (k, (xa, xb)) in ra.iter().zip(&rb).enumerate() {
        let year = a.dates[k + 1].year();
        if current_year != Some(year) {
            if let Some(y) = current_year {
                out.push((y, pearson_checked(&bucket_a, &bucket_b)));
            }
            bucket_a.clear();
            bucket_b.clear();
            current_year = Some(year);
        }
        bucket_a.push(*xa);
        bucket_b.push(*xb);
    }
    if let Some(y) = current_year {
        out.push((y, pearson_checked(&bucket_a, &bucket_b)));
    }
    Ok(out)
}

fn pearson_checked(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() < 2 { None } else { pearson(x, y) }
}

/// Pearson correlation coefficient, `None` if either side has zero variance.
/// Clamped into [-1, 1] to absorb floating-point drift.
pub(crate) fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    debug_assert_eq!(x.len(), y.len());
    let mx = mean(x);
    let my = mean(y);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        let dx = a - mx;
        let dy = b - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (n-1 denominator).
pub(crate) fn sample_std(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

/// Per-artist performance over a holding period.
#[derive(Debug, Clone, PartialEq)]
pub struct PerformanceReport {
    pub artist: String,
    pub period_start: i32,
    pub period_end: i32,
    /// Average actual price at the period start (USD).
    pub initial: f64,
    /// Average actual price at the period end (USD).
    pub terminal: f64,
    pub moic: f64,
    pub irr: f64,
    /// Geometric annual return; identical to `irr` in this methodology.
    pub yearly_return: f64,
    /// Unlevered single buy/sell, so cash-on-cash coincides with MOIC.
    pub cash_on_cash: f64,
}

impl PerformanceReport {
    pub fn new(
        artist: impl Into<String>,
        period_start: i32,
        period_end: i32,
        initial: f64,
        terminal: f64,
    ) -> Result<Self> {
        if period_end <= period_start {
            return Err(Error::arg("period_end must be after period_start"));
        }
        let years = f64::from(period_end - period_start);
        let moic = moic(initial, terminal)?;
        let irr = irr(initial, terminal, years)?;
        Ok(PerformanceReport {
            artist: artist.into(),
            period_start,
            period_end,
            initial,
            terminal,
            moic,
            irr,
            yearly_return: irr,
            cash_on_cash: moic,
        })
    }
}

/// Export reports as `artist,avg_price_initial_k,avg_price_final_k,irr_pct,avg_moic`
/// (prices in $K with two decimals, percentages with two, ratios with four).
pub fn write_report_csv<W: io::Write>(writer: W, reports: &[PerformanceReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "artist",
        "avg_price_initial_k",
        "avg_price_final_k",
        "irr_pct",
        "avg_moic",
    ])?;
    for r in reports {
        w.write_record([
            r.artist.as_str(),
            &format!("{:.2}", r.initial / 1000.0),
            &format!("{:.2}", r.terminal / 1000.0),
            &format!("{:.2}", r.irr * 100.0),
            &format!("{:.4}", r.moic),
        ])?;
    }
    w.flush()?;
    Ok(())
}
