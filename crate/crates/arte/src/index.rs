//! Annually rebalanced blue-chip index construction.
//!
//! Each year the top-performing artists over a trailing lookback window
//! (five years by default) are selected, up to a cap of 100, and weighted by
//! their estimated actual price relative to the total across constituents.
//! Yearly index returns are the weight-sum of constituent price relatives
//! (Laspeyres style: weights fixed at the previous rebalance), chained from
//! a base level of 100.

use std::collections::BTreeMap;
use std::io;

use chrono::NaiveDate;

use crate::artist_stats::{ArtistYearStat, period_endpoints};
use crate::calendar::first_trading_day;
use crate::error::{Error, Result};
use crate::metrics::ReturnSeries;

#[derive(Debug, Clone)]
pub struct IndexConfig {
    /// Maximum number of constituents per rebalance.
    pub cap: usize,
    /// Trailing performance window used for ranking, in years.
    pub lookback_years: i32,
    /// First index year; defaults to the earliest year with stats.
    pub base_year: Option<i32>,
}

impl Default for IndexConfig {
    fn default() -> Self {
        IndexConfig {
            cap: 100,
            lookback_years: 5,
            base_year: None,
        }
    }
}

impl IndexConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap < 1 {
            return Err(Error::arg("cap must be >= 1"));
        }
        if self.lookback_years < 1 {
            return Err(Error::arg("lookback_years must be >= 1"));
        }
        Ok(())
    }
}

/// The constituent list and weights selected at one rebalance year.
#[derive(Debug, Clone, PartialEq)]
pub struct RebalanceSnapshot {
    pub year: i32,
    /// `(artist, weight)` in selection (rank) order; weights sum to 1.
    pub constituents: Vec<(String, f64)>,
    pub lookback_years: i32,
}

/// Chained index levels plus the per-year rebalance snapshots.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexSeries {
    /// Rebalance-effective dates (first trading day of each year).
    pub dates: Vec<NaiveDate>,
    pub levels: Vec<f64>,
    pub snapshots: Vec<RebalanceSnapshot>,
}

impl IndexSeries {
    /// Wrap pre-computed levels (for example loaded from CSV). Snapshots are
    /// empty; the base level is taken as given.
    pub fn from_levels(dates: Vec<NaiveDate>, levels: Vec<f64>) -> Result<Self> {
        // Reuse the series validation: increasing dates, positive levels.
        let series = ReturnSeries::new(dates, levels)?;
        Ok(IndexSeries {
            dates: series.dates().to_vec(),
            levels: series.values().to_vec(),
            snapshots: Vec::new(),
        })
    }

    pub fn first_date(&self) -> NaiveDate {
        self.dates[0]
    }

    pub fn last_date(&self) -> NaiveDate {
        *self.dates.last().expect("non-empty by construction")
    }
}

// Per-artist year -> est_actual_price lookup, plus window transaction counts.
struct PriceBook<'a> {
    by_artist: BTreeMap<&'a str, BTreeMap<i32, (f64, usize)>>,
}

impl<'a> PriceBook<'a> {
    fn new(stats: &'a [ArtistYearStat]) -> Self {
        let mut by_artist: BTreeMap<&str, BTreeMap<i32, (f64, usize)>> = BTreeMap::new();
        for s in stats {
            by_artist
                .entry(s.artist.as_str())
                .or_default()
                .insert(s.year, (s.est_actual_price, s.n_transactions));
        }
        PriceBook { by_artist }
    }

    /// Price at `year`, or carried forward from the nearest prior year.
    fn price_asof(&self, artist: &str, year: i32) -> Option<f64> {
        self.by_artist
            .get(artist)?
            .range(..=year)
            .next_back()
            .map(|(_, (p, _))| *p)
    }

    fn transactions_in(&self, artist: &str, from: i32, to: i32) -> usize {
        self.by_artist
            .get(artist)
            .map(|m| m.range(from..=to).map(|(_, (_, n))| *n).sum())
            .unwrap_or(0)
    }
}

/// Rank artists by trailing performance over `[as_of_year - lookback_years,
/// as_of_year]`.
///
/// The metric is the ratio of estimated actual prices at the window
/// endpoints (snapped inward to years with data). Artists without any stat
/// in the window are unranked. Ties break by descending transaction count in
/// the window, then artist name.
pub fn rank_artists(stats: &[ArtistYearStat], as_of_year: i32, lookback_years: i32) -> Vec<String> {
    let book = PriceBook::new(stats);
    let from = as_of_year - lookback_years;
    let mut ranked: Vec<(f64, usize, &str)> = book
        .by_artist
        .keys()
        .filter_map(|artist| {
            let (initial, terminal) = period_endpoints(stats, artist, from, as_of_year)?;
            let count = book.transactions_in(artist, from, as_of_year);
            Some((terminal / initial, count, *artist))
        })
        .collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(b.1.cmp(&a.1)).then(a.2.cmp(b.2)));
    ranked
        .into_iter()
        .map(|(_, _, name)| name.to_string())
        .collect()
}

/// First `min(cap, len)` of the ranked list.
pub fn select_constituents(ranked: &[String], cap: usize) -> Result<Vec<String>> {
    if cap < 1 {
        return Err(Error::arg("cap must be >= 1"));
    }
    if ranked.is_empty() {
        return Err(Error::empty("no eligible constituents"));
    }
    Ok(ranked[..ranked.len().min(cap)].to_vec())
}

/// Price-share weights at `year`: each constituent's estimated actual price
/// (carried forward from the nearest prior year when `year` itself has no
/// stat) divided by the total across constituents.
pub fn compute_weights(
    stats: &[ArtistYearStat],
    constituents: &[String],
    year: i32,
) -> Result<RebalanceSnapshot> {
    compute_weights_with(&PriceBook::new(stats), constituents, year, 0)
}

fn compute_weights_with(
    book: &PriceBook<'_>,
    constituents: &[String],
    year: i32,
    lookback_years: i32,
) -> Result<RebalanceSnapshot> {
    if constituents.is_empty() {
        return Err(Error::empty("no constituents to weight"));
    }
    let mut prices = Vec::with_capacity(constituents.len());
    for artist in constituents {
        let price = book.price_asof(artist, year).ok_or_else(|| {
            Error::arg(format!("no price data for `{artist}` at or before {year}"))
        })?;
        prices.push(price);
    }
    let total: f64 = prices.iter().sum();
    let constituents = constituents
        .iter()
        .zip(&prices)
        .map(|(artist, price)| (artist.clone(), price / total))
        .collect();
    Ok(RebalanceSnapshot {
        year,
        constituents,
        lookback_years,
    })
}

/// Build the chained annual index.
///
/// For each year `y` after the base year, the return is
/// `sum_i w_i * (P_i(y) / P_i(y-1) - 1)` over the snapshot selected at
/// `y-1`, with missing prices carried forward (contributing zero return).
/// Levels start at 100 on the first trading day of the base year.
pub fn build_index(stats: &[ArtistYearStat], config: &IndexConfig) -> Result<IndexSeries> {
    config.validate()?;
    let years: Vec<i32> = {
        let mut ys: Vec<i32> = stats.iter().map(|s| s.year).collect();
        ys.sort_unstable();
        ys.dedup();
        ys
    };
    let (&y_min, &y_max) = match (years.first(), years.last()) {
        (Some(a), Some(b)) if a < b => (a, b),
        _ => {
            return Err(Error::empty(
                "index construction needs stats spanning at least 2 years",
            ));
        }
    };
    let base_year = config.base_year.unwrap_or(y_min);
    if base_year < y_min || base_year >= y_max {
        return Err(Error::arg(format!(
            "base_year {base_year} outside data span {y_min}..{y_max}"
        )));
    }

    let book = PriceBook::new(stats);
    let mut dates = vec![first_trading_day(base_year)];
    let mut levels = vec![100.0];
    let mut snapshots: Vec<RebalanceSnapshot> = Vec::new();

    for year in base_year..=y_max {
        let ranked = rank_artists(stats, year, config.lookback_years);
        if !ranked.is_empty() {
            let chosen = select_constituents(&ranked, config.cap)?;
            snapshots.push(compute_weights_with(
                &book,
                &chosen,
                year,
                config.lookback_years,
            )?);
        } else if snapshots.is_empty() {
            return Err(Error::empty("no eligible constituents"));
        }
        // else: keep the previous snapshot through the gap year.

        if year < y_max {
            let snapshot = snapshots.last().expect("at least one snapshot");
            let mut index_return = 0.0;
            for (artist, weight) in &snapshot.constituents {
                let prev = book
                    .price_asof(artist, year)
                    .expect("constituents have prices as of selection");
                let next = book.price_asof(artist, year + 1).unwrap_or(prev);
                index_return += weight * (next / prev - 1.0);
            }
            let prev_level = *levels.last().expect("non-empty");
            levels.push(prev_level * (1.0 + index_return));
            dates.push(first_trading_day(year + 1));
        }
    }

    Ok(IndexSeries {
        dates,
        levels,
        snapshots,
    })
}

/// Interpolate annual levels onto a trading calendar, log-linearly between
/// anchor dates so within-year growth compounds at a constant daily rate.
///
/// Output covers the calendar dates inside the series' range; anchor dates
/// present in the calendar reproduce their levels exactly.
pub fn to_daily(series: &IndexSeries, calendar: &[NaiveDate]) -> Result<ReturnSeries> {
    if calendar.len() < 2 {
        return Err(Error::arg("calendar must contain at least 2 dates"));
    }
    if series.dates.len() < 2 {
        return Err(Error::arg("index series must span at least 2 dates"));
    }
    let first = series.first_date();
    let last = series.last_date();
    let mut dates = Vec::new();
    let mut values = Vec::new();
    let mut segment = 0usize; // index of the anchor at or before the current date
    for &d in calendar {
        if d < first || d > last {
            continue;
        }
        while segment + 2 < series.dates.len() && series.dates[segment + 1] <= d {
            segment += 1;
        }
        let (t0, t1) = (series.dates[segment], series.dates[segment + 1]);
        let (v0, v1) = (series.levels[segment], series.levels[segment + 1]);
        let value = if d == t0 || v0 == v1 {
            v0
        } else if d == t1 {
            v1
        } else {
            let f = (d - t0).num_days() as f64 / (t1 - t0).num_days() as f64;
            (v0.ln() + f * (v1.ln() - v0.ln())).exp()
        };
        dates.push(d);
        values.push(value);
    }
    if dates.len() < 2 {
        return Err(Error::empty("calendar does not overlap the index series"));
    }
    ReturnSeries::new(dates, values)
}

/// Export `date,level` rows (levels with six decimals).
pub fn write_index_csv<W: io::Write>(writer: W, series: &IndexSeries) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["date", "level"])?;
    for (d, v) in series.dates.iter().zip(&series.levels) {
        w.write_record([d.format("%Y-%m-%d").to_string(), format!("{v:.6}")])?;
    }
    w.flush()?;
    Ok(())
}

/// Export `year,artist,weight_pct` rows sorted by year then artist.
pub fn write_snapshots_csv<W: io::Write>(writer: W, snapshots: &[RebalanceSnapshot]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["year", "artist", "weight_pct"])?;
    let mut rows: Vec<(i32, &str, f64)> = snapshots
        .iter()
        .flat_map(|s| {
            s.constituents
                .iter()
                .map(move |(artist, weight)| (s.year, artist.as_str(), *weight))
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(b.1)));
    for (year, artist, weight) in rows {
        w.write_record([
            year.to_string().as_str(),
            artist,
            &format!("{:.2}", weight * 100.0),
        ])?;
    }
    w.flush()?;
    Ok(())
}
