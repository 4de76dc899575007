//! Size-standardized artist price statistics.
//!
//! Prices are normalized to USD per cm² using each work's dimensions, then
//! aggregated per artist and calendar year. The estimated actual price of an
//! artist-year recombines the two yearly means:
//! `est_actual_price = avg_norm_price × avg_area`. Note this is a
//! mean-of-ratios times a mean-of-areas, which intentionally differs from the
//! mean raw hammer price except in degenerate cases (e.g. a single record).

use std::collections::BTreeMap;
use std::io;

use chrono::Datelike;

use crate::error::Result;
use crate::ingest::AuctionRecord;

/// Per-artist, per-year aggregates over records that carry dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ArtistYearStat {
    pub artist: String,
    pub year: i32,
    /// Mean of per-record price-per-cm² (USD/cm²).
    pub avg_norm_price: f64,
    /// Mean of per-record height × width (cm²).
    pub avg_area: f64,
    /// `avg_norm_price * avg_area`, exactly by construction.
    pub est_actual_price: f64,
    /// Number of records that entered the aggregates (>= 1).
    pub n_transactions: usize,
}

/// Output of [`yearly_stats`]: the per-artist-year stats plus a tally of
/// records skipped for missing dimensions.
#[derive(Debug, Clone, Default)]
pub struct YearlyStats {
    pub stats: Vec<ArtistYearStat>,
    pub skipped_rows: usize,
}

/// Price per unit area, or `None` when either dimension is absent.
pub fn normalize_price(record: &AuctionRecord) -> Option<f64> {
    record.area().map(|area| record.price_usd / area)
}

/// Aggregate records into [`ArtistYearStat`]s.
///
/// Records without dimensions are excluded from the aggregates and counted
/// in `skipped_rows`; an artist-year with no usable record emits no stat.
/// Summation order within each group is fixed (ascending sale date, then
/// input order) so results do not depend on input ordering.
pub fn yearly_stats(records: &[AuctionRecord]) -> YearlyStats {
    let mut groups: BTreeMap<(&str, i32), Vec<(chrono::NaiveDate, usize)>> = BTreeMap::new();
    let mut skipped_rows = 0usize;

    for (idx, r) in records.iter().enumerate() {
        if r.area().is_none() {
            skipped_rows += 1;
            continue;
        }
        groups
            .entry((r.artist.as_str(), r.sale_date.year()))
            .or_default()
            .push((r.sale_date, idx));
    }

    let stats = groups
        .into_iter()
        .map(|((artist, year), mut members)| {
            members.sort();
            let n = members.len() as f64;
            let mut norm_sum = 0.0;
            let mut area_sum = 0.0;
            for (_, idx) in &members {
                let r = &records[*idx];
                let area = r.area().expect("members carry dimensions");
                norm_sum += r.price_usd / area;
                area_sum += area;
            }
            let avg_norm_price = norm_sum / n;
            let avg_area = area_sum / n;
            ArtistYearStat {
                artist: artist.to_string(),
                year,
                avg_norm_price,
                avg_area,
                est_actual_price: avg_norm_price * avg_area,
                n_transactions: members.len(),
            }
        })
        .collect();

    YearlyStats {
        stats,
        skipped_rows,
    }
}

/// Estimated actual prices at the start and end of `[start_year, end_year]`
/// for one artist, snapping inward to the nearest years with data.
///
/// Returns `(initial, terminal)`, or `None` when the artist has no stat
/// inside the window.
pub fn period_endpoints(
    stats: &[ArtistYearStat],
    artist: &str,
    start_year: i32,
    end_year: i32,
) -> Option<(f64, f64)> {
    debug_assert!(start_year <= end_year);
    let mut in_window: Vec<(i32, f64)> = stats
        .iter()
        .filter(|s| s.artist == artist && s.year >= start_year && s.year <= end_year)
        .map(|s| (s.year, s.est_actual_price))
        .collect();
    in_window.sort_by_key(|(year, _)| *year);
    match (in_window.first(), in_window.last()) {
        (Some((_, initial)), Some((_, terminal))) => Some((*initial, *terminal)),
        _ => None,
    }
}

/// Export stats as `artist,year,avg_norm_price,avg_area,est_actual_price,n_transactions`.
pub fn write_stats_csv<W: io::Write>(writer: W, stats: &[ArtistYearStat]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "artist",
        "year",
        "avg_norm_price",
        "avg_area",
        "est_actual_price",
        "n_transactions",
    ])?;
    for s in stats {
        w.write_record([
            s.artist.as_str(),
            &s.year.to_string(),
            &s.avg_norm_price.to_string(),
            &s.avg_area.to_string(),
            &s.est_actual_price.to_string(),
            &s.n_transactions.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
