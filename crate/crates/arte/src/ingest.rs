//! Auction-transaction ingestion: CSV parsing, validation, and the medium
//! and artist-eligibility filters that reduce a raw feed to blue-chip data.
//!
//! The input schema is a CSV with the exact header
//! `artist,title,medium,auction_house,sale_date,height_cm,width_cm,price_usd,low_estimate_usd,high_estimate_usd`.
//! A malformed header is fatal; malformed rows are collected as
//! [`RejectReport`] entries and never abort the run, so
//! `accepted + rejected == data rows` always holds.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

pub const TRANSACTIONS_HEADER: [&str; 10] = [
    "artist",
    "title",
    "medium",
    "auction_house",
    "sale_date",
    "height_cm",
    "width_cm",
    "price_usd",
    "low_estimate_usd",
    "high_estimate_usd",
];

/// Artwork medium. Auction feeds carry free-text medium descriptions; they
/// are mapped onto this enum through a configurable alias table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Medium {
    Painting,
    Sculpture,
    WorkOnPaper,
    Print,
    Edition,
    Other,
}

impl Medium {
    pub const ALL: [Medium; 6] = [
        Medium::Painting,
        Medium::Sculpture,
        Medium::WorkOnPaper,
        Medium::Print,
        Medium::Edition,
        Medium::Other,
    ];

    /// Canonical string used when writing CSV; round-trips through the
    /// default alias table.
    pub fn as_str(&self) -> &'static str {
        match self {
            Medium::Painting => "painting",
            Medium::Sculpture => "sculpture",
            Medium::WorkOnPaper => "work on paper",
            Medium::Print => "print",
            Medium::Edition => "edition",
            Medium::Other => "other",
        }
    }
}

/// Case-insensitive free-text → [`Medium`] mapping. Strings missing from the
/// table fall through to [`Medium::Other`] rather than rejecting the row.
#[derive(Debug, Clone)]
pub struct MediumAliases {
    map: BTreeMap<String, Medium>,
}

impl Default for MediumAliases {
    fn default() -> Self {
        let mut map = BTreeMap::new();
        for m in Medium::ALL {
            map.insert(m.as_str().to_string(), m);
        }
        let extras: [(&str, Medium); 12] = [
            ("oil on canvas", Medium::Painting),
            ("oil on panel", Medium::Painting),
            ("acrylic on canvas", Medium::Painting),
            ("tempera", Medium::Painting),
            ("bronze", Medium::Sculpture),
            ("marble", Medium::Sculpture),
            ("works on paper", Medium::WorkOnPaper),
            ("drawing", Medium::WorkOnPaper),
            ("watercolor", Medium::WorkOnPaper),
            ("lithograph", Medium::Print),
            ("etching", Medium::Print),
            ("multiple", Medium::Edition),
        ];
        for (alias, m) in extras {
            map.insert(alias.to_string(), m);
        }
        MediumAliases { map }
    }
}

impl MediumAliases {
    pub fn insert(&mut self, alias: &str, medium: Medium) {
        self.map.insert(alias.trim().to_lowercase(), medium);
    }

    pub fn resolve(&self, raw: &str) -> Medium {
        self.map
            .get(&raw.trim().to_lowercase())
            .copied()
            .unwrap_or(Medium::Other)
    }
}

/// One validated public auction transaction.
///
/// Dimensions and pre-sale estimates are optional at parse time; stages that
/// need an area (price normalization) skip records without dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct AuctionRecord {
    pub artist: String,
    pub title: String,
    pub medium: Medium,
    pub auction_house: String,
    pub sale_date: NaiveDate,
    pub height_cm: Option<f64>,
    pub width_cm: Option<f64>,
    pub price_usd: f64,
    pub low_estimate_usd: Option<f64>,
    pub high_estimate_usd: Option<f64>,
}

impl AuctionRecord {
    /// Painted surface in cm², when both dimensions are present.
    pub fn area(&self) -> Option<f64> {
        match (self.height_cm, self.width_cm) {
            (Some(h), Some(w)) => Some(h * w),
            _ => None,
        }
    }
}

/// A rejected input row: 1-based file line number plus the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectReport {
    pub line: u64,
    pub reason: String,
}

/// Eligibility and medium filter parameters.
#[derive(Debug, Clone)]
pub struct FilterConfig {
    pub allowed_mediums: BTreeSet<Medium>,
    /// Minimum calendar-year span of auction history:
    /// `last sale year - first sale year + 1`.
    pub min_history_years: i32,
    /// Minimum arithmetic mean of hammer prices across the artist's records.
    pub min_avg_price: f64,
    pub period_start: NaiveDate,
    pub period_end: NaiveDate,
    pub medium_aliases: MediumAliases,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            allowed_mediums: BTreeSet::from([Medium::Painting, Medium::Sculpture]),
            min_history_years: 10,
            min_avg_price: 500_000.0,
            period_start: NaiveDate::from_ymd_opt(1990, 1, 1).unwrap(),
            period_end: NaiveDate::from_ymd_opt(2024, 12, 31).unwrap(),
            medium_aliases: MediumAliases::default(),
        }
    }
}

impl FilterConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_history_years < 1 {
            return Err(Error::arg("min_history_years must be >= 1"));
        }
        if !self.min_avg_price.is_finite() || self.min_avg_price < 0.0 {
            return Err(Error::arg("min_avg_price must be >= 0"));
        }
        if self.period_start >= self.period_end {
            return Err(Error::arg("period_start must precede period_end"));
        }
        Ok(())
    }
}

/// Output of [`parse_transactions`].
#[derive(Debug, Clone, Default)]
pub struct ParseOutcome {
    pub records: Vec<AuctionRecord>,
    pub rejects: Vec<RejectReport>,
}

/// An artist that survived [`filter_eligible_artists`], with the aggregates
/// the decision was based on.
#[derive(Debug, Clone, PartialEq)]
pub struct EligibleArtist {
    pub name: String,
    pub first_year: i32,
    pub last_year: i32,
    pub mean_price: f64,
    pub n_sales: usize,
}

/// Output of [`filter_eligible_artists`]: the surviving records plus the
/// eligible-artist roster (sorted by name).
#[derive(Debug, Clone)]
pub struct EligibilityOutcome {
    pub records: Vec<AuctionRecord>,
    pub eligible: Vec<EligibleArtist>,
}

/// Parse a transaction CSV stream into validated records.
///
/// The header must match [`TRANSACTIONS_HEADER`] exactly (fatal otherwise).
/// Each data row either becomes an [`AuctionRecord`] or one [`RejectReport`]
/// carrying its file line number and the first validation failure.
pub fn parse_transactions<R: io::Read>(source: R, config: &FilterConfig) -> Result<ParseOutcome> {
    config.validate()?;
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(source);

    let headers = reader.headers()?.clone();
    let found: Vec<&str> = headers.iter().map(str::trim).collect();
    if found != TRANSACTIONS_HEADER {
        return Err(Error::MalformedHeader {
            expected: TRANSACTIONS_HEADER.join(","),
            found: found.join(","),
        });
    }

    let mut outcome = ParseOutcome::default();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line());
        match parse_row(&row, config) {
            Ok(record) => outcome.records.push(record),
            Err(reason) => outcome.rejects.push(RejectReport { line, reason }),
        }
    }
    Ok(outcome)
}

fn parse_row(
    row: &csv::StringRecord,
    config: &FilterConfig,
) -> std::result::Result<AuctionRecord, String> {
    if row.len() != TRANSACTIONS_HEADER.len() {
        return Err(format!(
            "expected {} fields, found {}",
            TRANSACTIONS_HEADER.len(),
            row.len()
        ));
    }
    let field = |i: usize| row.get(i).unwrap_or("").trim();

    let artist = canonical_artist(field(0));
    if artist.is_empty() {
        return Err("empty artist name".to_string());
    }

    let sale_date = NaiveDate::parse_from_str(field(4), "%Y-%m-%d")
        .map_err(|_| format!("invalid sale_date `{}`", field(4)))?;
    if sale_date < config.period_start || sale_date > config.period_end {
        return Err(format!(
            "sale_date {} outside configured period {}..{}",
            sale_date, config.period_start, config.period_end
        ));
    }

    let price_usd = required_number(field(7), "price_usd")?;
    if price_usd <= 0.0 {
        return Err("non-positive price".to_string());
    }

    let height_cm = optional_number(field(5), "height_cm")?;
    let width_cm = optional_number(field(6), "width_cm")?;
    for (value, name) in [(height_cm, "height_cm"), (width_cm, "width_cm")] {
        if let Some(v) = value
            && v <= 0.0
        {
            return Err(format!("non-positive {name}"));
        }
    }

    let low_estimate_usd = optional_number(field(8), "low_estimate_usd")?;
    let high_estimate_usd = optional_number(field(9), "high_estimate_usd")?;
    if let Some(low) = low_estimate_usd
        && low < 0.0
    {
        return Err("negative low_estimate_usd".to_string());
    }
    if let (Some(low), Some(high)) = (low_estimate_usd, high_estimate_usd)
        && low > high
    {
        return Err("low_estimate_usd exceeds high_estimate_usd".to_string());
    }

    Ok(AuctionRecord {
        artist,
        title: field(1).to_string(),
        medium: config.medium_aliases.resolve(field(2)),
        auction_house: field(3).to_string(),
        sale_date,
        height_cm,
        width_cm,
        price_usd,
        low_estimate_usd,
        high_estimate_usd,
    })
}

/// Trim and collapse internal whitespace runs; the canonical artist key.
fn canonical_artist(raw: &str) -> String {
    raw.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn required_number(raw: &str, name: &str) -> std::result::Result<f64, String> {
    if raw.is_empty() {
        return Err(format!("invalid {name} ``"));
    }
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("invalid {name} `{raw}`")),
    }
}

fn optional_number(raw: &str, name: &str) -> std::result::Result<Option<f64>, String> {
    if raw.is_empty() {
        return Ok(None);
    }
    required_number(raw, name).map(Some)
}

/// Keep only records whose medium is allowed. Order-preserving and
/// idempotent.
pub fn filter_medium(mut records: Vec<AuctionRecord>, config: &FilterConfig) -> Vec<AuctionRecord> {
    records.retain(|r| config.allowed_mediums.contains(&r.medium));
    records
}

/// Keep only records by artists with a long enough auction history and a
/// high enough mean hammer price.
///
/// An artist is eligible iff
/// `last sale year - first sale year + 1 >= min_history_years` and
/// `mean(price) >= min_avg_price`, both measured over the records given
/// (normally already medium-filtered).
pub fn filter_eligible_artists(
    records: Vec<AuctionRecord>,
    config: &FilterConfig,
) -> EligibilityOutcome {
    struct Acc {
        first_year: i32,
        last_year: i32,
        price_sum: f64,
        n: usize,
    }

    let mut by_artist: BTreeMap<&str, Acc> = BTreeMap::new();
    for r in &records {
        let year = r.sale_date.year();
        by_artist
            .entry(r.artist.as_str())
            .and_modify(|a| {
                a.first_year = a.first_year.min(year);
                a.last_year = a.last_year.max(year);
                a.price_sum += r.price_usd;
                a.n += 1;
            })
            .or_insert(Acc {
                first_year: year,
                last_year: year,
                price_sum: r.price_usd,
                n: 1,
            });
    }

    let eligible: Vec<EligibleArtist> = by_artist
        .iter()
        .filter_map(|(name, acc)| {
            let span = acc.last_year - acc.first_year + 1;
            let mean_price = acc.price_sum / acc.n as f64;
            (span >= config.min_history_years && mean_price >= config.min_avg_price).then(|| {
                EligibleArtist {
                    name: name.to_string(),
                    first_year: acc.first_year,
                    last_year: acc.last_year,
                    mean_price,
                    n_sales: acc.n,
                }
            })
        })
        .collect();

    let keep: HashSet<&str> = eligible.iter().map(|e| e.name.as_str()).collect();
    let records = {
        let mut records = records;
        records.retain(|r| keep.contains(r.artist.as_str()));
        records
    };
    EligibilityOutcome { records, eligible }
}

/// Write records in the canonical transaction schema. Floats are written in
/// shortest round-trip form so parse → write → parse is lossless.
pub fn write_transactions_csv<W: io::Write>(writer: W, records: &[AuctionRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(TRANSACTIONS_HEADER)?;
    for r in records {
        w.write_record([
            r.artist.as_str(),
            r.title.as_str(),
            r.medium.as_str(),
            r.auction_house.as_str(),
            &r.sale_date.format("%Y-%m-%d").to_string(),
            &opt_num(r.height_cm),
            &opt_num(r.width_cm),
            &r.price_usd.to_string(),
            &opt_num(r.low_estimate_usd),
            &opt_num(r.high_estimate_usd),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_rejects_csv<W: io::Write>(writer: W, rejects: &[RejectReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["line", "reason"])?;
    for r in rejects {
        w.write_record([r.line.to_string().as_str(), r.reason.as_str()])?;
    }
    w.flush()?;
    Ok(())
}

fn opt_num(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
