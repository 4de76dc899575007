//! Deterministic weekday trading calendar.
//!
//! No holiday table is applied: every Monday through Friday counts as a
//! trading day, so calendars are reproducible without market-data lookups.

use chrono::{Datelike, Days, NaiveDate, Weekday};

/// All weekdays in `[start, end]`, ascending.
pub fn weekdays(start: NaiveDate, end: NaiveDate) -> Vec<NaiveDate> {
    let mut out = Vec::new();
    let mut d = start;
    while d <= end {
        if is_weekday(d) {
            out.push(d);
        }
        d = d.checked_add_days(Days::new(1)).expect("date overflow");
    }
    out
}

/// First weekday on or after January 1 of `year`.
pub fn first_trading_day(year: i32) -> NaiveDate {
    let mut d = NaiveDate::from_ymd_opt(year, 1, 1).expect("valid year");
    while !is_weekday(d) {
        d = d.checked_add_days(Days::new(1)).expect("date overflow");
    }
    d
}

pub fn is_weekday(d: NaiveDate) -> bool {
    !matches!(d.weekday(), Weekday::Sat | Weekday::Sun)
}
