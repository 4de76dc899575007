//! Parse a raw transactions CSV, collect per-row rejects, and apply the
//! medium and artist-eligibility filters.
//!
//! ```bash
//! cargo run -p arte --example ingest_and_filter
//! ```

use arte::ingest::{FilterConfig, filter_eligible_artists, filter_medium, parse_transactions};

// A messy feed: one reject (zero price), one print (filtered by medium),
// one artist with too little history, one blue-chip keeper.
const RAW: &str = "\
artist,title,medium,auction_house,sale_date,height_cm,width_cm,price_usd,low_estimate_usd,high_estimate_usd
Mara Voss,Dawn I,oil on canvas,Meridian Auctions,2005-05-02,120,100,650000,500000,700000
Mara Voss,Dawn II,painting,Meridian Auctions,2010-06-11,110,90,900000,,
Mara Voss,Dawn III,painting,Calloway & Bright,2016-03-09,130,105,1400000,1000000,1600000
Mara Voss,Broken Lot,painting,Calloway & Bright,2016-03-09,130,105,0,,
Jonas Brandt,Sheet Study,print,Meridian Auctions,2004-02-14,60,40,700000,,
Jonas Brandt,Sheet Study II,print,Meridian Auctions,2015-02-14,60,40,800000,,
Ines Okafor,Early Form,sculpture,Eastbourne House,2019-09-30,200,80,2000000,,
Ines Okafor,Late Form,sculpture,Eastbourne House,2021-09-30,210,85,2400000,,
";

fn main() -> arte::Result<()> {
    let config = FilterConfig::default();
    let parsed = parse_transactions(RAW.as_bytes(), &config)?;
    println!(
        "parsed: {} records, {} rejects",
        parsed.records.len(),
        parsed.rejects.len()
    );
    for reject in &parsed.rejects {
        println!("  line {}: {}", reject.line, reject.reason);
    }

    let by_medium = filter_medium(parsed.records, &config);
    println!(
        "\nafter medium filter (paintings + sculptures): {} records",
        by_medium.len()
    );

    let outcome = filter_eligible_artists(by_medium, &config);
    println!(
        "eligible artists (>= {} year span, >= {:.0} USD average):",
        config.min_history_years, config.min_avg_price
    );
    for artist in &outcome.eligible {
        println!(
            "  {} | {}..{} | mean {:.0} USD over {} sales",
            artist.name, artist.first_year, artist.last_year, artist.mean_price, artist.n_sales
        );
    }
    println!(
        "\nJonas Brandt is out (prints only); Ines Okafor is out (3-year span); \
         {} records remain",
        outcome.records.len()
    );
    Ok(())
}
