//! Parse a TLE file and convert each element set to propagatable elements.
//!
//!     cargo run --example parse_tle [-- path/to/catalog.tle]
//!
//! Without an argument a bundled ISS element set is used.

use leosim::orbits::{parse_tle_file, period_s, tle_to_elements};

const ISS: &str = include_str!("../tests/fixtures/iss.tle");

fn main() -> leosim::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| leosim::Error::InvalidInput(format!("{path}: {e}")))?,
        None => ISS.to_string(),
    };
    let records = parse_tle_file(&text)?;
    let Some(newest) = records.iter().map(|r| r.epoch()).max() else {
        println!("no element sets");
        return Ok(());
    };
    println!("{} element sets, newest epoch {newest}", records.len());
    for rec in records.iter().take(10) {
        let el = tle_to_elements(rec, newest)?;
        println!(
            "{:<24} #{:<6} inc {:>8.4} raan {:>8.4} e {:.7} n {:>11.8} rev/day  a {:>9.3} km  T {:>8.2} s",
            rec.name,
            rec.catalog_number,
            rec.inclination_deg,
            rec.raan_deg,
            rec.eccentricity,
            rec.mean_motion_rev_day,
            el.semi_major_axis_km,
            period_s(&el)
        );
    }
    Ok(())
}
