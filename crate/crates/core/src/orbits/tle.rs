//! NORAD two-line element sets: fixed-column parsing, checksum validation,
//! conversion to [`OrbitalElements`], and encoding back to text.

use std::f64::consts::TAU;

use chrono::{DateTime, Datelike, Duration, NaiveDate, TimeZone, Utc};

use crate::error::{Error, Result, TleLine};
use crate::geodesy::MU_KM3_S2;
use crate::orbits::OrbitalElements;

pub const LINE_LEN: usize = 69;

/// One parsed element set. Angles are degrees, mean motion is rev/day.
#[derive(Debug, Clone, PartialEq)]
pub struct TleRecord {
    pub name: String,
    pub line1: String,
    pub line2: String,
    pub catalog_number: u32,
    /// Four-digit epoch year.
    pub epoch_year: i32,
    /// Day of year with fraction; 1.0 is January 1st, 00:00 UTC.
    pub epoch_day: f64,
    pub inclination_deg: f64,
    pub raan_deg: f64,
    pub eccentricity: f64,
    pub arg_perigee_deg: f64,
    pub mean_anomaly_deg: f64,
    pub mean_motion_rev_day: f64,
}

impl TleRecord {
    pub fn epoch(&self) -> DateTime<Utc> {
        let jan1 = Utc
            .with_ymd_and_hms(self.epoch_year, 1, 1, 0, 0, 0)
            .single()
            .expect("January 1st always exists");
        jan1 + Duration::nanoseconds(((self.epoch_day - 1.0) * 86_400e9).round() as i64)
    }
}

/// Modulo-10 checksum over the first 68 columns: digits count their value,
/// minus signs count one.
pub fn checksum(line: &str) -> u8 {
    let sum: u32 = line
        .bytes()
        .take(LINE_LEN - 1)
        .map(|b| match b {
            b'0'..=b'9' => (b - b'0') as u32,
            b'-' => 1,
            _ => 0,
        })
        .sum();
    (sum % 10) as u8
}

fn validate_line(line: &str, which: TleLine) -> Result<()> {
    let format_err = |reason: String| Err(Error::TleFormat { line: which, reason });
    if !line.is_ascii() {
        return format_err("contains non-ASCII characters".into());
    }
    if line.len() != LINE_LEN {
        return format_err(format!("length {} (expected {LINE_LEN})", line.len()));
    }
    let prefix = match which {
        TleLine::Line1 => "1 ",
        TleLine::Line2 => "2 ",
    };
    if !line.starts_with(prefix) {
        return format_err(format!("does not start with {prefix:?}"));
    }
    let found = line.as_bytes()[LINE_LEN - 1] as char;
    let expected = checksum(line);
    if found.to_digit(10) != Some(expected as u32) {
        return Err(Error::TleChecksum {
            line: which,
            expected,
            found,
        });
    }
    Ok(())
}

/// Text of 1-based inclusive columns `start..=end`.
fn columns(line: &str, start: usize, end: usize) -> &str {
    &line[start - 1..end]
}

fn field<T: std::str::FromStr>(line: &str, which: TleLine, start: usize, end: usize) -> Result<T> {
    let text = columns(line, start, end);
    text.trim().parse().map_err(|_| Error::TleField {
        line: which,
        start,
        end,
        text: text.to_string(),
    })
}

/// Catalog numbers are five digits, or Alpha-5 (leading letter, I and O skipped).
fn catalog_number(line: &str, which: TleLine) -> Result<u32> {
    let text = columns(line, 3, 7);
    let err = || Error::TleField {
        line: which,
        start: 3,
        end: 7,
        text: text.to_string(),
    };
    let first = text.as_bytes()[0];
    if first.is_ascii_uppercase() {
        let lead = match first {
            b'A'..=b'H' => first - b'A' + 10,
            b'J'..=b'N' => first - b'J' + 18,
            b'P'..=b'Z' => first - b'P' + 23,
            _ => return Err(err()),
        } as u32;
        let rest: u32 = text[1..].parse().map_err(|_| err())?;
        Ok(lead * 10_000 + rest)
    } else {
        text.trim().parse().map_err(|_| err())
    }
}

/// Parses one element set from a name line and the two data lines.
///
/// Trailing carriage returns are ignored; everything else must follow the
/// 69-column layout exactly.
pub fn parse_tle(name_line: &str, line1: &str, line2: &str) -> Result<TleRecord> {
    let line1 = line1.trim_end_matches(['\r', '\n']);
    let line2 = line2.trim_end_matches(['\r', '\n']);
    validate_line(line1, TleLine::Line1)?;
    validate_line(line2, TleLine::Line2)?;

    let catalog = catalog_number(line1, TleLine::Line1)?;
    if catalog_number(line2, TleLine::Line2)? != catalog {
        return Err(Error::TleFormat {
            line: TleLine::Line2,
            reason: "catalog number differs from line 1".into(),
        });
    }

    let yy: i32 = field(line1, TleLine::Line1, 19, 20)?;
    let epoch_year = if yy < 57 { 2000 + yy } else { 1900 + yy };
    let epoch_day: f64 = field(line1, TleLine::Line1, 21, 32)?;

    let l2 = TleLine::Line2;
    let ecc_text = columns(line2, 27, 33);
    if !ecc_text.bytes().all(|b| b.is_ascii_digit() || b == b' ') {
        return Err(Error::TleField {
            line: l2,
            start: 27,
            end: 33,
            text: ecc_text.to_string(),
        });
    }
    let eccentricity: f64 = format!("0.{}", ecc_text.trim())
        .parse()
        .map_err(|_| Error::TleField {
            line: l2,
            start: 27,
            end: 33,
            text: ecc_text.to_string(),
        })?;

    Ok(TleRecord {
        name: name_line.trim().to_string(),
        line1: line1.to_string(),
        line2: line2.to_string(),
        catalog_number: catalog,
        epoch_year,
        epoch_day,
        inclination_deg: field(line2, l2, 9, 16)?,
        raan_deg: field(line2, l2, 18, 25)?,
        eccentricity,
        arg_perigee_deg: field(line2, l2, 35, 42)?,
        mean_anomaly_deg: field(line2, l2, 44, 51)?,
        mean_motion_rev_day: field(line2, l2, 53, 63)?,
    })
}

/// Parses a catalog of three-line groups. `#` comments and blank lines are
/// skipped; a group whose first line already looks like line 1 is accepted
/// without a name.
pub fn parse_tle_file(text: &str) -> Result<Vec<TleRecord>> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .collect();

    let mut records = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let nameless = lines[i].starts_with("1 ")
            && lines.get(i + 1).is_some_and(|l| l.starts_with("2 "));
        let (name, start) = if nameless { ("", i) } else { (lines[i], i + 1) };
        let (Some(l1), Some(l2)) = (lines.get(start), lines.get(start + 1)) else {
            return Err(Error::TleFormat {
                line: if lines.get(start).is_none() {
                    TleLine::Line1
                } else {
                    TleLine::Line2
                },
                reason: format!("truncated element set after {:?}", lines[i]),
            });
        };
        records.push(parse_tle(name, l1, l2)?);
        i = start + 2;
    }
    Ok(records)
}

/// Converts a record to elements whose epoch is measured from `sim_epoch`.
pub fn tle_to_elements(rec: &TleRecord, sim_epoch: DateTime<Utc>) -> Result<OrbitalElements> {
    if !(rec.mean_motion_rev_day > 0.0) {
        return Err(Error::InvalidInput(format!(
            "satellite {}: mean motion {} rev/day is not positive",
            rec.catalog_number, rec.mean_motion_rev_day
        )));
    }
    let n = rec.mean_motion_rev_day * TAU / 86_400.0;
    let offset = rec.epoch() - sim_epoch;
    let epoch_s = offset.num_seconds() as f64
        + (offset - Duration::seconds(offset.num_seconds()))
            .num_nanoseconds()
            .unwrap_or(0) as f64
            * 1e-9;
    let el = OrbitalElements {
        semi_major_axis_km: (MU_KM3_S2 / (n * n)).cbrt(),
        eccentricity: rec.eccentricity,
        inclination_deg: rec.inclination_deg,
        raan_deg: rec.raan_deg.rem_euclid(360.0),
        arg_perigee_deg: rec.arg_perigee_deg.rem_euclid(360.0),
        mean_anomaly_epoch_deg: rec.mean_anomaly_deg.rem_euclid(360.0),
        epoch_s,
    };
    el.validate().map_err(|e| {
        Error::InvalidInput(format!("satellite {}: {e}", rec.catalog_number))
    })?;
    Ok(el)
}

/// Fields needed to write an element set.
#[derive(Debug, Clone)]
pub struct TleFields<'a> {
    pub name: &'a str,
    pub catalog_number: u32,
    pub epoch: DateTime<Utc>,
    pub inclination_deg: f64,
    pub raan_deg: f64,
    pub eccentricity: f64,
    pub arg_perigee_deg: f64,
    pub mean_anomaly_deg: f64,
    pub mean_motion_rev_day: f64,
}

/// Writes an element set in the standard layout with valid checksums. Drag
/// terms are written as zero.
pub fn encode_tle(f: &TleFields<'_>) -> Result<[String; 3]> {
    if f.catalog_number > 99_999 {
        return Err(Error::InvalidInput(format!(
            "catalog number {} needs Alpha-5 encoding",
            f.catalog_number
        )));
    }
    if !(0.0..1.0).contains(&f.eccentricity) {
        return Err(Error::InvalidInput(format!(
            "eccentricity {} cannot be encoded",
            f.eccentricity
        )));
    }
    let year = f.epoch.year();
    let jan1 = NaiveDate::from_ymd_opt(year, 1, 1)
        .expect("valid year")
        .and_hms_opt(0, 0, 0)
        .expect("midnight")
        .and_utc();
    let day = 1.0 + (f.epoch - jan1).num_microseconds().unwrap_or(0) as f64 / 86_400e6;
    let ecc = format!("{:07}", (f.eccentricity * 1e7).round() as u64);

    let mut line1 = format!(
        "1 {:05}U 00000A   {:02}{:012.8}  .00000000  00000-0  00000-0 0  999",
        f.catalog_number,
        year % 100,
        day
    );
    line1.push(char::from(b'0' + checksum(&line1)));
    let mut line2 = format!(
        "2 {:05} {:8.4} {:8.4} {} {:8.4} {:8.4} {:11.8}    1",
        f.catalog_number,
        f.inclination_deg,
        f.raan_deg.rem_euclid(360.0),
        &ecc[..7],
        f.arg_perigee_deg.rem_euclid(360.0),
        f.mean_anomaly_deg.rem_euclid(360.0),
        f.mean_motion_rev_day
    );
    line2.push(char::from(b'0' + checksum(&line2)));
    if line1.len() != LINE_LEN || line2.len() != LINE_LEN {
        return Err(Error::InvalidInput(format!(
            "fields of {} overflow the fixed columns",
            f.name
        )));
    }
    Ok([f.name.to_string(), line1, line2])
}

#[cfg(test)]
mod tests {
    use super::*;

    // Widely published ISS element set.
    const NAME: &str = "ISS (ZARYA)";
    const L1: &str = "1 25544U 98067A   08264.51782528 -.00002182  00000-0 -11606-4 0  2927";
    const L2: &str = "2 25544  51.6416 247.4627 0006703 130.5360 325.0288 15.72125391563537";

    #[test]
    fn parses_published_set() {
        let rec = parse_tle(NAME, L1, L2).unwrap();
        assert_eq!(rec.name, "ISS (ZARYA)");
        assert_eq!(rec.catalog_number, 25544);
        assert_eq!(rec.epoch_year, 2008);
        assert_eq!(rec.epoch_day, 264.51782528);
        // Columns 9-16 of line 2 read " 51.6416" by hand.
        assert_eq!(&L2[8..16], " 51.6416");
        assert_eq!(rec.inclination_deg, 51.6416);
        assert_eq!(rec.raan_deg, 247.4627);
        assert_eq!(rec.eccentricity, 0.0006703);
        assert_eq!(rec.arg_perigee_deg, 130.5360);
        assert_eq!(rec.mean_anomaly_deg, 325.0288);
        assert_eq!(rec.mean_motion_rev_day, 15.72125391);
    }

    #[test]
    fn epoch_calendar() {
        let rec = parse_tle(NAME, L1, L2).unwrap();
        // Day 264 of 2008 (leap year) is September 20th.
        let e = rec.epoch();
        assert_eq!((e.month(), e.day()), (9, 20));
        assert_eq!(e.timestamp(), 1221868800 + (0.51782528f64 * 86400.0).round() as i64);
    }

    #[test]
    fn short_line_is_format_error() {
        let err = parse_tle(NAME, &L1[..68], L2).unwrap_err();
        assert!(matches!(err, Error::TleFormat { line: TleLine::Line1, .. }), "{err}");
    }

    #[test]
    fn perturbed_checksum() {
        let bad = format!("{}8", &L2[..68]);
        match parse_tle(NAME, L1, &bad).unwrap_err() {
            Error::TleChecksum { line, expected, found } => {
                assert_eq!(line, TleLine::Line2);
                assert_eq!(expected, 7);
                assert_eq!(found, '8');
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unparsable_field_names_columns() {
        // Corrupt the inclination and fix up the checksum so only the field fails.
        let mut l2 = format!("2 25544  51.6X16{}", &L2[16..68]);
        l2.push(char::from(b'0' + checksum(&l2)));
        let err = parse_tle(NAME, L1, &l2).unwrap_err();
        assert!(
            matches!(err, Error::TleField { start: 9, end: 16, .. }),
            "{err}"
        );
        assert!(err.to_string().contains("columns 9-16"));
    }

    #[test]
    fn catalog_mismatch() {
        let mut l2 = format!("2 25545{}", &L2[7..68]);
        l2.push(char::from(b'0' + checksum(&l2)));
        assert!(matches!(
            parse_tle(NAME, L1, &l2),
            Err(Error::TleFormat { line: TleLine::Line2, .. })
        ));
    }

    #[test]
    fn alpha5_catalog() {
        let mut l1 = format!("1 A0001{}", &L1[7..68]);
        l1.push(char::from(b'0' + checksum(&l1)));
        let mut l2 = format!("2 A0001{}", &L2[7..68]);
        l2.push(char::from(b'0' + checksum(&l2)));
        assert_eq!(parse_tle("", &l1, &l2).unwrap().catalog_number, 100_001);
    }

    #[test]
    fn file_with_comments_and_blanks() {
        let text = format!("# catalog\n\n{NAME}\n{L1}\r\n{L2}\n\n{L1}\n{L2}\n");
        let recs = parse_tle_file(&text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].name, "");
        assert!(parse_tle_file(&format!("{NAME}\n{L1}\n")).is_err());
    }

    #[test]
    fn semi_major_axis_from_mean_motion() {
        let mut rec = parse_tle(NAME, L1, L2).unwrap();
        rec.mean_motion_rev_day = 15.05;
        let el = tle_to_elements(&rec, rec.epoch()).unwrap();
        // Oracle: (mu / n^2)^(1/3), n = 15.05 * 2 pi / 86400.
        assert!((el.semi_major_axis_km - 6929.642682157906).abs() < 1e-6);
        assert_eq!(el.epoch_s, 0.0);
        rec.mean_motion_rev_day = 0.0;
        assert!(tle_to_elements(&rec, rec.epoch()).is_err());
    }

    #[test]
    fn zero_eccentricity_field() {
        let mut l2 = format!("{}0000000{}", &L2[..26], &L2[33..68]);
        l2.push(char::from(b'0' + checksum(&l2)));
        assert_eq!(parse_tle(NAME, L1, &l2).unwrap().eccentricity, 0.0);
    }

    #[test]
    fn epoch_offset() {
        let rec = parse_tle(NAME, L1, L2).unwrap();
        let el = tle_to_elements(&rec, rec.epoch() + Duration::seconds(90)).unwrap();
        assert!((el.epoch_s + 90.0).abs() < 1e-9);
    }

    #[test]
    fn encode_then_parse() {
        let epoch = Utc.with_ymd_and_hms(2021, 3, 14, 6, 30, 0).unwrap();
        let fields = TleFields {
            name: "SYNTH-1",
            catalog_number: 44713,
            epoch,
            inclination_deg: 53.0,
            raan_deg: 123.4567,
            eccentricity: 0.0001234,
            arg_perigee_deg: 0.0,
            mean_anomaly_deg: 359.99991,
            mean_motion_rev_day: 15.06412345,
        };
        let [name, l1, l2] = encode_tle(&fields).unwrap();
        let rec = parse_tle(&name, &l1, &l2).unwrap();
        assert_eq!(rec.catalog_number, 44713);
        assert_eq!(rec.inclination_deg, 53.0);
        assert_eq!(rec.raan_deg, 123.4567);
        assert_eq!(rec.eccentricity, 0.0001234);
        assert_eq!(rec.mean_motion_rev_day, 15.06412345);
        assert!((rec.epoch() - epoch).num_milliseconds().abs() <= 1);
    }
}
