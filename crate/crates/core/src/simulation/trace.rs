//! CSV trace and summary files.
//!
//! Trace: header `t_s,rtt_ms,hop_count`, one row per ping, `rtt_ms` with six
//! decimals and empty on outage. Summary: header
//! `mean_ms,min_ms,max_ms,stddev_ms,outages,samples` and a single row.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::simulation::{RttSample, RttTrace, Summary};

pub const TRACE_HEADER: [&str; 3] = ["t_s", "rtt_ms", "hop_count"];
pub const SUMMARY_HEADER: [&str; 6] = ["mean_ms", "min_ms", "max_ms", "stddev_ms", "outages", "samples"];

fn ms(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

pub fn write_trace_csv<W: Write>(trace: &RttTrace, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for s in &trace.samples {
        w.write_record([format!("{:.3}", s.t_s), ms(s.rtt_ms), s.hop_count.to_string()])?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn write_summary_csv<W: Write>(summary: &Summary, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER)?;
    w.write_record([
        ms(summary.mean_ms),
        ms(summary.min_ms),
        ms(summary.max_ms),
        ms(summary.stddev_ms),
        summary.outages.to_string(),
        summary.samples.to_string(),
    ])?;
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

/// Reads a trace CSV back into samples, checking the header and naming the
/// offending row on malformed input.
pub fn read_trace_csv<R: Read>(input: R) -> Result<Vec<RttSample>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(TRACE_HEADER) {
        return Err(Error::InvalidInput(format!(
            "trace header {:?} (expected {:?})",
            header.iter().collect::<Vec<_>>(),
            TRACE_HEADER
        )));
    }
    let mut samples = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        let bad = |what: &str| Error::InvalidInput(format!("trace row {row}: bad {what}"));
        let t_s: f64 = rec[0].parse().map_err(|_| bad("t_s"))?;
        let rtt_ms = match &rec[1] {
            "" => None,
            v => Some(v.parse::<f64>().map_err(|_| bad("rtt_ms"))?),
        };
        let hop_count = rec[2].parse().map_err(|_| bad("hop_count"))?;
        samples.push(RttSample {
            t_s,
            rtt_ms,
            hop_count,
            path: None,
        });
    }
    Ok(samples)
}
