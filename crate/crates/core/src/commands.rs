//! File-producing entry points shared by the binary and the examples.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::constellation::{generate_fleet, plane_slot, ConstellationSpec, SatelliteId};
use crate::error::{Error, Result};
use crate::orbits::OrbitModel;
use crate::scenario::Scenario;
use crate::simulation::{self, write_summary_csv, write_trace_csv, RttTrace};

pub const TRACE_FILE: &str = "trace.csv";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const ECHO_FILE: &str = "scenario.toml";
pub const POSITIONS_HEADER: [&str; 6] = ["index", "plane", "slot", "lat_deg", "lon_deg", "alt_km"];

/// Paths written by [`run_command`].
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trace: PathBuf,
    pub summary: PathBuf,
    pub echo: PathBuf,
    pub result: RttTrace,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

/// Runs `scenario` and writes the trace, summary and resolved-scenario echo
/// into `out_dir`. Refuses to touch a directory that already holds any of
/// them unless `force` is set.
pub fn run_command(scenario: &Scenario, out_dir: &Path, force: bool) -> Result<RunOutput> {
    scenario.validate()?;
    let trace = out_dir.join(TRACE_FILE);
    let summary = out_dir.join(SUMMARY_FILE);
    let echo = out_dir.join(ECHO_FILE);
    if !force {
        if let Some(existing) = [&trace, &summary, &echo].into_iter().find(|p| p.exists()) {
            return Err(Error::OutputExists(existing.clone()));
        }
    }

    let result = simulation::run(scenario)?;

    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut w = create(&trace)?;
    write_trace_csv(&result, &mut w)?;
    w.flush().map_err(|e| Error::io(&trace, e))?;
    let mut w = create(&summary)?;
    write_summary_csv(&result.summary, &mut w)?;
    w.flush().map_err(|e| Error::io(&summary, e))?;
    fs::write(&echo, scenario.to_toml()).map_err(|e| Error::io(&echo, e))?;

    Ok(RunOutput {
        trace,
        summary,
        echo,
        result,
    })
}

/// Writes per-satellite geodetic positions at `t_s` as
/// `index,plane,slot,lat_deg,lon_deg,alt_km`. Returns the row count.
pub fn generate_command<W: Write>(spec: &ConstellationSpec, t_s: f64, out: W) -> Result<usize> {
    if !t_s.is_finite() {
        return Err(Error::InvalidInput(format!("time must be finite, got {t_s}")));
    }
    let fleet = generate_fleet(spec)?;
    let mut positions = Vec::new();
    fleet.positions_ecef(t_s, &mut positions)?;

    let mut w = csv::Writer::from_writer(out);
    w.write_record(POSITIONS_HEADER)?;
    for (i, p) in positions.iter().enumerate() {
        let (plane, slot) = plane_slot(SatelliteId(i), spec)?;
        let g = p.to_geodetic()?;
        w.write_record([
            i.to_string(),
            plane.to_string(),
            slot.to_string(),
            format!("{:.6}", g.latitude_deg()),
            format!("{:.6}", g.longitude_deg()),
            format!("{:.6}", g.altitude_km()),
        ])?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(positions.len())
}

/// Reads a constellation spec from TOML: either a bare table of spec fields
/// or the `[constellation]` section of a scenario file.
pub fn load_spec(path: &Path) -> Result<ConstellationSpec> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Scenario(format!("cannot read {}: {e}", path.display())))?;
    let mut table: toml::Table = toml::from_str(&text).map_err(|e| Error::Scenario(e.message().to_string()))?;
    let value = match table.remove("constellation") {
        Some(section) => section,
        None => toml::Value::Table(table),
    };
    let spec: ConstellationSpec = value
        .try_into()
        .map_err(|e: toml::de::Error| Error::Scenario(format!("constellation: {}", e.message())))?;
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_rows() {
        let spec = ConstellationSpec::shell(1, 66, 53.0, 550.0);
        let mut buf = Vec::new();
        assert_eq!(generate_command(&spec, 0.0, &mut buf).unwrap(), 66);
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("index,plane,slot,lat_deg,lon_deg,alt_km"));
        for (i, line) in lines.enumerate() {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f[0], i.to_string());
            assert_eq!(f[1], "0");
            assert_eq!(f[2], i.to_string());
            let alt: f64 = f[5].parse().unwrap();
            assert!((alt - 550.0).abs() < 1e-5, "{alt}");
        }
    }

    #[test]
    fn generate_rejects_bad_spec() {
        let spec = ConstellationSpec::shell(0, 66, 53.0, 550.0);
        assert!(generate_command(&spec, 0.0, Vec::new()).is_err());
        let spec = ConstellationSpec::shell(1, 66, 53.0, 550.0);
        assert!(generate_command(&spec, f64::NAN, Vec::new()).is_err());
    }
}
