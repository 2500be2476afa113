use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 20;
const TOLERANCE: f64 = 1e-12;

/// Solves Kepler's equation `M = E - e sin E` for the eccentric anomaly by
/// Newton iteration from `E = M`.
///
/// Only the near-circular regime `0 <= e <= 0.1` is accepted; there the
/// iteration converges in a handful of steps for every `M`.
pub fn solve_kepler(mean_anomaly_rad: f64, eccentricity: f64) -> Result<f64> {
    if !(0.0..=0.1).contains(&eccentricity) {
        return Err(Error::InvalidInput(format!(
            "eccentricity {eccentricity} outside [0, 0.1]"
        )));
    }
    if !mean_anomaly_rad.is_finite() {
        return Err(Error::InvalidInput(format!(
            "mean anomaly {mean_anomaly_rad} is not finite"
        )));
    }
    if eccentricity == 0.0 {
        return Ok(mean_anomaly_rad);
    }

    let mut e_anom = mean_anomaly_rad;
    for _ in 0..MAX_ITERATIONS {
        let f = e_anom - eccentricity * e_anom.sin() - mean_anomaly_rad;
        let step = f / (1.0 - eccentricity * e_anom.cos());
        e_anom -= step;
        if step.abs() < TOLERANCE {
            return Ok(e_anom);
        }
    }
    Err(Error::KeplerNonConvergence {
        mean_anomaly: mean_anomaly_rad,
        eccentricity,
    })
}
