use std::path::PathBuf;

use thiserror::Error;

use crate::geodesy::Frame;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which of the two TLE data lines an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TleLine {
    Line1,
    Line2,
}

impl std::fmt::Display for TleLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TleLine::Line1 => f.write_str("line 1"),
            TleLine::Line2 => f.write_str("line 2"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("frame mismatch: expected {expected:?}, found {found:?}")]
    FrameMismatch { expected: Frame, found: Frame },

    #[error("coincident positions: {0}")]
    Coincident(String),

    #[error("kepler solver did not converge (M = {mean_anomaly}, e = {eccentricity})")]
    KeplerNonConvergence { mean_anomaly: f64, eccentricity: f64 },

    #[error("propagated radius {radius_km:.3} km is below the Earth surface")]
    Subterranean { radius_km: f64 },

    #[error("TLE format error on {line}: {reason}")]
    TleFormat { line: TleLine, reason: String },

    #[error("TLE checksum error on {line}: expected {expected}, found {found}")]
    TleChecksum { line: TleLine, expected: u8, found: char },

    #[error("TLE field error on {line}, columns {start}-{end}: cannot parse {text:?}")]
    TleField {
        line: TleLine,
        start: usize,
        end: usize,
        text: String,
    },

    #[error("satellite index {index} out of range (constellation has {total})")]
    IndexOutOfRange { index: usize, total: usize },

    #[error("inter-satellite links are disabled for this constellation")]
    IslDisabled,

    #[error("unknown node {0}")]
    UnknownNode(String),

    #[error("unknown ground station {0:?}")]
    UnknownStation(String),

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("output directory {0} already contains results (use --force to overwrite)")]
    OutputExists(PathBuf),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Whether the error stems from user input (scenario, TLE file, flags)
    /// rather than from the simulation itself.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::KeplerNonConvergence { .. }
                | Error::Subterranean { .. }
                | Error::Coincident(_)
                | Error::Io { .. }
                | Error::Csv(_)
        )
    }
}
