#![allow(dead_code)]

pub mod oracle;
pub mod synthetic_tle;

use std::path::{Path, PathBuf};

/// Writes a synthetic catalog of `count` satellites into `dir`.
pub fn write_catalog(dir: &Path, count: usize) -> PathBuf {
    let path = dir.join(format!("starlink-{count}.tle"));
    std::fs::write(&path, synthetic_tle::synthetic_catalog(count)).unwrap();
    path
}
