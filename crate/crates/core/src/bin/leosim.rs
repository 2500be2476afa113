use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leosim::commands::{generate_command, load_spec, run_command};
use leosim::constellation::ConstellationSpec;
use leosim::presets::{self, PRESET_NAMES};
use leosim::{load_scenario, ConstellationSource, Error, Scenario};

#[derive(Parser)]
#[command(name = "leosim", version, about = "LEO constellation latency simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file or built-in preset and write trace.csv, summary.csv
    /// and scenario.toml.
    Run {
        /// Path to a scenario TOML file, or a preset name.
        scenario: String,
        #[arg(long)]
        out: PathBuf,
        /// Override the routing update interval in seconds.
        #[arg(long)]
        update_interval: Option<f64>,
        /// Override the simulated duration in seconds.
        #[arg(long)]
        duration: Option<f64>,
        /// Overwrite existing output files.
        #[arg(long)]
        force: bool,
        /// TLE catalog for TLE-driven scenarios such as `tle-relay`.
        #[arg(long)]
        tle: Option<PathBuf>,
    },
    /// Dump satellite positions of a generated constellation as CSV.
    Generate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Simulation time in seconds.
        #[arg(long, default_value_t = 0.0)]
        time: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// Constellation spec TOML (bare fields or a [constellation] table).
    #[arg(long, conflicts_with_all = ["planes", "sats_per_plane", "inclination", "altitude", "phase_offset"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    planes: Option<usize>,
    #[arg(long)]
    sats_per_plane: Option<usize>,
    #[arg(long)]
    inclination: Option<f64>,
    #[arg(long, default_value_t = presets::SHELL_ALTITUDE_KM)]
    altitude: f64,
    #[arg(long, default_value_t = 0.0)]
    phase_offset: f64,
}

impl SpecArgs {
    fn resolve(&self) -> leosim::Result<ConstellationSpec> {
        if let Some(path) = &self.spec {
            return load_spec(path);
        }
        let missing = |flag: &str| Error::InvalidInput(format!("--{flag} is required without --spec"));
        let mut spec = ConstellationSpec::shell(
            self.planes.ok_or_else(|| missing("planes"))?,
            self.sats_per_plane.ok_or_else(|| missing("sats-per-plane"))?,
            self.inclination.ok_or_else(|| missing("inclination"))?,
            self.altitude,
        );
        spec.phase_offset = self.phase_offset;
        spec.validate()?;
        Ok(spec)
    }
}

fn resolve_scenario(name: &str, tle: Option<&Path>) -> leosim::Result<Scenario> {
    let path = Path::new(name);
    let mut scenario = if PRESET_NAMES.contains(&name) && !path.exists() {
        presets::preset(name)?
    } else if path.exists() {
        load_scenario(path)?
    } else {
        return Err(Error::Scenario(format!(
            "{name:?} is neither a scenario file nor a preset ({})",
            PRESET_NAMES.join(", ")
        )));
    };
    if let Some(tle) = tle {
        match &mut scenario.constellation {
            ConstellationSource::Tle { path, .. } => *path = tle.to_path_buf(),
            ConstellationSource::Generated(_) => {
                return Err(Error::Scenario("--tle given for a scenario without a TLE source".into()))
            }
        }
    }
    // Preset and flag paths are relative to the working directory; pin them
    // so the echoed scenario.toml still finds the catalog.
    if let ConstellationSource::Tle { path, .. } = &mut scenario.constellation {
        *path = std::path::absolute(&*path)
            .map_err(|e| Error::Scenario(format!("tle_file {}: {e}", path.display())))?;
    }
    Ok(scenario)
}

fn execute(cli: Cli) -> leosim::Result<()> {
    match cli.command {
        Command::Run {
            scenario,
            out,
            update_interval,
            duration,
            force,
            tle,
        } => {
            let mut sc = resolve_scenario(&scenario, tle.as_deref())?;
            if let Some(u) = update_interval {
                sc.update_interval_s = u;
            }
            if let Some(d) = duration {
                sc.duration_s = d;
            }
            let output = run_command(&sc, &out, force)?;
            let s = &output.result.summary;
            match s.mean_ms {
                Some(mean) => println!(
                    "{}: {} samples, mean {:.3} ms, min {:.3} ms, max {:.3} ms, {} outages",
                    sc.name,
                    s.samples,
                    mean,
                    s.min_ms.unwrap_or(f64::NAN),
                    s.max_ms.unwrap_or(f64::NAN),
                    s.outages
                ),
                None => println!("{}: {} samples, all unreachable", sc.name, s.samples),
            }
            println!("wrote {}", out.display());
        }
        Command::Generate { spec, time, out } => {
            let spec = spec.resolve()?;
            let file = File::create(&out).map_err(|e| Error::InvalidInput(format!("{}: {e}", out.display())))?;
            let rows = generate_command(&spec, time, BufWriter::new(file))?;
            println!("wrote {rows} positions to {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
