//! Command-line front end: scenario files in, CSV tables out.
//!
//! Exit codes: 0 success, 1 configuration error, 2 numerical error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use cplc::antenna;
use cplc::channels::{self, RicianConfig};
use cplc::config::{parse_config, ConfigError, ScenarioConfig};
use cplc::mom;
use cplc::output;
use cplc::sweep::{self, SweepKind, SweepResult};

/// Segment-count ceiling for numerical solves; beyond it the closed-form
/// path covers the band.
const MAX_SEGMENTS: usize = 2001;
/// Point ceiling for per-frequency numerical sweeps.
const MAX_MOM_POINTS: usize = 200;

#[derive(Parser)]
#[command(
    name = "cplc-sim",
    about = "Contactless power-line communication channel simulator",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized radiation pattern over the full circle at one frequency
    Pattern(RunArgs),
    /// Closed-form peak directivity vs frequency (quadrature and approximation)
    Directivity(RunArgs),
    /// Input impedance vs frequency: closed-form resistances plus the numerical solve
    Impedance(RunArgs),
    /// Numerical current distribution along the wire at one frequency
    Mom(RunArgs),
    /// Multipath PLC transfer function over the grid
    Plc(RunArgs),
    /// Rician RF transfer function statistics over the grid
    Rf(RunArgs),
    /// Cascaded CPLC sweep (coupling, length or path-count variation)
    Cplc(RunArgs),
    /// Run whatever sweep the config's [sweep] section describes
    Sweep(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Scenario config file (TOML); omitted means all defaults
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Override the config's RNG seed
    #[arg(long)]
    seed: Option<u64>,
    /// Reject unknown config keys (this is the default; flag kept for explicitness)
    #[arg(long)]
    strict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Pattern(a) => ("pattern", a),
        Command::Directivity(a) => ("directivity", a),
        Command::Impedance(a) => ("impedance", a),
        Command::Mom(a) => ("mom", a),
        Command::Plc(a) => ("plc", a),
        Command::Rf(a) => ("rf", a),
        Command::Cplc(a) => ("cplc", a),
        Command::Sweep(a) => ("sweep", a),
    };
    match run(name, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(message)) => {
            eprintln!("cplc-sim: config error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(message)) => {
            eprintln!("cplc-sim: numerical error: {message}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    Config(String),
    Numerical(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<sweep::SweepError> for Failure {
    fn from(e: sweep::SweepError) -> Self {
        match e {
            sweep::SweepError::InvalidPlan(m) => Failure::Config(m),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

impl From<mom::MomError> for Failure {
    fn from(e: mom::MomError) -> Self {
        Failure::Numerical(e.to_string())
    }
}

impl From<channels::ChannelError> for Failure {
    fn from(e: channels::ChannelError) -> Self {
        Failure::Numerical(e.to_string())
    }
}

impl From<antenna::AntennaError> for Failure {
    fn from(e: antenna::AntennaError) -> Self {
        Failure::Numerical(e.to_string())
    }
}

fn run(name: &str, args: &RunArgs) -> Result<(), Failure> {
    let started = Instant::now();
    let mut config = load_config(args)?;
    if let Some(seed) = args.seed {
        config.sweep.seed = seed;
    }

    let (columns, rows): (Vec<String>, Vec<Vec<f64>>) = match name {
        "pattern" => {
            let table = sweep::pattern_sweep(
                &config.wire_geometry(),
                config.sweep.stop_hz,
                config.sweep.pattern_resolution_deg,
            )?;
            (table.columns, table.rows)
        }
        "directivity" => {
            let table = sweep::directivity_sweep(&config.wire_geometry(), &config.freq_grid())?;
            (table.columns, table.rows)
        }
        "impedance" => impedance_table(&config)?,
        "mom" => mom_table(&config)?,
        "plc" => plc_table(&config)?,
        "rf" => rf_table(&config)?,
        "cplc" => {
            if !matches!(
                config.sweep.kind,
                SweepKind::CplcVsCoupling | SweepKind::CplcVsLength | SweepKind::CplcVsPaths
            ) {
                return Err(Failure::Config(format!(
                    "the cplc subcommand needs a cplc_vs_* sweep kind, config has {:?}",
                    config.sweep.kind
                )));
            }
            let result = sweep::run_sweep(&config.sweep_plan())?;
            (result.columns, result.rows)
        }
        "sweep" => {
            let result: SweepResult = sweep::run_sweep(&config.sweep_plan())?;
            (result.columns, result.rows)
        }
        _ => unreachable!(),
    };

    output::write_csv(&args.out, &columns, &rows)
        .map_err(|e| Failure::Numerical(format!("writing {}: {e}", args.out.display())))?;
    println!(
        "cplc-sim {name}: wrote {} rows to {} in {:.2} s \
         (seed {}, Rician K {} dB, coupling {}, kind {:?})",
        rows.len(),
        args.out.display(),
        started.elapsed().as_secs_f64(),
        config.sweep.seed,
        config.rf.k_factor_db,
        config.coupling.efficiency,
        config.sweep.kind,
    );
    Ok(())
}

fn load_config(args: &RunArgs) -> Result<ScenarioConfig, Failure> {
    let text = match &args.config {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Config(format!("reading {}: {e}", path.display())))?,
        None => String::new(),
    };
    Ok(parse_config(&text)?)
}

/// Nonzero grid frequencies with a cap for per-point numerical runs.
fn mom_grid(config: &ScenarioConfig) -> Result<Vec<f64>, Failure> {
    let freqs: Vec<f64> = config
        .freq_grid()
        .frequencies()
        .into_iter()
        .filter(|f| *f > 0.0)
        .collect();
    if freqs.is_empty() {
        return Err(Failure::Config(
            "the sweep grid has no nonzero frequencies".into(),
        ));
    }
    if freqs.len() > MAX_MOM_POINTS {
        return Err(Failure::Config(format!(
            "numerical sweeps are capped at {MAX_MOM_POINTS} grid points, got {}; \
             raise sweep.step_hz",
            freqs.len()
        )));
    }
    Ok(freqs)
}

fn checked_segments(config: &ScenarioConfig, freq_hz: f64) -> Result<usize, Failure> {
    let segments = config.mom_segments(freq_hz);
    if segments > MAX_SEGMENTS {
        return Err(Failure::Numerical(format!(
            "{segments} segments needed at {freq_hz} Hz exceeds the {MAX_SEGMENTS} ceiling; \
             the closed-form directivity path covers the high band"
        )));
    }
    Ok(segments)
}

fn impedance_table(config: &ScenarioConfig) -> Result<(Vec<String>, Vec<Vec<f64>>), Failure> {
    let geometry = config.wire_geometry();
    let ground = config.ground_parameters();
    let r_rad = antenna::radiation_resistance(&geometry)?;
    let mut rows = Vec::new();
    for f in mom_grid(config)? {
        let n = geometry.electrical_length(f).n;
        let r_ohm = antenna::ohmic_resistance(&geometry, f, config.cable.sigma_c_s_per_m)?;
        checked_segments(config, f)?;
        let mesh = config.mom_mesh(f)?;
        let z = mom::build_impedance_matrix(&geometry, &mesh, f, ground.as_ref())?;
        let solution = mom::solve_currents(&z, mesh.feed_segment, f)?;
        rows.push(vec![f, n, r_rad, r_ohm, solution.z_in.re, solution.z_in.im]);
    }
    Ok((
        vec![
            "freq_hz".into(),
            "n".into(),
            "r_rad_ohm".into(),
            "r_ohmic_ohm".into(),
            "r_in_mom_ohm".into(),
            "x_in_mom_ohm".into(),
        ],
        rows,
    ))
}

fn mom_table(config: &ScenarioConfig) -> Result<(Vec<String>, Vec<Vec<f64>>), Failure> {
    let geometry = config.wire_geometry();
    let ground = config.ground_parameters();
    let f = config.sweep.stop_hz;
    checked_segments(config, f)?;
    let mesh = config.mom_mesh(f)?;
    let z = mom::build_impedance_matrix(&geometry, &mesh, f, ground.as_ref())?;
    let solution = mom::solve_currents(&z, mesh.feed_segment, f)?;
    println!(
        "cplc-sim mom: z_in = {:.3} {:+.3}j ohm at {} Hz ({} segments)",
        solution.z_in.re, solution.z_in.im, f, mesh.segments
    );
    let delta = mesh.segment_length_m;
    let rows = solution
        .currents
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let z_m = -geometry.length_m / 2.0 + (i as f64 + 0.5) * delta;
            vec![i as f64, z_m, c.re, c.im, c.norm()]
        })
        .collect();
    Ok((
        vec![
            "segment".into(),
            "z_m".into(),
            "current_re_a".into(),
            "current_im_a".into(),
            "current_mag_a".into(),
        ],
        rows,
    ))
}

fn plc_table(config: &ScenarioConfig) -> Result<(Vec<String>, Vec<Vec<f64>>), Failure> {
    let cable_spec = config.cable_spec();
    let paths = config.plc_paths();
    let freqs = config.freq_grid().frequencies();
    let eval: Vec<f64> = freqs.iter().copied().filter(|f| *f > 0.0).collect();
    if eval.is_empty() {
        return Err(Failure::Config(
            "the sweep grid has no nonzero frequencies".into(),
        ));
    }
    let response = channels::h_plc(&paths, &eval, &cable_spec)?;
    let rows = freqs
        .iter()
        .map(|&f| {
            let idx = if f > 0.0 {
                eval.iter().position(|e| *e == f).expect("grid bin")
            } else {
                0
            };
            let h = response.h[idx];
            vec![f, 20.0 * h.norm().log10(), h.arg()]
        })
        .collect();
    Ok((
        vec!["freq_hz".into(), "mag_db".into(), "phase_rad".into()],
        rows,
    ))
}

fn rf_table(config: &ScenarioConfig) -> Result<(Vec<String>, Vec<Vec<f64>>), Failure> {
    let freqs = config.freq_grid().frequencies();
    let eval: Vec<f64> = freqs.iter().copied().filter(|f| *f > 0.0).collect();
    if eval.is_empty() {
        return Err(Failure::Config(
            "the sweep grid has no nonzero frequencies".into(),
        ));
    }
    let realizations = config.sweep.realizations.max(1);
    let mut sum_db = vec![0.0_f64; eval.len()];
    let mut sum_db_sq = vec![0.0_f64; eval.len()];
    let mut sum_phase = vec![0.0_f64; eval.len()];
    for r in 0..realizations {
        let rician = RicianConfig {
            seed: sweep::derived_seed(config.sweep.seed, r as u64),
            ..config.rician()
        };
        let paths = channels::sample_rician_paths(&rician, config.rf.path_count)?;
        let response = channels::h_rf(&paths, &eval)?;
        for (i, h) in response.h.iter().enumerate() {
            let db = 20.0 * h.norm().log10();
            sum_db[i] += db;
            sum_db_sq[i] += db * db;
            sum_phase[i] += h.arg();
        }
    }
    let n = realizations as f64;
    let rows = freqs
        .iter()
        .map(|&f| {
            let idx = if f > 0.0 {
                eval.iter().position(|e| *e == f).expect("grid bin")
            } else {
                0
            };
            let mean = sum_db[idx] / n;
            let var = if realizations > 1 {
                ((sum_db_sq[idx] - n * mean * mean) / (n - 1.0)).max(0.0)
            } else {
                0.0
            };
            vec![f, mean, var.sqrt(), sum_phase[idx] / n]
        })
        .collect();
    Ok((
        vec![
            "freq_hz".into(),
            "mean_mag_db".into(),
            "std_mag_db".into(),
            "mean_phase_rad".into(),
        ],
        rows,
    ))
}
