//! Experiment engine: parameter sweeps over coupling efficiency, cable
//! length, path count, plus the directivity and polar-pattern tables, with
//! statistical aggregation over fading realizations.
//!
//! Every sweep is deterministic for a fixed plan: realization r draws its
//! RF paths from a seed derived as `splitmix64(seed ^ r)`, independent of
//! the varied value, so traces with different coupling or cable length share
//! the same fading draws and remain exactly comparable.
//!
//! Magnitudes are averaged in dB across realizations (the output traces are
//! dB curves); the linear-mean column can be reconstructed from the raw
//! responses if needed. The DC bin of a grid starting at 0 Hz is emitted as
//! a copy of the first nonzero bin, since the line model's characteristic
//! impedance is undefined at DC.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::antenna::{
    self, AntennaError, WireGeometry, ENDPOINT_GUARD_RAD,
};
use crate::cable::CableSpec;
use crate::channels::{
    self, ChannelError, CouplingConfig, PlcPath, RicianConfig,
};
use crate::mom::GroundParameters;

/// Errors from the sweep engine.
#[derive(Debug, Error)]
pub enum SweepError {
    /// The plan is internally inconsistent.
    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),
    /// A model evaluation failed; the offending sweep point is attached.
    #[error("model error at varied value {varied_value}, {freq_hz} Hz: {source}")]
    Model {
        varied_value: f64,
        freq_hz: f64,
        #[source]
        source: ModelError,
    },
}

/// The model-layer failures a sweep can surface.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    Antenna(#[from] AntennaError),
}

/// Which experiment the sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepKind {
    /// Peak directivity vs frequency, varied over wire lengths.
    DirectivityVsFreq,
    /// Normalized radiation pattern over the full circle at one frequency.
    PatternPolar,
    /// Cascade magnitude vs frequency, varied over coupling efficiency.
    CplcVsCoupling,
    /// Cascade magnitude vs frequency, varied over cable length.
    CplcVsLength,
    /// Cascade magnitude vs frequency, varied over PLC path count.
    CplcVsPaths,
}

/// Uniform frequency grid `start, start+step, ..., stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreqGrid {
    pub start_hz: f64,
    pub stop_hz: f64,
    pub step_hz: f64,
}

impl Default for FreqGrid {
    fn default() -> Self {
        Self {
            start_hz: 0.0,
            stop_hz: 5e9,
            step_hz: 1e7,
        }
    }
}

impl FreqGrid {
    /// Expands the grid; the endpoint is included when it lands on a step.
    pub fn frequencies(&self) -> Vec<f64> {
        let count = ((self.stop_hz - self.start_hz) / self.step_hz + 0.5).floor() as usize;
        (0..=count)
            .map(|i| self.start_hz + i as f64 * self.step_hz)
            .filter(|f| *f <= self.stop_hz + 1e-6 * self.step_hz)
            .collect()
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.step_hz > 0.0) {
            return Err(SweepError::InvalidPlan(format!(
                "frequency step must be positive, got {}",
                self.step_hz
            )));
        }
        if !(self.stop_hz >= self.start_hz) {
            return Err(SweepError::InvalidPlan(format!(
                "stop frequency {} must be at least the start {}",
                self.stop_hz, self.start_hz
            )));
        }
        if self.start_hz < 0.0 {
            return Err(SweepError::InvalidPlan(format!(
                "start frequency must be non-negative, got {}",
                self.start_hz
            )));
        }
        Ok(())
    }
}

/// The full scenario a sweep evaluates: wire, ground, cable, channels.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub wire: WireGeometry,
    pub ground: Option<GroundParameters>,
    pub cable: CableSpec,
    /// PLC path set; for path-count sweeps the first entry seeds the
    /// generation rule (its weight is g1, its length the direct run).
    pub plc_paths: Vec<PlcPath>,
    pub rician: RicianConfig,
    /// Number of RF multipath components per realization.
    pub rf_path_count: usize,
    pub coupling: CouplingConfig,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            wire: WireGeometry::default(),
            ground: Some(GroundParameters::default()),
            cable: CableSpec::default(),
            plc_paths: vec![PlcPath {
                g: 1.0,
                length_m: 2.0,
            }],
            rician: RicianConfig::default(),
            rf_path_count: 4,
            coupling: CouplingConfig::default(),
        }
    }
}

/// A complete sweep description.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub kind: SweepKind,
    pub freq_grid: FreqGrid,
    /// Values of the varied parameter (efficiencies, lengths, path counts,
    /// or wire lengths depending on `kind`).
    pub varied_values: Vec<f64>,
    pub scenario: Scenario,
    /// Fading realizations averaged per sweep point.
    pub realizations: u32,
    pub seed: u64,
    /// Angular resolution of pattern sweeps (degrees).
    pub pattern_resolution_deg: f64,
}

impl Default for SweepPlan {
    fn default() -> Self {
        Self {
            kind: SweepKind::CplcVsLength,
            freq_grid: FreqGrid::default(),
            varied_values: vec![2.0],
            scenario: Scenario::default(),
            realizations: 100,
            seed: 1,
            pattern_resolution_deg: 0.01,
        }
    }
}

/// Tabular sweep output: named columns, numeric rows, and the plan echo.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Full echo of the plan that produced the table.
    pub plan: SweepPlan,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of realization `index` under base `seed`; independent of the varied
/// value so traces share their fading draws.
pub fn derived_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index.wrapping_mul(0xA076_1D64_78BD_642F))
}

/// Runs the plan and assembles the result table.
pub fn run_sweep(plan: &SweepPlan) -> Result<SweepResult, SweepError> {
    plan.freq_grid.validate()?;
    if plan.realizations < 1 {
        return Err(SweepError::InvalidPlan(
            "at least one realization is required".into(),
        ));
    }
    if plan.varied_values.is_empty() {
        return Err(SweepError::InvalidPlan("no varied values given".into()));
    }
    match plan.kind {
        SweepKind::DirectivityVsFreq => run_directivity_kind(plan),
        SweepKind::PatternPolar => run_pattern_kind(plan),
        SweepKind::CplcVsCoupling => run_cplc_kind(plan, "coupling_efficiency"),
        SweepKind::CplcVsLength => run_cplc_kind(plan, "length_m"),
        SweepKind::CplcVsPaths => run_cplc_kind(plan, "path_count"),
    }
}

fn model_err<E: Into<ModelError>>(varied: f64, freq: f64) -> impl FnOnce(E) -> SweepError {
    move |e| SweepError::Model {
        varied_value: varied,
        freq_hz: freq,
        source: e.into(),
    }
}

fn run_cplc_kind(plan: &SweepPlan, varied_name: &str) -> Result<SweepResult, SweepError> {
    let freqs = plan.freq_grid.frequencies();
    let eval: Vec<f64> = freqs.iter().copied().filter(|f| *f > 0.0).collect();
    if eval.is_empty() {
        return Err(SweepError::InvalidPlan(
            "frequency grid has no nonzero bins".into(),
        ));
    }
    let scenario = &plan.scenario;
    let base = scenario.plc_paths.first().copied().unwrap_or(PlcPath {
        g: 1.0,
        length_m: 2.0,
    });

    let mut rows = Vec::with_capacity(plan.varied_values.len() * freqs.len());
    for &varied in &plan.varied_values {
        let (paths, coupling) = match plan.kind {
            SweepKind::CplcVsCoupling => (scenario.plc_paths.clone(), CouplingConfig {
                efficiency: varied,
            }),
            SweepKind::CplcVsLength => (
                vec![PlcPath {
                    g: base.g,
                    length_m: varied,
                }],
                scenario.coupling,
            ),
            SweepKind::CplcVsPaths => {
                let count = varied.round() as usize;
                if count < 1 || (varied - count as f64).abs() > 1e-9 {
                    return Err(SweepError::InvalidPlan(format!(
                        "path counts must be positive integers, got {varied}"
                    )));
                }
                (
                    channels::generate_plc_paths(count, base.length_m, base.g),
                    scenario.coupling,
                )
            }
            _ => unreachable!(),
        };
        if !(0.0..=1.0).contains(&coupling.efficiency) {
            return Err(SweepError::InvalidPlan(format!(
                "coupling efficiency {} outside [0, 1]",
                coupling.efficiency
            )));
        }

        let plc = channels::h_plc(&paths, &eval, &scenario.cable)
            .map_err(model_err(varied, eval[0]))?;

        // Accumulate dB magnitude and phase across realizations.
        let mut sum_db = vec![0.0_f64; eval.len()];
        let mut sum_db_sq = vec![0.0_f64; eval.len()];
        let mut sum_phase = vec![0.0_f64; eval.len()];
        for r in 0..plan.realizations {
            let rician = RicianConfig {
                seed: derived_seed(plan.seed, r as u64),
                ..scenario.rician
            };
            let rf_paths = channels::sample_rician_paths(&rician, scenario.rf_path_count)
                .map_err(model_err(varied, eval[0]))?;
            let rf = channels::h_rf(&rf_paths, &eval).map_err(model_err(varied, eval[0]))?;
            let cascade =
                channels::h_cplc(&plc, &rf, &coupling).map_err(model_err(varied, eval[0]))?;
            for (i, h) in cascade.h.iter().enumerate() {
                let db = 20.0 * h.norm().log10();
                sum_db[i] += db;
                sum_db_sq[i] += db * db;
                sum_phase[i] += h.arg();
            }
        }

        let n = plan.realizations as f64;
        let stats: Vec<(f64, f64, f64)> = (0..eval.len())
            .map(|i| {
                let mean = sum_db[i] / n;
                let var = if plan.realizations > 1 {
                    ((sum_db_sq[i] - n * mean * mean) / (n - 1.0)).max(0.0)
                } else {
                    0.0
                };
                (mean, var.sqrt(), sum_phase[i] / n)
            })
            .collect();

        for &f in &freqs {
            // The DC bin copies the first nonzero bin (Z0 undefined at DC).
            let idx = if f > 0.0 {
                eval.iter().position(|e| *e == f).expect("grid bin")
            } else {
                0
            };
            let (mean, std, phase) = stats[idx];
            rows.push(vec![varied, f, mean, std, phase]);
        }
    }
    Ok(SweepResult {
        columns: vec![
            varied_name.to_string(),
            "freq_hz".into(),
            "mean_mag_db".into(),
            "std_mag_db".into(),
            "mean_phase_rad".into(),
        ],
        rows,
        plan: plan.clone(),
    })
}

fn run_directivity_kind(plan: &SweepPlan) -> Result<SweepResult, SweepError> {
    let mut rows = Vec::new();
    for &length in &plan.varied_values {
        let geometry = WireGeometry {
            length_m: length,
            ..plan.scenario.wire.clone()
        };
        let table = directivity_sweep(&geometry, &plan.freq_grid)?;
        for mut row in table.rows {
            let mut full = vec![length];
            full.append(&mut row);
            rows.push(full);
        }
    }
    Ok(SweepResult {
        columns: vec![
            "wire_length_m".into(),
            "freq_hz".into(),
            "n".into(),
            "dmax_quad_dbi".into(),
            "dmax_approx_dbi".into(),
            "theta_max_deg".into(),
        ],
        rows,
        plan: plan.clone(),
    })
}

fn run_pattern_kind(plan: &SweepPlan) -> Result<SweepResult, SweepError> {
    let table = pattern_sweep(
        &plan.scenario.wire,
        plan.freq_grid.stop_hz,
        plan.pattern_resolution_deg,
    )?;
    Ok(SweepResult {
        plan: plan.clone(),
        ..table
    })
}

/// Peak-directivity table over the grid: quadrature and approximation side
/// by side, plus the main-lobe angle.
///
/// The grid must stay within 1-20 GHz, the band the closed-form treatment
/// covers. The quadrature resolution adapts to the electrical length
/// (min of 0.5 degrees and pi/(16 n)) so every lobe stays resolved.
pub fn directivity_sweep(
    geometry: &WireGeometry,
    freqs: &FreqGrid,
) -> Result<SweepResult, SweepError> {
    freqs.validate()?;
    if freqs.start_hz < 1e9 - 1.0 || freqs.stop_hz > 2e10 + 1.0 {
        return Err(SweepError::InvalidPlan(format!(
            "directivity sweeps cover 1-20 GHz, got {} - {} Hz",
            freqs.start_hz, freqs.stop_hz
        )));
    }
    let mut rows = Vec::new();
    for f in freqs.frequencies() {
        let n = geometry.electrical_length(f).n;
        let resolution = (PI / 360.0).min(PI / (16.0 * n));
        let quad =
            antenna::directivity(geometry, f, resolution).map_err(model_err(geometry.length_m, f))?;
        let approx = antenna::d_max_approx(n).map_err(model_err(geometry.length_m, f))?;
        let theta = antenna::theta_max(n).map_err(model_err(geometry.length_m, f))?;
        rows.push(vec![f, n, quad.d_max_dbi, approx, theta.to_degrees()]);
    }
    Ok(SweepResult {
        columns: vec![
            "freq_hz".into(),
            "n".into(),
            "dmax_quad_dbi".into(),
            "dmax_approx_dbi".into(),
            "theta_max_deg".into(),
        ],
        rows,
        plan: SweepPlan {
            kind: SweepKind::DirectivityVsFreq,
            freq_grid: *freqs,
            varied_values: vec![geometry.length_m],
            scenario: Scenario {
                wire: geometry.clone(),
                ..Scenario::default()
            },
            realizations: 1,
            seed: 0,
            pattern_resolution_deg: 0.01,
        },
    })
}

/// Normalized pattern over the full circle [0, 360) degrees.
///
/// Angles are measured from the wire axis and mirrored across it for the
/// second half-circle; values are |F| scaled so the grid maximum is exactly
/// one. The resolution must satisfy the lobe-counting bound pi/(64 n) so
/// adjacent lobes stay separated.
pub fn pattern_sweep(
    geometry: &WireGeometry,
    freq_hz: f64,
    resolution_deg: f64,
) -> Result<SweepResult, SweepError> {
    if !(freq_hz > 0.0) {
        return Err(SweepError::InvalidPlan(format!(
            "pattern frequency must be positive, got {freq_hz}"
        )));
    }
    let n = geometry.electrical_length(freq_hz).n;
    let resolution_rad = resolution_deg.to_radians();
    if !(resolution_rad > 0.0) || (n >= 1.0 && resolution_rad > PI / (64.0 * n)) {
        return Err(SweepError::InvalidPlan(format!(
            "pattern resolution {resolution_deg} deg too coarse for n = {n}; \
             need <= {} deg",
            (PI / (64.0 * n)).to_degrees()
        )));
    }

    let steps = (360.0 / resolution_deg).round() as usize;
    let mut values = Vec::with_capacity(steps);
    let mut angles = Vec::with_capacity(steps);
    for i in 0..steps {
        let angle_deg = i as f64 * 360.0 / steps as f64;
        let polar = if angle_deg <= 180.0 {
            angle_deg.to_radians()
        } else {
            (360.0 - angle_deg).to_radians()
        };
        // Clamp tiny negatives from degree->radian rounding near the axis.
        let polar = polar.clamp(0.0, PI);
        let value = if polar < ENDPOINT_GUARD_RAD || PI - polar < ENDPOINT_GUARD_RAD {
            0.0
        } else {
            antenna::pattern_f(polar, n).map_err(model_err(n, freq_hz))?
        };
        angles.push(angle_deg);
        values.push(value);
    }
    let max = values.iter().cloned().fold(0.0_f64, f64::max);
    if max <= 0.0 {
        return Err(SweepError::InvalidPlan(
            "pattern is identically zero on the grid".into(),
        ));
    }
    let rows = angles
        .into_iter()
        .zip(values)
        .map(|(a, v)| vec![a, v / max])
        .collect();
    Ok(SweepResult {
        columns: vec!["angle_deg".into(), "value".into()],
        rows,
        plan: SweepPlan {
            kind: SweepKind::PatternPolar,
            freq_grid: FreqGrid {
                start_hz: freq_hz,
                stop_hz: freq_hz,
                step_hz: freq_hz,
            },
            varied_values: vec![],
            scenario: Scenario {
                wire: geometry.clone(),
                ..Scenario::default()
            },
            realizations: 1,
            seed: 0,
            pattern_resolution_deg: resolution_deg,
        },
    })
}
