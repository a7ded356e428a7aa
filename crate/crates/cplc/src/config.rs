//! Scenario configuration: a TOML file with one section per subsystem.
//!
//! Every key is optional; the defaults reproduce the reference desk-scale
//! setup (2 m mining-cable run resting on lossy ground, 3 m line-of-sight
//! hop, 0-5 GHz grid at 10 MHz). Unknown keys are rejected and parse errors
//! carry line numbers. See `docs/formats.md` for the full key list.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::antenna::{self, WireGeometry};
use crate::cable::{self, CableSpec};
use crate::channels::{self, CouplingConfig, PlcPath, RicianConfig};
use crate::mom::{GroundParameters, Load, MomMesh};
use crate::sweep::{FreqGrid, Scenario, SweepKind, SweepPlan};

/// Errors from parsing or validating a scenario file.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// Malformed TOML; the message carries line and column.
    #[error("config syntax error: {0}")]
    Syntax(String),
    /// A key that no section defines; the message carries line and column.
    #[error("unknown config key: {0}")]
    UnknownKey(String),
    /// A structurally valid value outside its allowed range.
    #[error("config range error: {key}: {message}")]
    Range { key: String, message: String },
}

fn range(key: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Range {
        key: key.into(),
        message: message.into(),
    }
}

/// Radiating-wire geometry section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct WireSection {
    pub length_m: f64,
    pub diameter_m: f64,
    pub height_m: f64,
    pub axis: [f64; 3],
}

impl Default for WireSection {
    fn default() -> Self {
        Self {
            length_m: 2.0,
            diameter_m: 7.2e-3,
            height_m: 37.45e-3,
            axis: [0.0, 0.0, 1.0],
        }
    }
}

/// Ground half-space section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GroundSection {
    pub enabled: bool,
    pub eps_r: f64,
    pub sigma_s_per_m: f64,
}

impl Default for GroundSection {
    fn default() -> Self {
        Self {
            enabled: true,
            eps_r: 10.0,
            sigma_s_per_m: 0.01,
        }
    }
}

/// Cable geometry and material section (geometric values in millimetres,
/// mirroring the reference parameter table).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CableSection {
    pub a_mm: f64,
    pub b_mm: f64,
    pub c_mm: f64,
    pub x_mm: f64,
    pub z_mm: f64,
    pub eps_r: f64,
    pub mu_c: f64,
    pub sigma_c_s_per_m: f64,
    pub sigma_ins_s_per_m: f64,
    pub mu_a: f64,
    pub tan_delta: f64,
}

impl Default for CableSection {
    fn default() -> Self {
        Self {
            a_mm: 37.45,
            b_mm: 29.65,
            c_mm: 13.51,
            x_mm: 3.6,
            z_mm: 33.85,
            eps_r: 2.25,
            mu_c: 0.999994,
            sigma_c_s_per_m: 5.8e7,
            sigma_ins_s_per_m: 1e-13,
            mu_a: 1.0,
            tan_delta: 4e-4,
        }
    }
}

/// One explicit PLC path entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlcPathEntry {
    pub g: f64,
    pub length_m: f64,
}

/// PLC multipath section: either explicit `paths` or a generated set of
/// `path_count` paths from `(g1, base_length_m)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PlcSection {
    pub path_count: usize,
    pub base_length_m: f64,
    pub g1: f64,
    pub paths: Vec<PlcPathEntry>,
}

impl Default for PlcSection {
    fn default() -> Self {
        Self {
            path_count: 1,
            base_length_m: 2.0,
            g1: 1.0,
            paths: Vec::new(),
        }
    }
}

/// RF hop and Rician fading section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RfSection {
    pub k_factor_db: f64,
    pub mean_power: f64,
    pub path_count: usize,
    pub los_distance_m: f64,
    pub delay_spread_ns: f64,
}

impl Default for RfSection {
    fn default() -> Self {
        Self {
            k_factor_db: 6.0,
            mean_power: 1.0,
            path_count: 4,
            los_distance_m: 3.0,
            delay_spread_ns: 20.0,
        }
    }
}

/// Interface coupling section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CouplingSection {
    pub efficiency: f64,
}

impl Default for CouplingSection {
    fn default() -> Self {
        Self { efficiency: 1.0 }
    }
}

/// Sweep-plan section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepSection {
    pub kind: SweepKind,
    pub start_hz: f64,
    pub stop_hz: f64,
    pub step_hz: f64,
    pub varied: Vec<f64>,
    pub realizations: u32,
    pub seed: u64,
    pub pattern_resolution_deg: f64,
}

impl Default for SweepSection {
    fn default() -> Self {
        Self {
            kind: SweepKind::CplcVsLength,
            start_hz: 0.0,
            stop_hz: 5e9,
            step_hz: 1e7,
            varied: vec![2.0],
            realizations: 100,
            seed: 1,
            pattern_resolution_deg: 0.01,
        }
    }
}

/// How the far end of the numerically solved wire is terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// Characteristic impedance of the cable's internal (coaxial) mode.
    CableZ0,
    /// The wire's own average characteristic impedance `60(ln(4L/d) - 1)`.
    WireZa,
    /// No load at all.
    Open,
}

/// Numerical-solver section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MomSection {
    /// Segment count; 0 selects the automatic odd count from
    /// `segments_per_wavelength`.
    pub segments: usize,
    pub segments_per_wavelength: f64,
    pub termination: Termination,
    /// Explicit load override (ohms); used instead of `termination` when set.
    pub load_r_ohm: Option<f64>,
    pub load_x_ohm: Option<f64>,
}

impl Default for MomSection {
    fn default() -> Self {
        Self {
            segments: 0,
            segments_per_wavelength: 12.0,
            termination: Termination::CableZ0,
            load_r_ohm: None,
            load_x_ohm: None,
        }
    }
}

/// The whole scenario file.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub wire: WireSection,
    pub ground: GroundSection,
    pub cable: CableSection,
    pub plc: PlcSection,
    pub rf: RfSection,
    pub coupling: CouplingSection,
    pub sweep: SweepSection,
    pub mom: MomSection,
}

/// Parses and validates a scenario file. Unknown keys are rejected.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let config: ScenarioConfig = toml::from_str(text).map_err(|e| {
        let message = e.to_string();
        if message.contains("unknown field") {
            ConfigError::UnknownKey(message)
        } else {
            ConfigError::Syntax(message)
        }
    })?;
    config.validate()?;
    Ok(config)
}

/// Serializes a config back to TOML; `parse_config` of the output yields an
/// equal config.
pub fn serialize_config(config: &ScenarioConfig) -> String {
    toml::to_string_pretty(config).expect("scenario configs always serialize")
}

impl ScenarioConfig {
    /// Range-checks every section.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let w = &self.wire;
        if !(w.length_m > 0.0) {
            return Err(range("wire.length_m", "must be positive"));
        }
        if !(w.diameter_m > 0.0) {
            return Err(range("wire.diameter_m", "must be positive"));
        }
        if w.diameter_m >= w.length_m / 100.0 {
            return Err(range(
                "wire.diameter_m",
                "thin-wire model requires diameter < length/100",
            ));
        }
        if w.height_m < 0.0 {
            return Err(range("wire.height_m", "must be non-negative"));
        }

        let g = &self.ground;
        if g.eps_r < 1.0 {
            return Err(range("ground.eps_r", "must be >= 1"));
        }
        if g.sigma_s_per_m < 0.0 {
            return Err(range("ground.sigma_s_per_m", "must be non-negative"));
        }
        if g.enabled && w.height_m <= 0.0 {
            return Err(range(
                "wire.height_m",
                "must be positive when the ground is enabled",
            ));
        }

        let c = &self.cable;
        if !(c.a_mm > c.b_mm && c.b_mm > c.c_mm && c.c_mm > c.x_mm && c.x_mm > 0.0) {
            return Err(range(
                "cable",
                format!(
                    "geometry must satisfy a > b > c > x > 0 (got a={}, b={}, c={}, x={})",
                    c.a_mm, c.b_mm, c.c_mm, c.x_mm
                ),
            ));
        }
        if c.eps_r < 1.0 {
            return Err(range("cable.eps_r", "must be >= 1"));
        }
        if !(c.sigma_c_s_per_m > 0.0) {
            return Err(range("cable.sigma_c_s_per_m", "must be positive"));
        }
        if c.tan_delta < 0.0 {
            return Err(range("cable.tan_delta", "must be non-negative"));
        }

        let p = &self.plc;
        if p.path_count < 1 {
            return Err(range("plc.path_count", "must be >= 1"));
        }
        if !(p.base_length_m > 0.0) {
            return Err(range("plc.base_length_m", "must be positive"));
        }
        if p.g1.abs() > 1.0 {
            return Err(range("plc.g1", "weighting factors satisfy |g| <= 1"));
        }
        for (i, path) in p.paths.iter().enumerate() {
            if path.g.abs() > 1.0 {
                return Err(range(
                    &format!("plc.paths[{i}].g"),
                    "weighting factors satisfy |g| <= 1",
                ));
            }
            if !(path.length_m > 0.0) {
                return Err(range(&format!("plc.paths[{i}].length_m"), "must be positive"));
            }
        }

        let r = &self.rf;
        if !(r.mean_power > 0.0) {
            return Err(range("rf.mean_power", "must be positive"));
        }
        if r.path_count < 1 {
            return Err(range("rf.path_count", "must be >= 1"));
        }
        if r.los_distance_m < 0.0 {
            return Err(range("rf.los_distance_m", "must be non-negative"));
        }
        if r.delay_spread_ns < 0.0 {
            return Err(range("rf.delay_spread_ns", "must be non-negative"));
        }

        if !(0.0..=1.0).contains(&self.coupling.efficiency) {
            return Err(range("coupling.efficiency", "must lie in [0, 1]"));
        }

        let s = &self.sweep;
        if !(s.step_hz > 0.0) {
            return Err(range("sweep.step_hz", "must be positive"));
        }
        if !(s.stop_hz >= s.start_hz) {
            return Err(range("sweep.stop_hz", "must be at least sweep.start_hz"));
        }
        if s.start_hz < 0.0 {
            return Err(range("sweep.start_hz", "must be non-negative"));
        }
        if s.realizations < 1 {
            return Err(range("sweep.realizations", "must be >= 1"));
        }
        if s.varied.is_empty() {
            return Err(range("sweep.varied", "must list at least one value"));
        }
        if !(s.pattern_resolution_deg > 0.0) {
            return Err(range("sweep.pattern_resolution_deg", "must be positive"));
        }

        let m = &self.mom;
        if m.segments != 0 && (m.segments < 3 || m.segments % 2 == 0) {
            return Err(range("mom.segments", "must be 0 (auto) or odd and >= 3"));
        }
        if m.segments_per_wavelength < 10.0 {
            return Err(range(
                "mom.segments_per_wavelength",
                "must be >= 10 (segments shorter than lambda/10)",
            ));
        }
        Ok(())
    }

    /// Wire geometry in domain types.
    pub fn wire_geometry(&self) -> WireGeometry {
        WireGeometry {
            length_m: self.wire.length_m,
            diameter_m: self.wire.diameter_m,
            height_m: self.wire.height_m,
            axis: self.wire.axis,
        }
    }

    /// Ground parameters, if enabled.
    pub fn ground_parameters(&self) -> Option<GroundParameters> {
        self.ground.enabled.then_some(GroundParameters {
            eps_r: self.ground.eps_r,
            sigma_s_per_m: self.ground.sigma_s_per_m,
        })
    }

    /// Cable spec in SI units.
    pub fn cable_spec(&self) -> CableSpec {
        let c = &self.cable;
        CableSpec {
            a_m: c.a_mm * 1e-3,
            b_m: c.b_mm * 1e-3,
            c_m: c.c_mm * 1e-3,
            x_m: c.x_mm * 1e-3,
            z_m: c.z_mm * 1e-3,
            eps_r_ins: c.eps_r,
            mu_c: c.mu_c,
            sigma_c_s_per_m: c.sigma_c_s_per_m,
            sigma_ins_s_per_m: c.sigma_ins_s_per_m,
            mu_a: c.mu_a,
            tan_delta: c.tan_delta,
        }
    }

    /// The PLC path set: explicit entries win over the generated rule.
    pub fn plc_paths(&self) -> Vec<PlcPath> {
        if self.plc.paths.is_empty() {
            channels::generate_plc_paths(self.plc.path_count, self.plc.base_length_m, self.plc.g1)
        } else {
            self.plc
                .paths
                .iter()
                .map(|p| PlcPath {
                    g: p.g,
                    length_m: p.length_m,
                })
                .collect()
        }
    }

    /// Rician generator settings (K converted from dB, seed from the sweep).
    pub fn rician(&self) -> RicianConfig {
        RicianConfig {
            k_factor: 10f64.powf(self.rf.k_factor_db / 10.0),
            mean_power: self.rf.mean_power,
            seed: self.sweep.seed,
            los_distance_m: self.rf.los_distance_m,
            delay_spread_s: self.rf.delay_spread_ns * 1e-9,
        }
    }

    /// The frequency grid of the sweep section.
    pub fn freq_grid(&self) -> FreqGrid {
        FreqGrid {
            start_hz: self.sweep.start_hz,
            stop_hz: self.sweep.stop_hz,
            step_hz: self.sweep.step_hz,
        }
    }

    /// Full domain scenario.
    pub fn scenario(&self) -> Scenario {
        Scenario {
            wire: self.wire_geometry(),
            ground: self.ground_parameters(),
            cable: self.cable_spec(),
            plc_paths: self.plc_paths(),
            rician: self.rician(),
            rf_path_count: self.rf.path_count,
            coupling: CouplingConfig {
                efficiency: self.coupling.efficiency,
            },
        }
    }

    /// The sweep plan this config describes.
    pub fn sweep_plan(&self) -> SweepPlan {
        SweepPlan {
            kind: self.sweep.kind,
            freq_grid: self.freq_grid(),
            varied_values: self.sweep.varied.clone(),
            scenario: self.scenario(),
            realizations: self.sweep.realizations,
            seed: self.sweep.seed,
            pattern_resolution_deg: self.sweep.pattern_resolution_deg,
        }
    }

    /// Segment count for a numerical solve at `freq_hz`.
    pub fn mom_segments(&self, freq_hz: f64) -> usize {
        if self.mom.segments != 0 {
            self.mom.segments
        } else {
            MomMesh::auto_segment_count(
                &self.wire_geometry(),
                freq_hz,
                self.mom.segments_per_wavelength,
            )
        }
    }

    /// Termination impedance for the numerical solve at `freq_hz`, or None
    /// for an open end.
    pub fn termination_impedance(&self, freq_hz: f64) -> Result<Option<Complex64>, ConfigError> {
        if let (Some(re), im) = (self.mom.load_r_ohm, self.mom.load_x_ohm) {
            return Ok(Some(Complex64::new(re, im.unwrap_or(0.0))));
        }
        match self.mom.termination {
            Termination::Open => Ok(None),
            Termination::WireZa => {
                let za = antenna::average_characteristic_impedance(&self.wire_geometry())
                    .map_err(|e| range("mom.termination", e.to_string()))?;
                Ok(Some(Complex64::new(za, 0.0)))
            }
            Termination::CableZ0 => {
                let params = cable::rlgc_at(&self.cable_spec(), freq_hz)
                    .map_err(|e| range("mom.termination", e.to_string()))?;
                let z0 = cable::characteristic_impedance(&params)
                    .map_err(|e| range("mom.termination", e.to_string()))?;
                Ok(Some(z0))
            }
        }
    }

    /// Traveling-wave mesh for the numerical solve at `freq_hz`: end fed,
    /// termination per the `mom` section.
    pub fn mom_mesh(&self, freq_hz: f64) -> Result<MomMesh, ConfigError> {
        let geometry = self.wire_geometry();
        let segments = self.mom_segments(freq_hz);
        let mesh = match self.termination_impedance(freq_hz)? {
            Some(z) => MomMesh::traveling_wave(&geometry, segments, freq_hz, z),
            None => MomMesh::end_fed(&geometry, segments, None),
        };
        mesh.map_err(|e| range("mom", e.to_string()))
    }

    /// Lumped load of the mesh at `freq_hz` (None for open).
    pub fn mom_load(&self, freq_hz: f64) -> Result<Option<Load>, ConfigError> {
        Ok(self.mom_mesh(freq_hz)?.load)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn empty_file_yields_reference_defaults() {
        let config = parse_config("").unwrap();
        assert_eq!(config, ScenarioConfig::default());
        let spec = config.cable_spec();
        assert_relative_eq!(spec.a_m, 37.45e-3, max_relative = 1e-12);
        assert_relative_eq!(spec.x_m, 3.6e-3, max_relative = 1e-12);
        assert_eq!(spec.sigma_c_s_per_m, 5.8e7);
        let ground = config.ground_parameters().unwrap();
        assert_eq!(ground.eps_r, 10.0);
        assert_eq!(ground.sigma_s_per_m, 0.01);
        assert_eq!(config.freq_grid().frequencies().len(), 501);
    }

    #[test]
    fn range_violation_names_the_key() {
        let err = parse_config("coupling.efficiency = 1.5").unwrap_err();
        match err {
            ConfigError::Range { key, .. } => assert_eq!(key, "coupling.efficiency"),
            other => panic!("expected a range error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_are_rejected_with_location() {
        let err = parse_config("wire.bogus_key = 1.0").unwrap_err();
        match err {
            ConfigError::UnknownKey(message) => {
                assert!(message.contains("bogus_key"), "{message}");
                assert!(message.contains("line"), "{message}");
            }
            other => panic!("expected an unknown-key error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_config("wire = {").unwrap_err();
        match err {
            ConfigError::Syntax(message) => assert!(message.contains("line"), "{message}"),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_preserves_the_config() {
        let text = r#"
[wire]
length_m = 5.0

[sweep]
kind = "cplc_vs_paths"
varied = [1.0, 3.0, 5.0]
seed = 42

[[plc.paths]]
g = 0.9
length_m = 2.5
"#;
        let config = parse_config(text).unwrap();
        let serialized = serialize_config(&config);
        let reparsed = parse_config(&serialized).unwrap();
        assert_eq!(config, reparsed);
        assert_eq!(config.wire.length_m, 5.0);
        assert_eq!(config.sweep.kind, SweepKind::CplcVsPaths);
        assert_eq!(config.plc_paths().len(), 1);
        assert_eq!(config.plc_paths()[0].g, 0.9);
    }

    #[test]
    fn generated_paths_follow_the_plc_section() {
        let config = parse_config("plc.path_count = 3\nplc.base_length_m = 2.0").unwrap();
        let paths = config.plc_paths();
        assert_eq!(paths.len(), 3);
        assert_eq!(paths[1].length_m, 6.0);
    }

    #[test]
    fn rician_conversion_from_db() {
        let config = parse_config("rf.k_factor_db = 10.0").unwrap();
        assert_relative_eq!(config.rician().k_factor, 10.0, max_relative = 1e-12);
        let default = ScenarioConfig::default();
        assert_relative_eq!(
            default.rician().k_factor,
            3.981_071_705_534_972_5,
            max_relative = 1e-12
        );
        assert_relative_eq!(default.rician().delay_spread_s, 20e-9, max_relative = 1e-12);
    }

    #[test]
    fn termination_variants() {
        let open = parse_config("mom.termination = \"open\"").unwrap();
        assert_eq!(open.termination_impedance(1e9).unwrap(), None);

        let za = parse_config("mom.termination = \"wire-za\"").unwrap();
        let z = za.termination_impedance(1e9).unwrap().unwrap();
        assert!(z.re > 100.0 && z.im == 0.0);

        let z0 = ScenarioConfig::default().termination_impedance(1e9).unwrap().unwrap();
        assert!((z0.re - 52.86).abs() < 0.5, "cable Z0 was {z0}");

        let explicit = parse_config("mom.load_r_ohm = 75.0\nmom.load_x_ohm = -10.0").unwrap();
        assert_eq!(
            explicit.termination_impedance(1e9).unwrap(),
            Some(Complex64::new(75.0, -10.0))
        );
    }

    #[test]
    fn mom_section_validation() {
        assert!(parse_config("mom.segments = 4").is_err());
        assert!(parse_config("mom.segments_per_wavelength = 5.0").is_err());
        assert!(parse_config("mom.segments = 41").is_ok());
    }
}
