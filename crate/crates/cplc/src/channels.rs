//! Transfer-function models: multipath PLC channel, multipath/Rician RF
//! channel, and the cascaded CPLC channel.
//!
//! The PLC channel sums weighted, attenuated, delayed path contributions
//!
//! ```text
//! H_PLC(f) = sum_i g_i * e^(-alpha(f)*l_i) * e^(-j*2*pi*f*tau_i)
//! ```
//!
//! with `alpha` from the cable model and `tau_i = l_i*sqrt(eps_r)/c`. The RF
//! channel is the plain multipath sum `H_RF(f) = sum_i a_i * e^(-j*2*pi*f*tau_i)`
//! whose path gains are drawn from a Rician model (deterministic line-of-sight
//! component plus circular-Gaussian scatterers). The cascade applies the
//! coupling efficiency once per PLC/RF interface:
//!
//! ```text
//! H_CPLC(f) = eps^2 * H_PLC(f) * H_RF(f)^2
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cable::{self, CableError, CableSpec};
use crate::constants::C_LIGHT;

/// Errors from the channel models.
#[derive(Debug, Error)]
pub enum ChannelError {
    /// A multipath sum needs at least one path.
    #[error("channel requires at least one propagation path")]
    EmptyPaths,
    /// Cascade inputs must share one frequency grid.
    #[error("frequency grids differ: {left} vs {right} points (first mismatch at index {index})")]
    GridMismatch {
        left: usize,
        right: usize,
        index: usize,
    },
    /// Rician K-factor must be non-negative.
    #[error("invalid Rician K-factor {k_factor}; must be >= 0")]
    InvalidKFactor { k_factor: f64 },
    /// Frequency grid must be strictly increasing and finite.
    #[error("invalid frequency grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Cable(#[from] CableError),
}

/// One PLC propagation path: real weighting factor and physical length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlcPath {
    /// Path weighting factor, |g| <= 1.
    pub g: f64,
    /// Path length (m).
    pub length_m: f64,
}

/// One RF propagation path: complex amplitude and delay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RfPath {
    /// Complex path amplitude.
    pub amplitude: Complex64,
    /// Propagation delay (s).
    pub delay_s: f64,
}

/// Parameters of the Rician path-gain generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RicianConfig {
    /// Linear K-factor: line-of-sight power over total scattered power.
    pub k_factor: f64,
    /// Total mean power E[sum |a_i|^2].
    pub mean_power: f64,
    /// RNG seed; draws are bit-reproducible for a fixed seed.
    pub seed: u64,
    /// Line-of-sight distance (m); sets the LOS delay.
    pub los_distance_m: f64,
    /// Excess-delay spread of the scattered paths (s).
    pub delay_spread_s: f64,
}

impl Default for RicianConfig {
    fn default() -> Self {
        Self {
            // 6 dB
            k_factor: 3.981_071_705_534_972_5,
            mean_power: 1.0,
            seed: 1,
            los_distance_m: 3.0,
            delay_spread_s: 20e-9,
        }
    }
}

/// Per-interface coupling efficiency of the PLC/RF transitions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingConfig {
    /// Amplitude fraction transferred at each interface, in [0, 1].
    pub efficiency: f64,
}

impl Default for CouplingConfig {
    fn default() -> Self {
        Self { efficiency: 1.0 }
    }
}

/// Complex transfer function sampled on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelResponse {
    /// Sample frequencies (Hz), strictly increasing.
    pub freqs_hz: Vec<f64>,
    /// Transfer-function samples, one per frequency.
    pub h: Vec<Complex64>,
}

impl ChannelResponse {
    /// Builds a response after checking the grid and sample invariants.
    pub fn new(freqs_hz: Vec<f64>, h: Vec<Complex64>) -> Result<Self, ChannelError> {
        if freqs_hz.len() != h.len() {
            return Err(ChannelError::InvalidGrid(format!(
                "{} frequencies vs {} samples",
                freqs_hz.len(),
                h.len()
            )));
        }
        validate_grid(&freqs_hz)?;
        if let Some(bad) = h.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(ChannelError::InvalidGrid(format!(
                "non-finite sample at index {bad}"
            )));
        }
        Ok(Self { freqs_hz, h })
    }

    /// Magnitudes |H(f)|.
    pub fn magnitudes(&self) -> Vec<f64> {
        self.h.iter().map(|v| v.norm()).collect()
    }
}

fn validate_grid(freqs_hz: &[f64]) -> Result<(), ChannelError> {
    if freqs_hz.is_empty() {
        return Err(ChannelError::InvalidGrid("empty frequency grid".into()));
    }
    for w in freqs_hz.windows(2) {
        if !(w[1] > w[0]) {
            return Err(ChannelError::InvalidGrid(format!(
                "grid not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
    }
    if freqs_hz.iter().any(|f| !f.is_finite()) {
        return Err(ChannelError::InvalidGrid("non-finite frequency".into()));
    }
    Ok(())
}

/// Propagation delay on the cable: `tau = l * sqrt(eps_r) / c`.
pub fn plc_delay(length_m: f64, eps_r: f64) -> f64 {
    assert!(length_m >= 0.0, "path length must be non-negative");
    assert!(eps_r >= 1.0, "relative permittivity must be >= 1");
    length_m * eps_r.sqrt() / C_LIGHT
}

/// Multipath PLC transfer function on the given grid.
///
/// Attenuation comes from the cable's propagation constant at each
/// frequency; the delay of each path uses the cable's insulation
/// permittivity.
pub fn h_plc(
    paths: &[PlcPath],
    freqs_hz: &[f64],
    cable: &CableSpec,
) -> Result<ChannelResponse, ChannelError> {
    if paths.is_empty() {
        return Err(ChannelError::EmptyPaths);
    }
    validate_grid(freqs_hz)?;
    let mut h = Vec::with_capacity(freqs_hz.len());
    for &f in freqs_hz {
        let params = cable::rlgc_at(cable, f)?;
        let alpha = cable::propagation_constant(&params).alpha_np_per_m;
        let mut acc = Complex64::new(0.0, 0.0);
        for path in paths {
            let tau = plc_delay(path.length_m, cable.eps_r_ins);
            let magnitude = path.g * (-alpha * path.length_m).exp();
            acc += magnitude * Complex64::from_polar(1.0, -2.0 * PI * f * tau);
        }
        h.push(acc);
    }
    ChannelResponse::new(freqs_hz.to_vec(), h)
}

/// Multipath RF transfer function `sum_i a_i * e^(-j*2*pi*f*tau_i)`.
pub fn h_rf(paths: &[RfPath], freqs_hz: &[f64]) -> Result<ChannelResponse, ChannelError> {
    if paths.is_empty() {
        return Err(ChannelError::EmptyPaths);
    }
    validate_grid(freqs_hz)?;
    let mut h = Vec::with_capacity(freqs_hz.len());
    for &f in freqs_hz {
        let mut acc = Complex64::new(0.0, 0.0);
        for path in paths {
            acc += path.amplitude * Complex64::from_polar(1.0, -2.0 * PI * f * path.delay_s);
        }
        h.push(acc);
    }
    ChannelResponse::new(freqs_hz.to_vec(), h)
}

/// Draws one Rician realization of `m_paths` RF paths.
///
/// Path 1 is the deterministic line-of-sight component with power
/// `K/(K+1) * mean_power` and delay `los_distance/c`; the remaining paths
/// split the scattered power `mean_power/(K+1)` equally, with circular
/// complex-Gaussian amplitudes and delays uniform in
/// `(los_delay, los_delay + delay_spread]`. With `m_paths = 1` the single
/// line-of-sight path carries the full mean power.
pub fn sample_rician_paths(
    config: &RicianConfig,
    m_paths: usize,
) -> Result<Vec<RfPath>, ChannelError> {
    if config.k_factor < 0.0 || !config.k_factor.is_finite() {
        return Err(ChannelError::InvalidKFactor {
            k_factor: config.k_factor,
        });
    }
    assert!(m_paths >= 1, "at least one RF path is required");
    assert!(config.mean_power > 0.0, "mean power must be positive");

    let los_delay = config.los_distance_m / C_LIGHT;
    let mut paths = Vec::with_capacity(m_paths);

    if m_paths == 1 {
        paths.push(RfPath {
            amplitude: Complex64::new(config.mean_power.sqrt(), 0.0),
            delay_s: los_delay,
        });
        return Ok(paths);
    }

    let k = config.k_factor;
    let los_power = k / (k + 1.0) * config.mean_power;
    let scatter_power = config.mean_power / (k + 1.0);
    let per_path_power = scatter_power / (m_paths - 1) as f64;

    paths.push(RfPath {
        amplitude: Complex64::new(los_power.sqrt(), 0.0),
        delay_s: los_delay,
    });

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    // Circular complex Gaussian: E|a|^2 = per_path_power.
    let sigma = (per_path_power / 2.0).sqrt();
    for _ in 1..m_paths {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        let u: f64 = rng.gen::<f64>(); // in [0, 1)
        paths.push(RfPath {
            amplitude: Complex64::new(sigma * re, sigma * im),
            delay_s: los_delay + (1.0 - u) * config.delay_spread_s,
        });
    }
    Ok(paths)
}

/// Cascaded CPLC transfer function `eps^2 * H_PLC * H_RF^2`.
///
/// The two RF hops are assumed equal, hence the squared RF term; the
/// coupling efficiency applies once per PLC/RF interface.
pub fn h_cplc(
    h_plc: &ChannelResponse,
    h_rf: &ChannelResponse,
    coupling: &CouplingConfig,
) -> Result<ChannelResponse, ChannelError> {
    assert!(
        (0.0..=1.0).contains(&coupling.efficiency),
        "coupling efficiency must lie in [0, 1]"
    );
    if h_plc.freqs_hz.len() != h_rf.freqs_hz.len() {
        return Err(ChannelError::GridMismatch {
            left: h_plc.freqs_hz.len(),
            right: h_rf.freqs_hz.len(),
            index: h_plc.freqs_hz.len().min(h_rf.freqs_hz.len()),
        });
    }
    if let Some(index) = h_plc
        .freqs_hz
        .iter()
        .zip(h_rf.freqs_hz.iter())
        .position(|(a, b)| a != b)
    {
        return Err(ChannelError::GridMismatch {
            left: h_plc.freqs_hz.len(),
            right: h_rf.freqs_hz.len(),
            index,
        });
    }
    let eps2 = coupling.efficiency * coupling.efficiency;
    let h = h_plc
        .h
        .iter()
        .zip(h_rf.h.iter())
        .map(|(p, r)| eps2 * p * r * r)
        .collect();
    ChannelResponse::new(h_plc.freqs_hz.clone(), h)
}

/// Default PLC path set for path-count studies.
///
/// Path lengths follow the bounce rule `l_i = (2i - 1) * base_length`; the
/// weighting profile `1/i` is normalized so the weights of the whole set sum
/// to `g1` (each path's weight shrinks as paths are added, and a single path
/// reduces to `g = g1` exactly).
pub fn generate_plc_paths(count: usize, base_length_m: f64, g1: f64) -> Vec<PlcPath> {
    assert!(count >= 1, "at least one path");
    assert!(base_length_m > 0.0, "base length must be positive");
    let harmonic: f64 = (1..=count).map(|i| 1.0 / i as f64).sum();
    (1..=count)
        .map(|i| PlcPath {
            g: g1 * (1.0 / i as f64) / harmonic,
            length_m: (2 * i - 1) as f64 * base_length_m,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
        let mut v = Vec::new();
        let mut f = start;
        while f <= stop + 0.5 * step {
            v.push(f);
            f += step;
        }
        v
    }

    #[test]
    fn plc_delay_examples() {
        assert_eq!(plc_delay(0.0, 2.25), 0.0);
        // Frozen: 2 * 1.5 / 2.9979e8
        assert_relative_eq!(
            plc_delay(2.0, 2.25),
            1.000_700_490_343_240_3e-8,
            max_relative = 1e-12
        );
        assert_relative_eq!(plc_delay(3.0, 1.0), 3.0 / C_LIGHT, max_relative = 1e-12);
    }

    #[test]
    fn h_plc_single_short_path_is_unity() {
        let cable = CableSpec::default();
        let paths = [PlcPath {
            g: 1.0,
            length_m: 1e-12,
        }];
        let freqs = grid(1e7, 1e9, 1e8);
        let resp = h_plc(&paths, &freqs, &cable).unwrap();
        for v in &resp.h {
            assert_relative_eq!(v.norm(), 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn h_plc_constructed_half_amplitude_product() {
        // Pick l so alpha(f0)*l = ln 2; then |H(f0)| = 0.5 * e^(-ln 2) = 0.25
        let cable = CableSpec::default();
        let f0 = 1e9;
        let params = cable::rlgc_at(&cable, f0).unwrap();
        let alpha = cable::propagation_constant(&params).alpha_np_per_m;
        let l = std::f64::consts::LN_2 / alpha;
        let paths = [PlcPath { g: 0.5, length_m: l }];
        let resp = h_plc(&paths, &[f0], &cable).unwrap();
        assert_relative_eq!(resp.h[0].norm(), 0.25, max_relative = 1e-12);
    }

    #[test]
    fn h_plc_two_equal_paths_merge_linearly() {
        let cable = CableSpec::default();
        let freqs = grid(1e7, 5e9, 2.5e8);
        let two = [
            PlcPath { g: 0.5, length_m: 2.0 },
            PlcPath { g: 0.5, length_m: 2.0 },
        ];
        let one = [PlcPath { g: 1.0, length_m: 2.0 }];
        let a = h_plc(&two, &freqs, &cable).unwrap();
        let b = h_plc(&one, &freqs, &cable).unwrap();
        for (x, y) in a.h.iter().zip(b.h.iter()) {
            assert_relative_eq!(x.re, y.re, max_relative = 1e-12, epsilon = 1e-15);
            assert_relative_eq!(x.im, y.im, max_relative = 1e-12, epsilon = 1e-15);
        }
    }

    #[test]
    fn h_plc_rejects_empty_paths() {
        let cable = CableSpec::default();
        assert!(matches!(
            h_plc(&[], &[1e9], &cable),
            Err(ChannelError::EmptyPaths)
        ));
    }

    #[test]
    fn h_rf_examples() {
        let one = [RfPath {
            amplitude: Complex64::new(1.0, 0.0),
            delay_s: 0.0,
        }];
        let resp = h_rf(&one, &[1e8, 5e8, 1e9]).unwrap();
        for v in &resp.h {
            assert_relative_eq!(v.re, 1.0, max_relative = 1e-12);
            assert!(v.im.abs() < 1e-12);
        }

        // 1 ns delay puts 500 MHz exactly in antiphase
        let delayed = [RfPath {
            amplitude: Complex64::new(1.0, 0.0),
            delay_s: 1e-9,
        }];
        let resp = h_rf(&delayed, &[5e8]).unwrap();
        assert_relative_eq!(resp.h[0].re, -1.0, max_relative = 1e-9);
        assert!(resp.h[0].im.abs() < 1e-9);

        // Two antiphase paths cancel
        let f0 = 2.4e9;
        let pair = [
            RfPath {
                amplitude: Complex64::new(1.0, 0.0),
                delay_s: 0.0,
            },
            RfPath {
                amplitude: Complex64::new(1.0, 0.0),
                delay_s: 1.0 / (2.0 * f0),
            },
        ];
        let resp = h_rf(&pair, &[f0]).unwrap();
        assert!(resp.h[0].norm() < 1e-9);
    }

    #[test]
    fn rician_reproducible_from_seed() {
        let config = RicianConfig {
            seed: 42,
            ..RicianConfig::default()
        };
        let a = sample_rician_paths(&config, 6).unwrap();
        let b = sample_rician_paths(&config, 6).unwrap();
        assert_eq!(a, b);
        let c = sample_rician_paths(
            &RicianConfig {
                seed: 43,
                ..config
            },
            6,
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rician_huge_k_collapses_to_los() {
        let config = RicianConfig {
            k_factor: 1e9,
            seed: 7,
            ..RicianConfig::default()
        };
        let paths = sample_rician_paths(&config, 4).unwrap();
        let freqs = grid(1e7, 5e9, 1e8);
        let resp = h_rf(&paths, &freqs).unwrap();
        for v in &resp.h {
            assert!(
                (v.norm() - 1.0).abs() < 1e-3,
                "|H| = {} should equal the LOS amplitude",
                v.norm()
            );
        }
    }

    #[test]
    fn rician_mean_power_is_calibrated() {
        let mut total = 0.0;
        let draws = 100_000;
        for i in 0..draws {
            let config = RicianConfig {
                k_factor: 3.0,
                seed: 1000 + i as u64,
                ..RicianConfig::default()
            };
            let paths = sample_rician_paths(&config, 5).unwrap();
            total += paths.iter().map(|p| p.amplitude.norm_sqr()).sum::<f64>();
        }
        let mean = total / draws as f64;
        assert!(
            (mean - 1.0).abs() < 0.01,
            "E[sum |a|^2] = {mean}, expected 1 +- 1%"
        );
    }

    /// Moment-based K estimator from envelope samples: with m2 = E[r^2] and
    /// m4 = E[r^4], the LOS power is sqrt(2*m2^2 - m4) and K follows.
    fn moment_k_estimate(envelopes_sq: &[f64]) -> f64 {
        let n = envelopes_sq.len() as f64;
        let m2 = envelopes_sq.iter().sum::<f64>() / n;
        let m4 = envelopes_sq.iter().map(|r2| r2 * r2).sum::<f64>() / n;
        let nu2 = (2.0 * m2 * m2 - m4).max(0.0).sqrt();
        let scatter = (m2 - nu2).max(f64::MIN_POSITIVE);
        nu2 / scatter
    }

    #[test]
    fn rician_k_zero_two_paths_is_rayleigh() {
        let mut env_sq = Vec::with_capacity(100_000);
        for i in 0..100_000u64 {
            let config = RicianConfig {
                k_factor: 0.0,
                seed: 20_000_000 + i,
                ..RicianConfig::default()
            };
            let paths = sample_rician_paths(&config, 2).unwrap();
            let sum: Complex64 = paths.iter().map(|p| p.amplitude).sum();
            env_sq.push(sum.norm_sqr());
        }
        let k = moment_k_estimate(&env_sq);
        assert!(k < 0.05, "estimated K = {k} for a Rayleigh ensemble");
    }

    #[test]
    fn rician_rejects_negative_k() {
        let config = RicianConfig {
            k_factor: -1.0,
            ..RicianConfig::default()
        };
        assert!(matches!(
            sample_rician_paths(&config, 3),
            Err(ChannelError::InvalidKFactor { .. })
        ));
    }

    #[test]
    fn cascade_identity_and_coupling() {
        let freqs = grid(1e7, 1e9, 1e8);
        let unit =
            ChannelResponse::new(freqs.clone(), vec![Complex64::new(1.0, 0.0); freqs.len()])
                .unwrap();
        let out = h_cplc(&unit, &unit, &CouplingConfig { efficiency: 1.0 }).unwrap();
        for v in &out.h {
            assert_relative_eq!(v.re, 1.0, max_relative = 1e-12);
        }
        let out = h_cplc(&unit, &unit, &CouplingConfig { efficiency: 0.5 }).unwrap();
        for v in &out.h {
            assert_relative_eq!(v.norm(), 0.25, max_relative = 1e-12);
        }
        let out = h_cplc(&unit, &unit, &CouplingConfig { efficiency: 0.0 }).unwrap();
        for v in &out.h {
            assert_eq!(v.norm(), 0.0);
        }
    }

    #[test]
    fn cascade_modulus_multiplicativity() {
        let cable = CableSpec::default();
        let freqs = grid(1e7, 5e9, 1e8);
        let plc = h_plc(&generate_plc_paths(3, 2.0, 1.0), &freqs, &cable).unwrap();
        let rf_paths = sample_rician_paths(&RicianConfig::default(), 4).unwrap();
        let rf = h_rf(&rf_paths, &freqs).unwrap();
        let coupling = CouplingConfig { efficiency: 0.7 };
        let out = h_cplc(&plc, &rf, &coupling).unwrap();
        let eps2 = coupling.efficiency * coupling.efficiency;
        for i in 0..freqs.len() {
            let expected = eps2 * plc.h[i].norm() * rf.h[i].norm() * rf.h[i].norm();
            assert_relative_eq!(out.h[i].norm(), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn cascade_grid_mismatch_is_rejected() {
        let a = ChannelResponse::new(vec![1e8, 2e8], vec![Complex64::new(1.0, 0.0); 2]).unwrap();
        let b = ChannelResponse::new(vec![1e8, 3e8], vec![Complex64::new(1.0, 0.0); 2]).unwrap();
        assert!(matches!(
            h_cplc(&a, &b, &CouplingConfig::default()),
            Err(ChannelError::GridMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn generated_paths_follow_the_default_rule() {
        let paths = generate_plc_paths(3, 2.0, 1.0);
        let h3 = 1.0 + 0.5 + 1.0 / 3.0;
        assert_relative_eq!(paths[0].g, 1.0 / h3, max_relative = 1e-12);
        assert_relative_eq!(paths[1].g, 0.5 / h3, max_relative = 1e-12);
        assert_relative_eq!(paths[2].g, (1.0 / 3.0) / h3, max_relative = 1e-12);
        assert_eq!(paths[0].length_m, 2.0);
        assert_eq!(paths[1].length_m, 6.0);
        assert_eq!(paths[2].length_m, 10.0);
        assert_relative_eq!(paths.iter().map(|p| p.g).sum::<f64>(), 1.0, max_relative = 1e-12);

        // A single path keeps the full weight
        let single = generate_plc_paths(1, 2.0, 1.0);
        assert_eq!(single[0].g, 1.0);
        assert_eq!(single[0].length_m, 2.0);
    }

    proptest! {
        #[test]
        fn plc_magnitude_bounded_by_triangle_inequality(
            g1 in 0.05f64..1.0,
            g2 in 0.05f64..1.0,
            l1 in 0.5f64..20.0,
            l2 in 0.5f64..20.0,
            f in 1e7f64..5e9,
        ) {
            let cable = CableSpec::default();
            let paths = [PlcPath { g: g1, length_m: l1 }, PlcPath { g: g2, length_m: l2 }];
            let resp = h_plc(&paths, &[f], &cable).unwrap();
            let params = cable::rlgc_at(&cable, f).unwrap();
            let alpha = cable::propagation_constant(&params).alpha_np_per_m;
            let bound = g1 * (-alpha * l1).exp() + g2 * (-alpha * l2).exp();
            prop_assert!(resp.h[0].norm() <= bound * (1.0 + 1e-12));
        }

        #[test]
        fn plc_equal_delays_reach_the_bound(
            g1 in 0.05f64..1.0,
            g2 in 0.05f64..1.0,
            l in 0.5f64..20.0,
            f in 1e7f64..5e9,
        ) {
            let cable = CableSpec::default();
            let paths = [PlcPath { g: g1, length_m: l }, PlcPath { g: g2, length_m: l }];
            let resp = h_plc(&paths, &[f], &cable).unwrap();
            let params = cable::rlgc_at(&cable, f).unwrap();
            let alpha = cable::propagation_constant(&params).alpha_np_per_m;
            let bound = (g1 + g2) * (-alpha * l).exp();
            prop_assert!((resp.h[0].norm() - bound).abs() <= 1e-9 * bound);
        }

        #[test]
        fn plc_single_path_monotone_in_length(
            l in 0.5f64..20.0,
            extra in 0.1f64..20.0,
            f in 1e7f64..5e9,
        ) {
            let cable = CableSpec::default();
            let near = h_plc(&[PlcPath { g: 1.0, length_m: l }], &[f], &cable).unwrap();
            let far = h_plc(&[PlcPath { g: 1.0, length_m: l + extra }], &[f], &cable).unwrap();
            prop_assert!(far.h[0].norm() < near.h[0].norm());
        }
    }
}
