//! Closed-form long-wire antenna analysis.
//!
//! Implements the normalized standing-wave pattern
//! `F(theta) = sin(pi*n*cos(theta)/2) / sin(theta)` for a wire of electrical
//! length `n = L/lambda`, plus the derived quantities: lobe counting,
//! directivity by spherical quadrature, the end-fire main-lobe angle, the
//! long-wire radiation-resistance approximation and the traveling-wave
//! current.
//!
//! Two caveats are inherited from the adopted closed forms and documented
//! rather than "fixed":
//!
//! * The pattern quotient is 0/0 at theta = 0 and pi. Within
//!   [`ENDPOINT_GUARD_RAD`] of the endpoints the analytic limit (zero) is
//!   substituted; just outside the guard the printed form can grow as
//!   1/sin(theta) for non-even `n`, so quadrature directivities near
//!   end-fire depend on the grid resolution.
//! * `d_max_approx` returns `2*log10(2n)` dBi, which sits well below
//!   classical long-wire directivities; it is kept verbatim and reported
//!   side by side with the quadrature value.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants::{C_LIGHT, MU_0};

/// Half-width of the endpoint guard band around theta = 0 and pi (rad).
pub const ENDPOINT_GUARD_RAD: f64 = 1e-6;

/// Errors from the closed-form antenna analysis.
#[derive(Debug, Error)]
pub enum AntennaError {
    /// Input outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Wire geometry violates the thin-wire assumptions.
    #[error("invalid wire geometry: {0}")]
    InvalidGeometry(String),
    /// Lobe-counting grid cannot resolve adjacent nulls.
    #[error("grid resolution {resolution_rad} rad too coarse for n = {n}; need <= {max_rad} rad")]
    ResolutionTooCoarse {
        resolution_rad: f64,
        max_rad: f64,
        n: f64,
    },
    /// Spherical quadrature produced a non-physical normalization.
    #[error("quadrature failure: directivity normalization check = {check} (expected 1 within {tolerance})")]
    QuadratureFailure { check: f64, tolerance: f64 },
}

/// Physical wire: length, diameter, height above ground, orientation.
///
/// The wire is modeled along +z; with a ground present the ground plane is
/// y = 0 and the wire sits at height `height_m` above it. The default is the
/// reference scenario wire: a 2 m run of the mining cable with the phase
/// conductor (radius 3.6 mm) as the radiating element, resting one cable
/// outer radius (37.45 mm) above the ground plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WireGeometry {
    /// Wire length (m).
    pub length_m: f64,
    /// Conductor diameter (m).
    pub diameter_m: f64,
    /// Height of the wire axis above the ground plane (m).
    pub height_m: f64,
    /// Wire orientation (unit vector, +z along the wire, horizontal).
    #[serde(default = "default_axis")]
    pub axis: [f64; 3],
}

fn default_axis() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}

impl Default for WireGeometry {
    fn default() -> Self {
        Self {
            length_m: 2.0,
            diameter_m: 7.2e-3,
            height_m: 37.45e-3,
            axis: default_axis(),
        }
    }
}

impl WireGeometry {
    /// Builds a validated geometry with the default horizontal +z axis.
    pub fn new(length_m: f64, diameter_m: f64, height_m: f64) -> Result<Self, AntennaError> {
        let g = Self {
            length_m,
            diameter_m,
            height_m,
            axis: default_axis(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Checks the thin-wire invariants: positive dimensions,
    /// `diameter < length/100`, non-negative height, unit axis.
    pub fn validate(&self) -> Result<(), AntennaError> {
        if !(self.length_m > 0.0) {
            return Err(AntennaError::InvalidGeometry(format!(
                "length must be positive, got {}",
                self.length_m
            )));
        }
        if !(self.diameter_m > 0.0) {
            return Err(AntennaError::InvalidGeometry(format!(
                "diameter must be positive, got {}",
                self.diameter_m
            )));
        }
        if self.diameter_m >= self.length_m / 100.0 {
            return Err(AntennaError::InvalidGeometry(format!(
                "thin-wire assumption requires diameter < length/100 (diameter {} m, length {} m)",
                self.diameter_m, self.length_m
            )));
        }
        if self.height_m < 0.0 {
            return Err(AntennaError::InvalidGeometry(format!(
                "height must be non-negative, got {}",
                self.height_m
            )));
        }
        let norm = (self.axis[0] * self.axis[0]
            + self.axis[1] * self.axis[1]
            + self.axis[2] * self.axis[2])
            .sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(AntennaError::InvalidGeometry(format!(
                "axis must be a unit vector, |axis| = {norm}"
            )));
        }
        Ok(())
    }

    /// Electrical length of this wire at `freq_hz`.
    pub fn electrical_length(&self, freq_hz: f64) -> ElectricalLength {
        ElectricalLength::new(self.length_m, freq_hz)
    }
}

/// Wire length expressed in wavelengths, `n = L/lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectricalLength {
    /// Length in wavelengths.
    pub n: f64,
    /// Wavelength (m).
    pub lambda_m: f64,
    /// Frequency (Hz).
    pub freq_hz: f64,
}

impl ElectricalLength {
    /// `n = length * f / c`.
    pub fn new(length_m: f64, freq_hz: f64) -> Self {
        let lambda_m = C_LIGHT / freq_hz;
        Self {
            n: length_m / lambda_m,
            lambda_m,
            freq_hz,
        }
    }
}

/// One sample of the normalized pattern: `value = |F(theta)|` scaled so the
/// grid maximum is exactly 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternSample {
    /// Polar angle from the wire axis (rad), in [0, pi].
    pub theta_rad: f64,
    /// Normalized magnitude in [0, 1].
    pub value: f64,
}

/// Result of a directivity computation over a spherical grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectivityResult {
    /// Peak directivity, linear (>= 1 by construction).
    pub d_max_linear: f64,
    /// Peak directivity in dBi, `10*log10(d_max_linear)`.
    pub d_max_dbi: f64,
    /// Angle of the grid maximum (rad). Symmetric patterns are folded into
    /// (0, pi/2].
    pub theta_max_rad: f64,
    /// Normalized |F| samples along theta.
    pub pattern_grid: Vec<PatternSample>,
    /// Integral of D over the sphere divided by 4*pi; 1 for a sound run.
    pub normalization: f64,
}

/// Input impedance decomposition `Z_in = (R_r + R_ohm) + jX`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedanceResult {
    /// Radiation resistance (ohm).
    pub r_rad_ohm: f64,
    /// Ohmic (conductor-loss) resistance (ohm).
    pub r_ohmic_ohm: f64,
    /// Reactance (ohm).
    pub reactance_ohm: f64,
    /// Complex input impedance (ohm).
    pub z_in: num_complex::Complex64,
}

impl ImpedanceResult {
    /// Assembles the decomposition, keeping `z_in` consistent with the parts.
    pub fn from_parts(r_rad_ohm: f64, r_ohmic_ohm: f64, reactance_ohm: f64) -> Self {
        Self {
            r_rad_ohm,
            r_ohmic_ohm,
            reactance_ohm,
            z_in: num_complex::Complex64::new(r_rad_ohm + r_ohmic_ohm, reactance_ohm),
        }
    }
}

/// Evaluates `|sin(pi*n*cos(theta)/2) / sin(theta)|`.
///
/// Within [`ENDPOINT_GUARD_RAD`] of theta = 0 or pi the analytic limit of the
/// quotient (zero) is substituted, so the returned value is always finite.
/// The value is the raw (pre-normalization) magnitude.
pub fn pattern_f(theta_rad: f64, n: f64) -> Result<f64, AntennaError> {
    if !(n > 0.0) {
        return Err(AntennaError::Domain(format!(
            "electrical length n must be positive, got {n}"
        )));
    }
    if !(0.0..=PI).contains(&theta_rad) {
        return Err(AntennaError::Domain(format!(
            "theta must lie in [0, pi], got {theta_rad}"
        )));
    }
    Ok(pattern_f_unchecked(theta_rad, n))
}

/// `pattern_f` without domain checks, for validated inner loops.
#[inline]
pub(crate) fn pattern_f_unchecked(theta_rad: f64, n: f64) -> f64 {
    if theta_rad < ENDPOINT_GUARD_RAD || PI - theta_rad < ENDPOINT_GUARD_RAD {
        return 0.0;
    }
    ((PI * n * theta_rad.cos() / 2.0).sin() / theta_rad.sin()).abs()
}

/// Counts the radiation lobes over the full circle theta in (0, 2*pi).
///
/// Samples `|F|` on a uniform circular grid (endpoint guard zones skipped),
/// then counts circular local maxima with plateau runs merged. For integer
/// `n` the count is exactly `2n`.
pub fn lobe_count(n: f64, grid_resolution_rad: f64) -> Result<usize, AntennaError> {
    if !(n >= 1.0) {
        return Err(AntennaError::Domain(format!(
            "lobe counting requires n >= 1, got {n}"
        )));
    }
    let max_rad = PI / (64.0 * n);
    if !(grid_resolution_rad > 0.0) || grid_resolution_rad > max_rad {
        return Err(AntennaError::ResolutionTooCoarse {
            resolution_rad: grid_resolution_rad,
            max_rad,
            n,
        });
    }
    let steps = (2.0 * PI / grid_resolution_rad).ceil() as usize;
    let h = 2.0 * PI / steps as f64;
    let mut values = Vec::with_capacity(steps);
    for k in 1..steps {
        let theta = k as f64 * h;
        // Map the circle onto the polar range and skip the guard zones so the
        // substituted endpoint zeros cannot split an end-fire lobe in two.
        let polar = if theta <= PI { theta } else { 2.0 * PI - theta };
        if polar < ENDPOINT_GUARD_RAD || PI - polar < ENDPOINT_GUARD_RAD {
            continue;
        }
        values.push(pattern_f_unchecked(polar, n));
    }
    Ok(count_circular_maxima(&values))
}

/// Counts local maxima on a circular sequence, merging plateau runs.
fn count_circular_maxima(values: &[f64]) -> usize {
    let len = values.len();
    if len < 3 {
        return 0;
    }
    let start = match (0..len).find(|&i| values[i] != values[(i + len - 1) % len]) {
        Some(s) => s,
        None => return 0, // constant ring has no isolated maxima
    };
    let mut count = 0;
    let mut i = start;
    let mut visited = 0;
    while visited < len {
        let val = values[i];
        let mut run = 1;
        while run < len && values[(i + run) % len] == val {
            run += 1;
        }
        let prev = values[(i + len - 1) % len];
        let next = values[(i + run) % len];
        if val > prev && val > next {
            count += 1;
        }
        visited += run;
        i = (i + run) % len;
    }
    count
}

/// Directivity of the wire's closed-form pattern at `freq_hz`.
///
/// Radiation intensity `U ~ |F(theta)|^2` with azimuthal symmetry; total
/// power by midpoint quadrature in theta (the uniform-phi midpoint sum is
/// exactly 2*pi for a symmetric integrand).
pub fn directivity(
    geometry: &WireGeometry,
    freq_hz: f64,
    quad_resolution_rad: f64,
) -> Result<DirectivityResult, AntennaError> {
    geometry.validate()?;
    if !(freq_hz > 0.0) {
        return Err(AntennaError::Domain(format!(
            "frequency must be positive, got {freq_hz}"
        )));
    }
    let n = geometry.electrical_length(freq_hz).n;
    directivity_of_pattern(|theta| pattern_f_unchecked(theta, n).powi(2), quad_resolution_rad)
}

/// Directivity of an arbitrary azimuthally-symmetric intensity `u(theta)`.
///
/// This is the quadrature engine behind [`directivity`]; injecting
/// `u = const` must return D = 1 everywhere, which pins the quadrature
/// accuracy independently of the pattern.
pub fn directivity_of_pattern<U>(
    u_theta: U,
    quad_resolution_rad: f64,
) -> Result<DirectivityResult, AntennaError>
where
    U: Fn(f64) -> f64,
{
    if !(quad_resolution_rad > 0.0 && quad_resolution_rad <= PI / 180.0) {
        return Err(AntennaError::Domain(format!(
            "quadrature resolution must lie in (0, pi/180], got {quad_resolution_rad}"
        )));
    }
    let n_theta = (PI / quad_resolution_rad).ceil() as usize;
    let h = PI / n_theta as f64;

    let mut u = Vec::with_capacity(n_theta);
    let mut thetas = Vec::with_capacity(n_theta);
    let mut p_theta = 0.0;
    for j in 0..n_theta {
        let theta = (j as f64 + 0.5) * h;
        let uj = u_theta(theta);
        p_theta += uj * theta.sin() * h;
        thetas.push(theta);
        u.push(uj);
    }
    let p_rad = 2.0 * PI * p_theta;
    if !(p_rad > 0.0) || !p_rad.is_finite() {
        return Err(AntennaError::QuadratureFailure {
            check: p_rad,
            tolerance: 1e-2,
        });
    }

    let mut d_max = f64::NEG_INFINITY;
    let mut theta_at_max = 0.0;
    let mut d_integral = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        let d = 4.0 * PI * uj / p_rad;
        d_integral += d * thetas[j].sin() * h;
        if d > d_max {
            d_max = d;
            theta_at_max = thetas[j];
        }
    }
    let normalization = 2.0 * PI * d_integral / (4.0 * PI);
    if (normalization - 1.0).abs() > 1e-2 {
        return Err(AntennaError::QuadratureFailure {
            check: normalization,
            tolerance: 1e-2,
        });
    }

    // The pattern is azimuthally symmetric here, so fold the peak into the
    // first quadrant.
    if theta_at_max > PI / 2.0 {
        theta_at_max = PI - theta_at_max;
    }

    let f_max = u.iter().cloned().fold(0.0_f64, f64::max).sqrt();
    let pattern_grid = thetas
        .iter()
        .zip(u.iter())
        .map(|(&theta_rad, &uj)| PatternSample {
            theta_rad,
            value: if f_max > 0.0 { uj.sqrt() / f_max } else { 0.0 },
        })
        .collect();

    Ok(DirectivityResult {
        d_max_linear: d_max,
        d_max_dbi: 10.0 * d_max.log10(),
        theta_max_rad: theta_at_max,
        pattern_grid,
        normalization,
    })
}

/// Long-wire peak-directivity approximation `2*log10(2n)` in dBi.
pub fn d_max_approx(n: f64) -> Result<f64, AntennaError> {
    if !(n > 0.5) {
        return Err(AntennaError::Domain(format!(
            "d_max approximation requires n > 0.5, got {n}"
        )));
    }
    Ok(2.0 * (2.0 * n).log10())
}

/// Main-lobe angle `arccos(sqrt(1 - 0.371/n))` (rad), decreasing in n.
pub fn theta_max(n: f64) -> Result<f64, AntennaError> {
    if !(n >= 0.371) {
        return Err(AntennaError::Domain(format!(
            "main-lobe angle requires n >= 0.371, got {n}"
        )));
    }
    Ok((1.0 - 0.371 / n).sqrt().acos())
}

/// Classical long-wire main-lobe angle `arccos(1 - 0.371/n)` (rad).
///
/// Reported alongside [`theta_max`] for comparison; the two forms differ by
/// the square root and diverge noticeably at small n.
pub fn theta_max_classical(n: f64) -> Result<f64, AntennaError> {
    if !(n >= 0.1855) {
        return Err(AntennaError::Domain(format!(
            "classical main-lobe angle requires n >= 0.1855, got {n}"
        )));
    }
    Ok((1.0 - 0.371 / n).acos())
}

/// Long-wire radiation resistance `120*(ln(2L/d) - 1)` ohms.
pub fn radiation_resistance(geometry: &WireGeometry) -> Result<f64, AntennaError> {
    geometry.validate()?;
    let slenderness = 2.0 * geometry.length_m / geometry.diameter_m;
    if slenderness <= std::f64::consts::E {
        return Err(AntennaError::Domain(format!(
            "radiation resistance requires 2L/d > e, got {slenderness}"
        )));
    }
    Ok(120.0 * (slenderness.ln() - 1.0))
}

/// Skin-effect ohmic resistance of the whole wire (ohm).
///
/// `R = L / (pi * d * delta * sigma)` with skin depth
/// `delta = 1/sqrt(pi*f*mu0*sigma)`, floored at the DC resistance.
pub fn ohmic_resistance(
    geometry: &WireGeometry,
    freq_hz: f64,
    sigma_s_per_m: f64,
) -> Result<f64, AntennaError> {
    geometry.validate()?;
    if !(sigma_s_per_m > 0.0) {
        return Err(AntennaError::Domain(format!(
            "conductivity must be positive, got {sigma_s_per_m}"
        )));
    }
    let radius = geometry.diameter_m / 2.0;
    let r_dc = geometry.length_m / (sigma_s_per_m * PI * radius * radius);
    if freq_hz <= 0.0 {
        return Ok(r_dc);
    }
    let delta = 1.0 / (PI * freq_hz * MU_0 * sigma_s_per_m).sqrt();
    let r_skin = geometry.length_m / (PI * geometry.diameter_m * delta * sigma_s_per_m);
    Ok(r_skin.max(r_dc))
}

/// Closed-form input impedance: radiation plus ohmic resistance.
///
/// The closed-form path has no reactance model; X is reported as zero and
/// the numerical solver supplies the full complex impedance.
pub fn input_impedance(
    geometry: &WireGeometry,
    freq_hz: f64,
    sigma_s_per_m: f64,
) -> Result<ImpedanceResult, AntennaError> {
    let r_rad = radiation_resistance(geometry)?;
    let r_ohm = ohmic_resistance(geometry, freq_hz, sigma_s_per_m)?;
    Ok(ImpedanceResult::from_parts(r_rad, r_ohm, 0.0))
}

/// Schelkunoff average characteristic impedance `60*(ln(4L/d) - 1)` ohms.
///
/// This is the wire's own wave impedance as a single-conductor guide; a
/// termination equal to it makes the wire carry a traveling wave. It is
/// generally much larger than the cable's internal (coaxial-mode) Z0.
pub fn average_characteristic_impedance(geometry: &WireGeometry) -> Result<f64, AntennaError> {
    geometry.validate()?;
    Ok(60.0 * ((4.0 * geometry.length_m / geometry.diameter_m).ln() - 1.0))
}

/// Traveling-wave current `I_m * sin(omega * (t - z/(p*c)))` (A).
///
/// The constant retardation of the observation distance is folded into the
/// caller's time origin; `p` is the relative phase velocity along the wire.
pub fn traveling_wave_current(z_m: f64, t_s: f64, i_peak_a: f64, freq_hz: f64, p: f64) -> f64 {
    assert!(p > 0.0 && p <= 1.0, "relative phase velocity must lie in (0, 1]");
    assert!(z_m >= 0.0, "position along the wire must be non-negative");
    let omega = 2.0 * PI * freq_hz;
    i_peak_a * (omega * (t_s - z_m / (p * C_LIGHT))).sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn pattern_broadside_null_for_n1() {
        // sin(pi*cos(pi/2)/2)/sin(pi/2) = 0 up to the rounding of cos(pi/2)
        assert!(pattern_f(PI / 2.0, 1.0).unwrap() < 1e-15);
    }

    #[test]
    fn pattern_direct_evaluation_example() {
        // Frozen: |sin(pi*2*0.5/2)| / sin(pi/3) = 2/sqrt(3)
        let v = pattern_f(PI / 3.0, 2.0).unwrap();
        assert_relative_eq!(v, 1.154_700_538_379_251_5, max_relative = 1e-12);
    }

    #[test]
    fn pattern_domain_errors() {
        assert!(pattern_f(-0.1, 1.0).is_err());
        assert!(pattern_f(PI + 0.1, 1.0).is_err());
        assert!(pattern_f(1.0, 0.0).is_err());
        assert!(pattern_f(1.0, -2.0).is_err());
    }

    #[test]
    fn pattern_endpoint_limit_is_zero() {
        assert_eq!(pattern_f(0.0, 3.7).unwrap(), 0.0);
        assert_eq!(pattern_f(PI, 3.7).unwrap(), 0.0);
        assert_eq!(pattern_f(5e-7, 1.0).unwrap(), 0.0);
        assert_eq!(pattern_f(PI - 5e-7, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn pattern_nulls_at_predicted_angles() {
        // Nulls where cos(theta) = 2m/n, bracketed by a numerator sign change.
        for &n in &[1.0_f64, 2.0, 5.0, 8.0] {
            let m_max = (n / 2.0).floor() as i64;
            for m in -m_max..=m_max {
                let c = 2.0 * m as f64 / n;
                if c.abs() >= 1.0 {
                    continue;
                }
                let theta = c.acos();
                let v = pattern_f(theta, n).unwrap();
                assert!(v < 1e-9, "null at cos(theta)={c} for n={n} gave {v}");
                let num = |t: f64| (PI * n * t.cos() / 2.0).sin();
                assert!(
                    num(theta - 1e-4) * num(theta + 1e-4) < 0.0,
                    "numerator must change sign across the null"
                );
            }
        }
    }

    #[test]
    fn lobe_count_matches_2n_for_integer_n() {
        for n in 1..=8 {
            let res = PI / (128.0 * n as f64);
            let count = lobe_count(n as f64, res).unwrap();
            assert_eq!(count, 2 * n, "lobe count for n = {n}");
        }
    }

    #[test]
    fn lobe_count_resolution_guard() {
        assert!(matches!(
            lobe_count(4.0, PI / 100.0),
            Err(AntennaError::ResolutionTooCoarse { .. })
        ));
        assert!(lobe_count(0.5, 1e-3).is_err());
    }

    #[test]
    fn directivity_isotropic_hook_gives_unity() {
        let r = directivity_of_pattern(|_| 1.0, PI / 360.0).unwrap();
        assert_relative_eq!(r.d_max_linear, 1.0, max_relative = 1e-3);
        assert_relative_eq!(r.normalization, 1.0, max_relative = 1e-3);
    }

    #[test]
    fn directivity_normalization_identity() {
        let geom = WireGeometry::new(5.0, 7.2e-3, 0.0).unwrap();
        for &f in &[1e9, 2e9] {
            let r = directivity(&geom, f, PI / 360.0).unwrap();
            assert_relative_eq!(r.normalization, 1.0, max_relative = 1e-3);
            assert!(r.d_max_linear >= 1.0);
            assert_relative_eq!(
                r.d_max_dbi,
                10.0 * r.d_max_linear.log10(),
                max_relative = 1e-12
            );
            assert!(r.theta_max_rad > 0.0 && r.theta_max_rad <= PI / 2.0);
        }
    }

    #[test]
    fn directivity_trend_increases_with_frequency() {
        let geom = WireGeometry::new(5.0, 7.2e-3, 0.0).unwrap();
        let mut points = Vec::new();
        for k in 1..=20 {
            let f = k as f64 * 1e9;
            let n = geom.electrical_length(f).n;
            let res = (PI / 360.0).min(PI / (16.0 * n));
            // Resolutions below pi/180 are required by the contract; the
            // adaptive value always satisfies that here.
            let d = directivity(&geom, f, res).unwrap();
            points.push((f, d.d_max_dbi));
        }
        let slope = regression_slope(&points);
        assert!(slope > 0.0, "directivity trend slope = {slope}");
    }

    fn regression_slope(points: &[(f64, f64)]) -> f64 {
        let n = points.len() as f64;
        let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
        let my = points.iter().map(|p| p.1).sum::<f64>() / n;
        let num: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let den: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        num / den
    }

    #[test]
    fn d_max_approx_examples() {
        assert_relative_eq!(d_max_approx(5.0).unwrap(), 2.0, max_relative = 1e-12);
        assert_relative_eq!(d_max_approx(50.0).unwrap(), 4.0, max_relative = 1e-12);
        assert!(d_max_approx(0.4).is_err());
    }

    #[test]
    fn theta_max_examples() {
        // Frozen: acos(sqrt(0.629))
        assert_relative_eq!(
            theta_max(1.0).unwrap(),
            0.654_922_390_338_476_3,
            max_relative = 1e-12
        );
        assert_relative_eq!(theta_max(0.371).unwrap(), PI / 2.0, max_relative = 1e-12);
        assert!(theta_max(1e9).unwrap() < 1e-4);
        assert!(theta_max(0.3).is_err());
    }

    #[test]
    fn radiation_resistance_reference_wire() {
        // 2 m of 7.2 mm conductor: 120*(ln(2*2/0.0072) - 1)
        let geom = WireGeometry::new(2.0, 7.2e-3, 0.0).unwrap();
        assert_relative_eq!(
            radiation_resistance(&geom).unwrap(),
            638.396_233_689_602_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn radiation_resistance_zero_at_slenderness_e() {
        // 2L/d = e exactly is rejected; just above it R_r is ~ 0+
        let d = 2.0 * 2.0 / (std::f64::consts::E * 1.0001);
        // This wire violates the thin-wire check on purpose, so call the
        // formula through a relaxed geometry.
        let geom = WireGeometry {
            length_m: 2.0,
            diameter_m: d,
            height_m: 0.0,
            axis: [0.0, 0.0, 1.0],
        };
        assert!(geom.validate().is_err());
        assert!(radiation_resistance(&geom).is_err());
    }

    #[test]
    fn radiation_resistance_increases_with_length() {
        let g1 = WireGeometry::new(2.0, 7.2e-3, 0.0).unwrap();
        let g2 = WireGeometry::new(5.0, 7.2e-3, 0.0).unwrap();
        assert!(radiation_resistance(&g2).unwrap() > radiation_resistance(&g1).unwrap());
    }

    #[test]
    fn traveling_wave_current_quarter_period_and_wavefront() {
        let f = 1e8;
        let i = traveling_wave_current(0.0, 1.0 / (4.0 * f), 2.0, f, 1.0);
        assert_relative_eq!(i, 2.0, max_relative = 1e-12);

        // On the wavefront z = p*c*t the argument is zero
        let p = 0.9;
        let t = 3e-9;
        let z = p * C_LIGHT * t;
        assert!(traveling_wave_current(z, t, 1.0, f, p).abs() < 1e-9);
    }

    #[test]
    fn traveling_wave_spatial_period_is_p_lambda() {
        let f = 1e9;
        let p = 0.7;
        let lambda = C_LIGHT / f;
        let t = 1.234e-9;
        for k in 0..4 {
            let z = k as f64 * 0.3;
            let a = traveling_wave_current(z, t, 1.0, f, p);
            let b = traveling_wave_current(z + p * lambda, t, 1.0, f, p);
            assert_relative_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn input_impedance_parts_are_consistent() {
        let geom = WireGeometry::default();
        let z = input_impedance(&geom, 1e9, 5.8e7).unwrap();
        assert_relative_eq!(
            z.z_in.re,
            z.r_rad_ohm + z.r_ohmic_ohm,
            max_relative = 1e-12
        );
        assert_eq!(z.z_in.im, z.reactance_ohm);
        assert!(z.r_ohmic_ohm > 0.0 && z.r_ohmic_ohm < z.r_rad_ohm);
    }

    #[test]
    fn geometry_validation() {
        assert!(WireGeometry::new(2.0, 0.03, 0.0).is_err()); // too thick
        assert!(WireGeometry::new(0.0, 0.001, 0.0).is_err());
        assert!(WireGeometry::new(2.0, 0.001, -0.1).is_err());
        assert!(WireGeometry::new(2.0, 0.0072, 0.03745).is_ok());
    }

    proptest! {
        #[test]
        fn pattern_magnitude_symmetric_about_broadside(
            theta in 0.0..PI,
            n in 0.01f64..100.0,
        ) {
            let a = pattern_f(theta, n).unwrap();
            let b = pattern_f(PI - theta, n).unwrap();
            // cos flips sign, the numerator is odd, magnitudes match
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
        }

        #[test]
        fn pattern_always_finite(
            theta in 0.0..=PI,
            n in 1e-6f64..1e4,
        ) {
            let v = pattern_f(theta, n).unwrap();
            prop_assert!(v.is_finite());
            prop_assert!(v >= 0.0);
        }

        #[test]
        fn theta_max_decreasing_d_max_increasing(
            n1 in 0.372f64..500.0,
            delta in 0.001f64..500.0,
        ) {
            let n2 = n1 + delta;
            prop_assert!(theta_max(n2).unwrap() < theta_max(n1).unwrap());
            prop_assert!(d_max_approx(n2).unwrap() > d_max_approx(n1).unwrap());
        }
    }
}
