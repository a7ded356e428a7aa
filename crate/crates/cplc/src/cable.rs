//! Frequency-dependent transmission-line model of the three-phase mining cable.
//!
//! The per-unit-length R/L/G/C parameters come from a coaxial-pair
//! approximation between a phase conductor (radius `x`) and the central
//! copper screen (radius `c`):
//!
//! ```text
//! C' = 2*pi*eps0*eps_r / ln(c/x)
//! L' = mu0/(2*pi) * ln(c/x)
//! R' = (1/(2*pi*x) + 1/(2*pi*c)) * sqrt(pi*f*mu0*mu_c/sigma_c)   (skin effect,
//!      floored at the DC value 1/(sigma_c*pi*x^2))
//! G' = 2*pi*f*C'*tan_delta + 2*pi*sigma_ins/ln(c/x)
//! ```
//!
//! From these the propagation constant gamma = sqrt((R+jwL)(G+jwC)) and the
//! characteristic impedance Z0 = sqrt((R+jwL)/(G+jwC)) follow, both on the
//! principal branch so that attenuation is non-negative and Re(Z0) > 0.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants::{EPS_0, MU_0};

/// Errors from the cable model.
#[derive(Debug, Error)]
pub enum CableError {
    /// Screen radius must exceed the conductor radius for the coaxial model.
    #[error("invalid cable geometry: screen radius c = {c_m} m must exceed conductor radius x = {x_m} m")]
    InvalidGeometry { c_m: f64, x_m: f64 },
    /// Z0 is undefined at DC when the shunt admittance vanishes.
    #[error("characteristic impedance degenerate: G + j*omega*C = 0 (f = {freq_hz} Hz)")]
    DegenerateAtDc { freq_hz: f64 },
}

/// Physical description of the three-phase mining cable.
///
/// Geometric fields are stored in metres; the defaults correspond to the
/// reference cable used throughout (outer sheath radius `a` down to the
/// phase-conductor radius `x`, insulation permittivity 2.25, copper screen).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CableSpec {
    /// Outer sheath radius (m).
    pub a_m: f64,
    /// Armour radius (m).
    pub b_m: f64,
    /// Copper screen radius (m).
    pub c_m: f64,
    /// Phase conductor radius (m).
    pub x_m: f64,
    /// Phase conductor pitch radius (m).
    pub z_m: f64,
    /// Relative permittivity of the EPR insulation.
    pub eps_r_ins: f64,
    /// Relative permeability of the conductor.
    pub mu_c: f64,
    /// Conductor conductivity (S/m).
    pub sigma_c_s_per_m: f64,
    /// Insulation conductivity (S/m).
    pub sigma_ins_s_per_m: f64,
    /// Relative permeability of the armour.
    pub mu_a: f64,
    /// Insulation loss tangent.
    pub tan_delta: f64,
}

impl Default for CableSpec {
    fn default() -> Self {
        Self {
            a_m: 37.45e-3,
            b_m: 29.65e-3,
            c_m: 13.51e-3,
            x_m: 3.6e-3,
            z_m: 33.85e-3,
            eps_r_ins: 2.25,
            mu_c: 0.999994,
            sigma_c_s_per_m: 5.8e7,
            sigma_ins_s_per_m: 1e-13,
            mu_a: 1.0,
            tan_delta: 4e-4,
        }
    }
}

impl CableSpec {
    /// Checks the geometric ordering `a > b > c > x > 0`.
    pub fn validate(&self) -> Result<(), CableError> {
        if !(self.c_m > self.x_m && self.x_m > 0.0) {
            return Err(CableError::InvalidGeometry {
                c_m: self.c_m,
                x_m: self.x_m,
            });
        }
        Ok(())
    }

    /// Attenuation factor e^(-alpha(f)*l) for a run of `length_m` metres.
    pub fn attenuation(&self, freq_hz: f64, length_m: f64) -> Result<f64, CableError> {
        attenuation(|f| rlgc_at(self, f), freq_hz, length_m)
    }
}

/// Per-unit-length line parameters at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RlgcParameters {
    /// Series resistance (ohm/m).
    pub r_ohm_per_m: f64,
    /// Series inductance (H/m).
    pub l_h_per_m: f64,
    /// Shunt conductance (S/m).
    pub g_s_per_m: f64,
    /// Shunt capacitance (F/m).
    pub c_f_per_m: f64,
    /// Frequency the parameters were evaluated at (Hz).
    pub freq_hz: f64,
}

/// Complex propagation constant split into attenuation and phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationConstant {
    /// Attenuation constant (Np/m), always >= 0.
    pub alpha_np_per_m: f64,
    /// Phase constant (rad/m).
    pub beta_rad_per_m: f64,
    /// Frequency (Hz).
    pub freq_hz: f64,
}

/// Evaluates the per-unit-length R/L/G/C of the cable at `freq_hz`.
///
/// R uses the skin-effect surface resistance of conductor and screen with a
/// DC floor; G combines dielectric loss (`tan_delta`) with the insulation
/// leakage conductance. C and L are frequency independent in this model.
pub fn rlgc_at(spec: &CableSpec, freq_hz: f64) -> Result<RlgcParameters, CableError> {
    spec.validate()?;
    let ln_ratio = (spec.c_m / spec.x_m).ln();

    let c = 2.0 * PI * EPS_0 * spec.eps_r_ins / ln_ratio;
    let l = MU_0 / (2.0 * PI) * ln_ratio;

    let r_dc = 1.0 / (spec.sigma_c_s_per_m * PI * spec.x_m * spec.x_m);
    let surface = (PI * freq_hz * MU_0 * spec.mu_c / spec.sigma_c_s_per_m).sqrt();
    let r_skin = (1.0 / (2.0 * PI * spec.x_m) + 1.0 / (2.0 * PI * spec.c_m)) * surface;
    let r = r_skin.max(r_dc);

    let g = 2.0 * PI * freq_hz * c * spec.tan_delta + 2.0 * PI * spec.sigma_ins_s_per_m / ln_ratio;

    Ok(RlgcParameters {
        r_ohm_per_m: r,
        l_h_per_m: l,
        g_s_per_m: g,
        c_f_per_m: c,
        freq_hz,
    })
}

/// gamma = sqrt((R + jwL)(G + jwC)) on the branch with alpha >= 0.
pub fn propagation_constant(params: &RlgcParameters) -> PropagationConstant {
    let omega = 2.0 * PI * params.freq_hz;
    let series = Complex64::new(params.r_ohm_per_m, omega * params.l_h_per_m);
    let shunt = Complex64::new(params.g_s_per_m, omega * params.c_f_per_m);
    let mut gamma = (series * shunt).sqrt();
    if gamma.re < 0.0 {
        gamma = -gamma;
    }
    PropagationConstant {
        alpha_np_per_m: gamma.re,
        beta_rad_per_m: gamma.im,
        freq_hz: params.freq_hz,
    }
}

/// Z0 = sqrt((R + jwL)/(G + jwC)), principal root with Re(Z0) > 0.
pub fn characteristic_impedance(params: &RlgcParameters) -> Result<Complex64, CableError> {
    let omega = 2.0 * PI * params.freq_hz;
    let series = Complex64::new(params.r_ohm_per_m, omega * params.l_h_per_m);
    let shunt = Complex64::new(params.g_s_per_m, omega * params.c_f_per_m);
    if shunt.norm() == 0.0 {
        return Err(CableError::DegenerateAtDc {
            freq_hz: params.freq_hz,
        });
    }
    let mut z0 = (series / shunt).sqrt();
    if z0.re < 0.0 {
        z0 = -z0;
    }
    Ok(z0)
}

/// Linear attenuation factor e^(-alpha(f)*l) in (0, 1].
///
/// `params_fn` supplies the line parameters for a given frequency, so
/// alternative RLGC models can be plugged in.
pub fn attenuation<F>(params_fn: F, freq_hz: f64, length_m: f64) -> Result<f64, CableError>
where
    F: Fn(f64) -> Result<RlgcParameters, CableError>,
{
    assert!(freq_hz >= 0.0, "frequency must be non-negative");
    assert!(length_m >= 0.0, "length must be non-negative");
    let gamma = propagation_constant(&params_fn(freq_hz)?);
    Ok((-gamma.alpha_np_per_m * length_m).exp())
}
