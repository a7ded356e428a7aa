//! Physical constants.
//!
//! Every module pulls its constants from this table so that derived
//! quantities (wavelengths, delays, free-space impedance) stay mutually
//! consistent across the whole simulator.

/// Speed of light in vacuum (m/s).
pub const C_LIGHT: f64 = 2.9979e8;

/// Free-space permeability (H/m).
pub const MU_0: f64 = 4.0 * std::f64::consts::PI * 1e-7;

/// Free-space permittivity (F/m), derived from `MU_0` and `C_LIGHT`.
pub const EPS_0: f64 = 1.0 / (MU_0 * C_LIGHT * C_LIGHT);

/// Free-space wave impedance (ohms), derived as `MU_0 * C_LIGHT`.
pub const ETA_0: f64 = MU_0 * C_LIGHT;

/// Wavelength (m) at the given frequency (Hz).
pub fn wavelength_m(freq_hz: f64) -> f64 {
    C_LIGHT / freq_hz
}

/// Free-space wave number k = 2*pi/lambda (rad/m).
pub fn wave_number(freq_hz: f64) -> f64 {
    2.0 * std::f64::consts::PI * freq_hz / C_LIGHT
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants_are_consistent() {
        assert!((EPS_0 - 8.854_333_010_474_563e-12).abs() < 1e-24);
        assert!((ETA_0 - 376.727_224_647_873_65).abs() < 1e-10);
        // c = 1/sqrt(mu0 eps0) closes the loop
        assert!(((MU_0 * EPS_0).sqrt().recip() - C_LIGHT).abs() / C_LIGHT < 1e-15);
    }

    #[test]
    fn wavelength_and_wave_number() {
        let f = 1e9;
        let lambda = wavelength_m(f);
        assert!((lambda - 0.29979).abs() < 1e-12);
        assert!((wave_number(f) * lambda - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}
