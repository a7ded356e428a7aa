//! Contactless power-line communication (CPLC) channel simulator.
//!
//! Models a power cable as a long-wire antenna and computes the end-to-end
//! cascaded channel RF -> power line -> RF: closed-form radiation pattern,
//! directivity and impedance of the wire; a thin-wire Method-of-Moments
//! solver for the terminated cable over lossy ground; the cable's RLGC line
//! parameters, propagation constant and characteristic impedance; multipath
//! PLC and Rician RF transfer functions and their cascade; and a sweep
//! engine that reproduces the standard desk-scale experiments.
//!
//! # Modules
//!
//! - [`antenna`] — closed-form long-wire analysis: `F(theta)`, lobe counts,
//!   directivity by spherical quadrature, main-lobe angle, radiation
//!   resistance, traveling-wave current.
//! - [`mom`] — thin-wire MoM: impedance matrix, current solve, far fields,
//!   directivity, standing-wave diagnostics, image-theory ground.
//! - [`cable`] — RLGC parameters, gamma = alpha + j*beta, Z0, attenuation.
//! - [`channels`] — H_PLC, H_RF (Rician), and the cascaded H_CPLC.
//! - [`sweep`] — coupling/length/path-count sweeps, directivity and pattern
//!   tables, deterministic fading averaging.
//! - [`config`] — TOML scenario files with reference defaults.
//! - [`output`] — CSV serialization.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p cplc --example radiation_pattern
//! cargo run -p cplc --example directivity_vs_frequency
//! cargo run -p cplc --example input_impedance
//! cargo run -p cplc --example mom_half_wave_dipole
//! cargo run -p cplc --example traveling_wave_termination
//! cargo run -p cplc --example plc_multipath
//! cargo run -p cplc --example rician_rf
//! cargo run -p cplc --example cplc_cascade
//! ```
//!
//! The `cplc-sim` binary in the sibling crate drives the same machinery
//! from scenario files and writes CSV tables; see the repository README.

pub mod antenna;
pub mod cable;
pub mod channels;
pub mod config;
pub mod constants;
pub mod mom;
pub mod output;
pub mod sweep;
