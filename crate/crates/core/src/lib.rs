//! Numerical verification of operator-valued Yang-Mills plane waves.
//!
//! Plane-wave fields are finite harmonic sums Σ_m a_m e^{im(k·r − ωt)} with
//! matrix-valued amplitudes, so every field equation reduces to exact
//! per-harmonic algebra. On top of that the crate checks the solvability
//! conditions of the τ/η solution family, its Lorentz and constant-gauge
//! covariance, its Poynting flux, and the Dirac Zitterbewegung closed forms.
//!
//! ```
//! use amwave::{fields::build_potentials, residuals, sampling};
//!
//! let fam = sampling::example_one(0.1);
//! let report = residuals::wca_conditions(&fam, 1e-12);
//! assert!(report.overall_pass);
//! let (a, _phi) = build_potentials(&fam);
//! assert_eq!(a.orders(), vec![1]);
//! ```

pub mod cli;
pub mod error;
pub mod fields;
pub mod poynting;
pub mod relativity;
pub mod residuals;
pub mod sampling;
pub mod sun_algebra;
pub mod zitter;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Real 3-vector.
pub type Vec3 = nalgebra::Vector3<f64>;
