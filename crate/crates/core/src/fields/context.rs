use crate::error::{Error, Result};
use crate::sun_algebra::GeneratorSet;
use crate::Vec3;

/// Wave vector, frequency, light speed, coupling and generator set shared by
/// every field of one plane wave.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveContext {
    k: Vec3,
    omega: f64,
    c: f64,
    g: f64,
    generators: GeneratorSet,
}

pub const DEFAULT_COUPLING: f64 = 0.1;

impl WaveContext {
    /// ω is set from the vacuum dispersion ω = c|k|.
    pub fn new(k: Vec3, c: f64, g: f64, generators: GeneratorSet) -> Result<Self> {
        Self::with_omega(k, c * k.norm(), c, g, generators)
    }

    /// Explicit ω; must satisfy |ω − c|k|| ≤ 1e-12·ω.
    pub fn with_omega(k: Vec3, omega: f64, c: f64, g: f64, generators: GeneratorSet) -> Result<Self> {
        let kn = k.norm();
        if !(kn > 0.0 && kn.is_finite()) {
            return Err(Error::InvalidParameter(format!("|k| must be positive and finite, got {kn}")));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidParameter(format!("c must be positive, got {c}")));
        }
        if !g.is_finite() {
            return Err(Error::InvalidParameter("g must be finite".into()));
        }
        if !(omega > 0.0) || (omega - c * kn).abs() > 1e-12 * omega {
            return Err(Error::InvalidParameter(format!("omega {omega} violates omega = c|k| = {}", c * kn)));
        }
        Ok(Self { k, omega, c, g, generators })
    }

    /// Unit defaults: c = 1, g = 0.1.
    pub fn unit(k: Vec3, generators: GeneratorSet) -> Result<Self> {
        Self::new(k, 1.0, DEFAULT_COUPLING, generators)
    }

    pub fn k(&self) -> &Vec3 {
        &self.k
    }

    pub fn k_mag(&self) -> f64 {
        self.k.norm()
    }

    pub fn k_hat(&self) -> Vec3 {
        self.k / self.k.norm()
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.dim()
    }

    pub fn with_coupling(&self, g: f64) -> Self {
        Self { g, ..self.clone() }
    }
}
