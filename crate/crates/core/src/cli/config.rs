use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::relativity::BoostAxis;
use crate::sun_algebra::GeneratorKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    #[default]
    Wca,
    Zca,
    Exact,
    Full,
    Boost,
    Gauge,
    Zitter,
    Poynting,
    Su3,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Wca,
        Suite::Zca,
        Suite::Exact,
        Suite::Full,
        Suite::Boost,
        Suite::Gauge,
        Suite::Zitter,
        Suite::Poynting,
        Suite::Su3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Wca => "wca",
            Suite::Zca => "zca",
            Suite::Exact => "exact",
            Suite::Full => "full",
            Suite::Boost => "boost",
            Suite::Gauge => "gauge",
            Suite::Zitter => "zitter",
            Suite::Poynting => "poynting",
            Suite::Su3 => "su3",
        }
    }

    /// Tolerance used when the config leaves it unset.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Suite::Boost | Suite::Poynting => 1e-10,
            _ => 1e-12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite '{s}' (expected one of wca, zca, exact, full, boost, gauge, zitter, poynting, su3)"))
    }
}

/// How trial families are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FamilyMode {
    /// Coplanar random draw (valid family).
    #[default]
    Random,
    /// Unconstrained random R, generically not coplanar.
    Candidate,
    /// τ = R₀𝟙 + R(n̂·G).
    Abelian,
    /// k = ẑ, R₁ = x̂, R₃ = ẑ on spin-½.
    ExampleOne,
    /// `family.r` as given.
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct FamilyConfig {
    pub mode: FamilyMode,
    /// Wave vector; random unit direction when absent.
    pub k: Option<[f64; 3]>,
    /// R₀…R_n for `explicit`.
    pub r: Option<Vec<[f64; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BoostConfig {
    /// Velocities in units of c.
    pub velocities: Vec<f64>,
    pub axis: BoostAxis,
}

impl Default for BoostConfig {
    fn default() -> Self {
        Self { velocities: vec![0.3, -0.3, 0.9, -0.9], axis: BoostAxis::Z }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GaugeConfig {
    /// U = exp(iθ G₃).
    pub theta: f64,
}

impl Default for GaugeConfig {
    fn default() -> Self {
        Self { theta: 0.7 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ZitterConfig {
    pub theta: f64,
    /// 1-based eigenstate pair mixed as cosθΨ_i + sinθΨ_j.
    pub pair: [usize; 2],
    /// Natural units (m = c = ħ = 1).
    pub momentum: [f64; 3],
    /// Defaults to one period πħ/E_p.
    pub t_max: Option<f64>,
    pub steps: usize,
}

impl Default for ZitterConfig {
    fn default() -> Self {
        Self { theta: std::f64::consts::FRAC_PI_4, pair: [1, 4], momentum: [0.0, 0.0, 1.0], t_max: None, steps: 1000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PoyntingConfig {
    pub samples: usize,
}

impl Default for PoyntingConfig {
    fn default() -> Self {
        Self { samples: crate::poynting::DEFAULT_SAMPLES }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub report: Option<PathBuf>,
    pub timeseries: Option<PathBuf>,
}

/// Everything a run needs. Identical configs give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    /// Suite default when absent.
    pub tolerance: Option<f64>,
    pub generators: Vec<GeneratorKind>,
    pub coupling: f64,
    pub hbar: f64,
    pub family: FamilyConfig,
    pub boost: BoostConfig,
    pub gauge: GaugeConfig,
    pub zitter: ZitterConfig,
    pub poynting: PoyntingConfig,
    /// Destinations only; not echoed into reports.
    #[serde(skip_serializing)]
    pub output: OutputConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suite: Suite::Wca,
            trials: 100,
            seed: 42,
            tolerance: None,
            generators: vec![GeneratorKind::Su2SpinHalf],
            coupling: crate::fields::DEFAULT_COUPLING,
            hbar: 1.0,
            family: FamilyConfig::default(),
            boost: BoostConfig::default(),
            gauge: GaugeConfig::default(),
            zitter: ZitterConfig::default(),
            poynting: PoyntingConfig::default(),
            output: OutputConfig::default(),
        }
    }
}

impl RunConfig {
    /// Parse TOML; diagnostics carry line and field information.
    pub fn from_toml_str(s: &str) -> Result<Self, String> {
        let cfg: RunConfig = toml::from_str(s).map_err(|e| e.to_string())?;
        Ok(cfg)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or_else(|| self.suite.default_tolerance())
    }

    /// Field-level checks beyond what parsing enforces.
    pub fn validate(&self) -> Result<(), String> {
        if self.trials == 0 {
            return Err("trials: must be at least 1".into());
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(format!("tolerance: must be positive, got {t}"));
            }
        }
        if self.generators.is_empty() {
            return Err("generators: list is empty".into());
        }
        if self.generators.contains(&GeneratorKind::Custom) {
            return Err("generators: 'custom' sets are library-only".into());
        }
        if !self.coupling.is_finite() {
            return Err("coupling: must be finite".into());
        }
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(format!("hbar: must be positive, got {}", self.hbar));
        }
        if let Some(k) = self.family.k {
            if !(k.iter().all(|x| x.is_finite()) && k.iter().any(|x| *x != 0.0)) {
                return Err("family.k: must be finite and nonzero".into());
            }
        }
        if self.family.mode == FamilyMode::Explicit && self.family.r.is_none() {
            return Err("family.r: required when family.mode = \"explicit\"".into());
        }
        if self.family.mode == FamilyMode::ExampleOne && self.generators != [GeneratorKind::Su2SpinHalf] {
            return Err("family.mode: example_one needs generators = [\"su2_spin_half\"]".into());
        }
        if let Some(v) = self.boost.velocities.iter().find(|v| !(v.abs() < 1.0)) {
            return Err(format!("boost.velocities: |v| must be below c, got {v}"));
        }
        let z = &self.zitter;
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&z.theta) {
            return Err(format!("zitter.theta: must lie in [0, π/2], got {}", z.theta));
        }
        let [i, j] = z.pair;
        if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i == j {
            return Err(format!("zitter.pair: need two distinct indices in 1..=4, got [{i}, {j}]"));
        }
        if !z.momentum.iter().all(|x| x.is_finite()) {
            return Err("zitter.momentum: must be finite".into());
        }
        let [px, py, pz] = z.momentum;
        let pn = (px * px + py * py + pz * pz).sqrt();
        if pn == 0.0 || pn + pz <= crate::zitter::POLAR_EPS * pn {
            return Err(format!("zitter.momentum: eigenstate basis is singular for p = 0 and on the -z ray, got {:?}", z.momentum));
        }
        if z.steps == 0 {
            return Err("zitter.steps: must be at least 1".into());
        }
        if let Some(t) = z.t_max {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(format!("zitter.t_max: must be non-negative, got {t}"));
            }
        }
        if self.poynting.samples == 0 {
            return Err("poynting.samples: must be at least 1".into());
        }
        Ok(())
    }
}
