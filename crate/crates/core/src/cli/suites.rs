use std::sync::Arc;

use serde::Serialize;

use super::config::{FamilyMode, RunConfig, Suite};
use crate::fields::{build_fields, build_potentials, SolutionFamily, WaveContext};
use crate::poynting::{amw_flux, em_flux, flux_quadrature, flux_series};
use crate::relativity::{add_velocities, boosted_residuals, gauge_conjugate, gauge_conjugate_tensor, max_abs_diff, tensor_harmonics, BoostMatrix};
use crate::residuals::{
    exact_conditions, full_ym_fields, full_ym_residuals, maxwell_type_residuals, potential_conditions, potential_scale, property_battery,
    w_terms, wca_conditions, wca_conditions_for, zca_conditions, ResidualReport,
};
use crate::sampling::{example_one, random_abelian_family, random_candidate, random_coplanar_family, random_unit_vector, rng_for};
use crate::sun_algebra::{make_generators, structure_constants, GeneratorKind, OperatorVector3};
use crate::zitter::{
    amplitude_frequency, eigenstates, position_closed_form, spin_closed_form, zitter_position_expectation, zitter_spin_expectation,
    DiracContext, SiConstants, SuperpositionSpec,
};
use crate::Vec3;

/// Header plus rows; `None` cells are written empty.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub generators: GeneratorKind,
    pub k: [f64; 3],
    pub coupling: f64,
    pub r: Vec<[f64; 3]>,
    pub coplanar: bool,
    pub reports: Vec<ResidualReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conventions {
    pub rng: &'static str,
    pub residual_norm: &'static str,
    pub bracket: &'static str,
    pub gauge: &'static str,
    pub units: &'static str,
}

const CONVENTIONS: Conventions = Conventions {
    rng: "ChaCha8Rng::seed_from_u64(seed) with set_stream(job index); jobs ordered by generator set, then trial",
    residual_norm: "max over harmonics and components of the Frobenius norm, divided by max(1, largest potential amplitude norm)",
    bracket: "spin sets: [S_i,S_j] = i hbar eps_ijk S_k, eta scaled by hbar; Gell-Mann: [G_a,G_b] = 2i f_abc G_c, eta = sum (R_l x R_m) f_lmn G_n",
    gauge: "constant unitary U only; position-dependent transformations are not checked",
    units: "c = 1, |k| = 1 unless configured; Dirac model in m = c = hbar = 1, SI only in the si block",
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SiSummary {
    pub planck: f64,
    pub light_speed: f64,
    pub electron_mass: f64,
    pub compton_wavelength: f64,
    pub max_amplitude: f64,
    pub min_frequency: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZitterSummary {
    pub pair: [usize; 2],
    pub theta: f64,
    pub momentum: [f64; 3],
    pub energy: f64,
    pub amplitude: f64,
    pub frequency: f64,
    pub period: f64,
    pub si: SiSummary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureConstantEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub f: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub overall_pass: bool,
    pub entries: usize,
    pub failing: Vec<String>,
}

/// Full run output. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub suite: Suite,
    pub seed: u64,
    pub tolerance: f64,
    pub config: RunConfig,
    pub conventions: Conventions,
    pub trials: Vec<TrialReport>,
    pub checks: Vec<ResidualReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zitter: Option<ZitterSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<Vec<StructureConstantEntry>>,
    pub summary: Summary,
}

pub struct SuiteOutcome {
    pub report: RunReport,
    pub series: Option<TimeSeries>,
}

fn arr(v: &Vec3) -> [f64; 3] {
    [v.x, v.y, v.z]
}

fn build_family(cfg: &RunConfig, kind: GeneratorKind, stream: u64) -> Result<SolutionFamily, String> {
    let mut rng = rng_for(cfg.seed, stream);
    if cfg.family.mode == FamilyMode::ExampleOne {
        let fam = example_one(cfg.coupling);
        let gens = make_generators(kind, cfg.hbar).map_err(|e| e.to_string())?;
        let ctx = WaveContext::new(*fam.ctx().k(), 1.0, cfg.coupling, gens).map_err(|e| e.to_string())?;
        return SolutionFamily::new(ctx, fam.r().to_vec()).map_err(|e| e.to_string());
    }
    let k = match cfg.family.k {
        Some(k) => Vec3::new(k[0], k[1], k[2]),
        None => random_unit_vector(&mut rng),
    };
    let gens = make_generators(kind, cfg.hbar).map_err(|e| e.to_string())?;
    let ctx = Arc::new(WaveContext::new(k, 1.0, cfg.coupling, gens).map_err(|e| e.to_string())?);
    Ok(match cfg.family.mode {
        FamilyMode::Random => random_coplanar_family(ctx, &mut rng),
        FamilyMode::Candidate => random_candidate(ctx, &mut rng),
        FamilyMode::Abelian => random_abelian_family(ctx, &mut rng),
        FamilyMode::Explicit => {
            let r = cfg.family.r.as_ref().expect("validated").iter().map(|v| Vec3::new(v[0], v[1], v[2])).collect();
            SolutionFamily::candidate(ctx, r).map_err(|e| format!("family.r: {e}"))?
        }
        FamilyMode::ExampleOne => unreachable!(),
    })
}

fn zca_battery(fam: &SolutionFamily, tol: f64) -> Vec<ResidualReport> {
    let (a, phi) = build_potentials(fam);
    let (b, e) = build_fields(fam);
    vec![
        zca_conditions(fam, tol),
        maxwell_type_residuals(&a, &phi, tol),
        potential_conditions(&a, &phi, tol),
        w_terms(&a, &phi, tol),
        property_battery(&b, &e, tol),
    ]
}

fn gauge_reports(fam: &SolutionFamily, theta: f64, tol: f64) -> Result<Vec<ResidualReport>, String> {
    let gens = fam.ctx().generators().generators();
    let u = gens.get(2).unwrap_or(&gens[0]).exp_i_hermitian(theta);
    let (a, phi) = build_potentials(fam);
    let a2 = gauge_conjugate(&a, &u).map_err(|e| e.to_string())?;
    let phi2 = gauge_conjugate(&phi, &u).map_err(|e| e.to_string())?;
    let mut inv = ResidualReport::new("gauge_invariance", potential_scale(&a, &phi));
    for (pre, post) in full_ym_fields(&a, &phi).iter().zip(full_ym_fields(&a2, &phi2)) {
        let d = (pre.field.norm() - post.field.norm()).abs();
        inv.push(&format!("{}_norm", pre.name), "|‖R‖ − ‖U R U†‖|", d, tol, None);
    }
    let (b, e) = build_fields(fam);
    let worst = tensor_harmonics(&b, &e)
        .iter()
        .map(|(_, f)| gauge_conjugate_tensor(f, &u).map(|g| g.antisymmetry_defect()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?
        .into_iter()
        .fold(0.0, f64::max);
    inv.push("tensor_antisymmetry", "UFU† + (UFU†)ᵀ", worst, tol, None);
    let mut wca = wca_conditions_for(&a2, &phi2, tol);
    wca.label = "wca_conjugated".into();
    Ok(vec![inv, wca])
}

fn boost_reports(fam: &SolutionFamily, cfg: &RunConfig, tol: f64) -> Result<Vec<ResidualReport>, String> {
    let c = fam.ctx().c();
    let mut out = Vec::new();
    for &v in &cfg.boost.velocities {
        let boost = BoostMatrix::new(v * c, c, cfg.boost.axis).map_err(|e| e.to_string())?;
        let mut rep = boosted_residuals(fam, &boost, tol).map_err(|e| e.to_string())?;
        let twice = BoostMatrix::new(add_velocities(v * c, v * c, c), c, cfg.boost.axis).map_err(|e| e.to_string())?;
        rep.push_unscaled("velocity_addition", "C(v)C(v) − C(v ⊕ v)", max_abs_diff(&boost.compose(&boost), twice.entries()), tol);
        out.push(rep);
    }
    Ok(out)
}

fn poynting_reports(fam: &SolutionFamily, samples: usize, tol: f64) -> Result<Vec<ResidualReport>, String> {
    let closed = amw_flux(fam);
    let (b, e) = build_fields(fam);
    let quad = flux_quadrature(&b, &e, &Vec3::zeros(), samples).map_err(|e| e.to_string())?;
    let cv = closed.vector();
    let mut rep = ResidualReport::new("poynting", cv.norm());
    rep.push("quadrature_vs_closed", "⟨(c/4π) Re E × Re B⟩ − S_AMW", (&quad.total - &cv).norm(), tol, None);
    rep.push("mixed_block", "⟨(c/4π)(Re E₁×Re B₂ + Re E₂×Re B₁)⟩", quad.mixed.norm(), tol, None);
    let kh = fam.ctx().k_hat();
    let along = OperatorVector3::from_real(&kh, &OperatorVector3::real_dot(&kh, &quad.total));
    rep.push("transverse_part", "S − k̂(k̂·S)", (&quad.total - &along).norm(), tol, None);
    let herm = closed.magnitude_operator.hermitian_part();
    let non_herm = (&closed.magnitude_operator - &herm).frobenius_norm();
    let min_eig = nalgebra::SymmetricEigen::new(herm.to_nalgebra()).eigenvalues.min();
    rep.push("hermitian_psd", "‖S − S†‖ + max(0, −λ_min)", non_herm + (-min_eig).max(0.0), tol, None);

    // Abelian reduction on the same wave and R₀, with g = 0.
    let ctx0 = Arc::new(fam.ctx().with_coupling(0.0));
    let mut r = vec![Vec3::zeros(); fam.r().len()];
    r[0] = fam.r()[0];
    let abelian = SolutionFamily::new(ctx0.clone(), r).map_err(|e| e.to_string())?;
    let a01 = -kh.cross(&kh.cross(&fam.r()[0]));
    let em = em_flux(&a01, &ctx0).map_err(|e| e.to_string())?;
    let ab = amw_flux(&abelian);
    rep.push("abelian_vs_classical", "S_AMW(g=0, τ=R₀𝟙) − (c/8π)k²|A₀₁|²", (&ab.magnitude_operator - &em.magnitude_operator).frobenius_norm(), tol, None);
    Ok(vec![rep])
}

fn family_reports(cfg: &RunConfig, fam: &SolutionFamily, tol: f64) -> Result<Vec<ResidualReport>, String> {
    Ok(match cfg.suite {
        Suite::Wca => vec![wca_conditions(fam, tol)],
        Suite::Zca | Suite::Su3 => zca_battery(fam, tol),
        Suite::Exact => vec![exact_conditions(fam, tol)],
        Suite::Full => {
            let (a, phi) = build_potentials(fam);
            vec![full_ym_residuals(&a, &phi, tol)]
        }
        Suite::Boost => boost_reports(fam, cfg, tol)?,
        Suite::Gauge => gauge_reports(fam, cfg.gauge.theta, tol)?,
        Suite::Poynting => poynting_reports(fam, cfg.poynting.samples, tol)?,
        Suite::Zitter => Vec::new(),
    })
}

fn worker_pool() -> Result<rayon::ThreadPool, String> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("AMWAVE_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| format!("AMWAVE_THREADS: expected a positive integer, got '{v}'"))?;
        if n == 0 {
            return Err("AMWAVE_THREADS: must be at least 1".into());
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| e.to_string())
}

fn run_trials(cfg: &RunConfig, tol: f64) -> Result<Vec<TrialReport>, String> {
    use rayon::prelude::*;
    let kinds: Vec<GeneratorKind> = if cfg.suite == Suite::Su3 { vec![GeneratorKind::Su3Gellmann] } else { cfg.generators.clone() };
    let jobs: Vec<(usize, GeneratorKind)> =
        kinds.iter().flat_map(|k| (0..cfg.trials).map(move |t| (t, *k))).collect();
    let pool = worker_pool()?;
    pool.install(|| {
        jobs.par_iter()
            .enumerate()
            .map(|(stream, (trial, kind))| {
                let fam = build_family(cfg, *kind, stream as u64)?;
                let reports = family_reports(cfg, &fam, tol)?;
                Ok(TrialReport {
                    trial: *trial,
                    generators: *kind,
                    k: arr(fam.ctx().k()),
                    coupling: fam.ctx().g(),
                    r: fam.r().iter().map(arr).collect(),
                    coplanar: fam.is_coplanar(),
                    reports,
                })
            })
            .collect()
    })
}

const SU3_EXPECTED: [(usize, usize, usize, f64); 9] = [
    (1, 2, 3, 1.0),
    (1, 4, 7, 0.5),
    (2, 4, 6, 0.5),
    (2, 5, 7, 0.5),
    (3, 4, 5, 0.5),
    (1, 5, 6, -0.5),
    (3, 6, 7, -0.5),
    (4, 5, 8, 0.866_025_403_784_438_6),
    (6, 7, 8, 0.866_025_403_784_438_6),
];

/// Listed nonzero f^{abc} of the Gell-Mann basis, a < b < c.
pub fn su3_expected() -> &'static [(usize, usize, usize, f64)] {
    &SU3_EXPECTED
}

fn su3_constant_check(tol: f64) -> Result<(ResidualReport, Vec<StructureConstantEntry>), String> {
    let gens = make_generators(GeneratorKind::Su3Gellmann, 1.0).map_err(|e| e.to_string())?;
    let sc = structure_constants(&gens).map_err(|e| e.to_string())?;
    let mut rep = ResidualReport::new("su3_structure_constants", 1.0);
    for &(a, b, c, want) in &SU3_EXPECTED {
        rep.push(&format!("f{a}{b}{c}"), "−(i/4)tr(G_a[G_b,G_c])", (sc.f(a, b, c) - want).abs(), tol, None);
    }
    let mut other = 0.0f64;
    let mut antisym = 0.0f64;
    for a in 1..=8 {
        for b in 1..=8 {
            for c in 1..=8 {
                let v = sc.f(a, b, c);
                antisym = antisym.max((v + sc.f(a, c, b)).abs()).max((v + sc.f(b, a, c)).abs());
                let mut s = [a, b, c];
                s.sort_unstable();
                if !SU3_EXPECTED.iter().any(|e| (e.0, e.1, e.2) == (s[0], s[1], s[2])) {
                    other = other.max(v.abs());
                }
            }
        }
    }
    rep.push("unlisted_vanish", "f on unlisted triples", other, tol, None);
    rep.push("antisymmetry", "f^{abc} + f^{acb}, f^{abc} + f^{bac}", antisym, tol, None);
    let entries = sc.nonzero_f(tol).into_iter().map(|(a, b, c, f)| StructureConstantEntry { a, b, c, f }).collect();
    Ok((rep, entries))
}

fn pair_key(p: [usize; 2]) -> (usize, usize) {
    (p[0].min(p[1]), p[0].max(p[1]))
}

fn zitter_run(cfg: &RunConfig, tol: f64) -> Result<(ResidualReport, ZitterSummary, TimeSeries), String> {
    let z = &cfg.zitter;
    let p = Vec3::new(z.momentum[0], z.momentum[1], z.momentum[2]);
    let ctx = DiracContext::natural(p);
    let spec = SuperpositionSpec::mix(z.pair[0], z.pair[1], z.theta).map_err(|e| format!("zitter: {e}"))?;
    eigenstates(&ctx).map_err(|e| format!("zitter.momentum: {e}"))?;
    let key = pair_key(z.pair);
    let same_energy = matches!(key, (1, 2) | (3, 4));
    let same_helicity = matches!(key, (1, 3) | (2, 4));
    let t_max = z.t_max.unwrap_or_else(|| ctx.period());

    let mut header: Vec<String> = vec!["t".into()];
    for pre in ["zr", "zs"] {
        for suffix in ["x", "y", "z", "closed_x", "closed_y", "closed_z", "abs_dev"] {
            header.push(format!("{pre}_{suffix}"));
        }
    }
    let mut rows = Vec::with_capacity(z.steps);
    let mut dev_r = 0.0f64;
    let mut dev_s = 0.0f64;
    for j in 0..z.steps {
        let t = t_max * j as f64 / z.steps as f64;
        let zr = zitter_position_expectation(&spec, &ctx, t).map_err(|e| e.to_string())?;
        let zs = zitter_spin_expectation(&spec, &ctx, t).map_err(|e| e.to_string())?;
        let closed_r = if same_energy {
            Some(Vec3::zeros())
        } else if key == (1, 3) {
            Some(position_closed_form(z.theta, &ctx, t))
        } else {
            None
        };
        let closed_s = if same_energy || same_helicity {
            Some(Vec3::zeros())
        } else if key == (1, 4) {
            Some(spin_closed_form(z.theta, &ctx, t).map_err(|e| e.to_string())?)
        } else {
            None
        };
        let mut row = vec![Some(t)];
        for (num, closed, dev) in [(zr, closed_r, &mut dev_r), (zs, closed_s, &mut dev_s)] {
            row.extend(num.iter().map(|x| Some(*x)));
            match closed {
                Some(cv) => {
                    row.extend(cv.iter().map(|x| Some(*x)));
                    let d = (num - cv).amax();
                    *dev = dev.max(d);
                    row.push(Some(d));
                }
                None => row.extend([None, None, None, None]),
            }
        }
        rows.push(row);
    }

    let (amp, freq) = amplitude_frequency(z.theta, &ctx);
    let si = SiConstants::electron();
    let si_ctx = si.context(Vec3::zeros()).map_err(|e| e.to_string())?;
    let (a_si, w_si) = amplitude_frequency(std::f64::consts::FRAC_PI_4, &si_ctx);

    let mut rep = ResidualReport::new("zitter", 1.0);
    if same_energy || key == (1, 3) {
        rep.push("position_vs_closed", "max_t |⟨Z_r⟩ − closed form|", dev_r, tol, None);
    }
    if same_energy || same_helicity || key == (1, 4) {
        rep.push("spin_vs_closed", "max_t |⟨Z_s⟩ − closed form|", dev_s, tol, None);
    }
    rep.push_unscaled("si_max_amplitude", "A(θ=π/4, p→0) vs 1.9308e-13 m", (a_si / 1.9308e-13 - 1.0).abs(), 5e-4);
    rep.push_unscaled("si_compton_wavelength", "h/mc vs 2.42631e-12 m", (si.compton_wavelength() / 2.42631e-12 - 1.0).abs(), 5e-6);
    rep.push_unscaled("si_min_frequency", "2E/ħ (p→0) vs 1.55269e21 1/s", (w_si / 1.55269e21 - 1.0).abs(), 5e-5);

    let summary = ZitterSummary {
        pair: z.pair,
        theta: z.theta,
        momentum: z.momentum,
        energy: ctx.energy(),
        amplitude: amp,
        frequency: freq,
        period: ctx.period(),
        si: SiSummary {
            planck: si.planck,
            light_speed: si.light_speed,
            electron_mass: si.electron_mass,
            compton_wavelength: si.compton_wavelength(),
            max_amplitude: a_si,
            min_frequency: w_si,
        },
    };
    Ok((rep, summary, TimeSeries { header, rows }))
}

fn poynting_series(cfg: &RunConfig) -> Result<TimeSeries, String> {
    let kind = cfg.generators[0];
    let fam = build_family(cfg, kind, 0)?;
    let (b, e) = build_fields(&fam);
    let rows = flux_series(&b, &e, &Vec3::zeros(), cfg.poynting.samples)
        .into_iter()
        .map(|r| vec![Some(r.t), Some(r.first), Some(r.second), Some(r.mixed), Some(r.running_average)])
        .collect();
    Ok(TimeSeries { header: ["t", "first_block", "second_block", "mixed_block", "running_average"].map(String::from).to_vec(), rows })
}

/// Execute a validated config. Errors are configuration/usage problems;
/// numerical failures are reported through `summary.overall_pass`.
pub fn run_suite(cfg: &RunConfig) -> Result<SuiteOutcome, String> {
    cfg.validate()?;
    let tol = cfg.tolerance();
    let mut checks = Vec::new();
    let mut zitter = None;
    let mut constants = None;
    let mut series = None;
    let trials = match cfg.suite {
        Suite::Zitter => {
            let (rep, summary, ts) = zitter_run(cfg, tol)?;
            checks.push(rep);
            zitter = Some(summary);
            series = Some(ts);
            Vec::new()
        }
        _ => run_trials(cfg, tol)?,
    };
    if cfg.suite == Suite::Su3 {
        let (rep, entries) = su3_constant_check(tol)?;
        checks.push(rep);
        constants = Some(entries);
    }
    if cfg.suite == Suite::Poynting {
        series = Some(poynting_series(cfg)?);
    }

    let mut failing = Vec::new();
    let mut entries = 0;
    for t in &trials {
        for r in &t.reports {
            entries += r.per_item.len();
            for name in r.failing() {
                failing.push(format!("trial {} {} {}.{}", t.trial, t.generators, r.label, name));
            }
        }
    }
    for r in &checks {
        entries += r.per_item.len();
        failing.extend(r.failing().into_iter().map(|n| format!("{}.{}", r.label, n)));
    }
    let report = RunReport {
        tool: "amwave",
        version: env!("CARGO_PKG_VERSION"),
        suite: cfg.suite,
        seed: cfg.seed,
        tolerance: tol,
        config: cfg.clone(),
        conventions: CONVENTIONS,
        trials,
        checks,
        zitter,
        structure_constants: constants,
        summary: Summary { overall_pass: failing.is_empty(), entries, failing },
    };
    Ok(SuiteOutcome { report, series })
}

/// Shared by the `su3-constants` verb.
pub fn su3_constants(tol: f64) -> Result<(ResidualReport, Vec<StructureConstantEntry>), String> {
    su3_constant_check(tol)
}
