//! Time-averaged Poynting flux of classical and operator-valued plane waves,
//! closed forms plus a trapezoid quadrature oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{HarmonicVectorField, SolutionFamily, WaveContext};
use crate::sun_algebra::{OperatorMatrix, OperatorVector3};
use crate::Vec3;

pub const DEFAULT_SAMPLES: usize = 10_000;

use std::f64::consts::PI;

#[derive(Clone, Debug)]
pub struct FluxResult {
    pub direction: Vec3,
    pub magnitude_operator: OperatorMatrix,
    /// Set when the operator is a multiple of 𝟙.
    pub classical_magnitude: Option<f64>,
}

fn scalar_value(m: &OperatorMatrix) -> Option<f64> {
    let v = m[(0, 0)];
    let off = m - &OperatorMatrix::scalar(m.dim(), v);
    let tol = 1e-12 * m.frobenius_norm().max(1.0);
    (off.frobenius_norm() <= tol && v.im.abs() <= tol).then_some(v.re)
}

impl FluxResult {
    fn new(direction: Vec3, magnitude_operator: OperatorMatrix) -> Self {
        let classical_magnitude = scalar_value(&magnitude_operator);
        Self { direction, magnitude_operator, classical_magnitude }
    }

    /// magnitude ⊗ direction.
    pub fn vector(&self) -> OperatorVector3 {
        OperatorVector3::from_real(&self.direction, &self.magnitude_operator)
    }
}

/// (c/8π) k² |A₀₁|² along k̂ for a transverse real amplitude.
pub fn em_flux(a01: &Vec3, ctx: &WaveContext) -> Result<FluxResult> {
    let kh = ctx.k_hat();
    let long = kh.dot(a01);
    if long.abs() > 1e-12 * a01.norm().max(1.0) {
        return Err(Error::NonTransverseAmplitude(long));
    }
    let mag = ctx.c() / (8.0 * PI) * ctx.k().norm_squared() * a01.norm_squared();
    Ok(FluxResult::new(kh, OperatorMatrix::identity(ctx.dim()).scale_real(mag)))
}

/// (c/8π){(k×τ)·(k×τ) + g²·unit²(η·η)} along k̂.
pub fn amw_flux(fam: &SolutionFamily) -> FluxResult {
    let ctx = fam.ctx();
    let k_cross_tau = OperatorVector3::real_cross(ctx.k(), &fam.tau());
    let eta = fam.eta();
    let gu = ctx.g() * ctx.generators().bracket_unit();
    let mut op = k_cross_tau.dot_op(&k_cross_tau);
    op += &eta.dot_op(&eta).scale_real(gu * gu);
    FluxResult::new(ctx.k_hat(), op.scale_real(ctx.c() / (8.0 * PI)))
}

/// One sample of the integrand split into harmonic blocks.
#[derive(Clone, Debug)]
pub struct FluxSample {
    pub t: f64,
    /// Re E₁ × Re B₁.
    pub first: OperatorVector3,
    /// Re E₂ × Re B₂.
    pub second: OperatorVector3,
    /// Re E₁ × Re B₂ + Re E₂ × Re B₁.
    pub mixed: OperatorVector3,
}

/// Period averages of (c/4π) Re E × Re B and of its three blocks.
#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub samples: usize,
    pub total: OperatorVector3,
    pub first: OperatorVector3,
    pub second: OperatorVector3,
    pub mixed: OperatorVector3,
}

fn real_signal(f: &HarmonicVectorField, order: Option<i32>, r: &Vec3, t: f64) -> OperatorVector3 {
    let part = match order {
        Some(m) => f.restrict(&[m]),
        None => f.clone(),
    };
    part.eval_at(r, t).hermitian_part()
}

/// Integrand blocks at time `t` and position `r`. Blocks use harmonic 1 and
/// harmonic 2; other orders are folded into nothing, so use this on
/// single-wave fields only.
pub fn flux_sample(b: &HarmonicVectorField, e: &HarmonicVectorField, r: &Vec3, t: f64) -> FluxSample {
    let (b1, b2) = (real_signal(b, Some(1), r, t), real_signal(b, Some(2), r, t));
    let (e1, e2) = (real_signal(e, Some(1), r, t), real_signal(e, Some(2), r, t));
    FluxSample {
        t,
        first: e1.cross_op(&b1),
        second: e2.cross_op(&b2),
        mixed: &e1.cross_op(&b2) + &e2.cross_op(&b1),
    }
}

/// Sample times t_j = jT/N, j = 0..N−1, over T = 2π/ω.
pub fn sample_times(ctx: &WaveContext, samples: usize) -> Vec<f64> {
    let period = 2.0 * PI / ctx.omega();
    (0..samples).map(|j| period * j as f64 / samples as f64).collect()
}

fn pairwise_sum(xs: &[OperatorVector3]) -> OperatorVector3 {
    match xs.len() {
        0 => unreachable!("pairwise_sum of an empty slice"),
        1 => xs[0].clone(),
        n => &pairwise_sum(&xs[..n / 2]) + &pairwise_sum(&xs[n / 2..]),
    }
}

/// Composite trapezoid over one period (for a periodic integrand this is the
/// plain sample mean). Samples are evaluated in parallel and reduced in a
/// fixed pairwise order.
pub fn flux_quadrature(b: &HarmonicVectorField, e: &HarmonicVectorField, r: &Vec3, samples: usize) -> Result<QuadratureResult> {
    if samples == 0 {
        return Err(Error::InvalidParameter("quadrature needs at least one sample".into()));
    }
    let ctx = b.ctx();
    let pts: Vec<FluxSample> = sample_times(ctx, samples).into_par_iter().map(|t| flux_sample(b, e, r, t)).collect();
    let w = ctx.c() / (4.0 * PI) / samples as f64;
    let avg = |sel: fn(&FluxSample) -> &OperatorVector3| {
        let v: Vec<OperatorVector3> = pts.iter().map(|s| sel(s).clone()).collect();
        pairwise_sum(&v).scale_real(w)
    };
    let first = avg(|s| &s.first);
    let second = avg(|s| &s.second);
    let mixed = avg(|s| &s.mixed);
    let total = &(&first + &second) + &mixed;
    Ok(QuadratureResult { samples, total, first, second, mixed })
}

/// Row of the exported integrand series: normalized traces of the k̂
/// components of each block, scaled by c/4π, and the running mean.
#[derive(Clone, Debug, Serialize)]
pub struct FluxSeriesRow {
    pub t: f64,
    pub first: f64,
    pub second: f64,
    pub mixed: f64,
    pub running_average: f64,
}

pub fn flux_series(b: &HarmonicVectorField, e: &HarmonicVectorField, r: &Vec3, samples: usize) -> Vec<FluxSeriesRow> {
    let ctx = b.ctx();
    let kh = ctx.k_hat();
    let d = ctx.dim() as f64;
    let w = ctx.c() / (4.0 * PI);
    let along = |v: &OperatorVector3| OperatorVector3::real_dot(&kh, v).trace().re / d * w;
    let mut acc = 0.0;
    sample_times(ctx, samples)
        .into_iter()
        .enumerate()
        .map(|(j, t)| {
            let s = flux_sample(b, e, r, t);
            let (f, g, m) = (along(&s.first), along(&s.second), along(&s.mixed));
            acc += f + g + m;
            FluxSeriesRow { t, first: f, second: g, mixed: m, running_average: acc / (j + 1) as f64 }
        })
        .collect()
}
