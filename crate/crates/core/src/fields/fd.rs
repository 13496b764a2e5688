//! Central-difference derivatives sampled through `eval_at`, an independent
//! check of the analytic term rules. Truncation error is O(h²).

use super::harmonic::{HarmonicScalarField, HarmonicVectorField};
use crate::sun_algebra::{OperatorMatrix, OperatorVector3};
use crate::Vec3;

/// Finite-difference derivatives of a vector field at one point.
#[derive(Clone, Debug)]
pub struct VectorFdEstimate {
    pub div: OperatorMatrix,
    pub curl: OperatorVector3,
    pub dt: OperatorVector3,
    pub laplacian: OperatorVector3,
}

/// Finite-difference derivatives of a scalar field at one point.
#[derive(Clone, Debug)]
pub struct ScalarFdEstimate {
    pub grad: OperatorVector3,
    pub dt: OperatorMatrix,
    pub laplacian: OperatorMatrix,
}

fn unit(i: usize) -> Vec3 {
    let mut e = Vec3::zeros();
    e[i] = 1.0;
    e
}

/// Spatial step `h`; the time step is h/c.
pub fn fd_oracle_vector(f: &HarmonicVectorField, r: &Vec3, t: f64, h: f64) -> VectorFdEstimate {
    assert!(h > 0.0, "step must be positive");
    let dim = f.ctx().dim();
    let at = |dr: Vec3, dt: f64| f.eval_at(&(r + dr), t + dt);
    let centre = at(Vec3::zeros(), 0.0);
    let inv2h = 1.0 / (2.0 * h);
    // d[i] = ∂_i F (all three components)
    let partial: Vec<OperatorVector3> = (0..3)
        .map(|i| (&at(unit(i) * h, 0.0) - &at(unit(i) * -h, 0.0)).scale_real(inv2h))
        .collect();
    let div = {
        let mut acc = OperatorMatrix::zeros(dim);
        for (i, p) in partial.iter().enumerate() {
            acc += p.component(i);
        }
        acc
    };
    let comp = |j: usize, kk: usize| partial[j].component(kk) - partial[kk].component(j);
    let curl = OperatorVector3::new(comp(1, 2), comp(2, 0), comp(0, 1)).expect("shared dimension");
    let ht = h / f.ctx().c();
    let dt = (&at(Vec3::zeros(), ht) - &at(Vec3::zeros(), -ht)).scale_real(1.0 / (2.0 * ht));
    let mut lap = OperatorVector3::zeros(dim);
    for i in 0..3 {
        let second = &(&at(unit(i) * h, 0.0) + &at(unit(i) * -h, 0.0)) - &centre.scale_real(2.0);
        lap = &lap + &second.scale_real(1.0 / (h * h));
    }
    VectorFdEstimate { div, curl, dt, laplacian: lap }
}

/// Spatial step `h`; the time step is h/c.
pub fn fd_oracle_scalar(f: &HarmonicScalarField, r: &Vec3, t: f64, h: f64) -> ScalarFdEstimate {
    assert!(h > 0.0, "step must be positive");
    let dim = f.ctx().dim();
    let at = |dr: Vec3, dt: f64| f.eval_at(&(r + dr), t + dt);
    let centre = at(Vec3::zeros(), 0.0);
    let partial: Vec<OperatorMatrix> = (0..3)
        .map(|i| (&at(unit(i) * h, 0.0) - &at(unit(i) * -h, 0.0)).scale_real(1.0 / (2.0 * h)))
        .collect();
    let grad = OperatorVector3::new(partial[0].clone(), partial[1].clone(), partial[2].clone()).expect("shared dimension");
    let ht = h / f.ctx().c();
    let dt = (&at(Vec3::zeros(), ht) - &at(Vec3::zeros(), -ht)).scale_real(1.0 / (2.0 * ht));
    let mut lap = OperatorMatrix::zeros(dim);
    for i in 0..3 {
        let second = &(&at(unit(i) * h, 0.0) + &at(unit(i) * -h, 0.0)) - &centre.scale_real(2.0);
        lap += &second.scale_real(1.0 / (h * h));
    }
    ScalarFdEstimate { grad, dt, laplacian: lap }
}
