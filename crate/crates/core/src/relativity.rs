//! Field-strength tensors, single-axis Lorentz boosts and constant gauge
//! conjugation.
//!
//! Conventions: metric diag(1, −1, −1, −1); contravariant x^μ = (ct, r),
//! k^μ = (ω/c, k); each harmonic carries e^{−i m k_μ x^μ}; tensors transform
//! as F' = C F Cᵀ.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{build_fields, Amplitude, HarmonicField, HarmonicVectorField, SolutionFamily, WaveContext};
use crate::residuals::{field_equation_fields, ResidualReport};
use crate::sun_algebra::{OperatorMatrix, OperatorVector3};
use crate::Vec3;

pub type FourVector = [f64; 4];

const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// x^μ x_μ.
pub fn minkowski_interval(x: &FourVector) -> f64 {
    (0..4).map(|i| METRIC[i] * x[i] * x[i]).sum()
}

/// Lower (or raise) an index with the metric.
pub fn lower(x: &FourVector) -> FourVector {
    [x[0], -x[1], -x[2], -x[3]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BoostAxis {
    X,
    Y,
    #[default]
    Z,
}

impl BoostAxis {
    fn index(self) -> usize {
        match self {
            BoostAxis::X => 1,
            BoostAxis::Y => 2,
            BoostAxis::Z => 3,
        }
    }
}

/// Pure boost along one coordinate axis.
#[derive(Clone, Debug, PartialEq)]
pub struct BoostMatrix {
    v: f64,
    c: f64,
    axis: BoostAxis,
    entries: [[f64; 4]; 4],
}

impl BoostMatrix {
    pub fn new(v: f64, c: f64, axis: BoostAxis) -> Result<Self> {
        if !(c > 0.0) || !v.is_finite() {
            return Err(Error::InvalidParameter(format!("invalid boost v = {v}, c = {c}")));
        }
        if v.abs() >= c {
            return Err(Error::SuperluminalBoost { v: v.abs(), c });
        }
        let beta = v / c;
        let gamma = 1.0 / (1.0 - beta * beta).sqrt();
        let a = axis.index();
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        m[0][0] = gamma;
        m[a][a] = gamma;
        m[0][a] = -gamma * beta;
        m[a][0] = -gamma * beta;
        Ok(Self { v, c, axis, entries: m })
    }

    pub fn along_z(v: f64, c: f64) -> Result<Self> {
        Self::new(v, c, BoostAxis::Z)
    }

    pub fn velocity(&self) -> f64 {
        self.v
    }

    pub fn axis(&self) -> BoostAxis {
        self.axis
    }

    pub fn beta(&self) -> f64 {
        self.v / self.c
    }

    pub fn gamma(&self) -> f64 {
        self.entries[0][0]
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    /// The inverse boost, v → −v.
    pub fn inverse(&self) -> Self {
        Self::new(-self.v, self.c, self.axis).expect("|−v| < c")
    }

    /// Matrix product self·other.
    pub fn compose(&self, other: &Self) -> [[f64; 4]; 4] {
        matmul(&self.entries, &other.entries)
    }

    pub fn apply(&self, x: &FourVector) -> FourVector {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.entries[i][j] * x[j]).sum();
        }
        out
    }
}

pub fn matmul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|l| a[i][l] * b[l][j]).sum();
        }
    }
    out
}

/// Largest entry of |A − B|.
pub fn max_abs_diff(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> f64 {
    (0..16).map(|n| (a[n / 4][n % 4] - b[n / 4][n % 4]).abs()).fold(0.0, f64::max)
}

/// Relativistic velocity addition.
pub fn add_velocities(v1: f64, v2: f64, c: f64) -> f64 {
    (v1 + v2) / (1.0 + v1 * v2 / (c * c))
}

/// (ω/c, k) of a wave context.
pub fn wave_four_vector(ctx: &WaveContext) -> FourVector {
    let k = ctx.k();
    [ctx.omega() / ctx.c(), k.x, k.y, k.z]
}

/// k'^μ = C^μ_ν k^ν.
pub fn boost_wavevector(kmu: &FourVector, c: &BoostMatrix) -> FourVector {
    c.apply(kmu)
}

/// Operator-valued 4×4 antisymmetric tensor, contravariant indices.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldStrengthTensor {
    dim: usize,
    entries: Vec<OperatorMatrix>,
}

impl FieldStrengthTensor {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![OperatorMatrix::zeros(dim); 16] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, mu: usize, nu: usize) -> &OperatorMatrix {
        &self.entries[mu * 4 + nu]
    }

    fn set(&mut self, mu: usize, nu: usize, m: OperatorMatrix) {
        self.entries[mu * 4 + nu] = m;
    }

    /// E = (F¹⁰, F²⁰, F³⁰).
    pub fn electric(&self) -> OperatorVector3 {
        OperatorVector3::new(self.get(1, 0).clone(), self.get(2, 0).clone(), self.get(3, 0).clone()).expect("shared dimension")
    }

    /// B = (F³², F¹³, F²¹).
    pub fn magnetic(&self) -> OperatorVector3 {
        OperatorVector3::new(self.get(3, 2).clone(), self.get(1, 3).clone(), self.get(2, 1).clone()).expect("shared dimension")
    }

    /// max ‖F^{μν} + F^{νμ}‖.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((self.get(mu, nu) + self.get(nu, mu)).frobenius_norm());
            }
        }
        worst
    }

    /// F_{μν} = g_{μα} g_{νβ} F^{αβ}.
    pub fn lowered(&self) -> Self {
        let mut out = self.clone();
        for mu in 0..4 {
            for nu in 0..4 {
                out.set(mu, nu, self.get(mu, nu).scale_real(METRIC[mu] * METRIC[nu]));
            }
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(OperatorMatrix::frobenius_norm).fold(0.0, f64::max)
    }

    pub fn conjugate_by(&self, u: &OperatorMatrix) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|m| m.conjugate_by(u)).collect() }
    }

    /// max_ν ‖k_μ F^{μν}‖ with `k_lower` already lowered.
    pub fn divergence_defect(&self, k_lower: &FourVector) -> f64 {
        (0..4)
            .map(|nu| {
                let mut acc = OperatorMatrix::zeros(self.dim);
                for (mu, k) in k_lower.iter().enumerate() {
                    acc += &self.get(mu, nu).scale_real(*k);
                }
                acc.frobenius_norm()
            })
            .fold(0.0, f64::max)
    }

    /// Cyclic sum k_λ F_{μν} + k_μ F_{νλ} + k_ν F_{λμ} on lowered tensors.
    pub fn bianchi_defect(&self, k_lower: &FourVector) -> f64 {
        let f = self.lowered();
        let mut worst = 0.0f64;
        for l in 0..4 {
            for m in l + 1..4 {
                for n in m + 1..4 {
                    let mut acc = f.get(m, n).scale_real(k_lower[l]);
                    acc += &f.get(n, l).scale_real(k_lower[m]);
                    acc += &f.get(l, m).scale_real(k_lower[n]);
                    worst = worst.max(acc.frobenius_norm());
                }
            }
        }
        worst
    }
}

/// Place E and B amplitudes into F^{μν}.
pub fn assemble_tensor(b: &OperatorVector3, e: &OperatorVector3) -> Result<FieldStrengthTensor> {
    crate::sun_algebra::dot(b, e)?;
    let dim = b.dim();
    let mut f = FieldStrengthTensor::zeros(dim);
    for i in 0..3 {
        f.set(i + 1, 0, e.component(i).clone());
        f.set(0, i + 1, -e.component(i));
    }
    let (bx, by, bz) = (b.x(), b.y(), b.z());
    f.set(1, 2, -bz);
    f.set(2, 1, bz.clone());
    f.set(1, 3, by.clone());
    f.set(3, 1, -by);
    f.set(2, 3, -bx);
    f.set(3, 2, bx.clone());
    Ok(f)
}

/// F'^{μν} = C_{μα} C_{νβ} F^{αβ}.
pub fn boost_tensor(f: &FieldStrengthTensor, c: &BoostMatrix) -> FieldStrengthTensor {
    let cm = c.entries();
    let mut out = FieldStrengthTensor::zeros(f.dim);
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = OperatorMatrix::zeros(f.dim);
            for a in 0..4 {
                for b in 0..4 {
                    let w = cm[mu][a] * cm[nu][b];
                    if w != 0.0 {
                        acc += &f.get(a, b).scale_real(w);
                    }
                }
            }
            out.set(mu, nu, acc);
        }
    }
    out
}

/// Per-harmonic tensors of a (B, E) pair.
pub fn tensor_harmonics(b: &HarmonicVectorField, e: &HarmonicVectorField) -> Vec<(i32, FieldStrengthTensor)> {
    let dim = b.ctx().dim();
    let mut orders = b.orders();
    orders.extend(e.orders());
    orders.sort_unstable();
    orders.dedup();
    let zero = OperatorVector3::zeros(dim);
    orders
        .into_iter()
        .map(|m| {
            let bm = b.term(m).unwrap_or(&zero);
            let em = e.term(m).unwrap_or(&zero);
            (m, assemble_tensor(bm, em).expect("fields share a dimension"))
        })
        .collect()
}

/// Boosted-frame check of a family: boosts every harmonic tensor and the wave
/// four-vector, then evaluates the covariant contractions and the rebuilt
/// boosted-frame field equations.
pub fn boosted_residuals(fam: &SolutionFamily, boost: &BoostMatrix, tol: f64) -> Result<ResidualReport> {
    let ctx = fam.ctx();
    let (b, e) = build_fields(fam);
    let k_up = boost_wavevector(&wave_four_vector(ctx), boost);
    let k_spatial = Vec3::new(k_up[1], k_up[2], k_up[3]);
    let boosted_ctx = Arc::new(WaveContext::new(k_spatial, ctx.c(), ctx.g(), ctx.generators().clone())?);

    let mut b_terms = Vec::new();
    let mut e_terms = Vec::new();
    let mut div_defect = 0.0f64;
    let mut bianchi = 0.0f64;
    let mut antisym = 0.0f64;
    let mut scale = 1.0f64;
    for (m, f) in tensor_harmonics(&b, &e) {
        let fp = boost_tensor(&f, boost);
        let km = lower(&k_up.map(|x| x * m as f64));
        div_defect = div_defect.max(fp.divergence_defect(&km));
        bianchi = bianchi.max(fp.bianchi_defect(&km));
        antisym = antisym.max(fp.antisymmetry_defect());
        scale = scale.max(fp.norm());
        b_terms.push((m, fp.magnetic()));
        e_terms.push((m, fp.electric()));
    }
    let bp = HarmonicField::from_terms(boosted_ctx.clone(), b_terms);
    let ep = HarmonicField::from_terms(boosted_ctx.clone(), e_terms);

    let mut rep = ResidualReport::new(format!("boost(v={})", boost.velocity()), scale);
    rep.push("divergence", "k'_μ F'^{μν}", div_defect, tol, None);
    rep.push("bianchi", "k'_λF'_{μν} + k'_μF'_{νλ} + k'_νF'_{λμ}", bianchi, tol, None);
    rep.push("antisymmetry", "F'^{μν} + F'^{νμ}", antisym, tol, None);
    let null = minkowski_interval(&k_up).abs() / k_up.iter().map(|x| x * x).sum::<f64>().max(f64::MIN_POSITIVE);
    rep.push_unscaled("null_wavevector", "k'^μ k'_μ / |k'|²", null, tol);
    for it in field_equation_fields(&bp, &ep) {
        let worst = it.field.order_norms().into_iter().max_by(|a, b| a.1.total_cmp(&b.1)).map(|(m, _)| m);
        rep.push(&format!("boosted_{}", it.name), it.formula, it.field.norm(), tol, worst);
    }
    Ok(rep)
}

/// U a U† on every amplitude; U must be unitary to 1e-12.
pub fn gauge_conjugate<T: Amplitude>(f: &HarmonicField<T>, u: &OperatorMatrix) -> Result<HarmonicField<T>> {
    check_unitary(u)?;
    Ok(f.conjugate_by(u))
}

pub fn gauge_conjugate_tensor(f: &FieldStrengthTensor, u: &OperatorMatrix) -> Result<FieldStrengthTensor> {
    check_unitary(u)?;
    Ok(f.conjugate_by(u))
}

fn check_unitary(u: &OperatorMatrix) -> Result<()> {
    let d = u.unitarity_defect();
    if d > 1e-12 {
        Err(Error::NonUnitary(d))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superluminal_rejected() {
        assert!(matches!(BoostMatrix::along_z(1.0, 1.0), Err(Error::SuperluminalBoost { .. })));
        assert!(matches!(BoostMatrix::along_z(-1.5, 1.0), Err(Error::SuperluminalBoost { .. })));
    }

    #[test]
    fn inverse_is_printed_inverse() {
        let c = BoostMatrix::along_z(0.6, 1.0).unwrap();
        let id = c.compose(&c.inverse());
        let mut want = [[0.0; 4]; 4];
        for (i, row) in want.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        assert!(max_abs_diff(&id, &want) < 1e-14);
        assert_eq!(c.inverse().entries()[0][3], 0.6 * c.gamma());
    }

    #[test]
    fn non_unitary_rejected() {
        let m = OperatorMatrix::identity(2).scale_real(2.0);
        let f = FieldStrengthTensor::zeros(2);
        assert!(matches!(gauge_conjugate_tensor(&f, &m), Err(Error::NonUnitary(_))));
    }
}
