use std::sync::Arc;

use num_complex::Complex64;

use super::context::WaveContext;
use super::harmonic::{HarmonicScalarField, HarmonicVectorField};
use crate::error::{Error, Result};
use crate::sun_algebra::{structure_constants, GeneratorKind, OperatorMatrix, OperatorVector3};
use crate::Vec3;

/// Coplanarity tolerance, relative to |k||R_l||R_m|.
pub const COPLANARITY_TOL: f64 = 1e-12;

/// Constant vectors R₀…R_n and a wave context: τ = R₀𝟙 + Σ R_l G_l.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFamily {
    r: Vec<Vec3>,
    ctx: Arc<WaveContext>,
}

impl SolutionFamily {
    /// Validated family: the length matches the generator count and every
    /// non-commuting pair is coplanar with k.
    pub fn new(ctx: impl Into<Arc<WaveContext>>, r: Vec<Vec3>) -> Result<Self> {
        let fam = Self::candidate(ctx, r)?;
        if let Some((l, m, value)) = fam.worst_coplanarity() {
            if value > COPLANARITY_TOL {
                return Err(Error::NonCoplanar { l, m, value });
            }
        }
        Ok(fam)
    }

    /// Unchecked candidate, used to probe how conditions fail.
    pub fn candidate(ctx: impl Into<Arc<WaveContext>>, r: Vec<Vec3>) -> Result<Self> {
        let ctx = ctx.into();
        let want = ctx.generators().len() + 1;
        if r.len() != want {
            return Err(Error::InvalidParameter(format!("expected {want} vectors R0..R{}, got {}", want - 1, r.len())));
        }
        if r.iter().any(|v| !v.iter().all(|x| x.is_finite())) {
            return Err(Error::InvalidParameter("non-finite R vector".into()));
        }
        Ok(Self { r, ctx })
    }

    pub fn r(&self) -> &[Vec3] {
        &self.r
    }

    pub fn ctx(&self) -> &Arc<WaveContext> {
        &self.ctx
    }

    /// Pair (l, m) with the largest normalized |k·(R_l×R_m)| over non-commuting pairs.
    pub fn worst_coplanarity(&self) -> Option<(usize, usize, f64)> {
        let k = self.ctx.k();
        let mut worst: Option<(usize, usize, f64)> = None;
        for (l, m) in self.ctx.generators().noncommuting_pairs() {
            let (a, b) = (&self.r[l], &self.r[m]);
            let scale = k.norm() * a.norm() * b.norm();
            let v = if scale > 0.0 { k.dot(&a.cross(b)).abs() / scale } else { 0.0 };
            if worst.is_none_or(|w| v > w.2) {
                worst = Some((l, m, v));
            }
        }
        worst
    }

    pub fn is_coplanar(&self) -> bool {
        self.worst_coplanarity().is_none_or(|w| w.2 <= COPLANARITY_TOL)
    }

    /// Every R scaled by s.
    pub fn scaled(&self, s: f64) -> Self {
        Self { r: self.r.iter().map(|v| v * s).collect(), ctx: self.ctx.clone() }
    }

    /// Same R, different coupling.
    pub fn with_coupling(&self, g: f64) -> Self {
        Self { r: self.r.clone(), ctx: Arc::new(self.ctx.with_coupling(g)) }
    }

    /// τ = R₀𝟙 + Σ R_l G_l.
    pub fn tau(&self) -> OperatorVector3 {
        let gens = self.ctx.generators();
        let id = gens.identity();
        let mut terms: Vec<(Vec3, &OperatorMatrix)> = vec![(self.r[0], &id)];
        terms.extend(self.r[1..].iter().copied().zip(gens.generators()));
        OperatorVector3::linear_combination(&terms, gens.dim())
    }

    /// τ·k̂, the scalar-potential amplitude.
    pub fn phi_amplitude(&self) -> OperatorMatrix {
        OperatorVector3::real_dot(&self.ctx.k_hat(), &self.tau())
    }

    /// η with τ×τ = i·unit·η (unit = ħ for spin sets, 1 otherwise).
    pub fn eta(&self) -> OperatorVector3 {
        let gens = self.ctx.generators();
        let g = gens.generators();
        let r = &self.r;
        let dim = gens.dim();
        match gens.kind() {
            GeneratorKind::Su2SpinHalf | GeneratorKind::Su2SpinOne => OperatorVector3::linear_combination(
                &[(r[2].cross(&r[3]), &g[0]), (r[3].cross(&r[1]), &g[1]), (r[1].cross(&r[2]), &g[2])],
                dim,
            ),
            GeneratorKind::Su3Gellmann => {
                let f = structure_constants(gens).expect("Gell-Mann basis is traceless");
                let n = g.len();
                let mut out = OperatorVector3::zeros(dim);
                for l in 1..=n {
                    for m in 1..=n {
                        let rlm = r[l].cross(&r[m]);
                        for (j, gn) in g.iter().enumerate() {
                            let c = f.f(l, m, j + 1);
                            if c != 0.0 {
                                out = &out + &OperatorVector3::from_real(&(rlm * c), gn);
                            }
                        }
                    }
                }
                out
            }
            GeneratorKind::Identity | GeneratorKind::Custom => {
                let mut out = OperatorVector3::zeros(dim);
                for l in 0..g.len() {
                    for m in l + 1..g.len() {
                        let com = &(&g[l] * &g[m]) - &(&g[m] * &g[l]);
                        let herm = com.scale(Complex64::new(0.0, -1.0));
                        out = &out + &OperatorVector3::from_real(&r[l + 1].cross(&r[m + 1]), &herm);
                    }
                }
                out
            }
        }
    }

    /// ξ = η × k̂.
    pub fn xi(&self) -> OperatorVector3 {
        self.eta().cross_real(&self.ctx.k_hat())
    }
}

/// 𝓐 = τ e^{iθ}, φ = (τ·k̂) e^{iθ}.
pub fn build_potentials(fam: &SolutionFamily) -> (HarmonicVectorField, HarmonicScalarField) {
    let ctx = fam.ctx.clone();
    (
        HarmonicVectorField::single(ctx.clone(), 1, fam.tau()),
        HarmonicScalarField::single(ctx, 1, fam.phi_amplitude()),
    )
}

/// 𝓑 = i(k×τ)e^{iθ} + g·unit·η e^{2iθ}, 𝓔 = −k̂×𝓑.
pub fn build_fields(fam: &SolutionFamily) -> (HarmonicVectorField, HarmonicVectorField) {
    let ctx = fam.ctx.clone();
    let unit = ctx.generators().bracket_unit();
    let first = OperatorVector3::real_cross(ctx.k(), &fam.tau()).scale(Complex64::new(0.0, 1.0));
    let second = fam.eta().scale_real(ctx.g() * unit);
    let b = HarmonicVectorField::from_terms(ctx.clone(), [(1, first), (2, second)]);
    let e = HarmonicVectorField::real_cross(&(-ctx.k_hat()), &b);
    (b, e)
}

/// 𝓑 = ∇×𝓐 − ig 𝓐×𝓐, 𝓔 = −(1/c)∂_t𝓐 − ∇φ − ig[φ, 𝓐].
pub fn fields_from_potentials(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> (HarmonicVectorField, HarmonicVectorField) {
    let ig = Complex64::new(0.0, a.ctx().g());
    let b = a.curl().sub(&a.cross(a).scale(ig));
    let e = a.dt_over_c().scale_real(-1.0).sub(&phi.grad()).sub(&phi.commutator_vec(a).scale(ig));
    (b, e)
}
