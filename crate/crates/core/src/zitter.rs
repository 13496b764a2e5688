//! Free Dirac electron in momentum space: Hamiltonian, closed-form
//! eigenstates, projectors, and the position/spin Zitterbewegung operators
//! with their expectation values.
//!
//! Internal computations accept any (m, c, ħ); natural units m = c = ħ = 1
//! are the default. SI values appear only through [`SiConstants`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sun_algebra::{OperatorMatrix, OperatorVector3};
use crate::Vec3;

/// Threshold on (p + p_z)/|p| below which the closed-form states are refused.
pub const POLAR_EPS: f64 = 1e-10;

pub type Spinor = [Complex64; 4];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiracContext {
    m: f64,
    c: f64,
    hbar: f64,
    p: Vec3,
}

impl DiracContext {
    pub fn new(m: f64, c: f64, hbar: f64, p: Vec3) -> Result<Self> {
        if !(m > 0.0 && c > 0.0 && hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("m, c, hbar must be positive (got {m}, {c}, {hbar})")));
        }
        if !p.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameter("momentum must be finite".into()));
        }
        Ok(Self { m, c, hbar, p })
    }

    /// m = c = ħ = 1.
    pub fn natural(p: Vec3) -> Self {
        Self { m: 1.0, c: 1.0, hbar: 1.0, p }
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn p(&self) -> &Vec3 {
        &self.p
    }

    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }

    /// E_p = √(p²c² + m²c⁴).
    pub fn energy(&self) -> f64 {
        let pc = self.p.norm() * self.c;
        let mc2 = self.rest_energy();
        (pc * pc + mc2 * mc2).sqrt()
    }

    pub fn p_plus(&self) -> Complex64 {
        c(self.p.x, self.p.y)
    }

    pub fn p_minus(&self) -> Complex64 {
        c(self.p.x, -self.p.y)
    }

    /// √(E_p + mc²).
    pub fn u_plus(&self) -> f64 {
        (self.energy() + self.rest_energy()).sqrt()
    }

    /// √(E_p − mc²), computed without cancellation.
    pub fn u_minus(&self) -> f64 {
        let pc = self.p.norm() * self.c;
        (pc * pc / (self.energy() + self.rest_energy())).sqrt()
    }

    /// Zitterbewegung angular frequency 2E_p/ħ.
    pub fn zitter_frequency(&self) -> f64 {
        2.0 * self.energy() / self.hbar
    }

    /// Common period πħ/E_p of every expectation value.
    pub fn period(&self) -> f64 {
        std::f64::consts::PI * self.hbar / self.energy()
    }
}

/// α_i = [[0, σ_i], [σ_i, 0]], β = diag(1, 1, −1, −1), Σ_i = diag(σ_i, σ_i).
#[derive(Clone, Debug)]
pub struct DiracMatrices {
    pub alpha: OperatorVector3,
    pub beta: OperatorMatrix,
    pub sigma: OperatorVector3,
}

fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    let (z, o, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [[[z, o], [o, z]], [[z, -i], [i, z]], [[o, z], [z, -o]]]
}

fn block(tl: Option<&[[Complex64; 2]; 2]>, tr: Option<&[[Complex64; 2]; 2]>, bl: Option<&[[Complex64; 2]; 2]>, br: Option<&[[Complex64; 2]; 2]>) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(4);
    for (blk, (r0, c0)) in [(tl, (0, 0)), (tr, (0, 2)), (bl, (2, 0)), (br, (2, 2))] {
        if let Some(b) = blk {
            for i in 0..2 {
                for j in 0..2 {
                    m[(r0 + i, c0 + j)] = b[i][j];
                }
            }
        }
    }
    m
}

pub fn dirac_matrices() -> DiracMatrices {
    let s = pauli();
    let alpha = OperatorVector3::new(
        block(None, Some(&s[0]), Some(&s[0]), None),
        block(None, Some(&s[1]), Some(&s[1]), None),
        block(None, Some(&s[2]), Some(&s[2]), None),
    )
    .expect("4x4");
    let sigma = OperatorVector3::new(
        block(Some(&s[0]), None, None, Some(&s[0])),
        block(Some(&s[1]), None, None, Some(&s[1])),
        block(Some(&s[2]), None, None, Some(&s[2])),
    )
    .expect("4x4");
    let beta = OperatorMatrix::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
    DiracMatrices { alpha, beta, sigma }
}

/// H = c α·p + β mc².
pub fn hamiltonian(ctx: &DiracContext) -> OperatorMatrix {
    let d = dirac_matrices();
    let mut h = OperatorVector3::real_dot(&(ctx.p * ctx.c), &d.alpha);
    h += &d.beta.scale_real(ctx.rest_energy());
    h
}

/// S = (ħ/2)Σ.
pub fn spin_operator(ctx: &DiracContext) -> OperatorVector3 {
    dirac_matrices().sigma.scale_real(ctx.hbar / 2.0)
}

/// Λ = S·p̂.
pub fn helicity_operator(ctx: &DiracContext) -> Result<OperatorMatrix> {
    let pn = ctx.p.norm();
    if pn == 0.0 {
        return Err(Error::InvalidParameter("helicity undefined at p = 0".into()));
    }
    Ok(OperatorVector3::real_dot(&(ctx.p / pn), &spin_operator(ctx)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracState {
    pub amplitudes: Spinor,
    /// +1 or −1.
    pub energy_sign: i8,
    /// ±ħ/2.
    pub helicity: f64,
}

impl DiracState {
    pub fn norm(&self) -> f64 {
        spinor_norm(&self.amplitudes)
    }
}

pub fn spinor_norm(v: &Spinor) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(u: &Spinor, v: &Spinor) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// Closed-form unit eigenstates Ψ₁…Ψ₄ with labels
/// (+E, +ħ/2), (+E, −ħ/2), (−E, +ħ/2), (−E, −ħ/2).
pub fn eigenstates(ctx: &DiracContext) -> Result<[DiracState; 4]> {
    let p = ctx.p.norm();
    let pz = ctx.p.z;
    if p + pz <= POLAR_EPS * p || p == 0.0 {
        return Err(Error::PolarSingularity(p + pz));
    }
    let e = ctx.energy();
    let (up, um) = (ctx.u_plus(), ctx.u_minus());
    let (pp, pm) = (ctx.p_plus(), ctx.p_minus());
    let s = p + pz;
    let pc = p * ctx.c;
    let n = 1.0 / (4.0 * e * p * s).sqrt();
    let r = |x: f64| c(x * n, 0.0);
    let psi1 = [r(up * s), pp * up * n, r(pc / up * s), pp * (pc / up) * n];
    let psi2 = [-pm * up * n, r(up * s), pm * (pc / up) * n, r(-pc / up * s)];
    let psi3 = [r(um * s), pp * um * n, r(-pc / um * s), -pp * (pc / um) * n];
    let psi4 = [-pm * um * n, r(um * s), -pm * (pc / um) * n, r(pc / um * s)];
    let h = ctx.hbar / 2.0;
    Ok([
        DiracState { amplitudes: psi1, energy_sign: 1, helicity: h },
        DiracState { amplitudes: psi2, energy_sign: 1, helicity: -h },
        DiracState { amplitudes: psi3, energy_sign: -1, helicity: h },
        DiracState { amplitudes: psi4, energy_sign: -1, helicity: -h },
    ])
}

/// A superposition of the four eigenstates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuperpositionSpec {
    pub theta: f64,
    /// 1-based pair mixed as cosθ Ψ_i + sinθ Ψ_j, when built by [`SuperpositionSpec::mix`].
    pub pair: Option<(usize, usize)>,
    pub coefficients: [Complex64; 4],
}

impl SuperpositionSpec {
    /// cosθ Ψ_i + sinθ Ψ_j, θ ∈ [0, π/2].
    pub fn mix(i: usize, j: usize, theta: f64) -> Result<Self> {
        if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i == j {
            return Err(Error::InvalidParameter(format!("invalid state pair ({i}, {j})")));
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&theta) {
            return Err(Error::InvalidParameter(format!("theta {theta} outside [0, π/2]")));
        }
        let mut coefficients = [c(0.0, 0.0); 4];
        coefficients[i - 1] = c(theta.cos(), 0.0);
        coefficients[j - 1] = c(theta.sin(), 0.0);
        Ok(Self { theta, pair: Some((i, j)), coefficients })
    }

    /// Σ c_i Ψ_i with Σ|c_i|² = 1.
    pub fn general(coefficients: [Complex64; 4]) -> Result<Self> {
        let n: f64 = coefficients.iter().map(|z| z.norm_sqr()).sum();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("coefficients have total norm² {n}, expected 1")));
        }
        Ok(Self { theta: f64::NAN, pair: None, coefficients })
    }

    pub fn state(&self, ctx: &DiracContext) -> Result<Spinor> {
        let basis = eigenstates(ctx)?;
        let mut out = [c(0.0, 0.0); 4];
        for (ci, st) in self.coefficients.iter().zip(&basis) {
            for (o, a) in out.iter_mut().zip(&st.amplitudes) {
                *o += ci * a;
            }
        }
        Ok(out)
    }
}

/// Energy and helicity projectors.
#[derive(Clone, Debug)]
pub struct Projectors {
    pub energy_plus: OperatorMatrix,
    pub energy_minus: OperatorMatrix,
    pub spin_plus: OperatorMatrix,
    pub spin_minus: OperatorMatrix,
}

/// Π± = ½(1 ± H/E_p), Πs± = ½(1 ± (2/ħ)Λ).
pub fn projectors(ctx: &DiracContext) -> Result<Projectors> {
    let id = OperatorMatrix::identity(4);
    let h = hamiltonian(ctx).scale_real(1.0 / ctx.energy());
    let lam = helicity_operator(ctx)?.scale_real(2.0 / ctx.hbar);
    Ok(Projectors {
        energy_plus: (&id + &h).scale_real(0.5),
        energy_minus: (&id - &h).scale_real(0.5),
        spin_plus: (&id + &lam).scale_real(0.5),
        spin_minus: (&id - &lam).scale_real(0.5),
    })
}

/// α − cH⁻¹p, componentwise.
pub fn odd_velocity(ctx: &DiracContext) -> OperatorVector3 {
    let h_inv = inverse_hamiltonian(ctx);
    let d = dirac_matrices();
    let ps = ctx.p * ctx.c;
    let comp = |i: usize| d.alpha.component(i) - &h_inv.scale_real(ps[i]);
    OperatorVector3::new(comp(0), comp(1), comp(2)).expect("4x4")
}

/// H⁻¹ = H/E_p², since H² = E_p² 𝟙.
fn inverse_hamiltonian(ctx: &DiracContext) -> OperatorMatrix {
    hamiltonian(ctx).scale_real(1.0 / (ctx.energy() * ctx.energy()))
}

/// e^{−isH/ħ} from the two-level spectrum: e^{−isE/ħ}Π₊ + e^{isE/ħ}Π₋.
pub fn evolution(ctx: &DiracContext, s: f64) -> OperatorMatrix {
    let id = OperatorMatrix::identity(4);
    let h = hamiltonian(ctx).scale_real(1.0 / ctx.energy());
    let phase = s * ctx.energy() / ctx.hbar;
    let plus = (&id + &h).scale(c(0.5, 0.0) * c(0.0, -phase).exp());
    let minus = (&id - &h).scale(c(0.5, 0.0) * c(0.0, phase).exp());
    &plus + &minus
}

/// Ẑ_r(t) = (iħc/2)[α − cH⁻¹p] H⁻¹ (e^{−2iHt/ħ} − 1).
pub fn position_operator(ctx: &DiracContext, t: f64) -> OperatorVector3 {
    let h_inv = inverse_hamiltonian(ctx);
    let evolve = &evolution(ctx, 2.0 * t) - &OperatorMatrix::identity(4);
    let tail = &h_inv * &evolve;
    odd_velocity(ctx).right_mul(&tail).scale(c(0.0, ctx.hbar * ctx.c / 2.0))
}

/// Ẑ_s(t) = −Ẑ_r(t) × p.
pub fn spin_zitter_operator(ctx: &DiracContext, t: f64) -> OperatorVector3 {
    -&position_operator(ctx, t).cross_real(&ctx.p)
}

fn expectation(op: &OperatorVector3, psi: &Spinor) -> Vec3 {
    Vec3::new(op.x().sandwich(psi, psi).re, op.y().sandwich(psi, psi).re, op.z().sandwich(psi, psi).re)
}

/// ⟨Ψ|Ẑ_r(t)|Ψ⟩ by direct 4×4 algebra.
pub fn zitter_position_expectation(spec: &SuperpositionSpec, ctx: &DiracContext, t: f64) -> Result<Vec3> {
    let psi = spec.state(ctx)?;
    Ok(expectation(&position_operator(ctx, t), &psi))
}

/// ⟨Ψ|Ẑ_s(t)|Ψ⟩ by direct 4×4 algebra.
pub fn zitter_spin_expectation(spec: &SuperpositionSpec, ctx: &DiracContext, t: f64) -> Result<Vec3> {
    let psi = spec.state(ctx)?;
    Ok(expectation(&spin_zitter_operator(ctx, t), &psi))
}

/// (A, ω) with A = sin2θ (ħc/2E_p)(mc²/E_p), ω = 2E_p/ħ.
pub fn amplitude_frequency(theta: f64, ctx: &DiracContext) -> (f64, f64) {
    let e = ctx.energy();
    let a = (2.0 * theta).sin() * (ctx.hbar * ctx.c / (2.0 * e)) * (ctx.rest_energy() / e);
    (a, ctx.zitter_frequency())
}

/// Closed form for cosθΨ₁ + sinθΨ₃: −p̂ A sin(ωt).
pub fn position_closed_form(theta: f64, ctx: &DiracContext, t: f64) -> Vec3 {
    let (a, w) = amplitude_frequency(theta, ctx);
    let pn = ctx.p.norm();
    if pn == 0.0 {
        return Vec3::zeros();
    }
    -(ctx.p / pn) * a * (w * t).sin()
}

/// Closed form for cosθΨ₁ + sinθΨ₄, any p off the −ẑ ray.
pub fn spin_closed_form(theta: f64, ctx: &DiracContext, t: f64) -> Result<Vec3> {
    let p = ctx.p.norm();
    let (px, py, pz) = (ctx.p.x, ctx.p.y, ctx.p.z);
    let s = p + pz;
    if p + pz <= POLAR_EPS * p || p == 0.0 {
        return Err(Error::PolarSingularity(s));
    }
    let phase = ctx.zitter_frequency() * t;
    let (cm, sn) = (phase.cos() - 1.0, phase.sin());
    let pref = -(2.0 * theta).sin() * ctx.hbar * ctx.c / (2.0 * ctx.energy());
    Ok(Vec3::new(
        -cm * (py * py / s + pz) + sn * px * py / s,
        cm * px * py / s - sn * (px * px / s + pz),
        cm * px + sn * py,
    ) * pref)
}

/// The p = pẑ case of [`spin_closed_form`]:
/// sin2θ (cħp/E_p) sin(E_pt/ħ)[cos(E_pt/ħ)ŷ − sin(E_pt/ħ)x̂].
pub fn spin_closed_form_axial(theta: f64, ctx: &DiracContext, t: f64) -> Vec3 {
    let e = ctx.energy();
    let half = e * t / ctx.hbar;
    let amp = (2.0 * theta).sin() * ctx.c * ctx.hbar * ctx.p.z / e * half.sin();
    Vec3::new(-half.sin(), half.cos(), 0.0) * amp
}

/// ⟨Ψ₁|α|Ψ₄⟩ in closed form.
pub fn alpha_14_closed_form(ctx: &DiracContext) -> Result<[Complex64; 3]> {
    let p = ctx.p.norm();
    let s = p + ctx.p.z;
    if p + ctx.p.z <= POLAR_EPS * p || p == 0.0 {
        return Err(Error::PolarSingularity(s));
    }
    let pm = ctx.p_minus();
    let q = pm / (p * s);
    Ok([c(1.0, 0.0) - q * ctx.p.x, -(c(0.0, 1.0) + q * ctx.p.y), -pm / p])
}

/// CODATA-style inputs for SI reporting.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SiConstants {
    pub planck: f64,
    pub light_speed: f64,
    pub electron_mass: f64,
}

impl SiConstants {
    pub const fn electron() -> Self {
        Self { planck: 6.62607015e-34, light_speed: 2.99792458e8, electron_mass: 9.10938188e-31 }
    }

    pub fn hbar(&self) -> f64 {
        self.planck / (2.0 * std::f64::consts::PI)
    }

    /// λ_e = h/(mc).
    pub fn compton_wavelength(&self) -> f64 {
        self.planck / (self.electron_mass * self.light_speed)
    }

    /// λ_e/4π, the p → 0, θ = π/4 amplitude.
    pub fn max_amplitude(&self) -> f64 {
        self.compton_wavelength() / (4.0 * std::f64::consts::PI)
    }

    /// 4πc/λ_e, the p → 0 frequency.
    pub fn min_frequency(&self) -> f64 {
        4.0 * std::f64::consts::PI * self.light_speed / self.compton_wavelength()
    }

    /// Dirac context in SI units at momentum `p` (kg·m/s).
    pub fn context(&self, p: Vec3) -> Result<DiracContext> {
        DiracContext::new(self.electron_mass, self.light_speed, self.hbar(), p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polar_ray_rejected() {
        let ctx = DiracContext::natural(Vec3::new(0.0, 0.0, -1.0));
        assert!(matches!(eigenstates(&ctx), Err(Error::PolarSingularity(_))));
        assert!(matches!(eigenstates(&DiracContext::natural(Vec3::zeros())), Err(Error::PolarSingularity(_))));
    }

    #[test]
    fn mix_validates_indices() {
        assert!(SuperpositionSpec::mix(1, 1, 0.1).is_err());
        assert!(SuperpositionSpec::mix(0, 2, 0.1).is_err());
        assert!(SuperpositionSpec::mix(1, 3, 2.0).is_err());
        assert!(SuperpositionSpec::general([c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn u_product_is_cp() {
        let ctx = DiracContext::new(2.0, 3.0, 0.5, Vec3::new(0.3, -1.1, 0.4)).unwrap();
        assert!((ctx.u_plus() * ctx.u_minus() - ctx.c() * ctx.p().norm()).abs() < 1e-12);
    }
}
